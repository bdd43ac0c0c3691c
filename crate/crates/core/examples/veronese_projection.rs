//! Projection of the Veronese surface from a point of its secant cubic:
//! where the quadrics `S²−TU, ST−UZ` go under ψ, the degree-by-degree
//! comparison of ideal and image, and the quadrics through the actual image.
//!
//! ```text
//! cargo run --example veronese_projection -- 6
//! ```

use fanocert::veronese::{corrected_pencil_certificate, projection_kernel_certificate};

fn main() {
    let bound: u32 = std::env::args().nth(1).map_or(6, |s| s.parse().expect("degree bound"));
    let rep = projection_kernel_certificate(bound).expect("degree bound >= 2");

    println!("claimed kernel generators:");
    for (g, zero) in &rep.generator_images {
        println!("  ψ({g}) = 0: {zero}");
    }
    println!("kernel generators, not all homogeneous:");
    for (g, zero) in &rep.kernel_generators {
        println!("  ψ({g}) = 0: {zero}");
    }
    println!("denominators cleared: {}", rep.denominators_cleared);
    println!("S(T²−SZ) in the ideal with neither factor: {}", rep.non_prime_witness);

    println!("{:>3} {:>6} {:>6} {:>6} {:>7} {:>9} {:>10}", "d", "ring", "ideal", "image", "kernel", "quotient", "predicted");
    for c in &rep.degrees {
        println!(
            "{:>3} {:>6} {:>6} {:>6} {:>7} {:>9} {:>10}",
            c.degree,
            c.ring_dim,
            c.ideal_dim,
            c.image_span,
            c.kernel_dim(),
            c.quotient_dim,
            c.module_prediction
        );
    }
    println!("first degree where ideal + image != ring: {:?}", rep.first_failing_degree());

    let fixed = corrected_pencil_certificate().expect("pencil");
    let image: Vec<String> = fixed.image.iter().map(|p| p.to_string()).collect();
    println!("image of S: [{}]", image.join(" : "));
    println!("quadrics through the image: {}", fixed.quadrics_through_image);
    for (q, on) in &fixed.paper_quadrics_on_image {
        println!("  claimed: {q} vanishes on the image: {on}");
    }
    for (q, on) in &fixed.pencil_on_image {
        println!("  pencil: {q} vanishes on the image: {on}");
    }
    println!("pencil singular at [a:0:0:0:b]: {}", fixed.singularity.singular());
}
