//! Singular quadrics in `P^4`: the pencil singular at `[1:0:0:0:0]`, and
//! hyperplane sections splitting into two planes that avoid a chosen
//! coordinate plane.
//!
//! ```text
//! cargo run --example quadric_split
//! ```

use fanocert::veronese::{quadric_pencil_singularity_certificate, split_hyperplane_certificate, SingularQuadric};

fn main() {
    let pencil = quadric_pencil_singularity_certificate().expect("pencil");
    println!("pencil {}", pencil.form);
    for (v, p) in &pencil.partials {
        println!("  ∂/∂{v} at the point = {p}");
    }
    println!("  singular for all (a, b): {}", pencil.singular());

    for quadric in [SingularQuadric::Rank3, SingularQuadric::Rank4] {
        for avoided in [None, Some(&[0usize, 2][..]), Some(&[1usize, 2][..])] {
            let rep = split_hyperplane_certificate(quadric, avoided).expect("split");
            let show = |v: &[fanocert::exactcore::Polynomial<fanocert::exactcore::Rational>]| {
                v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
            };
            println!(
                "{} ∩ {{{}}} = ({}) ∪ ({}), avoiding {avoided:?}: {}, ideals agree: {}",
                rep.quadric,
                rep.hyperplane,
                show(&rep.d),
                show(&rep.d_prime),
                rep.avoids,
                rep.ideals_agree()
            );
        }
    }
}
