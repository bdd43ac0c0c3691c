//! Global sections of twisted differential forms on `P^N` from the Euler
//! contraction, the basis `ζ_ijk` of `H⁰(P³, Ω²(3))`, and sections vanishing
//! along rational curves.
//!
//! ```text
//! cargo run --example omega_sections
//! ```

use fanocert::exactcore::PolyRing;
use fanocert::hodge::{euler_contraction, h0_omega_p, omega2_vanishing_on_curve, zeta_basis, RationalCurve};

fn main() {
    for n in 2..=4usize {
        println!("h⁰(P^{n}, Ω^p(d)), rows p = 0..{n}, columns d = 0..6");
        for p in 0..=n {
            let row: Vec<String> = (0..=6).map(|d| format!("{:>4}", h0_omega_p(p, d, n).unwrap())).collect();
            println!("  p = {p}: {}", row.join(""));
        }
    }

    let e = euler_contraction(2, 3, 3).unwrap();
    println!(
        "Ω²(3) on P³: source {}, target {}, rank {}, kernel {}",
        e.source_dim,
        e.target_dim,
        e.rank,
        e.kernel_dim()
    );
    let z = zeta_basis();
    for s in &z.elements {
        println!("  {s}");
    }
    println!("  annihilated {}, independent {}", z.annihilated(), z.independent());

    let st = PolyRing::new(&["s", "t"]);
    for forms in [["s", "t", "0", "0"], ["s^3", "s^2*t", "s*t^2", "t^3"], ["s^4", "s^3*t", "s*t^3", "t^4"]] {
        let curve = RationalCurve::parse(&st, forms).unwrap();
        println!("sections vanishing on [{}]: {}", forms.join(" : "), omega2_vanishing_on_curve(Some(&curve)).unwrap());
    }
}
