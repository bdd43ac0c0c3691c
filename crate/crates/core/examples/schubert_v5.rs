//! Chern classes of `Ω¹(2)` on `Gr(2,5)` and on the del Pezzo threefold
//! `V5 = Gr(2,5) ∩ P^6`, ending in `deg c3(Ω¹_V(2))`.
//!
//! ```text
//! cargo run --example schubert_v5
//! ```

use fanocert::schubert::v5_separability_certificate;

fn main() {
    let cert = v5_separability_certificate();

    println!("ch(Ω¹) on Gr(2,5):");
    for k in 1..=3 {
        println!("  ch{k} = {}", cert.omega_character.part(k));
    }

    println!("c(Ω¹(2σ1)):");
    for k in 1..=3 {
        println!("  c{k} = {}", cert.twisted_classes.c(k));
    }

    println!("degrees on Gr(2,5):");
    for (name, d) in &cert.degree_table {
        println!("  deg {name} = {d}");
    }

    let series: Vec<String> = cert.restriction_series.iter().map(|q| q.to_string()).collect();
    println!("(1+σ1)^-3 up to σ1³: [{}]", series.join(", "));
    println!("c3(Ω¹_V(2)) = {}", cert.c3_on_v);
    println!("deg c3(Ω¹_V(2)) = {}", cert.value);
}
