//! Multiplication table of `σ_k · σ_λ` on `Gr(2,n)` by the Pieri rule,
//! checked against Littlewood–Richardson, and the degree of `σ1^{2(n-2)}`.
//!
//! ```text
//! cargo run --example pieri_table -- 6
//! ```

use fanocert::schubert::{box_partitions, degree, pieri, SchubertElement};

fn main() {
    let n: u32 = std::env::args().nth(1).map_or(5, |s| s.parse().expect("n is an integer"));
    assert!(n >= 3, "Gr(2,n) needs n >= 3");

    for k in 1..=n - 2 {
        let special = SchubertElement::sigma(n, k, 0).expect("special class");
        for l in box_partitions(n) {
            let product = pieri(l, k, n).expect("valid Pieri index");
            let lr = SchubertElement::basis(n, l).expect("box partition").mul(&special).expect("same ambient");
            assert_eq!(product, lr);
            println!("σ{k} · {l} = {product}");
        }
    }

    let s1 = SchubertElement::sigma(n, 1, 0).expect("σ1");
    let top = s1.pow(2 * (n - 2));
    println!("deg σ1^{} on Gr(2,{n}) = {}", 2 * (n - 2), degree(&top).expect("top degree"));
}
