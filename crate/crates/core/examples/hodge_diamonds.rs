//! Hodge diamonds of complete intersection threefolds from Koszul Euler
//! characteristics, with the Chern-number cross-check.
//!
//! ```text
//! cargo run --example hodge_diamonds
//! ```

use fanocert::certify::{ci_h12_from_chern, ci_topological_euler};
use fanocert::hodge::{ci_hodge_diamond, CIData};

fn main() {
    let cases: [(u32, &[u32]); 7] =
        [(4, &[2]), (4, &[3]), (4, &[4]), (4, &[5]), (5, &[2, 2]), (5, &[2, 3]), (6, &[2, 2, 2])];
    for (n, degrees) in cases {
        let ci = CIData::new(n, degrees.to_vec()).unwrap();
        let h = ci_hodge_diamond(&ci).unwrap();
        println!("{degrees:?} in P^{n}: e = {}, Chern numbers give e = {}, h12 = {}", h.euler_number(), ci_topological_euler(n, degrees), ci_h12_from_chern(n, degrees));
        print!("{h}");
        println!("  Serre duality: {}", h.satisfies_serre_duality());
    }
}
