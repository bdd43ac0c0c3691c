//! Closed-form numerics: solutions of `2g − 2 = 2dp²`, scroll splittings,
//! the genus-10 obstruction and the Δ-genus bound on projection degrees.
//!
//! ```text
//! cargo run --example numerology -- 7 40
//! ```

use fanocert::exactcore::int;
use fanocert::numerology::{
    allowed_projection_degrees, delta_genus, g10_obstruction, p_divisibility_solutions, projection_delta,
    scroll_degree, scroll_splittings, DeltaGenusInput,
};

fn main() {
    let mut args = std::env::args().skip(1);
    let g_min = args.next().map_or(7, |s| s.parse().expect("g_min"));
    let g_max = args.next().map_or(12, |s| s.parse().expect("g_max"));

    println!("2g − 2 = 2dp² for {g_min} ≤ g ≤ {g_max}, g ≠ 11:");
    for s in p_divisibility_solutions(g_min, g_max, &[11]) {
        println!("  p = {}, g = {}, d = {}", s.p, s.g, s.d);
    }

    for (a, b) in scroll_splittings(5) {
        println!("S(0,{a},{b}) has degree {}", scroll_degree(&[0, a, b]));
    }

    let (value, obstructed) = g10_obstruction();
    println!("genus 10: (−K + E)·(−K)² = {value}, not divisible by 3: {obstructed}");

    println!("Δ of a threefold scroll of degree 5 in P^7 = {}", delta_genus(&DeltaGenusInput::new(3, int(5), 8)));
    println!("Δ of V5 in P^6 = {}", delta_genus(&DeltaGenusInput::new(3, int(5), 7)));
    for deg in 1..=4 {
        println!("Δ of the image under a degree-{deg} map = {}", projection_delta(deg));
    }
    println!("degrees allowed by Δ ≥ 0: {:?}", allowed_projection_degrees(10));
}
