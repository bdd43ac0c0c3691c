//! Smooth complete toric surfaces: self-intersections, Noether's formula,
//! blowups, principal divisors and fibrations over `P¹`.
//!
//! ```text
//! cargo run --example toric_surfaces
//! ```

use fanocert::toric::{blow_up, fibration_to_p1, paper, principal_divisor, surface_self_intersections, Fan};

fn report(name: &str, fan: &Fan) {
    let d2 = surface_self_intersections(fan).expect("smooth complete surface");
    let noether = d2.iter().sum::<i64>() + 3 * fan.rays().len() as i64;
    let fib = fibration_to_p1(fan).map_or("none".to_string(), |m| format!("{m:?}"));
    println!("{name:<12} rays {:<2} D² {d2:?}  ΣD² + 3·#rays = {noether}  fibration {fib}", fan.rays().len());
}

fn main() {
    report("P2", &paper::p2());
    report("S(1,4) base", &paper::s14_base());
    report("S(2,3) base", &paper::s23_base());
    for a in 0..=3 {
        report(&format!("F{a}"), &paper::hirzebruch(a));
    }

    let mut fan = paper::hirzebruch(1);
    for step in 1..=3 {
        let c = fan.cones()[0].rays().to_vec();
        fan = blow_up(&fan, c[0], c[1]).expect("smooth cone");
        report(&format!("F1 blown up {step}x"), &fan);
    }

    let s14 = paper::s14_base();
    for m in [[1, 0], [0, 1], [2, -1]] {
        println!("div χ^{m:?} on S(1,4) base = {:?}", principal_divisor(&s14, &m).0);
    }
}
