//! The Veronese surface in `P^5`: its six quadrics, the secant cubic as a
//! determinant, and the rank stratification of points.
//!
//! ```text
//! cargo run --example veronese_secant
//! ```

use fanocert::exactcore::Rational;
use fanocert::veronese::{
    secant_cubic, secant_stratum, symmetric_determinant, veronese_ideal, veronese_map, ProjectivePoint,
};

type Q = Rational;

fn main() {
    println!("ideal of S:");
    for g in veronese_ideal::<Q>() {
        println!("  {g}");
    }
    let cubic = secant_cubic::<Q>();
    println!("secant cubic: {cubic}");
    println!("equals det of the symmetric matrix: {}", cubic == symmetric_determinant::<Q>());

    let on_s = veronese_map(&ProjectivePoint::<Q>::from_i64(&[1, 2, -1]).unwrap()).unwrap();
    let points = [
        on_s,
        ProjectivePoint::from_i64(&[1, 1, 0, 0, 0, 0]).unwrap(),
        ProjectivePoint::from_i64(&[1, 0, 0, 0, 0, 1]).unwrap(),
        ProjectivePoint::from_i64(&[1, 1, 1, 0, 0, 0]).unwrap(),
    ];
    for p in &points {
        println!("{p}: {:?}, cubic = {}", secant_stratum(p).unwrap(), cubic.eval(p.coords()));
    }
}
