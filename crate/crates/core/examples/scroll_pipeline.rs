//! The `P¹`-bundle fans over the bases of `S(0,1,4)` and `S(0,2,3)`:
//! contract `v6`, enumerate the two simplicial subdivisions and report
//! smoothness, cone multiplicities and fibrations for each diagonal.
//!
//! ```text
//! cargo run --example scroll_pipeline
//! ```

use fanocert::toric::{contract_ray, enumerate_qfactorializations, fibration_to_p1, paper, Fan};

fn pipeline(name: &str, bundle: &Fan) {
    println!("{name}: bundle complete {}, smooth {}", bundle.is_complete(), bundle.fan_is_smooth().unwrap());
    match contract_ray(bundle, 4) {
        Ok(_) => println!("  contracting v5: accepted"),
        Err(e) => println!("  contracting v5: {e}"),
    }
    let delta = contract_ray(bundle, 5).expect("v6 contracts");
    println!("  after contracting v6: {} maximal cones, simplicial {}", delta.cones().len(), delta.is_simplicial());

    for t in enumerate_qfactorializations(&delta).expect("subdivisions") {
        let (i, j) = t.diagonals[0];
        let mult: Vec<String> = t
            .fan
            .cones()
            .iter()
            .map(|c| format!("{}:{}", t.fan.cone_label(c), t.fan.cone_is_smooth(c).unwrap().1))
            .collect();
        let fib = fibration_to_p1(&t.fan).map_or("none".to_string(), |m| format!("{m:?}"));
        println!(
            "  diagonal v{}v{}: smooth {}, fibration {fib}",
            i + 1,
            j + 1,
            t.fan.fan_is_smooth().unwrap()
        );
        println!("    multiplicities {}", mult.join(" "));
    }
}

fn main() {
    pipeline("S(0,1,4)", &paper::l014_bundle());
    pipeline("S(0,2,3)", &paper::l023_bundle());
}
