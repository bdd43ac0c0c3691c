//! Validate a fan file and report simpliciality, smoothness, completeness
//! and a `P¹` fibration. Fan files are JSON with `dim`, `rays` and `cones`.
//!
//! ```text
//! cargo run --example fan_check -- crates/core/examples/data/l014_bundle.json
//! ```

use std::path::PathBuf;

use fanocert::certify::check_fan;

fn main() {
    let paths: Vec<PathBuf> = match std::env::args().skip(1).map(PathBuf::from).collect::<Vec<_>>() {
        p if p.is_empty() => ["p2.json", "l014_bundle.json", "singular.json", "bad_ray.json"]
            .iter()
            .map(|f| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(f))
            .collect(),
        p => p,
    };
    for path in paths {
        println!("== {}", path.display());
        match check_fan(&path) {
            Ok(rep) => print!("{rep}"),
            Err(e) => println!("error: {e}"),
        }
    }
}
