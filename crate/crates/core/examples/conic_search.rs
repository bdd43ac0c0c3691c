//! Smooth conics in random linear systems of plane conics over `F2` and
//! `F4`, found by the case analysis and compared with enumeration.
//!
//! ```text
//! cargo run --example conic_search -- 0 200
//! ```

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fanocert::exactcore::{FiniteField, F2, F4};
use fanocert::veronese::{exhaustive_smooth_conic, find_smooth_conic, random_subspace, QuadraticForm3};

fn trials<F: FiniteField>(name: &str, seed: u64, n: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut paths: BTreeMap<String, usize> = BTreeMap::new();
    let mut agree = 0;
    let mut example: Option<QuadraticForm3<F>> = None;
    for _ in 0..n {
        let v = random_subspace::<F, _>(&mut rng, 4);
        let found = find_smooth_conic(&v).expect("dimension 4");
        let oracle = exhaustive_smooth_conic(&v).expect("dimension 4");
        agree += usize::from(found.is_some() == oracle.is_some());
        let key = found.as_ref().map_or("none".to_string(), |c| format!("{:?}", c.path));
        *paths.entry(key).or_default() += 1;
        if example.is_none() {
            example = found.map(|c| c.form);
        }
    }
    println!("{name}: {agree}/{n} agree with enumeration, paths {paths:?}");
    if let Some(q) = example {
        println!("  first smooth conic: {q}");
    }
}

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().map_or(0, |s| s.parse().expect("seed"));
    let n = args.next().map_or(200, |s| s.parse().expect("trials"));
    trials::<F2>("F2", seed, n);
    trials::<F4>("F4", seed, n);
}
