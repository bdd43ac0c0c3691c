use fanocert::exactcore::{int, rat};
use fanocert::numerology::{
    allowed_projection_degrees, delta_genus, g10_obstruction, genus_obstruction, is_prime, p_divisibility_solutions,
    projection_delta, scroll_degree, scroll_splittings, surface_rr_parity, DeltaGenusInput, DivisibilitySolution,
};
use proptest::prelude::*;

fn sieve(n: u32) -> Vec<bool> {
    let mut prime = vec![true; n as usize + 1];
    prime[0] = false;
    if n >= 1 {
        prime[1] = false;
    }
    let mut k = 2;
    while k * k <= n as usize {
        if prime[k] {
            for m in (k * k..=n as usize).step_by(k) {
                prime[m] = false;
            }
        }
        k += 1;
    }
    prime
}

/// Every `(p, d)` with `p² d ≤ g − 1`, kept when `2g − 2 = 2 d p²`.
fn brute_force(g_min: u32, g_max: u32, excluded: &[u32]) -> Vec<DivisibilitySolution> {
    let prime = sieve(g_max);
    let mut out = Vec::new();
    for g in g_min.max(1)..=g_max {
        if excluded.contains(&g) {
            continue;
        }
        for p in 2..=g_max {
            if !prime[p as usize] {
                continue;
            }
            for d in 1..=g {
                if 2 * g - 2 == 2 * d * p * p {
                    out.push(DivisibilitySolution { p, g, d });
                }
            }
        }
    }
    out
}

#[test]
fn default_range() {
    let got = p_divisibility_solutions(7, 12, &[11]);
    assert_eq!(got, brute_force(7, 12, &[11]));
    assert_eq!(got, vec![DivisibilitySolution { p: 2, g: 9, d: 2 }, DivisibilitySolution { p: 3, g: 10, d: 1 }]);
}

#[test]
fn primality_matches_the_sieve() {
    let s = sieve(2000);
    for n in 0..=2000 {
        assert_eq!(is_prime(n), s[n as usize], "{n}");
    }
}

proptest! {
    #[test]
    fn divisibility_matches_brute_force(g_min in 0u32..40, span in 0u32..60, excluded in prop::collection::vec(0u32..100, 0..4)) {
        let g_max = g_min + span;
        prop_assert_eq!(p_divisibility_solutions(g_min, g_max, &excluded), brute_force(g_min, g_max, &excluded));
    }

    #[test]
    fn splittings(n in 0u32..200) {
        let s = scroll_splittings(n);
        prop_assert_eq!(s.len() as u32, n / 2);
        for w in s.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
        for &(a, b) in &s {
            prop_assert!(0 < a && a <= b && a + b == n);
            prop_assert_eq!(scroll_degree(&[a, b]), n);
        }
    }

    #[test]
    fn delta_genus_is_linear(dim in 0u32..6, num in -20i64..20, den in 1i64..6, h0 in -10i64..20) {
        let top = rat(num, den);
        let input = DeltaGenusInput::new(dim, top.clone(), h0);
        prop_assert_eq!(delta_genus(&input), int(i64::from(dim)) + top - int(h0));
    }

    #[test]
    fn genus_obstruction_value(g in 0i64..100, divisor in 1i64..10) {
        let (v, obstructed) = genus_obstruction(g, divisor);
        prop_assert_eq!(v, 2 * g - 4);
        prop_assert_eq!(obstructed, v.rem_euclid(divisor) != 0);
    }

    #[test]
    fn rr_parity(d2 in -100i64..100) {
        prop_assert_eq!(surface_rr_parity(d2), d2.rem_euclid(2) == 0);
    }
}

#[test]
fn only_birational_projections_survive() {
    assert_eq!(projection_delta(1), int(1));
    assert_eq!(projection_delta(2), int(-1));
    for bound in 1..=30 {
        assert_eq!(allowed_projection_degrees(bound), vec![1]);
    }
}

#[test]
fn genus_ten() {
    assert_eq!(g10_obstruction(), (16, true));
    assert_eq!(scroll_splittings(5), vec![(1, 4), (2, 3)]);
    assert_eq!(scroll_degree(&[1, 4]), 5);
    assert_eq!(scroll_degree(&[2, 3]), 5);
}
