//! Closed-form arithmetic: Δ-genus, the `2g − 2 = 2dp²` elimination,
//! scroll degrees and the small parity obstructions.

use num_integer::Integer;

use crate::exactcore::{int, rat, Rational};

/// `(Z, A)` with `A^{dim Z}` and `h⁰(Z, A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaGenusInput {
    pub dim: u32,
    pub top_self_intersection: Rational,
    pub h0: i64,
}

impl DeltaGenusInput {
    pub fn new(dim: u32, top_self_intersection: Rational, h0: i64) -> Self {
        DeltaGenusInput { dim, top_self_intersection, h0 }
    }
}

/// `Δ(Z, A) = dim Z + A^{dim Z} − h⁰(Z, A)`.
pub fn delta_genus(input: &DeltaGenusInput) -> Rational {
    int(i64::from(input.dim)) + input.top_self_intersection.clone() - int(input.h0)
}

/// Δ of the image of a surface of degree 4 with five sections under a
/// finite map of degree `deg`: `2 + 4/deg − 5 = 4/deg − 3`.
pub fn projection_delta(deg: u32) -> Rational {
    delta_genus(&DeltaGenusInput::new(2, rat(4, i64::from(deg)), 5))
}

/// The degrees in `1..=max_deg` allowed by `Δ ≥ 0`.
pub fn allowed_projection_degrees(max_deg: u32) -> Vec<u32> {
    (1..=max_deg).filter(|&d| projection_delta(d) >= int(0)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisibilitySolution {
    pub p: u32,
    pub g: u32,
    pub d: u32,
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| n % k != 0)
}

/// All `(p, g, d)` with `p` prime, `g_min ≤ g ≤ g_max`, `g ∉ excluded` and
/// `2g − 2 = 2 d p²`, ordered by `g` then `p`.
pub fn p_divisibility_solutions(g_min: u32, g_max: u32, excluded: &[u32]) -> Vec<DivisibilitySolution> {
    let mut out = Vec::new();
    for g in g_min.max(1)..=g_max {
        if excluded.contains(&g) {
            continue;
        }
        for p in (2..=g_max).filter(|&p| is_prime(p)) {
            let (d, r) = (g - 1).div_rem(&(p * p));
            if r == 0 && d >= 1 {
                out.push(DivisibilitySolution { p, g, d });
            }
        }
    }
    out
}

/// `deg S(a₀, …, a_d) = a₀ + ⋯ + a_d`.
pub fn scroll_degree(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// Pairs `0 < a ≤ b` with `a + b = total`.
pub fn scroll_splittings(total: u32) -> Vec<(u32, u32)> {
    (1..=total / 2).map(|a| (a, total - a)).collect()
}

/// `(−K + E)·(−K)² = (2g − 8) + 4`, and whether it fails to be divisible by
/// `divisor`.
pub fn genus_obstruction(g: i64, divisor: i64) -> (i64, bool) {
    let value = (2 * g - 8) + 4;
    (value, value % divisor != 0)
}

/// The genus-10 case: `16 ∉ 3Z`.
pub fn g10_obstruction() -> (i64, bool) {
    genus_obstruction(10, 3)
}

/// Riemann–Roch integrality `χ(D) = χ(O) + D²/2` forces `D²` even.
pub fn surface_rr_parity(d_squared: i64) -> bool {
    d_squared % 2 == 0
}
