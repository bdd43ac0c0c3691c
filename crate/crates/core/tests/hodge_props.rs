use fanocert::exactcore::{int, PolyRing, Polynomial, Rational};
use fanocert::hodge::{
    chi_pn, ci_chi_twist, ci_hodge_diamond, euler_contraction, h0_omega_p, omega2_vanishing_on_curve, zeta_basis,
    CIData, RationalCurve,
};
use proptest::prelude::*;

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    num_integer::binomial(n, k)
}

/// `dim S_k` on `P^N`.
fn sym(k: i64, n: i64) -> i64 {
    if k < 0 {
        0
    } else {
        binomial(k + n, n)
    }
}

/// `h⁰(Ω^p(d))` from `0 → Ω^p(d) → ∧^p V ⊗ O(d − p) → Ω^{p−1}(d) → 0`,
/// exact on global sections for `d ≥ 1`.
fn h0_by_euler_sequence(p: i64, d: i64, n: i64) -> i64 {
    if d <= 0 {
        return i64::from(p == 0 && d == 0);
    }
    if p == 0 {
        return sym(d, n);
    }
    binomial(n + 1, p) * sym(d - p, n) - h0_by_euler_sequence(p - 1, d, n)
}

#[test]
fn euler_contraction_kernel_matches_the_euler_sequence() {
    for n in 1..=4usize {
        for p in 0..=n {
            for d in -6..=6i64 {
                assert_eq!(
                    h0_omega_p(p, d, n).unwrap() as i64,
                    h0_by_euler_sequence(p as i64, d, n as i64),
                    "N = {n}, p = {p}, d = {d}"
                );
            }
        }
    }
}

#[test]
fn bott_vanishing_below_the_form_degree() {
    for n in 1..=4usize {
        for p in 1..=n {
            for d in -3..=p as i64 {
                assert_eq!(h0_omega_p(p, d, n).unwrap(), 0, "N = {n}, p = {p}, d = {d}");
            }
        }
    }
    assert!(euler_contraction(5, 1, 4).is_err());
}

#[test]
fn zeta_basis_spans_sections_of_omega2_twist3() {
    let z = zeta_basis();
    assert!(z.annihilated() && z.independent());
    assert_eq!(z.elements.len(), h0_omega_p(2, 3, 3).unwrap());
    assert_eq!(omega2_vanishing_on_curve(None).unwrap(), 4);
}

/// `χ(P^N, O(m)) = (m+1)(m+2)⋯(m+N) / N!`.
fn chi_by_polynomial(m: i64, n: u32) -> i64 {
    let mut q = int(1);
    for k in 1..=i64::from(n) {
        q = q * int(m + k) / int(k);
    }
    assert!(q.is_integer());
    q.to_integer().try_into().unwrap()
}

proptest! {
    #[test]
    fn chi_is_the_hilbert_polynomial(m in -20i64..=20, n in 0u32..=6) {
        prop_assert_eq!(chi_pn(m, n), chi_by_polynomial(m, n));
    }

    #[test]
    fn hyperplane_recursion(m in -20i64..=20, n in 1u32..=6) {
        prop_assert_eq!(chi_pn(m, n) - chi_pn(m - 1, n), chi_pn(m, n - 1));
    }

    #[test]
    fn lines_carry_no_vanishing_sections(a in prop::collection::vec(-4i64..=4, 4), b in prop::collection::vec(-4i64..=4, 4)) {
        let r = PolyRing::new(&["s", "t"]);
        let (s, t): (Polynomial<Rational>, Polynomial<Rational>) = (r.var("s"), r.var("t"));
        let coords: [Polynomial<Rational>; 4] =
            std::array::from_fn(|i| &s.scale(&int(a[i])) + &t.scale(&int(b[i])));
        // the two points must span a line
        let independent = (0..4).any(|i| (0..4).any(|j| a[i] * b[j] != a[j] * b[i]));
        prop_assume!(independent);
        let curve = RationalCurve::new(coords).unwrap();
        prop_assert_eq!(omega2_vanishing_on_curve(Some(&curve)).unwrap(), 0);
    }
}

#[test]
fn vanishing_examples() {
    let r = PolyRing::new(&["s", "t"]);
    let line = RationalCurve::parse(&r, ["s", "t", "0", "0"]).unwrap();
    assert_eq!(omega2_vanishing_on_curve(Some(&line)).unwrap(), 0);
    let quartic = RationalCurve::parse(&r, ["s^4", "s^3*t", "s*t^3", "t^4"]).unwrap();
    assert_eq!(omega2_vanishing_on_curve(Some(&quartic)).unwrap(), 0);
}

/// `c(T_X) = (1 + H)^{N+1} / Π (1 + d_i H)` truncated at `H³`, times `Π d_i`.
fn chern_numbers(n: u32, degrees: &[u32]) -> (i64, i64) {
    let mut c = [0i64; 4];
    for (k, ck) in c.iter_mut().enumerate() {
        *ck = binomial(i64::from(n) + 1, k as i64);
    }
    for &d in degrees {
        // multiply by 1 / (1 + dH) = Σ (−d)^k H^k
        let mut next = [0i64; 4];
        for i in 0..4 {
            for j in 0..=i {
                next[i] += c[j] * (-i64::from(d)).pow((i - j) as u32);
            }
        }
        c = next;
    }
    let deg: i64 = degrees.iter().map(|&d| i64::from(d)).product();
    (c[3] * deg, c[1] * c[2] * deg)
}

/// `h^{1,2} = 2 − h^{3,0} − e/2`, `h^{3,0} = 1 − c₁c₂/24`.
fn h12_by_chern(n: u32, degrees: &[u32]) -> i64 {
    let (e, c1c2) = chern_numbers(n, degrees);
    assert_eq!(c1c2 % 24, 0);
    let h30 = 1 - c1c2 / 24;
    2 - h30 - e / 2
}

#[test]
fn complete_intersection_threefolds() {
    let cases: &[(u32, &[u32], i64, i64)] = &[
        (4, &[2], 0, 0),
        (4, &[3], 5, 0),
        (4, &[4], 30, 0),
        (4, &[5], 101, 1),
        (5, &[2, 2], 2, 0),
        (5, &[2, 3], 20, 0),
        (5, &[3, 3], 73, 1),
        (6, &[2, 2, 2], 14, 0),
    ];
    for &(n, degrees, h12, h30) in cases {
        let ci = CIData::new(n, degrees.to_vec()).unwrap();
        let h = ci_hodge_diamond(&ci).unwrap();
        assert_eq!(h.h[1][2], h12, "{degrees:?} in P^{n}");
        assert_eq!(h.h[1][2], h12_by_chern(n, degrees));
        assert_eq!(h.h[0][3], h30);
        assert_eq!(h.h[1][1], 1);
        assert_eq!(h.euler_number(), chern_numbers(n, degrees).0);
    }
}

fn ci_threefold() -> impl Strategy<Value = (u32, Vec<u32>)> {
    (4u32..=7).prop_flat_map(|n| (Just(n), prop::collection::vec(2u32..=5, (n - 3) as usize)))
}

proptest! {
    #[test]
    fn diamonds_satisfy_serre_duality((n, degrees) in ci_threefold()) {
        let ci = CIData::new(n, degrees.clone()).unwrap();
        let h = ci_hodge_diamond(&ci).unwrap();
        prop_assert!(h.satisfies_serre_duality());
        prop_assert_eq!(h.h[1][2], h12_by_chern(n, &degrees));
        prop_assert_eq!(h.euler_number(), chern_numbers(n, &degrees).0);
        prop_assert_eq!(h.h[0][1], 0);
        prop_assert_eq!(h.h[0][2], 0);
        // Fano: Kodaira vanishing kills h^{0,3}
        if degrees.iter().sum::<u32>() <= n {
            prop_assert_eq!(h.h[0][3], 0);
            prop_assert_eq!(ci_chi_twist(&ci, 0), 1);
        }
    }
}

#[test]
fn non_threefolds_are_rejected() {
    assert!(ci_hodge_diamond(&CIData::new(3, vec![3]).unwrap()).is_err());
    assert!(CIData::new(4, vec![0]).is_err());
    assert!(CIData::new(2, vec![2, 2]).is_err());
}
