use fanocert::exactcore::{int, ring_piece_dimension, Field, FiniteField, Matrix, PolyRing, Polynomial, Rational, F2, F4};
use fanocert::veronese::{
    exhaustive_smooth_conic, find_smooth_conic, projection_kernel_certificate, random_subspace, secant_cubic,
    secant_stratum, split_hyperplane_certificate, veronese_ideal, veronese_map, ConicSubspace, ProjectivePoint,
    QuadraticForm3, SecantStratum, SingularQuadric,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = Rational;

fn sum_of_veronese_points(rng: &mut ChaCha8Rng, k: usize) -> Option<ProjectivePoint<Q>> {
    let mut acc = vec![int(0); 6];
    for _ in 0..k {
        let p = ProjectivePoint::<Q>::from_i64(&[rng.gen_range(-5..=5), rng.gen_range(-5..=5), rng.gen_range(-5..=5)]).ok()?;
        let v = veronese_map(&p).unwrap();
        let w = int(rng.gen_range(1..=4));
        for (a, c) in acc.iter_mut().zip(v.coords()) {
            *a = a.clone() + w.clone() * c.clone();
        }
    }
    ProjectivePoint::new(acc).ok()
}

/// Rank one iff the six quadrics vanish; rank at most two iff the cubic does.
fn stratum_by_equations(p: &ProjectivePoint<Q>) -> SecantStratum {
    if veronese_ideal::<Q>().iter().all(|g| g.eval(p.coords()).is_zero()) {
        SecantStratum::OnVeronese
    } else if secant_cubic::<Q>().eval(p.coords()).is_zero() {
        SecantStratum::OnSecantOnly
    } else {
        SecantStratum::Generic
    }
}

#[test]
fn two_hundred_random_points_land_in_the_right_stratum() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut seen = [0usize; 3];
    let mut checked = 0;
    while checked < 200 {
        let k = rng.gen_range(1..=3);
        let Some(p) = sum_of_veronese_points(&mut rng, k) else { continue };
        let s = secant_stratum(&p).unwrap();
        assert_eq!(s, stratum_by_equations(&p), "{p}");
        seen[s as usize] += 1;
        checked += 1;
    }
    assert!(seen.iter().all(|&n| n > 0), "{seen:?}");
}

proptest! {
    #[test]
    fn veronese_images_satisfy_all_equations(x in -9i64..=9, y in -9i64..=9, z in -9i64..=9) {
        prop_assume!((x, y, z) != (0, 0, 0));
        let v = veronese_map(&ProjectivePoint::<Q>::from_i64(&[x, y, z]).unwrap()).unwrap();
        prop_assert_eq!(secant_stratum(&v).unwrap(), SecantStratum::OnVeronese);
        prop_assert!(secant_cubic::<Q>().eval(v.coords()).is_zero());
    }
}

/// Monomials of degree `d` in `Z, S, T, U`.
fn exponents(d: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                out.push([a, b, c, d - a - b - c]);
            }
        }
    }
    out
}

/// `dim span ψ(k[Z,S,T,U]_d)` as the rank of monomials evaluated at sample
/// points `(t, u)` of the chart.
fn image_span_by_evaluation(d: u32) -> usize {
    let mons = exponents(d);
    let mut rows = Vec::new();
    for t in 1..=12i64 {
        for u in 2..=12i64 {
            let (t, u) = (int(t), int(u));
            let den = int(1) - u.clone() * u.clone();
            let vals = [t.clone() * t.clone() / den.clone(), t.clone() * u.clone() / den.clone(), t / den.clone(), u / den];
            rows.push(
                mons.iter()
                    .map(|e| (0..4).fold(int(1), |acc, i| acc * num_traits::pow(vals[i].clone(), e[i] as usize)))
                    .collect(),
            );
        }
    }
    Matrix::from_rows(rows).rank()
}

#[test]
fn projection_image_span_matches_point_evaluation() {
    let report = projection_kernel_certificate(6).unwrap();
    for c in &report.degrees {
        let d = c.degree;
        assert_eq!(c.image_span, image_span_by_evaluation(d), "degree {d}");
        // the kernel is (ST − UZ): its degree-d piece has dimension dim R_{d−2}
        let principal = if d >= 2 { ring_piece_dimension(4, d - 2) } else { 0 };
        assert_eq!(c.kernel_dim(), principal, "degree {d}");
        assert!(c.kernel_is_principal());
    }
}

#[test]
fn projection_dimension_identity_fails_from_degree_two() {
    let report = projection_kernel_certificate(6).unwrap();
    assert!(!report.membership_holds());
    assert!(!report.identity_holds());
    assert_eq!(report.first_failing_degree(), Some(2));
    for c in &report.degrees {
        assert_eq!(c.identity_holds(), c.degree < 2, "degree {}", c.degree);
    }
    let span2 = report.degrees.iter().find(|c| c.degree == 2).unwrap().image_span;
    assert_eq!(span2, 9);
}

#[test]
fn quotient_hilbert_function_is_that_of_a_complete_intersection() {
    let report = projection_kernel_certificate(6).unwrap();
    for c in &report.degrees {
        // (1 − t²)² / (1 − t)⁴ = 1 + 4t + 8t² + 12t³ + …
        assert_eq!(c.quotient_dim, 4 * c.degree as usize);
    }
    let first_mismatch = report.degrees.iter().find(|c| !c.hilbert_matches()).map(|c| c.degree);
    assert_eq!(first_mismatch, Some(3));
}

#[test]
fn non_prime_witness_identity() {
    let r = PolyRing::new(&["Z", "S", "T", "U"]);
    let p = |s: &str| r.parse::<Q>(s).unwrap();
    let lhs = &p("S") * &p("T^2 - S*Z");
    let rhs = &(&p("T") * &p("S*T - U*Z")) - &(&p("Z") * &p("S^2 - T*U"));
    assert_eq!(lhs, rhs);
    assert!(projection_kernel_certificate(2).unwrap().non_prime_witness);
}

/// In characteristic two the partials of `q` vanish at `(d, e, f)` for
/// `q = a x² + b y² + c z² + d yz + e zx + f xy`, so `q` is smooth iff that
/// point is nonzero and not on `q`.
fn smooth_by_closed_form<F: FiniteField>(q: &QuadraticForm3<F>) -> bool {
    let c = q.coeffs();
    let p = [c[3].clone(), c[4].clone(), c[5].clone()];
    !p.iter().all(Field::is_zero) && !q.eval(&p).is_zero()
}

fn any_smooth_by_enumeration<F: FiniteField>(v: &ConicSubspace<F>) -> bool {
    let els = F::elements();
    let n = v.dim();
    (0..els.len().pow(n as u32)).any(|mut k| {
        let coeffs: Vec<F> = (0..n)
            .map(|_| {
                let e = els[k % els.len()].clone();
                k /= els.len();
                e
            })
            .collect();
        smooth_by_closed_form(&v.element(&coeffs))
    })
}

fn conic_trials<F: FiniteField>(stream: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    rng.set_stream(stream);
    for _ in 0..500 {
        let dim = rng.gen_range(4..=6);
        let v = random_subspace::<F, _>(&mut rng, dim);
        let found = find_smooth_conic(&v).unwrap();
        let exhaustive = exhaustive_smooth_conic(&v).unwrap();
        assert_eq!(found.is_some(), any_smooth_by_enumeration(&v));
        assert_eq!(found.is_some(), exhaustive.is_some());
        for c in found.iter().chain(exhaustive.iter()) {
            assert!(smooth_by_closed_form(&c.form));
            assert_eq!(v.element(&c.coefficients), c.form);
            assert!(v.contains(&c.form));
        }
    }
}

#[test]
fn conic_search_over_f2() {
    conic_trials::<F2>(3);
}

#[test]
fn conic_search_over_f4() {
    conic_trials::<F4>(4);
}

#[test]
fn closed_form_agrees_with_library_smoothness() {
    let els = F4::elements();
    for k in 0..els.len().pow(6) {
        let mut m = k;
        let q = QuadraticForm3::new(std::array::from_fn(|_| {
            let e = els[m % 4];
            m /= 4;
            e
        }));
        if !q.is_zero() {
            assert_eq!(fanocert::veronese::is_smooth_conic(&q).unwrap(), smooth_by_closed_form(&q), "{q}");
        }
    }
}

fn linear_coefficients(l: &Polynomial<Q>) -> Vec<Q> {
    (0..5).map(|i| l.eval(&(0..5).map(|j| int(i64::from(i == j))).collect::<Vec<_>>())).collect()
}

fn plane_basis(forms: &[Polynomial<Q>]) -> Vec<Vec<Q>> {
    Matrix::from_rows(forms.iter().map(linear_coefficients).collect()).kernel()
}

fn same_plane(a: &[Polynomial<Q>], b: &[Polynomial<Q>]) -> bool {
    let rows = |f: &[Polynomial<Q>]| f.iter().map(linear_coefficients).collect::<Vec<_>>();
    let (ra, rb) = (Matrix::from_rows(rows(a)).rank(), Matrix::from_rows(rows(b)).rank());
    let both = Matrix::from_rows(rows(a).into_iter().chain(rows(b)).collect()).rank();
    ra == rb && both == ra
}

#[test]
fn split_planes_lie_in_the_section_and_avoid_the_divisor() {
    let r = PolyRing::new(&["x0", "x1", "x2", "x3", "x4"]);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for quadric in [SingularQuadric::Rank3, SingularQuadric::Rank4] {
        for avoided in [None, Some(&[0usize, 2][..]), Some(&[1usize, 2][..])] {
            let rep = split_hyperplane_certificate(quadric, avoided).unwrap();
            assert!(rep.ideals_agree() && rep.avoids);
            for plane in [&rep.d, &rep.d_prime] {
                let basis = plane_basis(plane);
                assert_eq!(basis.len(), 3);
                for _ in 0..20 {
                    let w: Vec<Q> = (0..3).map(|_| int(rng.gen_range(-5..=5))).collect();
                    let pt: Vec<Q> =
                        (0..5).map(|j| (0..3).fold(int(0), |acc, i| acc + w[i].clone() * basis[i][j].clone())).collect();
                    assert!(rep.quadric.eval(&pt).is_zero());
                    assert!(rep.hyperplane.eval(&pt).is_zero());
                }
                if let Some(idx) = avoided {
                    let a: Vec<Polynomial<Q>> = idx.iter().map(|&i| Polynomial::var(&r, i)).collect();
                    assert!(!same_plane(plane, &a));
                }
            }
            assert!(!same_plane(&rep.d, &rep.d_prime));
        }
    }
}
