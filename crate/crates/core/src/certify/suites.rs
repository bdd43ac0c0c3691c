//! The certificate lists behind each suite.

use std::collections::BTreeSet;
use std::fmt::Display;

use num_integer::binomial;
use num_traits::Zero;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::oracle::{bott_h0_omega, ci_h12_from_chern};
use super::{Certificate, Config, Provenance, Suite, Value};
use crate::exactcore::{int, FiniteField, PolyRing, Polynomial, Rational, F2, F4};
use crate::hodge::{
    ci_hodge_diamond, euler_contraction, h0_omega_p, omega2_vanishing_on_curve, zeta_basis, CIData, RationalCurve,
};
use crate::numerology::{
    allowed_projection_degrees, delta_genus, g10_obstruction, is_prime, p_divisibility_solutions, scroll_degree,
    scroll_splittings, DeltaGenusInput,
};
use crate::schubert::{
    box_partitions, class, degree, pieri, v5_separability_certificate, ClassPoly, Partition2,
    SchubertElement,
};
use crate::toric::geometry::det3;
use crate::toric::{
    blow_up, contract_ray, enumerate_qfactorializations, fibration_to_p1, paper, principal_divisor,
    surface_intersection, surface_self_intersections, Fan, ToricError,
};
use crate::veronese::{
    corrected_pencil_certificate, exhaustive_smooth_conic, find_smooth_conic, is_smooth_conic,
    projection_kernel_certificate, quadric_pencil_singularity_certificate, random_subspace, secant_cubic,
    secant_stratum, split_hyperplane_certificate, symmetric_determinant, veronese_ideal, veronese_map,
    veronese_ring, ProjectivePoint, SecantStratum, SingularQuadric, VeroneseError,
};

use Provenance::{Derived, Paper, Trivial};

type Q = Rational;

pub(super) fn run(suite: Suite, config: &Config) -> Vec<Certificate> {
    match suite {
        Suite::Schubert => schubert(config),
        Suite::Toric => toric(config),
        Suite::Veronese => veronese(config),
        Suite::Hodge => hodge(),
        Suite::Numerology => numerology(config),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

fn check<T: Into<Value>, E: Display>(
    id: &str,
    description: &str,
    provenance: Provenance,
    expected: impl Into<Value>,
    computed: Result<T, E>,
) -> Certificate {
    let expected = expected.into();
    match computed {
        Ok(v) => Certificate::new(id, description, provenance, expected, v),
        Err(e) => Certificate::errored(id, description, provenance, expected, e),
    }
}

fn rng_for(config: &Config, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(stream);
    rng
}

fn class_text(src: &str) -> Value {
    Value::text(class(src).to_string())
}

fn schubert(config: &Config) -> Vec<Certificate> {
    let cert = v5_separability_certificate();
    let mut out = Vec::new();

    let ch_paper = [
        "-5*s1",
        "7/2*s1^2 - 3*s11 - 2*s2",
        "-11/6*s1^3 + 5/2*s1*s11 + 2*s1*s2 - s3",
    ];
    for (k, paper_value) in ch_paper.iter().enumerate() {
        out.push(Certificate::new(
            format!("ch{}-omega-gr25", k + 1),
            format!("degree-{} part of ch(Ω¹) on Gr(2,5) from ch(S)·ch(Q*)", k + 1),
            Paper,
            class_text(paper_value),
            Value::text(cert.omega_character.part(k + 1).to_string()),
        ));
    }

    let c = &cert.twisted_classes;
    out.push(Certificate::new("c1-omega-gr25-twist", "c1(Ω¹(2σ1)) on Gr(2,5)", Paper, class_text("7*s1"), Value::text(c.c(1).to_string())));
    out.push(Certificate::new(
        "c2-omega-gr25-twist",
        "c2(Ω¹(2σ1)) on Gr(2,5)",
        Paper,
        class_text("19*s1^2 + 3*s11 + 2*s2"),
        Value::text(c.c(2).to_string()),
    ));
    out.push(
        Certificate::new(
            "c3-omega-gr25-twist",
            "c3(Ω¹(2σ1)) on Gr(2,5)",
            Paper,
            class_text("145*s1^3 + 14*s1*s11 + 10*s1*s2 - 2*s3"),
            Value::text(c.c(3).to_string()),
        )
        .known_inconsistency(
            "the expansion of ch3 adds +50σ1³ for 2σ1²·c1' although c1' = −5σ1 gives −10σ1³; the σ1³ coefficient of c3 is 25",
        ),
    );
    out.push(check(
        "c3-omega-gr25-twist-corrected",
        "c3(Ω¹(2σ1)) against the binomial twisting formula Σ C(6−i, 3−i) c_i (2σ1)^{3−i}",
        Derived,
        Value::text(c.c(3).to_string()),
        twisted_c3_oracle().map(|p| Value::text(p.to_string())),
    ));

    let table_paper = [5, 2, 3, 1];
    let table_ids = ["degree-s1^6-gr25", "degree-s1^4s11-gr25", "degree-s1^4s2-gr25", "degree-s1^3s3-gr25"];
    for ((id, (name, d)), want) in table_ids.iter().zip(&cert.degree_table).zip(table_paper) {
        out.push(Certificate::new(*id, format!("deg {name} on Gr(2,5)"), Paper, Value::int(want), d.clone()));
    }

    let series: Vec<Value> = cert.restriction_series.iter().cloned().map(Value::Number).collect();
    let oracle: Vec<Value> = (0..4i64).map(|k| Value::int(if k % 2 == 0 { 1 } else { -1 } * (k + 1) * (k + 2) / 2)).collect();
    out.push(Certificate::new(
        "v5-restriction-series",
        "coefficients of (1+σ1)^{-3} up to σ1³, against (−1)^k C(k+2,2)",
        Derived,
        Value::List(oracle),
        Value::List(series),
    ));

    out.push(
        Certificate::new(
            "c3-omega-v5-twist",
            "deg c3(Ω¹_V(2)) for V = Gr(2,5) ∩ P^6",
            Paper,
            Value::int(620),
            cert.value.clone(),
        )
        .known_inconsistency("inherits the +50σ1³ slip: with c3 = 25σ1³ + … the degree is 0·5 + 5·2 + 4·3 − 2 = 20"),
    );
    // c1(T) = 2H, H·c2(T) = 12 from χ(O) = 1, e = 4, H³ = 5
    let (h3, hc2, euler) = (5, 12, 4);
    out.push(Certificate::new(
        "c3-omega-v5-twist-corrected",
        "deg c3(Ω¹_V(2)) against c3(Ω(2H)) = −e + 2H·c2(T) − 8H³ + 8H³ for e = 4, H·c2 = 12, H³ = 5",
        Derived,
        Value::int(-euler + 2 * hc2 - 8 * h3 + 8 * h3),
        cert.value,
    ));

    out.push(check("pieri-agreement-gr25", "σ_λ·σ_k by LR, Pieri, and iterated Pieri agree for all λ, k", Derived, true, pieri_agreement()));
    out.push(check("duality-gr25", "deg σ_λ·σ_μ = 1 iff μ is complementary to λ", Derived, true, duality()));
    out.push(check(
        "associativity-gr25",
        &format!("(ab)c = a(bc) on {} seeded random triples", config.trials),
        Trivial,
        true,
        associativity(config),
    ));
    out
}

fn twisted_c3_oracle() -> Result<ClassPoly, crate::schubert::SchubertError> {
    let omega = crate::schubert::character_to_chern(&v5_separability_certificate().omega_character, 6)?;
    let l = class("2*s1");
    let mut out = class("0");
    for i in 0..=3u32 {
        let term = &omega.c(i as usize) * &l.pow(3 - i);
        out = &out + &term.scale(&int(binomial(6 - i64::from(i), 3 - i64::from(i))));
    }
    Ok(out)
}

fn pieri_agreement() -> Result<bool, crate::schubert::SchubertError> {
    for l in box_partitions(5) {
        let a = SchubertElement::basis(5, l)?;
        for k in 1..=3 {
            let b = SchubertElement::sigma(5, k, 0)?;
            let lr = a.mul(&b)?;
            if lr != pieri(l, k, 5)? || lr != a.mul_via_pieri(&b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn duality() -> Result<bool, crate::schubert::SchubertError> {
    let parts = box_partitions(5);
    for &l in &parts {
        for &m in &parts {
            if l.codim() + m.codim() != 6 {
                continue;
            }
            let d = degree(&SchubertElement::basis(5, l)?.mul(&SchubertElement::basis(5, m)?)?)?;
            let dual = m == Partition2 { a: 3 - l.b, b: 3 - l.a };
            if d != int(i64::from(dual)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn random_element<R: Rng>(rng: &mut R) -> Result<SchubertElement, crate::schubert::SchubertError> {
    let parts = box_partitions(5);
    let mut x = SchubertElement::zero(5);
    for _ in 0..rng.gen_range(1..=3) {
        let p = *parts.choose(rng).expect("nonempty box");
        let c = int(rng.gen_range(-3..=3));
        x = x.add(&SchubertElement::basis(5, p)?.scale(&c))?;
    }
    Ok(x)
}

fn associativity(config: &Config) -> Result<bool, crate::schubert::SchubertError> {
    let mut rng = rng_for(config, 1);
    for _ in 0..config.trials {
        let (a, b, c) = (random_element(&mut rng)?, random_element(&mut rng)?, random_element(&mut rng)?);
        if a.mul(&b)?.mul(&c)? != a.mul(&b.mul(&c)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fan_rays(fan: &Fan) -> Value {
    Value::List(fan.rays().iter().map(|r| Value::ints(r.vector().iter().copied())).collect())
}

fn covector(m: Option<Vec<i64>>) -> Value {
    m.map_or(Value::text("none"), Value::ints)
}

/// Triangulations of the cone over `v1..v4`, keyed by diagonal `(i, j)`.
fn scroll_triangulations(bundle: &Fan) -> Result<(Fan, Vec<((usize, usize), Fan)>), ToricError> {
    let delta = contract_ray(bundle, 5)?;
    let tri = enumerate_qfactorializations(&delta)?;
    let keyed = tri.into_iter().map(|t| (t.diagonals[0], t.fan)).collect();
    Ok((delta, keyed))
}

fn multiplicities(fan: &Fan, diagonal: (usize, usize)) -> Result<Vec<i64>, ToricError> {
    let mut out = Vec::new();
    for c in fan.cones() {
        if c.contains(diagonal.0) && c.contains(diagonal.1) && !c.contains(4) {
            let m = fan.cone_is_smooth(c)?.1;
            out.push(i64::try_from(m).expect("small multiplicity"));
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn toric(config: &Config) -> Vec<Certificate> {
    let mut out = Vec::new();
    out.push(check(
        "s14-self-intersections",
        "D_i² on the fan e1, e2, −e1+3e2, −e2 of S(1,4)",
        Paper,
        Value::ints([0, -3, 0, 3]),
        surface_self_intersections(&paper::s14_base()).map(Value::ints),
    ));
    out.push(check(
        "s23-self-intersections",
        "D_i² on the fan e1, e2, −e1+e2, −e2 of S(2,3)",
        Paper,
        Value::ints([0, -1, 0, 1]),
        surface_self_intersections(&paper::s23_base()).map(Value::ints),
    ));
    let third_ray = (0..=5)
        .find(|&k| surface_self_intersections(&paper::hirzebruch(k)).ok() == Some(vec![0, -3, 0, 3]))
        .map_or(Value::text("none"), |k| Value::text(format!("-e1+{k}e2")));
    out.push(
        Certificate::new(
            "l014-sigma-third-ray",
            "third ray of the fan of S(1,4) as displayed, against the ray giving self-intersections (0,−3,0,3)",
            Paper,
            Value::text("-e1+3e3"),
            third_ray,
        )
        .known_inconsistency("the fan is displayed with −e1+3e3 in R²; the ray list and the intersection numbers use u3 = −e1+3e2"),
    );

    for (name, bundle, rays) in [
        ("l014", paper::l014_bundle(), [[1, 0, -1], [0, 1, 0], [-1, 3, 0], [0, -1, -1], [0, 0, 1], [0, 0, -1]]),
        ("l023", paper::l023_bundle(), [[1, 0, -2], [0, 1, 0], [-1, 1, 0], [0, -1, -1], [0, 0, 1], [0, 0, -1]]),
    ] {
        out.push(Certificate::new(
            format!("{name}-bundle-rays"),
            "rays v1..v6 of the P1-bundle fan",
            Paper,
            Value::List(rays.iter().map(|r| Value::ints(r.iter().copied())).collect()),
            fan_rays(&bundle),
        ));
        out.push(check(
            &format!("{name}-bundle-smooth-complete"),
            "the P1-bundle fan is complete and smooth with 8 maximal cones",
            Derived,
            Value::List(vec![true.into(), true.into(), Value::int(8)]),
            bundle.fan_is_smooth().map(|s| Value::List(vec![bundle.is_complete().into(), s.into(), Value::int(bundle.cones().len() as i64)])),
        ));
        out.push(Certificate::new(
            format!("{name}-contract-v5-rejected"),
            "contracting v5 leaves a cone that is not strongly convex",
            Paper,
            true,
            contract_ray(&bundle, 4).is_err(),
        ));
        let (delta, tri) = match scroll_triangulations(&bundle) {
            Ok(x) => x,
            Err(e) => {
                out.push(Certificate::errored(&format!("{name}-pipeline"), "contract v6 and subdivide", Derived, true.into(), e));
                continue;
            }
        };
        out.push(Certificate::new(format!("{name}-delta-cones"), "maximal cones after contracting v6", Paper, Value::int(5), Value::int(delta.cones().len() as i64)));
        out.push(Certificate::new(
            format!("{name}-triangulations"),
            "simplicial subdivisions without new rays, keyed by diagonal",
            Paper,
            Value::List(vec![Value::text("v1v3"), Value::text("v2v4")]),
            Value::List(tri.iter().map(|((a, b), _)| Value::text(format!("v{}v{}", a + 1, b + 1))).collect()),
        ));
        for ((a, b), fan) in &tri {
            let diag = format!("v{}v{}", a + 1, b + 1);
            let is_first = (*a, *b) == (0, 2);
            let smooth_id = match (name, is_first) {
                ("l014", true) => "l014-delta1-smooth".to_string(),
                ("l014", false) => "l014-delta2-smooth".to_string(),
                _ => format!("{name}-diag-{diag}-smooth"),
            };
            out.push(check(
                &smooth_id,
                &format!("the subdivision along the diagonal {diag} is smooth"),
                Paper,
                !is_first,
                fan.fan_is_smooth(),
            ));
            if is_first {
                out.push(check(
                    &format!("{name}-diag-{diag}-multiplicities"),
                    &format!("multiplicities of the two cones on the diagonal {diag}, against |det| of the ray triples"),
                    Derived,
                    Value::ints(det_oracle(fan, (*a, *b))),
                    multiplicities(fan, (*a, *b)).map(Value::ints),
                ));
            } else {
                out.push(Certificate::new(
                    format!("{name}-diag-{diag}-fibration"),
                    "covector of a toric morphism to P1 (v2, v4, v5 lie on x = 0)",
                    Paper,
                    Value::ints([1, 0, 0]),
                    covector(fibration_to_p1(fan)),
                ));
            }
        }
        if name == "l023" {
            let smooth: Vec<Value> = tri.iter().map(|(_, f)| Value::Bool(f.fan_is_smooth().unwrap_or(false))).collect();
            out.push(
                Certificate::new(
                    "l023-proof-labeling",
                    "(V1 smooth, V2 smooth) as concluded in the proof text, V1 along v1v3 and V2 along v2v4",
                    Paper,
                    Value::List(vec![true.into(), false.into()]),
                    Value::List(smooth),
                )
                .known_inconsistency(
                    "the statement says V1 is not smooth and V2 is smooth, the proof concludes the opposite; the computation agrees with the statement",
                ),
            );
        }
    }

    out.push(check("noether-built-fans", "ΣD_i² + 3·#rays = 12 on P2, F0..F4, and the S(1,4), S(2,3) bases", Derived, true, noether_built()));
    out.push(check(
        "noether-random-blowups",
        "ΣD_i² + 3·#rays = 12 after 50 seeded random blowup sequences",
        Derived,
        true,
        noether_random(config),
    ));
    out.push(check(
        "principal-divisors-s14",
        "div(χ^m)·D_j = 0 for all j and all m with entries in [−3, 3] on S(1,4)",
        Derived,
        true,
        principal_pairing(&paper::s14_base(), 3),
    ));
    out.push(Certificate::new("p2-fibration", "exhaustive covector search on P2", Derived, Value::text("none"), covector(fibration_to_p1(&paper::p2()))));
    out.push(Certificate::new("p3-fibration", "exhaustive covector search on P3", Derived, Value::text("none"), covector(fibration_to_p1(&paper::p3()))));
    out
}

/// `|det|` of the two ray triples `(a, b, c)` containing the diagonal, sorted.
fn det_oracle(fan: &Fan, diag: (usize, usize)) -> Vec<i64> {
    let mut v: Vec<i64> = (0..4)
        .filter(|&k| k != diag.0 && k != diag.1)
        .map(|c| det3(fan.ray(diag.0), fan.ray(diag.1), fan.ray(c)).abs())
        .collect();
    v.sort_unstable();
    v
}

fn noether(fan: &Fan) -> Result<bool, ToricError> {
    let d2: i64 = surface_self_intersections(fan)?.iter().sum();
    Ok(d2 + 3 * fan.rays().len() as i64 == 12)
}

fn noether_built() -> Result<bool, ToricError> {
    let mut fans = vec![paper::p2(), paper::s14_base(), paper::s23_base()];
    fans.extend((0..=4).map(paper::hirzebruch));
    for f in &fans {
        if !noether(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn noether_random(config: &Config) -> Result<bool, ToricError> {
    let mut rng = rng_for(config, 2);
    for _ in 0..50 {
        let mut fan = if rng.gen_bool(0.2) { paper::p2() } else { paper::hirzebruch(rng.gen_range(0..=4)) };
        for _ in 0..rng.gen_range(1..=4) {
            let c = fan.cones().choose(&mut rng).expect("nonempty fan").rays().to_vec();
            fan = blow_up(&fan, c[0], c[1])?;
        }
        if !noether(&fan)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn principal_pairing(fan: &Fan, bound: i64) -> Result<bool, ToricError> {
    let self_int = surface_self_intersections(fan)?;
    let n = fan.rays().len();
    for m0 in -bound..=bound {
        for m1 in -bound..=bound {
            let a = principal_divisor(fan, &[m0, m1]).0;
            for j in 0..n {
                let mut total = 0;
                for i in 0..n {
                    total += a[i] * if i == j { self_int[i] } else { surface_intersection(fan, i, j)? };
                }
                if total != 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn veronese(config: &Config) -> Vec<Certificate> {
    let mut out = Vec::new();
    let r = veronese_ring();
    let paper_gens = ["xy-u^2", "yz-s^2", "zx-t^2", "xs-tu", "yt-us", "zu-st"];
    let expected: Vec<Value> = paper_gens
        .iter()
        .map(|g| {
            let src: String = g.chars().fold(String::new(), |mut s, c| {
                if c.is_ascii_alphabetic() && s.chars().last().is_some_and(|p| p.is_ascii_alphabetic()) {
                    s.push('*');
                }
                s.push(c);
                s
            });
            Value::text(r.parse::<Q>(&src).map(|p| p.to_string()).unwrap_or_else(|e| e.to_string()))
        })
        .collect();
    let computed: Vec<Value> = veronese_ideal::<Q>().iter().map(|g| Value::text(g.to_string())).collect();
    out.push(Certificate::new("veronese-ideal-generators", "the six quadrics of the Veronese surface in order", Paper, Value::List(expected), Value::List(computed)));
    out.push(Certificate::new(
        "veronese-secant-cubic",
        "xyz + 2stu − xs² − yt² − zu² equals the symmetric determinant",
        Derived,
        true,
        secant_cubic::<Q>() == symmetric_determinant::<Q>(),
    ));
    out.push(check("veronese-random-strata", "ν(p) has rank 1, ν(p)+ν(q) rank 2, on 200 seeded random points", Derived, true, strata(config)));

    match projection_kernel_certificate(config.degree_bound) {
        Ok(rep) => {
            out.push(
                Certificate::new("projection-kernel-membership", "S²−TU and ST−UZ both lie in ker ψ", Paper, true, rep.membership_holds())
                    .known_inconsistency("ψ(ST−UZ) = 0 but ψ(S²−TU) = t²u²/(1−u²)² − tu/(1−u²)² ≠ 0"),
            );
            out.push(
                Certificate::new(
                    "projection-kernel-identity",
                    &format!("dim (S²−TU, ST−UZ)_d + dim ψ(k[Z,S,T,U]_d) = dim k[Z,S,T,U]_d for d ≤ {}", config.degree_bound),
                    Paper,
                    true,
                    rep.identity_holds(),
                )
                .known_inconsistency("the degree-2 image span is 9, so the kernel in degree 2 is one-dimensional, not two"),
            );
            out.push(Certificate::new(
                "projection-kernel-first-failing-degree",
                "first degree where the dimension identity fails; S²−TU ∉ ker ψ already in degree 2",
                Derived,
                Value::int(2),
                rep.first_failing_degree().map_or(Value::text("none"), |d| Value::int(i64::from(d))),
            ));
            out.push(Certificate::new(
                "projection-kernel-principal",
                &format!("the graded kernel equals (ST−UZ) in each degree ≤ {}", config.degree_bound),
                Derived,
                true,
                rep.kernel_is_principal(),
            ));
            out.push(Certificate::new(
                "projection-kernel-inhomogeneous",
                "ST−UZ and Z+S²−T² lie in ker ψ",
                Derived,
                Value::List(vec![true.into(), true.into()]),
                Value::List(rep.kernel_generators.iter().map(|(_, z)| Value::Bool(*z)).collect()),
            ));
            out.push(Certificate::new("projection-denominators-cleared", "ψ(m) = m(t²,tu,t,u)/(1−u²)^d for every monomial m", Derived, true, rep.denominators_cleared));
            out.push(
                Certificate::new("projection-ideal-prime", "(S²−TU, ST−UZ) is prime", Paper, true, !rep.non_prime_witness)
                    .known_inconsistency("S·(T²−SZ) = T(ST−UZ) − Z(S²−TU) lies in the ideal, S and T²−SZ do not"),
            );
            out.push(
                Certificate::new(
                    "projection-quotient-module",
                    "Hilbert function of k[Z,S,T,U]/(S²−TU, ST−UZ) equals that of R·S ⊕ R[T], R = k[Z,U]",
                    Paper,
                    true,
                    rep.hilbert_matches(),
                )
                .known_inconsistency("the quotient has Hilbert function 4d; the module predicts d + (d+1)(d+2)/2, first differing at d = 3"),
            );
        }
        Err(e) => out.push(Certificate::errored("projection-kernel", "projection kernel certificate", Paper, true.into(), e)),
    }

    out.push(check(
        "quadric-pencil-singular",
        "α(s²−tu) + β(st−uz) and its partials vanish at [1:0:0:0:0] for symbolic α, β",
        Paper,
        true,
        quadric_pencil_singularity_certificate().map(|p| p.singular()),
    ));
    match corrected_pencil_certificate() {
        Ok(rep) => {
            out.push(Certificate::new(
                "projection-image-quadrics",
                "quadrics containing the image [X²−Y² : Z² : YZ : ZX : XY]",
                Derived,
                Value::int(2),
                Value::int(rep.quadrics_through_image as i64),
            ));
            out.push(Certificate::new(
                "corrected-pencil-singular",
                "α(st−uz) + β(yz+s²−t²) is singular at [α:0:0:0:β]",
                Derived,
                true,
                rep.singularity.singular() && rep.pencil_on_image.iter().all(|(_, z)| *z),
            ));
        }
        Err(e) => out.push(Certificate::errored("corrected-pencil", "corrected pencil", Derived, true.into(), e)),
    }

    for (q, label) in [(SingularQuadric::Rank3, "rank3"), (SingularQuadric::Rank4, "rank4")] {
        for (avoid, tag) in [(&[0usize, 2][..], "x0x2"), (&[1, 2][..], "x1x2")] {
            out.push(check(
                &format!("split-{label}-avoid-{tag}"),
                &format!("V ∩ H = D ∪ D′ for {} with neither plane {{{tag} = 0}}", q.equation()),
                Paper,
                true,
                split_hyperplane_certificate(q, Some(avoid)).map(|r| r.ideals_agree() && r.avoids),
            ));
        }
    }

    out.push(check(
        "conic-f2-agreement",
        &format!("find_smooth_conic agrees with exhaustive search on {} random 4-dimensional subspaces over F2", config.trials),
        Derived,
        true,
        conic_agreement::<F2>(config, 3),
    ));
    out.push(check(
        "conic-f4-agreement",
        &format!("find_smooth_conic agrees with exhaustive search on {} random 4-dimensional subspaces over F4", config.trials),
        Derived,
        true,
        conic_agreement::<F4>(config, 4),
    ));
    out
}

fn strata(config: &Config) -> Result<bool, VeroneseError> {
    let mut rng = rng_for(config, 5);
    let point = |rng: &mut ChaCha8Rng| loop {
        let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-5..=5)).collect();
        if let Ok(p) = ProjectivePoint::<Q>::from_i64(&c) {
            return p;
        }
    };
    for _ in 0..200 {
        let (p, q) = (point(&mut rng), point(&mut rng));
        let (vp, vq) = (veronese_map(&p)?, veronese_map(&q)?);
        if secant_stratum(&vp)? != SecantStratum::OnVeronese {
            return Ok(false);
        }
        if p == q {
            continue;
        }
        let sum: Vec<Q> = vp.coords().iter().zip(vq.coords()).map(|(a, b)| a + b).collect();
        if secant_stratum(&ProjectivePoint::new(sum)?)? != SecantStratum::OnSecantOnly {
            return Ok(false);
        }
        let cubic = secant_cubic::<Q>();
        let on_surface = veronese_ideal::<Q>().iter().all(|g| g.eval(vp.coords()).is_zero());
        if !on_surface || !cubic.eval(vp.coords()).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn conic_agreement<F: FiniteField>(config: &Config, stream: u64) -> Result<bool, VeroneseError> {
    let mut rng = rng_for(config, stream);
    for _ in 0..config.trials {
        let v = random_subspace::<F, _>(&mut rng, 4);
        let found = find_smooth_conic(&v)?;
        if found.is_some() != exhaustive_smooth_conic(&v)?.is_some() {
            return Ok(false);
        }
        if let Some(c) = found {
            if !v.contains(&c.form) || !is_smooth_conic(&c.form)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn hodge() -> Vec<Certificate> {
    let mut out = Vec::new();
    out.push(check("omega2-p3-twist3-h0", "h⁰(P3, Ω²(3)) as the Euler-contraction kernel", Paper, Value::int(4), h0_omega_p(2, 3, 3).map(|h| Value::int(h as i64))));
    out.push(check(
        "omega2-p3-euler-dims",
        "source, target and rank of the Euler contraction for Ω²(3) on P3: 24 − (40 − 20) = 4",
        Paper,
        Value::ints([24, 40, 20]),
        euler_contraction(2, 3, 3).map(|e| Value::ints([e.source_dim as i64, e.target_dim as i64, e.rank as i64])),
    ));
    let z = zeta_basis();
    out.push(Certificate::new(
        "omega2-zeta-basis",
        "ζ123, ζ124, ζ134, ζ234: four independent sections killed by the contraction",
        Paper,
        Value::List(vec![Value::int(4), true.into(), true.into()]),
        Value::List(vec![Value::int(z.elements.len() as i64), z.annihilated().into(), z.independent().into()]),
    ));
    let st = PolyRing::new(&["s", "t"]);
    let quartic = ["s^4", "s^3*t", "s*t^3", "t^4"];
    out.push(check(
        "omega2-vanishing-quartic-curve",
        "sections of Ω²(3) vanishing on the rational quartic [s⁴ : s³t : st³ : t⁴]",
        Paper,
        Value::int(0),
        RationalCurve::parse(&st, quartic).map_err(|e| e.to_string()).and_then(|c| {
            omega2_vanishing_on_curve(Some(&c)).map(|n| Value::int(n as i64)).map_err(|e| e.to_string())
        }),
    ));
    let line = ["s", "t", "0", "0"];
    out.push(check(
        "omega2-vanishing-line",
        "sections of Ω²(3) vanishing on the line [s : t : 0 : 0], against evaluation at points of the line",
        Derived,
        Value::int(vanishing_by_points(&st, &line) as i64),
        RationalCurve::parse(&st, line).map_err(|e| e.to_string()).and_then(|c| {
            omega2_vanishing_on_curve(Some(&c)).map(|n| Value::int(n as i64)).map_err(|e| e.to_string())
        }),
    ));
    out.push(check(
        "h0-omega-bott",
        "h⁰(P^N, Ω^p(d)) from the Euler contraction equals Bott's formula for N ≤ 4, p ≤ N, |d| ≤ 6",
        Derived,
        true,
        bott_agreement(),
    ));

    for (id, degrees, label) in [("ci-cubic-threefold", vec![3], "cubic"), ("ci-quartic-threefold", vec![4], "quartic")] {
        let ci = CIData::new(4, degrees.clone());
        out.push(check(
            &format!("{id}-h11-h12"),
            &format!("(h¹¹, h¹²) of the {label} threefold, against e = ∫c3 from (1+H)^5/(1+dH)"),
            Derived,
            Value::ints([1, ci_h12_from_chern(4, &degrees)]),
            ci.and_then(|c| ci_hodge_diamond(&c)).map(|d| Value::ints([d.h[1][1], d.h[1][2]])),
        ));
    }
    let family: [(u32, &[u32]); 7] =
        [(4, &[2]), (4, &[3]), (4, &[4]), (4, &[5]), (5, &[2, 2]), (5, &[2, 3]), (6, &[2, 2, 2])];
    out.push(check(
        "ci-diamonds-symmetric",
        "Serre duality and h^{0,j} = 0 (j = 1, 2) on threefold complete intersections, h^{0,3} = 0 when Fano",
        Trivial,
        true,
        family.iter().try_fold(true, |ok, (n, d)| {
            let ci = CIData::new(*n, d.to_vec())?;
            let diamond = ci_hodge_diamond(&ci)?;
            let fano = d.iter().sum::<u32>() < n + 1;
            Ok::<bool, crate::hodge::HodgeError>(
                ok && diamond.satisfies_serre_duality()
                    && diamond.h[0][1] == 0
                    && diamond.h[0][2] == 0
                    && (!fano || diamond.h[0][3] == 0),
            )
        }),
    ));
    out
}

/// Rank of the evaluation of the coefficient functions of each ζ at points
/// of the curve; the complement of the rank in 4 is the vanishing dimension.
fn vanishing_by_points(ring: &PolyRing, coords: &[&str; 4]) -> usize {
    let curve: Vec<Polynomial<Q>> = coords.iter().map(|c| ring.parse(c).expect("well-formed")).collect();
    let z = zeta_basis();
    let mut rows = crate::exactcore::Matrix::empty(z.elements.len());
    for k in 0..6 {
        let pt = [int(1), int(k)];
        let x: Vec<Q> = curve.iter().map(|c| c.eval(&pt)).collect();
        let keys: BTreeSet<&Vec<usize>> = z.elements.iter().flat_map(|e| e.terms.keys()).collect();
        for key in keys {
            let row: Vec<Q> = z.elements.iter().map(|e| e.terms.get(key).map_or(Q::zero(), |c| c.eval(&x))).collect();
            rows.push_row(row);
        }
    }
    z.elements.len() - rows.rank()
}

fn bott_agreement() -> Result<bool, crate::hodge::HodgeError> {
    for n in 1..=4usize {
        for p in 0..=n {
            for d in -6..=6i64 {
                let ours = h0_omega_p(p, d, n)? as i64;
                if ours != bott_h0_omega(p as i64, d, n as i64) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn numerology(config: &Config) -> Vec<Certificate> {
    let mut out = Vec::new();
    let sols = |v: Vec<(u32, u32, u32)>| {
        Value::List(v.into_iter().map(|(p, g, d)| Value::ints([p, g, d].map(i64::from))).collect())
    };
    let computed = p_divisibility_solutions(config.genus_min, config.genus_max, &config.genus_excluded)
        .into_iter()
        .map(|s| (s.p, s.g, s.d))
        .collect();
    let default = Config::default();
    let paper_range = (config.genus_min, config.genus_max, &config.genus_excluded)
        == (default.genus_min, default.genus_max, &default.genus_excluded);
    let (prov, expected) = if paper_range {
        (Paper, sols(vec![(2, 9, 2), (3, 10, 1)]))
    } else {
        (Derived, sols(divisibility_brute_force(config)))
    };
    out.push(Certificate::new(
        "p-divisibility-solutions",
        &format!(
            "(p, g, d) with p prime and 2g − 2 = 2dp², {} ≤ g ≤ {}, g ∉ {:?}",
            config.genus_min, config.genus_max, config.genus_excluded
        ),
        prov,
        expected,
        sols(computed),
    ));
    out.push(Certificate::new(
        "scroll-splittings-5",
        "S(0, a, b) with a + b = 5",
        Paper,
        Value::List(vec![Value::ints([1, 4]), Value::ints([2, 3])]),
        Value::List(scroll_splittings(5).into_iter().map(|(a, b)| Value::ints([a, b].map(i64::from))).collect()),
    ));
    out.push(Certificate::new("scroll-degree-014", "deg S(0,1,4)", Paper, Value::int(5), Value::int(i64::from(scroll_degree(&[0, 1, 4])))));
    out.push(Certificate::new("scroll-degree-023", "deg S(0,2,3)", Paper, Value::int(5), Value::int(i64::from(scroll_degree(&[0, 2, 3])))));
    let (value, obstructed) = g10_obstruction();
    out.push(Certificate::new(
        "g10-obstruction",
        "(2·10 − 8) + 4 and whether it avoids 3Z",
        Paper,
        Value::List(vec![Value::int(16), true.into()]),
        Value::List(vec![Value::int(value), obstructed.into()]),
    ));
    out.push(Certificate::new(
        "delta-genus-v5",
        "Δ = 3 + 5 − 8",
        Paper,
        Value::int(0),
        delta_genus(&DeltaGenusInput::new(3, int(5), 8)),
    ));
    out.push(Certificate::new(
        "projection-degree-forced",
        "deg ∈ 1..=10 with Δ = 4/deg − 3 ≥ 0",
        Paper,
        Value::ints([1]),
        Value::ints(allowed_projection_degrees(10).into_iter().map(i64::from)),
    ));
    out
}

fn divisibility_brute_force(config: &Config) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for g in config.genus_min.max(1)..=config.genus_max {
        if config.genus_excluded.contains(&g) {
            continue;
        }
        for p in 2..=g {
            if !is_prime(p) {
                continue;
            }
            for d in 1..=g {
                if 2 * g - 2 == 2 * d * p * p {
                    out.push((p, g, d));
                }
            }
        }
    }
    out
}
