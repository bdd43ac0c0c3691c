//! One PASS/FAIL line per acceptance criterion. Failing criteria are
//! reported, not hidden; set `ACCEPTANCE_STRICT=1` to turn any FAIL into a
//! nonzero exit.

use std::fmt::Display;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fanocert::certify::{bott_h0_omega, ci_h12_from_chern, run_suite, Config, Suite, Verdict};
use fanocert::exactcore::{int, rat, FiniteField, Polynomial, Rational, F2, F4};
use fanocert::hodge::{
    ci_chi_twist, ci_hodge_diamond, euler_contraction, h0_omega_p, omega2_vanishing_on_curve, zeta_basis, CIData,
    RationalCurve,
};
use fanocert::numerology::{
    allowed_projection_degrees, delta_genus, g10_obstruction, p_divisibility_solutions, scroll_splittings,
    DeltaGenusInput, DivisibilitySolution,
};
use fanocert::schubert::{box_partitions, class, degree, pieri, v5_separability_certificate, SchubertElement};
use fanocert::toric::{
    blow_up, contract_ray, enumerate_qfactorializations, fibration_to_p1, paper, principal_divisor,
    surface_intersection, surface_self_intersections, Fan,
};
use fanocert::veronese::{
    exhaustive_smooth_conic, find_smooth_conic, is_smooth_conic, projection_kernel_certificate,
    quadric_pencil_singularity_certificate, random_subspace, secant_cubic, symmetric_determinant, veronese_ideal,
    veronese_ring,
};

type Q = Rational;

#[derive(Default)]
struct Checks {
    failed: Vec<String>,
}

impl Checks {
    fn eq<T: PartialEq + Display>(&mut self, what: &str, expected: T, computed: T) {
        if expected != computed {
            self.failed.push(format!("{what}: expected {expected}, computed {computed}"));
        }
    }

    fn holds(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failed.push(format!("{what} does not hold"));
        }
    }

    fn within(&mut self, what: &str, elapsed: Duration, limit_secs: u64) {
        if elapsed > Duration::from_secs(limit_secs) {
            self.failed.push(format!("{what} took {:.2} s (limit {limit_secs} s)", elapsed.as_secs_f64()));
        }
    }
}

fn criterion_1(c: &mut Checks) {
    let start = Instant::now();
    let cert = v5_separability_certificate();
    c.within("certificate", start.elapsed(), 1);
    let ch = ["-5*s1", "7/2*s1^2 - 3*s11 - 2*s2", "-11/6*s1^3 + 5/2*s1*s11 + 2*s1*s2 - s3"];
    for (k, want) in ch.iter().enumerate() {
        c.eq(&format!("ch{}", k + 1), class(want).to_string(), cert.omega_character.part(k + 1).to_string());
    }
    let twisted = ["7*s1", "19*s1^2 + 3*s11 + 2*s2", "145*s1^3 + 14*s1*s11 + 10*s1*s2 - 2*s3"];
    for (k, want) in twisted.iter().enumerate() {
        c.eq(&format!("c{}", k + 1), class(want).to_string(), cert.twisted_classes.c(k + 1).to_string());
    }
    for ((name, d), want) in cert.degree_table.iter().zip([5, 2, 3, 1]) {
        c.eq(&format!("deg {name}"), int(want), d.clone());
    }
    c.eq("final certificate", int(620), cert.value);
}

fn criterion_2(c: &mut Checks) {
    let sigma = |p| SchubertElement::basis(5, p).unwrap();
    for l in box_partitions(5) {
        for k in 1..=3 {
            let special = SchubertElement::sigma(5, k, 0).unwrap();
            let lr = sigma(l).mul(&special).unwrap();
            c.holds(&format!("LR vs Pieri for {l}·σ{k}"), lr == pieri(l, k, 5).unwrap());
            c.holds(&format!("LR vs iterated Pieri for {l}·σ{k}"), lr == sigma(l).mul_via_pieri(&special).unwrap());
        }
        for m in box_partitions(5) {
            if l.codim() + m.codim() == 6 {
                let complementary = m.a == 3 - l.b && m.b == 3 - l.a;
                let d = degree(&sigma(l).mul(&sigma(m)).unwrap()).unwrap();
                c.eq(&format!("deg {l}·{m}"), int(i64::from(complementary)), d);
            }
        }
    }
    let parts = box_partitions(5);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let random = |rng: &mut ChaCha8Rng| {
        let mut x = SchubertElement::zero(5);
        for _ in 0..rng.gen_range(1..=3) {
            let p = *parts.choose(rng).unwrap();
            x = x.add(&sigma(p).scale(&int(rng.gen_range(-3..=3)))).unwrap();
        }
        x
    };
    let mut bad = 0;
    for _ in 0..1000 {
        let (a, b, d) = (random(&mut rng), random(&mut rng), random(&mut rng));
        if a.mul(&b).unwrap().mul(&d).unwrap() != a.mul(&b.mul(&d).unwrap()).unwrap() {
            bad += 1;
        }
    }
    c.eq("non-associative triples", 0, bad);
}

fn triangulation(bundle: &Fan, diagonal: (usize, usize)) -> Fan {
    let delta = contract_ray(bundle, 5).unwrap();
    let tri = enumerate_qfactorializations(&delta).unwrap();
    tri.into_iter().find(|t| t.diagonals == [diagonal]).expect("diagonal present").fan
}

fn multiplicities(fan: &Fan, diagonal: (usize, usize)) -> Vec<i64> {
    let mut out: Vec<i64> = fan
        .cones()
        .iter()
        .filter(|k| k.contains(diagonal.0) && k.contains(diagonal.1) && !k.contains(4))
        .map(|k| i64::try_from(fan.cone_is_smooth(k).unwrap().1).unwrap())
        .collect();
    out.sort_unstable();
    out
}

fn fmt_vec<T: std::fmt::Debug>(v: T) -> String {
    format!("{v:?}")
}

fn criterion_3(c: &mut Checks) {
    let start = Instant::now();
    c.eq("S(1,4)", fmt_vec([0, -3, 0, 3]), fmt_vec(surface_self_intersections(&paper::s14_base()).unwrap()));
    c.eq("S(2,3)", fmt_vec([0, -1, 0, 1]), fmt_vec(surface_self_intersections(&paper::s23_base()).unwrap()));

    let l014 = paper::l014_bundle();
    let d13 = triangulation(&l014, (0, 2));
    let d24 = triangulation(&l014, (1, 3));
    c.holds("l-014 diagonal v1v3 not smooth", !d13.fan_is_smooth().unwrap());
    c.holds("l-014 diagonal v1v3 has a cone of multiplicity 4", multiplicities(&d13, (0, 2)).contains(&4));
    c.holds("l-014 diagonal v2v4 smooth", d24.fan_is_smooth().unwrap());
    c.eq("l-014 v2v4 fibration", fmt_vec(Some(vec![1, 0, 0])), fmt_vec(fibration_to_p1(&d24)));

    let l023 = paper::l023_bundle();
    let d13 = triangulation(&l023, (0, 2));
    let d24 = triangulation(&l023, (1, 3));
    c.holds("l-023 diagonal v2v4 smooth", d24.fan_is_smooth().unwrap());
    c.eq("l-023 v2v4 fibration", fmt_vec(Some(vec![1, 0, 0])), fmt_vec(fibration_to_p1(&d24)));
    c.holds("l-023 diagonal v1v3 not smooth", !d13.fan_is_smooth().unwrap());
    c.eq("l-023 v1v3 multiplicities", fmt_vec([2, 3]), fmt_vec(multiplicities(&d13, (0, 2))));
    c.within("pipelines", start.elapsed(), 1);

    let report = run_suite(Suite::Toric, &Config::default());
    let labeling = report.get("l023-proof-labeling").map(|k| k.verdict);
    c.holds("l023-proof-labeling emitted as flagged", labeling == Some(Verdict::Flagged));
}

fn noether(fan: &Fan) -> i64 {
    surface_self_intersections(fan).unwrap().iter().sum::<i64>() + 3 * fan.rays().len() as i64
}

fn criterion_4(c: &mut Checks) {
    let mut fans = vec![paper::p2(), paper::s14_base(), paper::s23_base()];
    fans.extend((0..=4).map(paper::hirzebruch));
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..50 {
        let mut fan = paper::hirzebruch(rng.gen_range(0..=4));
        for _ in 0..rng.gen_range(1..=4) {
            let k = fan.cones().choose(&mut rng).unwrap().rays().to_vec();
            fan = blow_up(&fan, k[0], k[1]).unwrap();
        }
        fans.push(fan);
    }
    for (i, f) in fans.iter().enumerate() {
        c.eq(&format!("Noether on fan {i}"), 12, noether(f));
    }
    let s14 = paper::s14_base();
    let d2 = surface_self_intersections(&s14).unwrap();
    for m0 in -5..=5 {
        for m1 in -5..=5 {
            let a = principal_divisor(&s14, &[m0, m1]).0;
            for j in 0..4 {
                let pairing: i64 = (0..4)
                    .map(|i| a[i] * if i == j { d2[i] } else { surface_intersection(&s14, i, j).unwrap() })
                    .sum();
                c.eq(&format!("div χ^({m0},{m1})·D{j}"), 0, pairing);
            }
        }
    }
}

/// `xy-u^2` → `x*y-u^2`.
fn with_products(s: &str) -> String {
    let mut out = String::new();
    let mut prev_letter = false;
    for ch in s.chars() {
        if prev_letter && ch.is_ascii_alphabetic() {
            out.push('*');
        }
        prev_letter = ch.is_ascii_alphabetic();
        out.push(ch);
    }
    out
}

fn criterion_5(c: &mut Checks) {
    let r = veronese_ring();
    let paper_gens = ["xy-u^2", "yz-s^2", "zx-t^2", "xs-tu", "yt-us", "zu-st"];
    for (g, want) in veronese_ideal::<Q>().iter().zip(paper_gens) {
        let p: Polynomial<Q> = r.parse(&with_products(want)).unwrap();
        c.eq(&format!("generator {want}"), p.to_string(), g.to_string());
    }
    c.holds("secant cubic = det", secant_cubic::<Q>() == symmetric_determinant::<Q>());

    let start = Instant::now();
    let report = projection_kernel_certificate(6).unwrap();
    c.within("projection kernel", start.elapsed(), 10);
    for (g, zero) in &report.generator_images {
        c.holds(&format!("ψ({g}) = 0"), *zero);
    }
    for d in &report.degrees {
        c.eq(&format!("ideal + image span in degree {}", d.degree), d.ring_dim, d.ideal_dim + d.image_span);
    }

    let pencil = quadric_pencil_singularity_certificate().unwrap();
    let point: Vec<String> = pencil.point.iter().map(|p| p.to_string()).collect();
    c.eq("pencil point", "[1, 0, 0, 0, 0]".to_string(), format!("[{}]", point.join(", ")));
    c.holds("pencil singular for all (α, β)", pencil.singular());
}

fn conic_agreement<F: FiniteField>(c: &mut Checks, field: &str, stream: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    rng.set_stream(stream);
    let mut disagreements = 0;
    for _ in 0..500 {
        let v = random_subspace::<F, _>(&mut rng, 4);
        let found = find_smooth_conic(&v).unwrap();
        let oracle = exhaustive_smooth_conic(&v).unwrap();
        if found.is_some() != oracle.is_some() {
            disagreements += 1;
        }
        if let Some(s) = found {
            c.holds(&format!("{field}: returned conic in span"), v.contains(&s.form) && v.element(&s.coefficients) == s.form);
            c.holds(&format!("{field}: returned conic smooth"), is_smooth_conic(&s.form).unwrap());
        }
    }
    c.eq(&format!("{field}: existence disagreements"), 0, disagreements);
}

fn criterion_6(c: &mut Checks) {
    let start = Instant::now();
    conic_agreement::<F2>(c, "F2", 3);
    conic_agreement::<F4>(c, "F4", 4);
    c.within("conic trials", start.elapsed(), 30);
}

fn criterion_7(c: &mut Checks) {
    let z = zeta_basis();
    c.eq("h0(Ω²(3))", 4, h0_omega_p(2, 3, 3).unwrap());
    c.eq("basis size", 4, z.elements.len());
    c.holds("basis annihilated by the Euler contraction", z.annihilated());
    c.holds("basis independent", z.independent());
    let e = euler_contraction(2, 3, 3).unwrap();
    c.eq("intermediate dimensions", "(24, 40, 20)".to_string(), format!("({}, {}, {})", e.source_dim, e.target_dim, e.rank));
    let st = fanocert::exactcore::PolyRing::new(&["s", "t"]);
    let quartic = RationalCurve::parse(&st, ["s^4", "s^3*t", "s*t^3", "t^4"]).unwrap();
    c.eq("vanishing on the quartic curve", 0, omega2_vanishing_on_curve(Some(&quartic)).unwrap());
    for n in 1..=4usize {
        for p in 0..=n {
            for d in -6..=6i64 {
                c.eq(
                    &format!("h0(P^{n}, Ω^{p}({d}))"),
                    bott_h0_omega(p as i64, d, n as i64),
                    h0_omega_p(p, d, n).unwrap() as i64,
                );
            }
        }
    }
}

fn criterion_8(c: &mut Checks) {
    for (name, degree, h12) in [("cubic", 3u32, 5i64), ("quartic", 4, 30)] {
        let ci = CIData::new(4, vec![degree]).unwrap();
        let h = ci_hodge_diamond(&ci).unwrap();
        c.eq(&format!("{name} (h11, h12)"), format!("(1, {h12})"), format!("({}, {})", h.h[1][1], h.h[1][2]));
        c.eq(&format!("{name} h12 by Chern numbers"), h12, ci_h12_from_chern(4, &[degree]));
        c.eq(&format!("{name} χ(O) by Koszul"), 1, ci_chi_twist(&ci, 0));
        c.holds(&format!("{name} Serre duality"), h.satisfies_serre_duality());
        for j in 1..=3 {
            c.eq(&format!("{name} h0{j}"), 0, h.h[0][j]);
        }
    }
}

fn criterion_9(c: &mut Checks) {
    c.eq(
        "p-divisibility",
        fmt_vec(vec![DivisibilitySolution { p: 2, g: 9, d: 2 }, DivisibilitySolution { p: 3, g: 10, d: 1 }]),
        fmt_vec(p_divisibility_solutions(7, 12, &[11])),
    );
    c.eq("scroll splittings", fmt_vec(vec![(1, 4), (2, 3)]), fmt_vec(scroll_splittings(5)));
    c.eq("g10 obstruction", fmt_vec((16, true)), fmt_vec(g10_obstruction()));
    c.eq("Δ(3, 5, 8)", int(0), delta_genus(&DeltaGenusInput::new(3, int(5), 8)));
    c.eq("Δ at degree 2", rat(-1, 1), delta_genus(&DeltaGenusInput::new(2, rat(4, 2), 5)));
    c.eq("forced degree", fmt_vec(vec![1]), fmt_vec(allowed_projection_degrees(12)));
}

fn criterion_10(c: &mut Checks) {
    let run = || {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_certify")).args(["run", "all", "--seed", "0"]).output().unwrap();
        (out, start.elapsed())
    };
    let (a, ta) = run();
    let (b, _) = run();
    c.holds("exit code 0", a.status.success());
    c.holds("byte-identical JSON", a.stdout == b.stdout && !a.stdout.is_empty());
    c.within("full suite", ta, 60);
}

fn main() -> ExitCode {
    let criteria: [(&str, fn(&mut Checks)); 10] = [
        ("Schubert golden values", criterion_1),
        ("Schubert properties", criterion_2),
        ("toric golden values", criterion_3),
        ("toric properties", criterion_4),
        ("Veronese golden values", criterion_5),
        ("char-2 conics", criterion_6),
        ("Hodge golden values", criterion_7),
        ("Hodge diamonds", criterion_8),
        ("numerology", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let mut c = Checks::default();
        let start = Instant::now();
        f(&mut c);
        let secs = start.elapsed().as_secs_f64();
        if c.failed.is_empty() {
            println!("PASS {:>2} {title} ({secs:.2} s)", i + 1);
        } else {
            failed += 1;
            println!("FAIL {:>2} {title} ({secs:.2} s): {}", i + 1, c.failed.join("; "));
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 && std::env::var_os("ACCEPTANCE_STRICT").is_some_and(|v| v == "1") {
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
