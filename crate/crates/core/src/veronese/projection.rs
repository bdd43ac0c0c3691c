//! Projection of `S` from `R = [1:1:0:0:0:0]`, after moving `R` to
//! `[1:0:0:0:0:0]` by `y ↦ x − y`, onto `{x = 0} = P^4[y:z:s:t:u]`.
//!
//! On the chart `y ≠ 0` the projection is the ring map
//! `ψ : k[Z,S,T,U] → k[t, u, (1−u²)^{-1}]`,
//! `Z ↦ t²/(1−u²)`, `S ↦ tu/(1−u²)`, `T ↦ t/(1−u²)`, `U ↦ u/(1−u²)`.

use std::collections::{BTreeMap, HashMap};

use crate::exactcore::{
    ideal_contains, ideal_graded_dimension, int, poly_substitute, ring_piece_dimension, Matrix, Monomial,
    PolyRing, Polynomial, Rational, RationalFunction,
};

use super::VeroneseError;

type Q = Rational;

fn source_ring() -> PolyRing {
    PolyRing::new(&["Z", "S", "T", "U"])
}

fn target_ring() -> PolyRing {
    PolyRing::new(&["t", "u"])
}

fn psi_images() -> HashMap<String, RationalFunction<Q>> {
    let a = target_ring();
    let den: Polynomial<Q> = a.parse("1 - u^2").expect("well-formed");
    [("Z", "t^2"), ("S", "t*u"), ("T", "t"), ("U", "u")]
        .into_iter()
        .map(|(v, n)| {
            let num = a.parse(n).expect("well-formed");
            (v.to_string(), RationalFunction::new(num, den.clone()).expect("nonzero denominator"))
        })
        .collect()
}

/// Numerators of ψ: every degree-`d` monomial has denominator `(1−u²)^d`.
fn cleared_images() -> Vec<Polynomial<Q>> {
    let a = target_ring();
    ["t^2", "t*u", "t", "u"].iter().map(|n| a.parse(n).expect("well-formed")).collect()
}

fn psi(p: &Polynomial<Q>) -> Result<RationalFunction<Q>, VeroneseError> {
    Ok(poly_substitute(p, &psi_images(), &target_ring())?)
}

/// Rank of a list of polynomials over their joint monomial support.
fn span_dimension(polys: &[Polynomial<Q>]) -> usize {
    let mut columns: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let next = columns.len();
            columns.entry(m.clone()).or_insert(next);
        }
    }
    let mut mat = Matrix::empty(columns.len());
    for p in polys {
        let mut row = vec![int(0); columns.len()];
        for (m, c) in p.terms() {
            row[columns[m]] = c.clone();
        }
        mat.push_row(row);
    }
    mat.rank()
}

/// Degree-`d` comparison between the ideal `(S²−TU, ST−UZ)` and the map ψ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    pub degree: u32,
    /// `dim (S²−TU, ST−UZ)_d`.
    pub ideal_dim: usize,
    /// `dim span ψ(k[Z,S,T,U]_d)`.
    pub image_span: usize,
    pub ring_dim: usize,
    /// `dim (ST−UZ)_d`.
    pub principal_dim: usize,
    /// `dim (k[Z,S,T,U]/(S²−TU, ST−UZ))_d`.
    pub quotient_dim: usize,
    /// `dim (R·S ⊕ R[T])_d` for `R = k[Z,U]`.
    pub module_prediction: usize,
}

impl DegreeCheck {
    /// `ideal + image span = ring`: no kernel beyond the two quadrics.
    pub fn identity_holds(&self) -> bool {
        self.ideal_dim + self.image_span == self.ring_dim
    }

    pub fn kernel_dim(&self) -> usize {
        self.ring_dim - self.image_span
    }

    /// The graded kernel is generated by `ST − UZ` in this degree.
    pub fn kernel_is_principal(&self) -> bool {
        self.kernel_dim() == self.principal_dim
    }

    pub fn hilbert_matches(&self) -> bool {
        self.quotient_dim == self.module_prediction
    }
}

#[derive(Clone, Debug)]
pub struct ProjectionKernelReport {
    /// `S²−TU` and `ST−UZ` with whether ψ sends each to zero.
    pub generator_images: Vec<(String, bool)>,
    pub degrees: Vec<DegreeCheck>,
    /// Every monomial image equals its cleared numerator over `(1−u²)^d`.
    pub denominators_cleared: bool,
    /// Generators of the full kernel of ψ (not all homogeneous) with whether
    /// ψ sends each to zero.
    pub kernel_generators: Vec<(String, bool)>,
    /// `S·(T²−SZ) ∈ (S²−TU, ST−UZ)` with neither factor in the ideal.
    pub non_prime_witness: bool,
}

impl ProjectionKernelReport {
    pub fn membership_holds(&self) -> bool {
        self.generator_images.iter().all(|(_, z)| *z)
    }

    pub fn identity_holds(&self) -> bool {
        self.degrees.iter().all(DegreeCheck::identity_holds)
    }

    pub fn hilbert_matches(&self) -> bool {
        self.degrees.iter().all(DegreeCheck::hilbert_matches)
    }

    pub fn kernel_is_principal(&self) -> bool {
        self.degrees.iter().all(DegreeCheck::kernel_is_principal)
    }

    pub fn first_failing_degree(&self) -> Option<u32> {
        self.degrees.iter().find(|c| !c.identity_holds()).map(|c| c.degree)
    }
}

pub fn projection_kernel_certificate(degree_bound: u32) -> Result<ProjectionKernelReport, VeroneseError> {
    if degree_bound < 2 {
        return Err(VeroneseError::BadDegreeBound(degree_bound));
    }
    let r = source_ring();
    let parse = |s: &str| r.parse::<Q>(s).expect("well-formed");
    let ideal = vec![parse("S^2 - T*U"), parse("S*T - U*Z")];
    let principal = vec![parse("S*T - U*Z")];

    let mut generator_images = Vec::new();
    for (name, g) in ["S^2 - T*U", "S*T - U*Z"].iter().zip(&ideal) {
        generator_images.push((name.to_string(), psi(g)?.is_zero()));
    }

    let cleared = cleared_images();
    let unit: Polynomial<Q> = target_ring().parse("1 - u^2").expect("well-formed");
    let mut denominators_cleared = true;
    let mut degrees = Vec::new();
    for d in 1..=degree_bound {
        let monomials = r.monomials_of_degree(d);
        let mut images = Vec::with_capacity(monomials.len());
        for m in monomials {
            let p = Polynomial::monomial(&r, m, int(1));
            let numerator = p.substitute(&cleared)?;
            let expected = RationalFunction::new(numerator.clone(), unit.pow(d))?;
            denominators_cleared &= psi(&p)? == expected;
            images.push(numerator);
        }
        let ring_dim = ring_piece_dimension(4, d);
        let ideal_dim = ideal_graded_dimension(&ideal, d)?;
        let du = d as usize;
        degrees.push(DegreeCheck {
            degree: d,
            ideal_dim,
            image_span: span_dimension(&images),
            ring_dim,
            principal_dim: ideal_graded_dimension(&principal, d)?,
            quotient_dim: ring_dim - ideal_dim,
            module_prediction: du + (du + 1) * (du + 2) / 2,
        });
    }

    let mut kernel_generators = Vec::new();
    for g in ["S*T - U*Z", "Z + S^2 - T^2"] {
        kernel_generators.push((g.to_string(), psi(&parse(g))?.is_zero()));
    }

    let non_prime_witness = ideal_contains(&ideal, &parse("S*T^2 - S^2*Z"))?
        && !ideal_contains(&ideal, &parse("S"))?
        && !ideal_contains(&ideal, &parse("T^2 - S*Z"))?;

    Ok(ProjectionKernelReport { generator_images, degrees, denominators_cleared, kernel_generators, non_prime_witness })
}

fn pencil_ring() -> PolyRing {
    PolyRing::new(&["a", "b", "y", "z", "s", "t", "u"])
}

/// Singularity of `a·q₁ + b·q₂` at a point whose coordinates are
/// polynomials in the pencil parameters `a, b`.
#[derive(Clone, Debug)]
pub struct PencilReport {
    pub form: Polynomial<Q>,
    /// The point `[y:z:s:t:u]`.
    pub point: Vec<Polynomial<Q>>,
    pub value: Polynomial<Q>,
    /// `∂/∂v` at the point, for `v = y, z, s, t, u`.
    pub partials: Vec<(String, Polynomial<Q>)>,
}

impl PencilReport {
    /// Singular for every `(a, b)`.
    pub fn singular(&self) -> bool {
        self.value.is_zero() && self.partials.iter().all(|(_, p)| p.is_zero())
    }
}

fn pencil_report(form: &str, point: [&str; 5]) -> Result<PencilReport, VeroneseError> {
    let r = pencil_ring();
    let form: Polynomial<Q> = r.parse(form)?;
    let point: Vec<Polynomial<Q>> = point.iter().map(|c| r.parse(c)).collect::<Result<_, _>>()?;
    let mut images = vec![r.var("a"), r.var("b")];
    images.extend(point.iter().cloned());
    let mut partials = Vec::new();
    for v in ["y", "z", "s", "t", "u"] {
        let i = r.index_of(v).expect("pencil variable");
        partials.push((v.to_string(), form.partial_derivative(i).substitute(&images)?));
    }
    let value = form.substitute(&images)?;
    Ok(PencilReport { form, point, value, partials })
}

/// `a(s²−tu) + b(st−uz)` at `[1:0:0:0:0]`.
pub fn quadric_pencil_singularity_certificate() -> Result<PencilReport, VeroneseError> {
    pencil_report("a*(s^2 - t*u) + b*(s*t - u*z)", ["1", "0", "0", "0", "0"])
}

/// The quadrics through the actual image of the projection.
#[derive(Clone, Debug)]
pub struct CorrectedPencilReport {
    /// The image `[X²−Y² : Z² : YZ : ZX : XY]` of `[X:Y:Z]`.
    pub image: Vec<Polynomial<Q>>,
    /// `s²−tu` and `st−uz` with whether each vanishes on the image.
    pub paper_quadrics_on_image: Vec<(String, bool)>,
    /// Dimension of the space of quadrics vanishing on the image.
    pub quadrics_through_image: usize,
    /// `st−uz` and `yz+s²−t²` with whether each vanishes on the image.
    pub pencil_on_image: Vec<(String, bool)>,
    /// `a(st−uz) + b(yz+s²−t²)` at `[a:0:0:0:b]`.
    pub singularity: PencilReport,
}

pub fn corrected_pencil_certificate() -> Result<CorrectedPencilReport, VeroneseError> {
    let src = PolyRing::new(&["X", "Y", "Z"]);
    let sq = |e: &str| src.parse::<Q>(e).expect("well-formed");
    // σ(S) has coordinates (x, x − y, z, s, t, u); projecting drops x.
    let x = sq("X^2");
    let y = &x - &sq("Y^2");
    let image = vec![y, sq("Z^2"), sq("Y*Z"), sq("Z*X"), sq("X*Y")];

    let p4 = PolyRing::new(&["y", "z", "s", "t", "u"]);
    let on_image = |q: &str| -> Result<bool, VeroneseError> {
        Ok(p4.parse::<Q>(q)?.substitute(&image)?.is_zero())
    };
    let mut paper_quadrics_on_image = Vec::new();
    for q in ["s^2 - t*u", "s*t - u*z"] {
        paper_quadrics_on_image.push((q.to_string(), on_image(q)?));
    }
    let mut pencil_on_image = Vec::new();
    for q in ["s*t - u*z", "y*z + s^2 - t^2"] {
        pencil_on_image.push((q.to_string(), on_image(q)?));
    }
    let quartics: Vec<Polynomial<Q>> = p4
        .monomials_of_degree(2)
        .into_iter()
        .map(|m| Polynomial::monomial(&p4, m, int(1)).substitute(&image))
        .collect::<Result<_, _>>()?;
    let quadrics_through_image = quartics.len() - span_dimension(&quartics);

    let singularity = pencil_report("a*(s*t - u*z) + b*(y*z + s^2 - t^2)", ["a", "0", "0", "0", "b"])?;
    Ok(CorrectedPencilReport {
        image,
        paper_quadrics_on_image,
        quadrics_through_image,
        pencil_on_image,
        singularity,
    })
}
