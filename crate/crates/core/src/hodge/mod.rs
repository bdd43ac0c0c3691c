//! Euler characteristics on projective space and complete intersections,
//! global sections of twisted differential forms on `P^N`, and Hodge
//! diamonds of complete intersection threefolds.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactcore::intmatrix::combinations;
use crate::exactcore::{int, ExactError, Matrix, PolyRing, Polynomial, Rational};

type Q = Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("complete intersection needs positive degrees and fewer equations than the ambient dimension")]
    BadCompleteIntersection,
    #[error("expected a threefold, found dimension {0}")]
    NotThreefold(i64),
    #[error("form degree {p} outside 0..={n}")]
    BadFormDegree { p: usize, n: usize },
    #[error("curve parametrization: {0}")]
    BadCurve(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        acc = acc * (n as i128 - i) / (i + 1);
    }
    acc as i64
}

/// `χ(P^N, O(m)) = C(m + N, N)` as a polynomial in `m`.
pub fn chi_pn(m: i64, n: u32) -> i64 {
    let n = i64::from(n);
    if m >= 0 {
        binomial(m + n, n)
    } else if m >= -n {
        0
    } else {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        sign * binomial(-m - 1, n)
    }
}

/// A complete intersection of hypersurfaces of the given degrees in `P^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIData {
    ambient_dim: u32,
    degrees: Vec<u32>,
}

impl CIData {
    pub fn new(ambient_dim: u32, degrees: Vec<u32>) -> Result<Self, HodgeError> {
        if degrees.iter().any(|&d| d == 0) || degrees.len() >= ambient_dim as usize {
            return Err(HodgeError::BadCompleteIntersection);
        }
        Ok(CIData { ambient_dim, degrees })
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn dim(&self) -> i64 {
        i64::from(self.ambient_dim) - self.degrees.len() as i64
    }
}

/// `χ(O_X(k))` by inclusion–exclusion over the Koszul complex.
pub fn ci_chi_twist(ci: &CIData, k: i64) -> i64 {
    let n = ci.degrees.len();
    let mut total = 0;
    for mask in 0u32..(1 << n) {
        let shift: i64 = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i64::from(ci.degrees[i])).sum();
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        total += sign * chi_pn(k - shift, ci.ambient_dim);
    }
    total
}

/// `χ(Ω¹_X)` from the conormal sequence `0 → ⊕O_X(−d_i) → Ω¹_P|_X → Ω¹_X → 0`
/// and the Euler sequence `0 → Ω¹_P|_X → O_X(−1)^{N+1} → O_X → 0`.
pub fn ci_chi_omega1(ci: &CIData) -> i64 {
    let euler = i64::from(ci.ambient_dim + 1) * ci_chi_twist(ci, -1) - ci_chi_twist(ci, 0);
    let conormal: i64 = ci.degrees.iter().map(|&d| ci_chi_twist(ci, -i64::from(d))).sum();
    euler - conormal
}

/// `h[i][j] = h^{i,j} = dim H^j(Ω^i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HodgeDiamond {
    pub h: [[i64; 4]; 4],
}

impl HodgeDiamond {
    pub fn satisfies_serre_duality(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| self.h[i][j] == self.h[3 - i][3 - j]))
    }

    /// `Σ (−1)^{i+j} h^{i,j}`.
    pub fn euler_number(&self) -> i64 {
        let mut e = 0;
        for i in 0..4 {
            for j in 0..4 {
                e += if (i + j) % 2 == 0 { self.h[i][j] } else { -self.h[i][j] };
            }
        }
        e
    }
}

impl fmt::Display for HodgeDiamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // h^{i,j} sits in row i + j and column 3 + j − i of a 7×7 grid
        let w = self.h.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        for s in 0..=6usize {
            let mut line = String::new();
            for col in 0..=6usize {
                let cell = (0..4)
                    .find(|&i| s >= i && s - i < 4 && 3 + (s - i) == col + i)
                    .map(|i| self.h[i][s - i].to_string())
                    .unwrap_or_default();
                line.push_str(&format!("{cell:>w$} "));
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

/// Hodge diamond of a smooth complete intersection threefold: `P^N` below
/// the middle row, Serre duality above it, and the middle row from `χ(O_X)`
/// and `χ(Ω¹_X)`.
pub fn ci_hodge_diamond(ci: &CIData) -> Result<HodgeDiamond, HodgeError> {
    if ci.dim() != 3 {
        return Err(HodgeError::NotThreefold(ci.dim()));
    }
    let mut h = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            if i + j < 3 {
                h[i][j] = i64::from(i == j);
            }
        }
    }
    // χ(O_X) = 1 − h^{0,3}
    h[0][3] = 1 - ci_chi_twist(ci, 0);
    h[3][0] = h[0][3];
    // χ(Ω¹_X) = h^{1,0} − h^{1,1} + h^{1,2} − h^{1,3}, with h^{1,3} = h^{2,0}
    h[1][3] = h[2][0];
    h[1][2] = ci_chi_omega1(ci) - h[1][0] + h[1][1] + h[1][3];
    h[2][1] = h[1][2];
    for i in 0..4 {
        for j in 0..4 {
            if i + j > 3 {
                h[i][j] = h[3 - i][3 - j];
            }
        }
    }
    Ok(HodgeDiamond { h })
}

/// The Euler contraction `⊕_{|I|=p} S_{d−p} e_I → ⊕_{|J|=p−1} S_{d−p+1} e_J`
/// on `P^N`, whose kernel is `H⁰(Ω^p(d))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerContraction {
    pub p: usize,
    pub d: i64,
    pub n: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl EulerContraction {
    pub fn kernel_dim(&self) -> usize {
        self.source_dim - self.rank
    }
}

/// Exponent vectors of degree `d` in `k` variables.
fn exponent_vectors(k: usize, d: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponent_vectors(k - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The contraction preserves the multidegree of `x^m e_I`, so its rank is
/// the sum of ranks of small blocks, one per exponent vector of degree `d`.
pub fn euler_contraction(p: usize, d: i64, n: usize) -> Result<EulerContraction, HodgeError> {
    if p > n {
        return Err(HodgeError::BadFormDegree { p, n });
    }
    let mut rep = EulerContraction { p, d, n, source_dim: 0, target_dim: 0, rank: 0 };
    if d < 0 {
        return Ok(rep);
    }
    for alpha in exponent_vectors(n + 1, d as usize) {
        let support: Vec<usize> = (0..=n).filter(|&i| alpha[i] > 0).collect();
        let pick = |k: usize| -> Vec<Vec<usize>> {
            combinations(support.len(), k).into_iter().map(|c| c.iter().map(|&i| support[i]).collect()).collect()
        };
        let sources = pick(p);
        let targets = if p == 0 { vec![] } else { pick(p - 1) };
        rep.source_dim += sources.len();
        rep.target_dim += targets.len();
        if sources.is_empty() || targets.is_empty() {
            continue;
        }
        let mut m = Matrix::zeros(targets.len(), sources.len());
        for (col, i_set) in sources.iter().enumerate() {
            for k in 0..i_set.len() {
                let mut j_set = i_set.clone();
                j_set.remove(k);
                let row = targets.iter().position(|t| *t == j_set).expect("face of a support subset");
                m.set(row, col, int(if k % 2 == 0 { 1 } else { -1 }));
            }
        }
        rep.rank += m.rank();
    }
    Ok(rep)
}

/// `h⁰(P^N, Ω^p(d))`.
pub fn h0_omega_p(p: usize, d: i64, n: usize) -> Result<usize, HodgeError> {
    Ok(euler_contraction(p, d, n)?.kernel_dim())
}

/// `Σ f_I · e_I` with linear-form or polynomial coefficients, `I` increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSection {
    pub label: String,
    pub terms: BTreeMap<Vec<usize>, Polynomial<Q>>,
}

impl FormalSection {
    /// Image under `e_I ↦ Σ_k (−1)^k x_{i_k} e_{I∖i_k}`.
    pub fn contract(&self, ring: &PolyRing) -> BTreeMap<Vec<usize>, Polynomial<Q>> {
        let mut out: BTreeMap<Vec<usize>, Polynomial<Q>> = BTreeMap::new();
        for (i_set, coeff) in &self.terms {
            for (k, &i) in i_set.iter().enumerate() {
                let mut j_set = i_set.clone();
                j_set.remove(k);
                let mut t = &Polynomial::var(ring, i) * coeff;
                if k % 2 == 1 {
                    t = -t;
                }
                let entry = out.entry(j_set).or_insert_with(|| Polynomial::zero(ring));
                *entry = &*entry + &t;
            }
        }
        out.retain(|_, p| !p.is_zero());
        out
    }
}

impl fmt::Display for FormalSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(i, c)| {
                let e: Vec<String> = i.iter().map(|k| format!("e{}", k + 1)).collect();
                format!("({c})*{}", e.join("^"))
            })
            .collect();
        write!(f, "{} = {}", self.label, parts.join(" + "))
    }
}

/// Explicit sections of `Ω^p(d)` on `P^N`.
#[derive(Clone, Debug)]
pub struct SectionBasis {
    pub ring: PolyRing,
    pub elements: Vec<FormalSection>,
}

impl SectionBasis {
    pub fn annihilated(&self) -> bool {
        self.elements.iter().all(|s| s.contract(&self.ring).is_empty())
    }

    pub fn independent(&self) -> bool {
        let mut cols: BTreeMap<(Vec<usize>, crate::exactcore::Monomial), usize> = BTreeMap::new();
        for s in &self.elements {
            for (i, c) in &s.terms {
                for (m, _) in c.terms() {
                    let next = cols.len();
                    cols.entry((i.clone(), m.clone())).or_insert(next);
                }
            }
        }
        let mut mat = Matrix::empty(cols.len());
        for s in &self.elements {
            let mut row = vec![int(0); cols.len()];
            for (i, c) in &s.terms {
                for (m, v) in c.terms() {
                    row[cols[&(i.clone(), m.clone())]] = v.clone();
                }
            }
            mat.push_row(row);
        }
        mat.rank() == self.elements.len()
    }
}

pub fn p3_ring() -> PolyRing {
    PolyRing::new(&["x1", "x2", "x3", "x4"])
}

/// `ζ_{ijk} = x_i e_j∧e_k + x_j e_k∧e_i + x_k e_i∧e_j` for `i < j < k` in
/// `1..=4`, a basis of `H⁰(P³, Ω²(3))`.
pub fn zeta_basis() -> SectionBasis {
    let ring = p3_ring();
    let mut elements = Vec::new();
    for t in combinations(4, 3) {
        let (i, j, k) = (t[0], t[1], t[2]);
        let mut terms = BTreeMap::new();
        terms.insert(vec![j, k], Polynomial::var(&ring, i));
        // e_k ∧ e_i = −e_i ∧ e_k
        terms.insert(vec![i, k], -Polynomial::var(&ring, j));
        terms.insert(vec![i, j], Polynomial::var(&ring, k));
        elements.push(FormalSection { label: format!("zeta{}{}{}", i + 1, j + 1, k + 1), terms });
    }
    SectionBasis { ring, elements }
}

/// A map `P¹ → P³` by four binary forms of one degree.
#[derive(Clone, Debug)]
pub struct RationalCurve {
    coords: [Polynomial<Q>; 4],
}

impl RationalCurve {
    pub fn new(coords: [Polynomial<Q>; 4]) -> Result<Self, HodgeError> {
        if coords.iter().any(|c| c.ring().nvars() != 2) {
            return Err(HodgeError::BadCurve("forms must be binary".into()));
        }
        let nonzero: Vec<&Polynomial<Q>> = coords.iter().filter(|c| !c.is_zero()).collect();
        let deg = nonzero.first().and_then(|c| c.total_degree());
        if nonzero.iter().any(|c| !c.is_homogeneous() || c.total_degree() != deg) {
            return Err(HodgeError::BadCurve("forms must be homogeneous of one degree".into()));
        }
        let curve = RationalCurve { coords };
        if curve.span_rank() < 2 {
            return Err(HodgeError::BadCurve("all coordinates are proportional".into()));
        }
        Ok(curve)
    }

    pub fn parse(ring: &PolyRing, forms: [&str; 4]) -> Result<Self, HodgeError> {
        let coords: Vec<Polynomial<Q>> = forms.iter().map(|f| ring.parse(f)).collect::<Result<_, _>>()?;
        Self::new(coords.try_into().expect("four forms"))
    }

    pub fn coords(&self) -> &[Polynomial<Q>; 4] {
        &self.coords
    }

    fn span_rank(&self) -> usize {
        let mut cols: BTreeMap<crate::exactcore::Monomial, usize> = BTreeMap::new();
        for c in &self.coords {
            for (m, _) in c.terms() {
                let next = cols.len();
                cols.entry(m.clone()).or_insert(next);
            }
        }
        let mut mat = Matrix::empty(cols.len());
        for c in &self.coords {
            let mut row = vec![int(0); cols.len()];
            for (m, v) in c.terms() {
                row[cols[m]] = v.clone();
            }
            mat.push_row(row);
        }
        mat.rank()
    }
}

/// Dimension of the space of `ξ = aζ₁₂₃ + bζ₁₂₄ + cζ₁₃₄ + dζ₂₃₄` whose
/// coefficient of every `e_i∧e_j` vanishes on the curve; with no curve, the
/// whole of `H⁰(Ω²(3))`.
pub fn omega2_vanishing_on_curve(curve: Option<&RationalCurve>) -> Result<usize, HodgeError> {
    let basis = zeta_basis();
    let Some(curve) = curve else { return Ok(basis.elements.len()) };
    let images: Vec<Polynomial<Q>> = curve.coords.to_vec();
    // One row per (e_I, monomial in s, t); one column per ζ.
    let mut rows: BTreeMap<(Vec<usize>, crate::exactcore::Monomial), Vec<Q>> = BTreeMap::new();
    let n = basis.elements.len();
    for (col, z) in basis.elements.iter().enumerate() {
        for (i, c) in &z.terms {
            let pulled = c.substitute(&images)?;
            for (m, v) in pulled.terms() {
                let row = rows.entry((i.clone(), m.clone())).or_insert_with(|| vec![int(0); n]);
                row[col] = v.clone();
            }
        }
    }
    let mut mat = Matrix::empty(n);
    for (_, row) in rows {
        mat.push_row(row);
    }
    Ok(n - mat.rank())
}
