//! Splitting a hyperplane section of a singular quadric in `P^4` into two
//! planes `D ∪ D′`, avoiding a given coordinate plane.

use crate::exactcore::{ideal_graded_piece, Matrix, PolyRing, Polynomial, Rational};

use super::VeroneseError;

type Q = Rational;

/// Normal forms of a singular integral quadric in `P^4[x0:…:x4]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularQuadric {
    /// `x0x1 + x2²`.
    Rank3,
    /// `x0x1 + x2x3`.
    Rank4,
}

impl SingularQuadric {
    pub fn equation(self) -> &'static str {
        match self {
            SingularQuadric::Rank3 => "x0*x1 + x2^2",
            SingularQuadric::Rank4 => "x0*x1 + x2*x3",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SplitReport {
    pub quadric: Polynomial<Q>,
    pub hyperplane: Polynomial<Q>,
    /// Linear generators of `D` and `D′`.
    pub d: Vec<Polynomial<Q>>,
    pub d_prime: Vec<Polynomial<Q>>,
    /// `(degree, dim (q, h)_k, dim (I_D ∩ I_{D′})_k)`, with the first space
    /// checked to lie inside the second.
    pub degree_checks: Vec<(u32, usize, usize, bool)>,
    /// The avoided plane differs from `D` and `D′` and is not inside `H`.
    pub avoids: bool,
}

impl SplitReport {
    pub fn ideals_agree(&self) -> bool {
        self.degree_checks.iter().all(|&(_, a, b, inside)| a == b && inside)
    }
}

fn ring() -> PolyRing {
    PolyRing::new(&["x0", "x1", "x2", "x3", "x4"])
}

fn rows(m: &Matrix<Q>) -> Vec<Vec<Q>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn stack(a: &Matrix<Q>, b: &Matrix<Q>) -> Matrix<Q> {
    let mut out = Matrix::empty(a.cols());
    for r in rows(a).into_iter().chain(rows(b)) {
        out.push_row(r);
    }
    out
}

fn same_span(a: &Matrix<Q>, b: &Matrix<Q>) -> bool {
    let r = a.rank();
    r == b.rank() && stack(a, b).rank() == r
}

/// `D, D′ ⊂ V` with `V ∩ H = D ∪ D′`, choosing `H` so that neither plane is
/// the avoided plane `{x_i = 0, i ∈ avoided}`. Ideal equality
/// `(q, h) = I_D ∩ I_{D′}` is checked in degrees 1 through 3.
pub fn split_hyperplane_certificate(
    quadric: SingularQuadric,
    avoided: Option<&[usize]>,
) -> Result<SplitReport, VeroneseError> {
    let r = ring();
    let p = |s: &str| r.parse::<Q>(s).expect("well-formed");
    let mut avoided_ideal: Vec<Polynomial<Q>> = Vec::new();
    if let Some(idx) = avoided {
        if idx.is_empty() || idx.iter().any(|&i| i >= 5) {
            return Err(VeroneseError::BadDivisor);
        }
        avoided_ideal = idx.iter().map(|&i| Polynomial::var(&r, i)).collect();
    }
    let linear = |gens: &[Polynomial<Q>]| -> Result<Matrix<Q>, VeroneseError> {
        Ok(ideal_graded_piece(gens, 1)?.coordinates)
    };
    let matches = |gens: &[Polynomial<Q>], other: &[&str]| -> Result<bool, VeroneseError> {
        if gens.is_empty() {
            return Ok(false);
        }
        let o: Vec<Polynomial<Q>> = other.iter().map(|s| p(s)).collect();
        Ok(same_span(&linear(gens)?, &linear(&o)?))
    };

    let (h, d, d_prime): (&str, [&str; 2], [&str; 2]) = if matches(&avoided_ideal, &["x0", "x2"])? {
        match quadric {
            SingularQuadric::Rank3 => ("x1 - x2", ["x1", "x2"], ["x0 + x1", "x1 - x2"]),
            SingularQuadric::Rank4 => ("x1 - x2", ["x1", "x2"], ["x0 + x3", "x1 - x2"]),
        }
    } else if matches(&avoided_ideal, &["x1", "x2"])? {
        match quadric {
            SingularQuadric::Rank3 => ("x0 - x2", ["x0", "x2"], ["x0 + x1", "x0 - x2"]),
            SingularQuadric::Rank4 => ("x0 - x2", ["x0", "x2"], ["x1 + x3", "x0 - x2"]),
        }
    } else {
        ("x2", ["x0", "x2"], ["x1", "x2"])
    };
    let q = p(quadric.equation());
    let hyperplane = p(h);
    let d: Vec<Polynomial<Q>> = d.iter().map(|s| p(s)).collect();
    let d_prime: Vec<Polynomial<Q>> = d_prime.iter().map(|s| p(s)).collect();

    let section = vec![q.clone(), hyperplane.clone()];
    let mut degree_checks = Vec::new();
    for k in 1..=3 {
        let a = ideal_graded_piece(&section, k)?.coordinates;
        let b1 = ideal_graded_piece(&d, k)?.coordinates;
        let b2 = ideal_graded_piece(&d_prime, k)?.coordinates;
        let (r1, r2) = (b1.rank(), b2.rank());
        let meet = r1 + r2 - stack(&b1, &b2).rank();
        let ra = a.rank();
        let inside = stack(&a, &b1).rank() == r1 && stack(&a, &b2).rank() == r2;
        degree_checks.push((k, ra, meet, inside));
    }

    let avoids = if avoided_ideal.is_empty() {
        true
    } else {
        let e = linear(&avoided_ideal)?;
        let in_h = stack(&e, &linear(&[hyperplane.clone()])?).rank() == e.rank();
        !same_span(&e, &linear(&d)?) && !same_span(&e, &linear(&d_prime)?) && !in_h
    };

    Ok(SplitReport { quadric: q, hyperplane, d, d_prime, degree_checks, avoids })
}
