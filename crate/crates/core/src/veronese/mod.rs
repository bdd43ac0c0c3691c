//! The Veronese surface `S ⊂ P^5`, its secant cubic, the projection of `S`
//! from a point of the secant variety, singular quadrics in `P^4` and
//! smooth conics in characteristic two.
//!
//! Coordinates on `P^5` are `[x:y:z:s:t:u]`, matching the symmetric matrix
//! `[[x,u,t],[u,y,s],[t,s,z]]`; the surface is the image of
//! `[X:Y:Z] ↦ [X²:Y²:Z²:YZ:ZX:XY]`.

pub mod conic;
pub mod projection;
pub mod split;

use std::fmt;

use thiserror::Error;

use crate::exactcore::{ExactError, Field, Matrix, PolyRing, Polynomial};

pub use conic::{
    exhaustive_smooth_conic, find_smooth_conic, is_smooth_conic, random_subspace, ConicPath, ConicSubspace, QuadraticForm3,
    SmoothConic,
};
pub use projection::{
    corrected_pencil_certificate, projection_kernel_certificate, quadric_pencil_singularity_certificate,
    CorrectedPencilReport, DegreeCheck, PencilReport, ProjectionKernelReport,
};
pub use split::{split_hyperplane_certificate, SingularQuadric, SplitReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VeroneseError {
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("expected {expected} coordinates, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("the zero form does not define a conic")]
    ZeroForm,
    #[error("conic search needs characteristic 2, found {0}")]
    NotCharacteristicTwo(u64),
    #[error("subspace of dimension {0} is too small (need at least 4)")]
    DimensionTooSmall(usize),
    #[error("basis forms are linearly dependent")]
    DependentBasis,
    #[error("degree bound {0} is below 2")]
    BadDegreeBound(u32),
    #[error("avoided divisor must be a set of coordinate indices below 5")]
    BadDivisor,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A point of projective space, compared up to a nonzero scalar.
#[derive(Clone, Debug)]
pub struct ProjectivePoint<F: Field> {
    coords: Vec<F>,
}

impl<F: Field> ProjectivePoint<F> {
    pub fn new(coords: Vec<F>) -> Result<Self, VeroneseError> {
        if coords.iter().all(Field::is_zero) {
            return Err(VeroneseError::ZeroPoint);
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self, VeroneseError> {
        Self::new(coords.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }
}

impl<F: Field> PartialEq for ProjectivePoint<F> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (&self.coords, &other.coords);
        a.len() == b.len()
            && (0..a.len()).all(|i| (0..a.len()).all(|j| a[i].clone() * b[j].clone() == a[j].clone() * b[i].clone()))
    }
}

impl<F: Field> Eq for ProjectivePoint<F> {}

impl<F: Field> fmt::Display for ProjectivePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

/// Position of a point of `P^5` relative to `S` and its secant variety.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SecantStratum {
    /// Rank 1: on the Veronese surface.
    OnVeronese,
    /// Rank 2: on the secant cubic but off the surface.
    OnSecantOnly,
    /// Rank 3.
    Generic,
}

pub fn veronese_ring() -> PolyRing {
    PolyRing::new(&["x", "y", "z", "s", "t", "u"])
}

/// `xy − u², yz − s², zx − t², xs − tu, yt − us, zu − st`.
pub fn veronese_ideal<F: Field>() -> Vec<Polynomial<F>> {
    let r = veronese_ring();
    ["x*y - u^2", "y*z - s^2", "z*x - t^2", "x*s - t*u", "y*t - u*s", "z*u - s*t"]
        .iter()
        .map(|g| r.parse(g).expect("well-formed generator"))
        .collect()
}

/// `[[x,u,t],[u,y,s],[t,s,z]]` over [`veronese_ring`].
pub fn symmetric_matrix<F: Field>() -> [[Polynomial<F>; 3]; 3] {
    let r = veronese_ring();
    let v = |n: &str| r.var::<F>(n);
    [[v("x"), v("u"), v("t")], [v("u"), v("y"), v("s")], [v("t"), v("s"), v("z")]]
}

/// All nine 2×2 minors of [`symmetric_matrix`], rows and columns in
/// lexicographic pair order.
pub fn symmetric_minors<F: Field>() -> Vec<Polynomial<F>> {
    let m = symmetric_matrix::<F>();
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let mut out = Vec::with_capacity(9);
    for &(r1, r2) in &pairs {
        for &(c1, c2) in &pairs {
            out.push(&(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1]));
        }
    }
    out
}

/// Determinant of [`symmetric_matrix`] by cofactor expansion.
pub fn symmetric_determinant<F: Field>() -> Polynomial<F> {
    let m = symmetric_matrix::<F>();
    let minor = |c1: usize, c2: usize| &(&m[1][c1] * &m[2][c2]) - &(&m[1][c2] * &m[2][c1]);
    let a = &m[0][0] * &minor(1, 2);
    let b = &m[0][1] * &minor(0, 2);
    let c = &m[0][2] * &minor(0, 1);
    &(&a - &b) + &c
}

/// `xyz + 2stu − xs² − yt² − zu²`.
pub fn secant_cubic<F: Field>() -> Polynomial<F> {
    veronese_ring().parse("x*y*z + 2*s*t*u - x*s^2 - y*t^2 - z*u^2").expect("well-formed cubic")
}

/// `[X:Y:Z] ↦ [X²:Y²:Z²:YZ:ZX:XY]`.
pub fn veronese_map<F: Field>(p: &ProjectivePoint<F>) -> Result<ProjectivePoint<F>, VeroneseError> {
    let c = p.coords();
    if c.len() != 3 {
        return Err(VeroneseError::WrongLength { expected: 3, found: c.len() });
    }
    let (x, y, z) = (c[0].clone(), c[1].clone(), c[2].clone());
    ProjectivePoint::new(vec![
        x.clone() * x.clone(),
        y.clone() * y.clone(),
        z.clone() * z.clone(),
        y.clone() * z.clone(),
        z * x.clone(),
        x * y,
    ])
}

/// The symmetric matrix of a point `[x:y:z:s:t:u]`.
pub fn point_matrix<F: Field>(p: &ProjectivePoint<F>) -> Result<Matrix<F>, VeroneseError> {
    let c = p.coords();
    if c.len() != 6 {
        return Err(VeroneseError::WrongLength { expected: 6, found: c.len() });
    }
    let [x, y, z, s, t, u] = [0, 1, 2, 3, 4, 5].map(|i| c[i].clone());
    Ok(Matrix::from_rows(vec![
        vec![x, u.clone(), t.clone()],
        vec![u, y, s.clone()],
        vec![t, s, z],
    ]))
}

pub fn secant_stratum<F: Field>(p: &ProjectivePoint<F>) -> Result<SecantStratum, VeroneseError> {
    Ok(match point_matrix(p)?.rank() {
        1 => SecantStratum::OnVeronese,
        2 => SecantStratum::OnSecantOnly,
        _ => SecantStratum::Generic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{int, Rational};

    type Q = Rational;

    #[test]
    fn six_generators_vanish_on_the_parametrization() {
        let ideal = veronese_ideal::<Q>();
        assert_eq!(ideal.len(), 6);
        let r = PolyRing::new(&["X", "Y", "Z"]);
        let images: Vec<Polynomial<Q>> =
            ["X^2", "Y^2", "Z^2", "Y*Z", "Z*X", "X*Y"].iter().map(|e| r.parse(e).unwrap()).collect();
        for g in &ideal {
            assert!(g.substitute(&images).unwrap().is_zero(), "{g}");
        }
    }

    #[test]
    fn minors_reproduce_the_generators_up_to_sign() {
        let minors = symmetric_minors::<Q>();
        for g in veronese_ideal::<Q>() {
            assert!(minors.iter().any(|m| *m == g || *m == -&g), "{g}");
        }
        for m in &minors {
            assert!(veronese_ideal::<Q>().iter().any(|g| *m == *g || *m == -g));
        }
    }

    #[test]
    fn secant_cubic_is_the_determinant() {
        assert_eq!(secant_cubic::<Q>(), symmetric_determinant::<Q>());
    }

    #[test]
    fn strata() {
        let p = |c: &[i64]| ProjectivePoint::<Q>::from_i64(c).unwrap();
        assert_eq!(secant_stratum(&p(&[1, 0, 0, 0, 0, 0])).unwrap(), SecantStratum::OnVeronese);
        assert_eq!(secant_stratum(&p(&[1, 1, 0, 0, 0, 0])).unwrap(), SecantStratum::OnSecantOnly);
        assert_eq!(secant_stratum(&p(&[1, 1, 1, 0, 0, 0])).unwrap(), SecantStratum::Generic);
        assert_eq!(ProjectivePoint::<Q>::from_i64(&[0; 6]).unwrap_err(), VeroneseError::ZeroPoint);
    }

    #[test]
    fn projective_equality_is_up_to_scalar() {
        let a = ProjectivePoint::new(vec![int(1), int(2), int(0)]).unwrap();
        let b = ProjectivePoint::new(vec![int(-3), int(-6), int(0)]).unwrap();
        let c = ProjectivePoint::new(vec![int(1), int(3), int(0)]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn veronese_points_have_rank_one() {
        let p = ProjectivePoint::new(vec![int(2), int(-1), int(3)]).unwrap();
        let v = veronese_map(&p).unwrap();
        assert_eq!(secant_stratum(&v).unwrap(), SecantStratum::OnVeronese);
        assert!(secant_cubic::<Q>().eval(v.coords()) == int(0));
    }
}
