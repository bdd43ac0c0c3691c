//! Degree-by-degree linear algebra on homogeneous ideals.

use super::field::Field;
use super::matrix::Matrix;
use super::poly::{Monomial, PolyRing, Polynomial};
use super::ExactError;

/// A list of degree-`d` polynomials written in the monomial basis of that degree.
#[derive(Clone, Debug)]
pub struct GradedPiece<F: Field> {
    pub degree: u32,
    pub basis: Vec<Monomial>,
    /// One row per polynomial, one column per basis monomial.
    pub coordinates: Matrix<F>,
}

impl<F: Field> GradedPiece<F> {
    /// Coordinates of `polys` (all homogeneous of degree `d`) in the grlex
    /// monomial basis of `ring` in degree `d`.
    pub fn new(ring: &PolyRing, d: u32, polys: &[Polynomial<F>]) -> Result<Self, ExactError> {
        let basis = ring.monomials_of_degree(d);
        let mut coordinates = Matrix::empty(basis.len());
        for p in polys {
            if !p.is_zero() && (!p.is_homogeneous() || p.total_degree() != Some(d)) {
                return Err(ExactError::Inhomogeneous(p.to_string()));
            }
            coordinates.push_row(basis.iter().map(|m| p.coefficient(m)).collect());
        }
        Ok(GradedPiece { degree: d, basis, coordinates })
    }

    pub fn dimension(&self) -> usize {
        self.coordinates.rank()
    }
}

/// The degree-`d` piece of the ideal generated by `generators`: all products
/// `m * g` with `deg(m * g) = d`.
pub fn ideal_graded_piece<F: Field>(
    generators: &[Polynomial<F>],
    d: u32,
) -> Result<GradedPiece<F>, ExactError> {
    let Some(first) = generators.first() else {
        return Err(ExactError::RingMismatch("no generators".into()));
    };
    let ring = first.ring().clone();
    let mut products = Vec::new();
    for g in generators {
        if g.ring() != &ring {
            return Err(ExactError::RingMismatch("generators in different rings".into()));
        }
        if !g.is_homogeneous() {
            return Err(ExactError::Inhomogeneous(g.to_string()));
        }
        let Some(dg) = g.total_degree() else { continue };
        if dg > d {
            continue;
        }
        for m in ring.monomials_of_degree(d - dg) {
            products.push(&Polynomial::monomial(&ring, m, F::one()) * g);
        }
    }
    GradedPiece::new(&ring, d, &products)
}

/// `dim_k I_d` for the ideal `I` generated by homogeneous `generators`.
pub fn ideal_graded_dimension<F: Field>(
    generators: &[Polynomial<F>],
    d: u32,
) -> Result<usize, ExactError> {
    Ok(ideal_graded_piece(generators, d)?.dimension())
}

/// Membership of a homogeneous `p` in the ideal generated by `generators`.
pub fn ideal_contains<F: Field>(generators: &[Polynomial<F>], p: &Polynomial<F>) -> Result<bool, ExactError> {
    let Some(d) = p.total_degree() else { return Ok(true) };
    if !p.is_homogeneous() {
        return Err(ExactError::Inhomogeneous(p.to_string()));
    }
    let piece = ideal_graded_piece(generators, d)?;
    let mut with_p = piece.coordinates.clone();
    with_p.push_row(piece.basis.iter().map(|m| p.coefficient(m)).collect());
    Ok(with_p.rank() == piece.dimension())
}

/// Dimension of the degree-`d` part of a polynomial ring in `n` variables.
pub fn ring_piece_dimension(n: usize, d: u32) -> usize {
    // C(n + d - 1, d)
    let mut acc: u128 = 1;
    for i in 0..d as u128 {
        acc = acc * (n as u128 + i) / (i + 1);
    }
    acc as usize
}
