//! Exact arithmetic kernel.
//!
//! Rationals come from `num-rational`; everything above them (polynomials,
//! rational functions, matrices over a field, integer lattice invariants,
//! graded pieces of ideals) is built here.

pub mod field;
pub mod graded;
pub mod intmatrix;
pub mod matrix;
pub mod poly;
pub mod ratfunc;

pub use field::{format_rational, int, rat, Field, FiniteField, Fp, Rational, F2, F3, F4, F5, F7};
pub use graded::{ideal_contains, ideal_graded_dimension, ideal_graded_piece, ring_piece_dimension, GradedPiece};
pub use intmatrix::{lattice_index, IntMatrix};
pub use matrix::{kernel_dimension, Matrix};
pub use poly::{Monomial, PolyRing, Polynomial};
pub use ratfunc::{poly_substitute, RationalFunction};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("unmapped variable {0}")]
    UnmappedVariable(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("inhomogeneous generator: {0}")]
    Inhomogeneous(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
