//! Quotients of polynomials, compared by cross-multiplication.

use std::collections::HashMap;
use std::fmt;

use super::field::Field;
use super::poly::{PolyRing, Polynomial};
use super::ExactError;

/// `num / den` with `den != 0`. No common factors are cancelled.
#[derive(Clone, Debug)]
pub struct RationalFunction<F: Field> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.ring() != den.ring() {
            return Err(ExactError::RingMismatch("numerator and denominator".into()));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: Polynomial<F>) -> Self {
        let den = Polynomial::one(p.ring());
        RationalFunction { num: p, den }
    }

    pub fn constant(ring: &PolyRing, c: F) -> Self {
        Self::from_poly(Polynomial::constant(ring, c))
    }

    pub fn num(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<F> {
        &self.den
    }

    pub fn ring(&self) -> &PolyRing {
        self.num.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RationalFunction { num: &self.num + &other.num, den: self.den.clone() };
        }
        RationalFunction {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction { num: self.num.pow(e), den: self.den.pow(e) }
    }
}

impl<F: Field> PartialEq for RationalFunction<F> {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<F: Field> Eq for RationalFunction<F> {}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one(self.den.ring()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Replace every variable of `p` by its image and combine over a common
/// denominator. All images must live in the same ring.
pub fn poly_substitute<F: Field>(
    p: &Polynomial<F>,
    images: &HashMap<String, RationalFunction<F>>,
    target: &PolyRing,
) -> Result<RationalFunction<F>, ExactError> {
    let vars = p.ring().vars();
    let mut imgs = Vec::with_capacity(vars.len());
    for (i, v) in vars.iter().enumerate() {
        match images.get(v) {
            Some(r) => {
                if r.ring() != target {
                    return Err(ExactError::RingMismatch(format!("image of {v}")));
                }
                imgs.push(Some(r));
            }
            None if p.support_vars().contains(&i) => {
                return Err(ExactError::UnmappedVariable(v.clone()))
            }
            None => imgs.push(None),
        }
    }
    let mut acc = RationalFunction::constant(target, F::zero());
    for (m, c) in p.terms() {
        let mut t = RationalFunction::constant(target, c.clone());
        for (img, &e) in imgs.iter().zip(m.exponents()) {
            if e > 0 {
                // a variable with positive exponent always has an image here
                t = t.mul(&img.expect("checked above").pow(e));
            }
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}
