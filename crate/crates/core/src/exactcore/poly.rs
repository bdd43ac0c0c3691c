//! Sparse multivariate polynomials over an exact field.
//!
//! A [`PolyRing`] fixes an ordered list of variable names; every
//! [`Polynomial`] carries its ring and stores only nonzero coefficients,
//! keyed by exponent vectors of the ring's length. Monomials are ordered
//! graded-lexicographically with the first declared variable largest.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::Field;
use super::ExactError;

/// An ordered list of variable names.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyRing {
    vars: Arc<[String]>,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        let vars: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        PolyRing { vars: vars.into() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The variable `name` as a polynomial. Panics if the ring lacks it.
    pub fn var<F: Field>(&self, name: &str) -> Polynomial<F> {
        let i = self
            .index_of(name)
            .unwrap_or_else(|| panic!("variable {name} not in ring {:?}", self.vars));
        Polynomial::var(self, i)
    }

    /// All variables, in declared order.
    pub fn gens<F: Field>(&self) -> Vec<Polynomial<F>> {
        (0..self.nvars()).map(|i| Polynomial::var(self, i)).collect()
    }

    /// Monomials of total degree `d`, in descending graded-lex order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let n = self.nvars();
        let mut out = Vec::new();
        let mut current = vec![0u32; n];
        fn rec(i: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let n = current.len();
            if n == 0 {
                if left == 0 {
                    out.push(Monomial(Vec::new()));
                }
                return;
            }
            if i == n - 1 {
                current[i] = left;
                out.push(Monomial(current.clone()));
                current[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                current[i] = e;
                rec(i + 1, left - e, current, out);
            }
            current[i] = 0;
        }
        rec(0, d, &mut current, &mut out);
        out
    }

    pub fn parse<F: Field>(&self, src: &str) -> Result<Polynomial<F>, ExactError> {
        Parser { ring: self, chars: src.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 }
            .parse_all()
    }
}

/// Exponent vector of a monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with coefficients in `F`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<F: Field> {
    ring: PolyRing,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &PolyRing) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn constant(ring: &PolyRing, c: F) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &PolyRing, m: Monomial, c: F) -> Self {
        assert_eq!(m.0.len(), ring.nvars(), "monomial length does not match ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var(ring: &PolyRing, i: usize) -> Self {
        let mut e = vec![0; ring.nvars()];
        e[i] = 1;
        Self::monomial(ring, Monomial(e), F::one())
    }

    /// Build from `(exponents, coefficient)` pairs; zero coefficients are dropped
    /// and repeated monomials are summed.
    pub fn from_terms<I>(ring: &PolyRing, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        assert_eq!(m.0.len(), self.ring.nvars(), "monomial length does not match ring");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.ring.nvars(), "evaluation point has wrong length");
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t * x.pow(e);
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn partial_derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[i] -= 1;
            out.add_term(dm, c.clone() * F::from_i64(e as i64));
        }
        out
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Self, ExactError> {
        if images.len() != self.ring.nvars() {
            return Err(ExactError::RingMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(Polynomial { ring: self.ring.clone(), terms: self.terms.clone() }),
        };
        if images.iter().any(|p| p.ring != target) {
            return Err(ExactError::RingMismatch("images live in different rings".into()));
        }
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (img, &e) in images.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Re-express in `target`, matching variables by name.
    pub fn to_ring(&self, target: &PolyRing) -> Result<Self, ExactError> {
        let map: Vec<usize> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.index_of(v).ok_or_else(|| ExactError::UnmappedVariable(v.clone())))
            .collect::<Result<_, _>>()?;
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.nvars()];
            for (i, &ei) in m.0.iter().enumerate() {
                e[map[i]] += ei;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            self.ring == other.ring,
            "polynomial ring mismatch: {:?} vs {:?}",
            self.ring.vars(),
            other.ring.vars()
        );
    }
}

impl<'a, F: Field> Add<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, F: Field> Sub<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, F: Field> Mul<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.check_ring(rhs);
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

pub(crate) fn format_monomial(vars: &[String], m: &Monomial) -> String {
    let parts: Vec<String> = m
        .0
        .iter()
        .zip(vars)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    parts.join("*")
}

/// Writes terms in descending graded-lex order, e.g. `x*y - u^2`.
pub(crate) fn format_terms<'a, C: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a C, bool)>,
) -> fmt::Result {
    let mut first = true;
    for (mono, c, is_unit_mono) in terms {
        let cs = c.to_string();
        let (neg, mag) = match cs.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, cs),
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        if is_unit_mono {
            write!(f, "{mag}")?;
        } else if mag == "1" {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{mag}*{mono}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = self.ring.vars();
        format_terms(
            f,
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| (format_monomial(vars, m), c, m.degree() == 0)),
        )
    }
}

struct Parser<'r> {
    ring: &'r PolyRing,
    chars: Vec<char>,
    pos: usize,
}

impl<'r> Parser<'r> {
    fn err(&self, msg: &str) -> ExactError {
        ExactError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse_all<F: Field>(mut self) -> Result<Polynomial<F>, ExactError> {
        let p = self.expr()?;
        if self.pos != self.chars.len() {
            return Err(self.err("trailing input"));
        }
        Ok(p)
    }

    fn expr<F: Field>(&mut self) -> Result<Polynomial<F>, ExactError> {
        let mut acc = Polynomial::zero(self.ring);
        let mut sign_neg = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            sign_neg = c == '-';
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            acc = if sign_neg { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some('+') => sign_neg = false,
                Some('-') => sign_neg = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(acc)
    }

    fn term<F: Field>(&mut self) -> Result<Polynomial<F>, ExactError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn number(&mut self) -> Result<i64, ExactError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("expected integer"))
    }

    fn exponent(&mut self) -> Result<u32, ExactError> {
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.number()?;
            u32::try_from(e).map_err(|_| self.err("exponent out of range"))
        } else {
            Ok(1)
        }
    }

    fn factor<F: Field>(&mut self) -> Result<Polynomial<F>, ExactError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                let mut value = F::from_i64(n);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let d = self.number()?;
                    value = value
                        .div(&F::from_i64(d))
                        .ok_or_else(|| self.err("division by zero"))?;
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let i = self
                    .ring
                    .index_of(&name)
                    .ok_or(ExactError::UnmappedVariable(name))?;
                let e = self.exponent()?;
                Ok(Polynomial::var(self.ring, i).pow(e))
            }
            _ => Err(self.err("expected a factor")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::field::{rat, Rational, F2};

    fn ring() -> PolyRing {
        PolyRing::new(&["x", "y", "z"])
    }

    #[test]
    fn parse_and_display_round_trip() {
        let r = ring();
        let p: Polynomial<Rational> = r.parse("x*y - z^2 + 7/2*x^2").unwrap();
        assert_eq!(p.to_string(), "7/2*x^2 + x*y - z^2");
        let q: Polynomial<Rational> = r.parse(&p.to_string()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn monomials_are_enumerated_in_grlex_order() {
        let r = PolyRing::new(&["x", "y"]);
        let ms = r.monomials_of_degree(2);
        assert_eq!(ms, vec![Monomial(vec![2, 0]), Monomial(vec![1, 1]), Monomial(vec![0, 2])]);
        assert_eq!(PolyRing::new(&["a", "b", "c", "d"]).monomials_of_degree(3).len(), 20);
    }

    #[test]
    fn cancellation_removes_terms() {
        let r = ring();
        let p: Polynomial<Rational> = r.parse("(x+y)^2 - x^2 - 2*x*y - y^2").unwrap();
        assert!(p.is_zero());
        let q: Polynomial<F2> = r.parse("(x+y)^2 - x^2 - y^2").unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn derivative_and_eval() {
        let r = ring();
        let p: Polynomial<Rational> = r.parse("x^3*y + 2*z").unwrap();
        assert_eq!(p.partial_derivative(0), r.parse("3*x^2*y").unwrap());
        assert_eq!(p.eval(&[rat(2, 1), rat(1, 2), rat(-1, 1)]), rat(2, 1));
    }

    #[test]
    fn unknown_variable_is_reported() {
        let err = ring().parse::<Rational>("x + w").unwrap_err();
        assert!(matches!(err, ExactError::UnmappedVariable(ref v) if v == "w"));
    }

    #[test]
    fn to_ring_matches_by_name() {
        let small = PolyRing::new(&["y", "x"]);
        let p: Polynomial<Rational> = small.parse("y^2 - x").unwrap();
        let big = p.to_ring(&ring()).unwrap();
        assert_eq!(big, ring().parse("y^2 - x").unwrap());
    }
}
