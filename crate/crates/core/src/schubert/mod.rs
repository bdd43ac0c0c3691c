//! Chow ring of `Gr(2, n)` in the Schubert basis, plus Chern class
//! bookkeeping for bundles on it.

pub mod chern;
pub mod v5;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exactcore::{format_rational, int, Rational};

pub use chern::{
    character_mul, character_to_chern, chern_to_character, class, evaluate, formal_ring, line_bundle_character,
    twist, ChernCharacter, ChernVector, ClassPoly,
};
pub use v5::{v5_separability_certificate, V5Certificate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchubertError {
    #[error("invalid partition ({a},{b}) for Gr(2,{n})")]
    InvalidPartition { a: u32, b: u32, n: u32 },
    #[error("ambient mismatch: Gr(2,{0}) vs Gr(2,{1})")]
    AmbientMismatch(u32, u32),
    #[error("degree needs a top-codimension class, got {0}")]
    NotTopDegree(String),
    #[error("Pieri index {k} outside 1..={max}")]
    BadPieriIndex { k: u32, max: u32 },
    #[error("class not homogeneous of the expected weight: {0}")]
    NotHomogeneous(String),
    #[error("character has rank {found}, expected {expected}")]
    RankMismatch { expected: String, found: String },
}

/// The partition `(a, b)` with `a >= b`, indexing `σ_{a,b}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition2 {
    pub a: u32,
    pub b: u32,
}

impl Partition2 {
    pub fn new(a: u32, b: u32) -> Option<Self> {
        (a >= b).then_some(Partition2 { a, b })
    }

    pub fn codim(self) -> u32 {
        self.a + self.b
    }

    pub fn fits(self, n: u32) -> bool {
        n >= 2 && self.a <= n - 2
    }
}

impl fmt::Display for Partition2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s({},{})", self.a, self.b)
    }
}

/// A rational combination of Schubert classes in `Gr(2, n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchubertElement {
    n: u32,
    coeffs: BTreeMap<Partition2, Rational>,
}

impl SchubertElement {
    pub fn zero(n: u32) -> Self {
        SchubertElement { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: u32) -> Self {
        Self::basis(n, Partition2 { a: 0, b: 0 }).expect("unit class fits every box")
    }

    pub fn basis(n: u32, p: Partition2) -> Result<Self, SchubertError> {
        if !p.fits(n) {
            return Err(SchubertError::InvalidPartition { a: p.a, b: p.b, n });
        }
        let mut e = Self::zero(n);
        e.coeffs.insert(p, int(1));
        Ok(e)
    }

    /// `σ_{a,b}`.
    pub fn sigma(n: u32, a: u32, b: u32) -> Result<Self, SchubertError> {
        let p = Partition2::new(a, b).ok_or(SchubertError::InvalidPartition { a, b, n })?;
        Self::basis(n, p)
    }

    /// The point class `σ_{n-2,n-2}`.
    pub fn point(n: u32) -> Self {
        Self::sigma(n, n - 2, n - 2).expect("box class fits")
    }

    pub fn ambient(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, p: Partition2) -> Rational {
        self.coeffs.get(&p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition2, &Rational)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, p: Partition2, c: Rational) {
        if c.is_zero() || !p.fits(self.n) {
            return;
        }
        let entry = self.coeffs.entry(p).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    fn check(&self, other: &Self) -> Result<(), SchubertError> {
        if self.n != other.n {
            return Err(SchubertError::AmbientMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SchubertError> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(*p, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for (p, a) in &self.coeffs {
            out.add_term(*p, a * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SchubertError> {
        self.add(&other.scale(&int(-1)))
    }

    /// Product by the two-row Littlewood-Richardson rule.
    pub fn mul(&self, other: &Self) -> Result<Self, SchubertError> {
        self.check(other)?;
        let mut out = Self::zero(self.n);
        for (l, a) in &self.coeffs {
            for (m, b) in &other.coeffs {
                let ab = a * b;
                for (nu, c) in lr_products(*l, *m, self.n) {
                    out.add_term(nu, &ab * int(c as i64));
                }
            }
        }
        Ok(out)
    }

    /// Product computed through `σ_{a,b} = σ_{1,1}^b σ_{a-b}`: Pieri for the
    /// special factor, then `σ_{1,1} σ_{c,d} = σ_{c+1,d+1}` repeatedly.
    pub fn mul_via_pieri(&self, other: &Self) -> Result<Self, SchubertError> {
        self.check(other)?;
        let mut out = Self::zero(self.n);
        for (m, b) in &other.coeffs {
            let mut part = if m.a > m.b {
                let mut acc = Self::zero(self.n);
                for (l, a) in &self.coeffs {
                    acc = acc.add(&pieri(*l, m.a - m.b, self.n)?.scale(a))?;
                }
                acc
            } else {
                self.clone()
            };
            for _ in 0..m.b {
                part = part.dual_pieri();
            }
            out = out.add(&part.scale(b))?;
        }
        Ok(out)
    }

    /// Multiplication by `σ_{1,1}`.
    fn dual_pieri(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (p, c) in &self.coeffs {
            out.add_term(Partition2 { a: p.a + 1, b: p.b + 1 }, c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ambient");
        }
        acc
    }

    /// Codimension if homogeneous and nonzero.
    pub fn codim(&self) -> Option<u32> {
        let mut it = self.coeffs.keys().map(|p| p.codim());
        let first = it.next()?;
        it.all(|c| c == first).then_some(first)
    }
}

impl fmt::Display for SchubertElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(p, c)| format!("{}*{}", format_rational(c), p))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Pieri's rule: `σ_λ · σ_k` as a sum over horizontal strips in the box.
pub fn pieri(l: Partition2, k: u32, n: u32) -> Result<SchubertElement, SchubertError> {
    if !l.fits(n) {
        return Err(SchubertError::InvalidPartition { a: l.a, b: l.b, n });
    }
    let max = n.saturating_sub(2);
    if k == 0 || k > max {
        return Err(SchubertError::BadPieriIndex { k, max });
    }
    let mut out = SchubertElement::zero(n);
    let total = l.codim() + k;
    // mu = (a', b') with a' >= a, b <= b' <= a (strip condition), a' + b' = total
    for b2 in l.b..=l.a {
        if b2 > total {
            break;
        }
        let a2 = total - b2;
        if a2 >= l.a && a2 >= b2 {
            out.add_term(Partition2 { a: a2, b: b2 }, int(1));
        }
    }
    Ok(out)
}

/// Littlewood-Richardson coefficients `c^ν_{λμ}` for two-row shapes in the
/// `2 × (n-2)` box, by enumerating fillings of `ν/λ` with content `μ`.
pub fn lr_products(l: Partition2, m: Partition2, n: u32) -> Vec<(Partition2, u32)> {
    let total = l.codim() + m.codim();
    let mut out = Vec::new();
    let max = n.saturating_sub(2);
    for a in l.a..=max {
        if a > total {
            break;
        }
        let b = total - a;
        if b > a || b < l.b {
            continue;
        }
        let nu = Partition2 { a, b };
        let c = lr_coefficient(l, m, nu);
        if c > 0 {
            out.push((nu, c));
        }
    }
    out
}

/// Count semistandard fillings of `ν/λ` with `μ.a` ones and `μ.b` twos whose
/// reverse reading word is a lattice word.
pub fn lr_coefficient(l: Partition2, m: Partition2, nu: Partition2) -> u32 {
    if nu.a < l.a || nu.b < l.b || nu.codim() != l.codim() + m.codim() {
        return 0;
    }
    let row1 = (nu.a - l.a) as usize;
    let row2 = (nu.b - l.b) as usize;
    let cells = row1 + row2;
    let mut count = 0;
    for mask in 0u64..(1u64 << cells) {
        // bit set means entry 2
        let entry = |i: usize| if mask >> i & 1 == 1 { 2u8 } else { 1u8 };
        let r1: Vec<u8> = (0..row1).map(entry).collect();
        let r2: Vec<u8> = (row1..cells).map(entry).collect();
        let twos = r1.iter().chain(&r2).filter(|&&e| e == 2).count() as u32;
        if twos != m.b || cells as u32 - twos != m.a {
            continue;
        }
        if !r1.windows(2).all(|w| w[0] <= w[1]) || !r2.windows(2).all(|w| w[0] <= w[1]) {
            continue;
        }
        // columns: row-2 cell at column l.b + j sits under row-1 column l.b + j
        let col_ok = (0..row2).all(|j| {
            let col = l.b as usize + j;
            if col < l.a as usize {
                true
            } else {
                r1[col - l.a as usize] < r2[j]
            }
        });
        if !col_ok {
            continue;
        }
        let (mut ones, mut twos_seen) = (0, 0);
        let lattice = r1.iter().rev().chain(r2.iter().rev()).all(|&e| {
            if e == 1 {
                ones += 1;
            } else {
                twos_seen += 1;
            }
            twos_seen <= ones
        });
        if lattice {
            count += 1;
        }
    }
    count
}

/// Coefficient of the point class; the input must be zero or of top codimension.
pub fn degree(x: &SchubertElement) -> Result<Rational, SchubertError> {
    if x.is_zero() {
        return Ok(Rational::zero());
    }
    let top = 2 * (x.n - 2);
    if x.codim() != Some(top) {
        return Err(SchubertError::NotTopDegree(x.to_string()));
    }
    Ok(x.coefficient(Partition2 { a: x.n - 2, b: x.n - 2 }))
}

/// All partitions in the `2 × (n-2)` box.
pub fn box_partitions(n: u32) -> Vec<Partition2> {
    let max = n.saturating_sub(2);
    (0..=max)
        .flat_map(|a| (0..=a).map(move |b| Partition2 { a, b }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: u32, b: u32) -> SchubertElement {
        SchubertElement::sigma(5, a, b).unwrap()
    }

    #[test]
    fn pieri_examples() {
        let p = |a, b, k| pieri(Partition2 { a, b }, k, 5).unwrap();
        assert_eq!(p(1, 0, 1), s(2, 0).add(&s(1, 1)).unwrap());
        assert_eq!(p(2, 1, 1), s(3, 1).add(&s(2, 2)).unwrap());
        assert!(p(3, 3, 1).is_zero());
    }

    #[test]
    fn paper_products() {
        let s1 = s(1, 0);
        assert_eq!(s(2, 0).mul(&s1.pow(4)).unwrap(), SchubertElement::point(5).scale(&int(3)));
        assert_eq!(s(1, 1).mul(&s1.pow(4)).unwrap(), SchubertElement::point(5).scale(&int(2)));
        assert_eq!(degree(&s1.pow(6)).unwrap(), int(5));
        assert_eq!(degree(&s(3, 0).mul(&s1.pow(3)).unwrap()).unwrap(), int(1));
        assert_eq!(degree(&SchubertElement::zero(5)).unwrap(), int(0));
    }

    #[test]
    fn unit_and_errors() {
        let x = s(2, 1);
        assert_eq!(SchubertElement::one(5).mul(&x).unwrap(), x);
        assert!(degree(&x).is_err());
        assert!(SchubertElement::sigma(5, 4, 0).is_err());
        assert!(matches!(
            x.mul(&SchubertElement::one(6)),
            Err(SchubertError::AmbientMismatch(5, 6))
        ));
    }

    #[test]
    fn lr_matches_known_coefficient() {
        // σ_1 · σ_1 in a large box: σ_2 + σ_{1,1}
        let l = Partition2 { a: 1, b: 0 };
        assert_eq!(lr_products(l, l, 10), vec![(Partition2 { a: 1, b: 1 }, 1), (Partition2 { a: 2, b: 0 }, 1)]);
        // two-row part of s21 * s21
        let p = Partition2 { a: 2, b: 1 };
        let out = lr_products(p, p, 10);
        assert_eq!(out, vec![(Partition2 { a: 3, b: 3 }, 1), (Partition2 { a: 4, b: 2 }, 1)]);
    }
}
