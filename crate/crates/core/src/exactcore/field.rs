//! Coefficient fields: the rationals, small prime fields and `F_4`.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Build a rational from a machine-sized numerator and denominator.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Build an integral rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Render a rational as `p/q`, or `p` when integral.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A commutative field with exact arithmetic.
pub trait Field:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// Characteristic of the field (0 for `Q`).
    const CHARACTERISTIC: u64;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self / other`, `None` when dividing by zero.
    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl Field for Rational {
    const CHARACTERISTIC: u64 = 0;

    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rational as Zero>::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(n: i64) -> Self {
        int(n)
    }
}

/// Element of the prime field `F_P`.
///
/// `P` must be prime; the aliases [`F2`], [`F3`], [`F5`], [`F7`] cover the
/// fields used in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// All field elements in increasing order of representative.
    pub fn elements() -> Vec<Self> {
        (0..P).map(Fp).collect()
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp((self.0 * rhs.0) % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P;

    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(P-2).
        Some(Field::pow(self, (P - 2) as u32))
    }
    fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u64)
    }
}

/// Element of `F_4 = F_2[w]/(w^2 + w + 1)`, stored as `lo + hi*w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F4 {
    lo: u8,
    hi: u8,
}

impl F4 {
    pub const ZERO: F4 = F4 { lo: 0, hi: 0 };
    pub const ONE: F4 = F4 { lo: 1, hi: 0 };
    /// The generator `w`, a root of `w^2 + w + 1`.
    pub const W: F4 = F4 { lo: 0, hi: 1 };
    pub const W2: F4 = F4 { lo: 1, hi: 1 };

    pub fn new(lo: u8, hi: u8) -> Self {
        F4 { lo: lo & 1, hi: hi & 1 }
    }

    /// Coordinates `(lo, hi)` in the basis `1, w`.
    pub fn coords(self) -> (u8, u8) {
        (self.lo, self.hi)
    }

    pub fn elements() -> Vec<Self> {
        vec![F4::ZERO, F4::ONE, F4::W, F4::W2]
    }
}

impl fmt::Debug for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.lo, self.hi) {
            (0, 0) => write!(f, "0"),
            (1, 0) => write!(f, "1"),
            (0, 1) => write!(f, "w"),
            _ => write!(f, "(1+w)"),
        }
    }
}

impl Add for F4 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        F4 { lo: self.lo ^ rhs.lo, hi: self.hi ^ rhs.hi }
    }
}

impl Sub for F4 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + rhs
    }
}

impl Neg for F4 {
    type Output = Self;
    fn neg(self) -> Self {
        self
    }
}

impl Mul for F4 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + bw)(c + dw) = (ac + bd) + (ad + bc + bd)w, using w^2 = w + 1.
        let (a, b, c, d) = (self.lo, self.hi, rhs.lo, rhs.hi);
        F4 { lo: (a & c) ^ (b & d), hi: (a & d) ^ (b & c) ^ (b & d) }
    }
}

impl Field for F4 {
    const CHARACTERISTIC: u64 = 2;

    fn zero() -> Self {
        F4::ZERO
    }
    fn one() -> Self {
        F4::ONE
    }
    fn is_zero(&self) -> bool {
        *self == F4::ZERO
    }
    fn inv(&self) -> Option<Self> {
        match (self.lo, self.hi) {
            (0, 0) => None,
            (1, 0) => Some(F4::ONE),
            // w * w^2 = w^3 = 1
            (0, 1) => Some(F4::W2),
            _ => Some(F4::W),
        }
    }
    fn from_i64(n: i64) -> Self {
        if n.rem_euclid(2) == 1 {
            F4::ONE
        } else {
            F4::ZERO
        }
    }
}

/// A field whose elements can be listed.
pub trait FiniteField: Field {
    fn elements() -> Vec<Self>;
}

impl<const P: u64> FiniteField for Fp<P> {
    fn elements() -> Vec<Self> {
        Fp::<P>::elements()
    }
}

impl FiniteField for F4 {
    fn elements() -> Vec<Self> {
        F4::elements()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_is_a_field() {
        let els = F4::elements();
        for &a in &els {
            for &b in &els {
                assert_eq!(a * b, b * a);
                for &c in &els {
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
            if !Field::is_zero(&a) {
                assert_eq!(a * a.inv().unwrap(), F4::ONE);
            }
        }
        // w is a root of x^2 + x + 1
        assert_eq!(F4::W * F4::W + F4::W + F4::ONE, F4::ZERO);
    }

    #[test]
    fn prime_field_inverses() {
        for a in F7::elements().into_iter().skip(1) {
            assert_eq!(a * a.inv().unwrap(), F7::one());
        }
        assert_eq!(F2::from_i64(-1), F2::one());
        assert_eq!(F5::from_i64(-7), F5::new(3));
    }

    #[test]
    fn rational_format() {
        assert_eq!(format_rational(&rat(7, 2)), "7/2");
        assert_eq!(format_rational(&rat(-22, 12)), "-11/6");
        assert_eq!(format_rational(&int(620)), "620");
        assert_eq!(rat(0, 5), <Rational as Zero>::zero());
        assert!(rat(3, -6).denom() > &BigInt::from(0));
    }
}
