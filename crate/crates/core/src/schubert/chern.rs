//! Chern classes and Chern characters as formal polynomials in `σ_1`,
//! `σ_{1,1}`, `σ_2`, `σ_3`.
//!
//! Products of these generators are kept unexpanded (so `σ_1^3` stays
//! `s1^3`); [`evaluate`] maps a formal class into the Schubert basis when a
//! number is needed. The generators carry weights 1, 2, 2, 3.

use std::fmt;
use std::sync::OnceLock;

use super::{SchubertElement, SchubertError};
use crate::exactcore::{int, Field, Monomial, PolyRing, Polynomial, Rational};

/// A formal class: a polynomial over `Q` in `s1, s11, s2, s3`.
pub type ClassPoly = Polynomial<Rational>;

const GENERATORS: [(&str, u32, u32, u32); 4] =
    [("s1", 1, 1, 0), ("s11", 2, 1, 1), ("s2", 2, 2, 0), ("s3", 3, 3, 0)];

/// The ring `Q[s1, s11, s2, s3]`.
pub fn formal_ring() -> PolyRing {
    static RING: OnceLock<PolyRing> = OnceLock::new();
    RING.get_or_init(|| PolyRing::new(&GENERATORS.map(|g| g.0))).clone()
}

/// Parse a formal class such as `"19*s1^2 + 3*s11 + 2*s2"`.
pub fn class(src: &str) -> ClassPoly {
    formal_ring().parse(src).unwrap_or_else(|e| panic!("bad class {src:?}: {e}"))
}

pub fn weighted_degree(m: &Monomial) -> u32 {
    m.exponents().iter().zip(GENERATORS).map(|(e, g)| e * g.1).sum()
}

/// The part of `p` of weighted degree `k`.
pub fn graded_part(p: &ClassPoly, k: u32) -> ClassPoly {
    Polynomial::from_terms(
        p.ring(),
        p.terms()
            .filter(|(m, _)| weighted_degree(m) == k)
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

pub fn is_weighted_homogeneous(p: &ClassPoly, k: u32) -> bool {
    p.terms().all(|(m, _)| weighted_degree(m) == k)
}

/// Image of a formal class in the Chow ring of `Gr(2, n)`. Generators that do
/// not fit the box map to zero.
pub fn evaluate(p: &ClassPoly, n: u32) -> Result<SchubertElement, SchubertError> {
    let gens: Vec<SchubertElement> = GENERATORS
        .iter()
        .map(|&(_, _, a, b)| SchubertElement::sigma(n, a, b).unwrap_or_else(|_| SchubertElement::zero(n)))
        .collect();
    let mut out = SchubertElement::zero(n);
    for (m, c) in p.terms() {
        let mut t = SchubertElement::one(n).scale(c);
        for (g, &e) in gens.iter().zip(m.exponents()) {
            if e > 0 {
                t = t.mul(&g.pow(e))?;
            }
        }
        out = out.add(&t)?;
    }
    Ok(out)
}

/// Total Chern class `c_0 = 1, c_1, ..., c_cap` of a bundle of given rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChernVector {
    pub rank: u32,
    classes: Vec<ClassPoly>,
}

impl ChernVector {
    /// `classes` lists `c_1, ..., c_cap`; each `c_i` must have weight `i`.
    pub fn new(rank: u32, classes: Vec<ClassPoly>) -> Result<Self, SchubertError> {
        for (i, c) in classes.iter().enumerate() {
            if !is_weighted_homogeneous(c, i as u32 + 1) {
                return Err(SchubertError::NotHomogeneous(format!("c{} = {c}", i + 1)));
            }
        }
        let mut all = vec![Polynomial::one(&formal_ring())];
        all.extend(classes);
        Ok(ChernVector { rank, classes: all })
    }

    pub fn from_strs(rank: u32, classes: &[&str]) -> Result<Self, SchubertError> {
        Self::new(rank, classes.iter().map(|s| class(s)).collect())
    }

    pub fn trivial(rank: u32, cap: usize) -> Self {
        Self::new(rank, vec![Polynomial::zero(&formal_ring()); cap]).expect("zero is homogeneous")
    }

    pub fn cap(&self) -> usize {
        self.classes.len() - 1
    }

    /// `c_i`, zero beyond the cap.
    pub fn c(&self, i: usize) -> ClassPoly {
        self.classes.get(i).cloned().unwrap_or_else(|| Polynomial::zero(&formal_ring()))
    }
}

impl fmt::Display for ChernVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {}", self.rank)?;
        for i in 1..self.classes.len() {
            write!(f, "; c{i} = {}", self.classes[i])?;
        }
        Ok(())
    }
}

/// `ch = rank + ch_1 + ... + ch_cap`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChernCharacter {
    pub rank: Rational,
    parts: Vec<ClassPoly>,
}

impl ChernCharacter {
    /// `parts` lists `ch_1, ..., ch_cap`.
    pub fn new(rank: Rational, parts: Vec<ClassPoly>) -> Result<Self, SchubertError> {
        for (i, c) in parts.iter().enumerate() {
            if !is_weighted_homogeneous(c, i as u32 + 1) {
                return Err(SchubertError::NotHomogeneous(format!("ch{} = {c}", i + 1)));
            }
        }
        Ok(ChernCharacter { rank, parts })
    }

    pub fn constant(rank: Rational, cap: usize) -> Self {
        ChernCharacter { rank, parts: vec![Polynomial::zero(&formal_ring()); cap] }
    }

    pub fn cap(&self) -> usize {
        self.parts.len()
    }

    /// `ch_k`; `ch_0` is the rank.
    pub fn part(&self, k: usize) -> ClassPoly {
        if k == 0 {
            Polynomial::constant(&formal_ring(), self.rank.clone())
        } else {
            self.parts.get(k - 1).cloned().unwrap_or_else(|| Polynomial::zero(&formal_ring()))
        }
    }

    pub fn is_zero(&self) -> bool {
        Field::is_zero(&self.rank) && self.parts.iter().all(Polynomial::is_zero)
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ch0 = {}", self.rank)?;
        for (i, p) in self.parts.iter().enumerate() {
            write!(f, "; ch{} = {p}", i + 1)?;
        }
        Ok(())
    }
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(int(1), |acc, i| acc * int(i))
}

/// Newton's identities: power sums `p_k = k! ch_k` from elementary `c_k`.
pub fn chern_to_character(c: &ChernVector) -> ChernCharacter {
    let cap = c.cap();
    let mut p: Vec<ClassPoly> = vec![Polynomial::zero(&formal_ring())];
    for k in 1..=cap {
        let sign = if k % 2 == 1 { int(1) } else { int(-1) };
        let mut pk = c.c(k).scale(&(sign * int(k as i64)));
        for i in 1..k {
            let s = if (k - 1 + i) % 2 == 0 { int(1) } else { int(-1) };
            pk = &pk + &(&c.c(k - i) * &p[i]).scale(&s);
        }
        p.push(pk);
    }
    let parts = (1..=cap).map(|k| p[k].scale(&factorial(k).inv().expect("k! > 0"))).collect();
    ChernCharacter { rank: int(c.rank as i64), parts }
}

/// Inverse of [`chern_to_character`]: `k c_k = Σ (-1)^{i-1} c_{k-i} p_i`.
pub fn character_to_chern(ch: &ChernCharacter, rank: u32) -> Result<ChernVector, SchubertError> {
    if ch.rank != int(rank as i64) {
        return Err(SchubertError::RankMismatch {
            expected: rank.to_string(),
            found: ch.rank.to_string(),
        });
    }
    let cap = ch.cap();
    let p: Vec<ClassPoly> = (0..=cap).map(|k| ch.part(k).scale(&factorial(k))).collect();
    let mut e: Vec<ClassPoly> = vec![Polynomial::one(&formal_ring())];
    for k in 1..=cap {
        let mut acc = Polynomial::zero(&formal_ring());
        for i in 1..=k {
            let s = if i % 2 == 1 { int(1) } else { int(-1) };
            acc = &acc + &(&e[k - i] * &p[i]).scale(&s);
        }
        e.push(acc.scale(&int(k as i64).inv().expect("k > 0")));
    }
    Ok(ChernVector { rank, classes: e })
}

/// Graded product, truncated at the smaller cap.
pub fn character_mul(a: &ChernCharacter, b: &ChernCharacter) -> ChernCharacter {
    let cap = a.cap().min(b.cap());
    let parts = (1..=cap)
        .map(|k| {
            (0..=k).fold(Polynomial::zero(&formal_ring()), |acc, i| {
                &acc + &(&a.part(i) * &b.part(k - i))
            })
        })
        .collect();
    ChernCharacter { rank: &a.rank * &b.rank, parts }
}

/// `ch(L) = exp(c_1(L))`, truncated at `cap`.
pub fn line_bundle_character(c1: &ClassPoly, cap: usize) -> Result<ChernCharacter, SchubertError> {
    let parts = (1..=cap)
        .map(|k| c1.pow(k as u32).scale(&factorial(k).inv().expect("k! > 0")))
        .collect();
    ChernCharacter::new(int(1), parts)
}

/// Chern classes of `E ⊗ L` where `c_1(L) = line_c1`.
pub fn twist(c: &ChernVector, line_c1: &ClassPoly) -> Result<ChernVector, SchubertError> {
    let l = line_bundle_character(line_c1, c.cap())?;
    character_to_chern(&character_mul(&chern_to_character(c), &l), c.rank)
}
