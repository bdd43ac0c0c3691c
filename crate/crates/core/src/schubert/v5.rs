//! `c_3(Ω¹_V(2))` for a linear section `V = Gr(2,5) ∩ P^6` of codimension 3.

use super::chern::{
    character_mul, character_to_chern, chern_to_character, class, evaluate, formal_ring,
    line_bundle_character, ChernCharacter, ChernVector, ClassPoly,
};
use super::degree;
use crate::exactcore::{Monomial, PolyRing, Polynomial, Rational};

/// Every intermediate of the computation, so each step can be checked.
#[derive(Clone, Debug)]
pub struct V5Certificate {
    /// `ch(Ω¹_G) = ch(S) ch(Q*)`.
    pub omega_character: ChernCharacter,
    /// `c(Ω¹_G ⊗ O(2σ_1))`.
    pub twisted_classes: ChernVector,
    /// Coefficients of `(1 - t + t^2 - t^3)^3` up to `t^3`.
    pub restriction_series: Vec<Rational>,
    /// Coefficients of `σ_1^3, c_1σ_1^2, c_2σ_1, c_3` in `c_3(Ω¹_V(2))`.
    pub restriction_coefficients: Vec<Rational>,
    /// `c_3(Ω¹_V(2))` as a formal class.
    pub c3_on_v: ClassPoly,
    /// Coefficients of `σ_1^3, σ_1σ_{1,1}, σ_1σ_2, σ_3` in `c3_on_v`.
    pub c3_coefficients: Vec<Rational>,
    /// Degrees on `Gr(2,5)` of `σ_1^6, σ_1^4σ_{1,1}, σ_1^4σ_2, σ_1^3σ_3`.
    pub degree_table: Vec<(String, Rational)>,
    pub value: Rational,
}

pub fn v5_separability_certificate() -> V5Certificate {
    let ch_s = chern_to_character(&ChernVector::from_strs(2, &["-s1", "s11", "0"]).expect("weights"));
    let ch_q = chern_to_character(&ChernVector::from_strs(3, &["-s1", "s2", "-s3"]).expect("weights"));
    let omega_character = character_mul(&ch_s, &ch_q);
    let twist = line_bundle_character(&class("2*s1"), 3).expect("weights");
    let twisted_classes =
        character_to_chern(&character_mul(&omega_character, &twist), 6).expect("rank 6");

    let t_ring = PolyRing::new(&["t"]);
    let series_poly: Polynomial<Rational> =
        t_ring.parse("(1 - t + t^2 - t^3)^3").expect("valid expression");
    let restriction_series: Vec<Rational> =
        (0..=3).map(|k| series_poly.coefficient(&Monomial(vec![k]))).collect();
    let restriction_coefficients: Vec<Rational> = restriction_series.iter().rev().cloned().collect();

    let s1 = class("s1");
    let mut c3_on_v = Polynomial::zero(&formal_ring());
    for (k, coeff) in restriction_series.iter().enumerate() {
        let term = &s1.pow(k as u32) * &twisted_classes.c(3 - k);
        c3_on_v = &c3_on_v + &term.scale(coeff);
    }

    let monomials = ["s1^3", "s1*s11", "s1*s2", "s3"];
    let c3_coefficients = monomials
        .iter()
        .map(|m| {
            let (mono, _) = class(m).terms().next().map(|(m, c)| (m.clone(), c.clone())).expect("monomial");
            c3_on_v.coefficient(&mono)
        })
        .collect();

    let v_class = s1.pow(3);
    let degree_table = monomials
        .iter()
        .map(|m| {
            let product = &class(m) * &v_class;
            let d = degree(&evaluate(&product, 5).expect("Gr(2,5)")).expect("top degree");
            (product.to_string(), d)
        })
        .collect();

    let value = degree(&evaluate(&(&c3_on_v * &v_class), 5).expect("Gr(2,5)")).expect("top degree");
    V5Certificate {
        omega_character,
        twisted_classes,
        restriction_series,
        restriction_coefficients,
        c3_on_v,
        c3_coefficients,
        degree_table,
        value,
    }
}
