//! Plane conics over a field of characteristic two, and the search for a
//! smooth member in a linear system of conics of dimension at least four.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::exactcore::{FiniteField, Field, Matrix, Monomial, PolyRing, Polynomial};

use super::VeroneseError;

const XX: usize = 0;
const YY: usize = 1;
const ZZ: usize = 2;
const YZ: usize = 3;
const ZX: usize = 4;
const XY: usize = 5;

const EXPONENTS: [[u32; 3]; 6] = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [0, 1, 1], [1, 0, 1], [1, 1, 0]];

fn plane_ring() -> PolyRing {
    PolyRing::new(&["x", "y", "z"])
}

/// `a x² + b y² + c z² + d yz + e zx + f xy`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticForm3<F: Field> {
    coeffs: [F; 6],
}

impl<F: Field> QuadraticForm3<F> {
    /// Coefficients in the order `x², y², z², yz, zx, xy`.
    pub fn new(coeffs: [F; 6]) -> Self {
        QuadraticForm3 { coeffs }
    }

    pub fn from_i64(c: [i64; 6]) -> Self {
        Self::new(c.map(F::from_i64))
    }

    pub fn zero() -> Self {
        Self::new(std::array::from_fn(|_| F::zero()))
    }

    /// The monomial with index `i` in the coefficient order.
    pub fn monomial(i: usize) -> Self {
        let mut q = Self::zero();
        q.coeffs[i] = F::one();
        q
    }

    pub fn coeffs(&self) -> &[F; 6] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    pub fn eval(&self, p: &[F; 3]) -> F {
        let [x, y, z] = p.clone();
        let c = &self.coeffs;
        c[XX].clone() * x.clone() * x.clone()
            + c[YY].clone() * y.clone() * y.clone()
            + c[ZZ].clone() * z.clone() * z.clone()
            + c[YZ].clone() * y.clone() * z.clone()
            + c[ZX].clone() * z * x.clone()
            + c[XY].clone() * x * y
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(std::array::from_fn(|i| self.coeffs[i].clone() + other.coeffs[i].clone()))
    }

    pub fn scale(&self, k: &F) -> Self {
        Self::new(std::array::from_fn(|i| self.coeffs[i].clone() * k.clone()))
    }

    pub fn to_polynomial(&self) -> Polynomial<F> {
        let r = plane_ring();
        Polynomial::from_terms(
            &r,
            EXPONENTS.iter().zip(&self.coeffs).map(|(e, c)| (Monomial(e.to_vec()), c.clone())),
        )
    }

    /// Reads the coefficients of a quadratic form in `x, y, z`.
    pub fn from_polynomial(p: &Polynomial<F>) -> Self {
        Self::new(std::array::from_fn(|i| p.coefficient(&Monomial(EXPONENTS[i].to_vec()))))
    }

    /// `q(x, y, z)` with each variable replaced by the given linear form.
    pub fn substitute(&self, images: &[Polynomial<F>; 3]) -> Self {
        Self::from_polynomial(&self.to_polynomial().substitute(images).expect("three images in one ring"))
    }

    /// Rows `∂q/∂x, ∂q/∂y, ∂q/∂z` as linear forms.
    pub fn gradient_matrix(&self) -> Matrix<F> {
        let c = &self.coeffs;
        let two = F::from_i64(2);
        Matrix::from_rows(vec![
            vec![two.clone() * c[XX].clone(), c[XY].clone(), c[ZX].clone()],
            vec![c[XY].clone(), two.clone() * c[YY].clone(), c[YZ].clone()],
            vec![c[ZX].clone(), c[YZ].clone(), two * c[ZZ].clone()],
        ])
    }
}

impl<F: Field> fmt::Display for QuadraticForm3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// A conic is smooth iff `q` does not vanish at any common zero of its
/// partials. The partials have a kernel of dimension 0, 1 or 3 in
/// characteristic two; on a kernel of dimension at least two `q` restricts to
/// a square of a linear form and has a zero.
pub fn is_smooth_conic<F: Field>(q: &QuadraticForm3<F>) -> Result<bool, VeroneseError> {
    if q.is_zero() {
        return Err(VeroneseError::ZeroForm);
    }
    let kernel = q.gradient_matrix().kernel();
    Ok(match kernel.len() {
        0 => true,
        1 => {
            let v = &kernel[0];
            !q.eval(&[v[0].clone(), v[1].clone(), v[2].clone()]).is_zero()
        }
        _ => false,
    })
}

/// A linear system of conics given by a linearly independent basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicSubspace<F: Field> {
    basis: Vec<QuadraticForm3<F>>,
}

fn coordinate_matrix<F: Field>(forms: &[QuadraticForm3<F>]) -> Matrix<F> {
    Matrix::from_rows(forms.iter().map(|q| q.coeffs().to_vec()).collect())
}

impl<F: Field> ConicSubspace<F> {
    pub fn new(basis: Vec<QuadraticForm3<F>>) -> Result<Self, VeroneseError> {
        if basis.is_empty() || coordinate_matrix(&basis).rank() != basis.len() {
            return Err(VeroneseError::DependentBasis);
        }
        Ok(ConicSubspace { basis })
    }

    pub fn basis(&self) -> &[QuadraticForm3<F>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn element(&self, coefficients: &[F]) -> QuadraticForm3<F> {
        self.basis
            .iter()
            .zip(coefficients)
            .fold(QuadraticForm3::zero(), |acc, (b, c)| acc.add(&b.scale(c)))
    }

    pub fn contains(&self, q: &QuadraticForm3<F>) -> bool {
        let mut forms = self.basis.clone();
        forms.push(q.clone());
        coordinate_matrix(&forms).rank() == self.basis.len()
    }
}

/// Which step of the case analysis produced the conic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConicPath {
    /// The normalized `xy`-form already has a `z²` term.
    Direct,
    CaseI,
    CaseII,
    CaseIII,
    CaseIV,
    /// Enumeration of the whole subspace.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothConic<F: Field> {
    pub form: QuadraticForm3<F>,
    /// Coordinates of `form` in the subspace basis.
    pub coefficients: Vec<F>,
    pub path: ConicPath,
}

/// An element of the subspace in the current coordinates, remembering its
/// coefficients in the original basis.
#[derive(Clone, Debug)]
struct Tracked<F: Field> {
    form: QuadraticForm3<F>,
    combo: Vec<F>,
}

impl<F: Field> Tracked<F> {
    fn c(&self, i: usize) -> F {
        self.form.coeffs[i].clone()
    }

    fn add(&self, other: &Self) -> Self {
        Tracked {
            form: self.form.add(&other.form),
            combo: self.combo.iter().zip(&other.combo).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    fn scale(&self, k: &F) -> Self {
        Tracked { form: self.form.scale(k), combo: self.combo.iter().map(|a| a.clone() * k.clone()).collect() }
    }

    /// `self − self[i] / pivot[i] · pivot`.
    fn eliminate(&self, i: usize, pivot: &Self) -> Self {
        let k = self.c(i).div(&pivot.c(i)).expect("pivot coefficient is nonzero");
        self.add(&pivot.scale(&-k))
    }

    fn normalize(&self, i: usize) -> Self {
        self.scale(&self.c(i).inv().expect("normalizing coefficient is nonzero"))
    }
}

/// The case analysis in the current coordinates. Every returned candidate is
/// checked again in the original coordinates by the caller.
struct Search<F: Field> {
    els: Vec<Tracked<F>>,
}

impl<F: Field> Search<F> {
    fn change(&mut self, images: [&str; 3], k: &F) {
        let r = plane_ring();
        let scalar = Polynomial::constant(&r, k.clone());
        let lin = |s: &str| -> Polynomial<F> {
            let (head, tail) = s.split_once('+').map_or((s, None), |(h, t)| (h, Some(t)));
            let mut p = r.var(head);
            if let Some(t) = tail {
                p = &p + &(&scalar * &r.var::<F>(t));
            }
            p
        };
        let imgs = images.map(lin);
        for e in &mut self.els {
            e.form = e.form.substitute(&imgs);
        }
    }

    fn smooth(t: &Tracked<F>) -> bool {
        !t.form.is_zero() && is_smooth_conic(&t.form).unwrap_or(false)
    }

    fn express(&self, target: &QuadraticForm3<F>) -> Option<Vec<F>> {
        let n = self.els.len();
        let mut rows = Vec::with_capacity(6);
        for i in 0..6 {
            let mut row: Vec<F> = self.els.iter().map(|e| e.c(i)).collect();
            row.push(target.coeffs[i].clone());
            rows.push(row);
        }
        let (r, pivots) = Matrix::from_rows(rows).rref();
        if pivots.contains(&n) {
            return None;
        }
        let mut out = vec![F::zero(); n];
        for (row, &p) in pivots.iter().enumerate() {
            out[p] = r.get(row, n).clone();
        }
        let mut combo = vec![F::zero(); n];
        for (e, c) in self.els.iter().zip(&out) {
            for (acc, x) in combo.iter_mut().zip(&e.combo) {
                *acc = acc.clone() + c.clone() * x.clone();
            }
        }
        Some(combo)
    }

    fn run(mut self) -> Option<(Vec<F>, ConicPath)> {
        let one = F::one();
        let minus = |k: F| -k;
        // Bring some cross term to xy.
        let (idx, k) = self
            .els
            .iter()
            .enumerate()
            .find_map(|(i, e)| [XY, ZX, YZ].into_iter().find(|&k| !e.c(k).is_zero()).map(|k| (i, k)))?;
        match k {
            ZX => self.change(["x", "z", "y"], &one),
            YZ => self.change(["z", "y", "x"], &one),
            _ => {}
        }
        let mut f = self.els[idx].normalize(XY);
        // xy + αyz + βzx = (x + αz)(y + βz) − αβz².
        let (alpha, beta) = (f.c(YZ), f.c(ZX));
        self.change(["x+z", "y", "z"], &minus(alpha.clone()));
        self.change(["x", "y+z", "z"], &minus(beta.clone()));
        f = self.refresh(&f);
        if !f.c(ZZ).is_zero() && Self::smooth(&f) {
            return Some((f.combo, ConicPath::Direct));
        }

        let reduced: Vec<Tracked<F>> = self.els.iter().map(|e| e.eliminate(XY, &f)).collect();
        let Some(gi) = reduced.iter().position(|e| !e.c(YZ).is_zero() || !e.c(ZX).is_zero()) else {
            // (I): V = <x², y², z², f>.
            let target = QuadraticForm3::monomial(XY).add(&QuadraticForm3::monomial(ZZ));
            return self.express(&target).map(|c| (c, ConicPath::CaseI));
        };

        // (II)
        let mut g = reduced[gi].clone();
        if g.c(YZ).is_zero() {
            self.change(["y", "x", "z"], &one);
            f = self.refresh(&f);
            g = self.refresh(&g);
        }
        g = g.normalize(YZ);
        let beta = g.c(ZX);
        if !beta.is_zero() {
            // yz + βzx = z(y + βx)
            self.change(["x", "y+x", "z"], &minus(beta));
            f = self.refresh(&f).normalize(XY);
            g = self.refresh(&g);
        }
        g = g.eliminate(XY, &f);
        if !g.c(XX).is_zero() && Self::smooth(&g) {
            return Some((g.combo, ConicPath::CaseII));
        }

        let reduce_fg = |e: &Tracked<F>| {
            let e = e.eliminate(XY, &f);
            e.eliminate(YZ, &g)
        };
        let reduced: Vec<Tracked<F>> = self.els.iter().map(reduce_fg).collect();
        if let Some(h) = reduced.iter().find(|e| !e.c(ZX).is_zero()) {
            // (III)
            let h = h.normalize(ZX);
            if Self::smooth(&h) {
                return Some((h.combo, ConicPath::CaseIII));
            }
            let phi = reduced.iter().map(|e| e.eliminate(ZX, &h)).find(|e| !e.form.is_zero())?;
            // f + φ is smooth iff C ≠ 0, g + φ iff A ≠ 0, h + φ iff B + b'' ≠ 0.
            return [&f, &g, &h]
                .into_iter()
                .map(|base| base.add(&phi))
                .find(Self::smooth)
                .map(|t| (t.combo, ConicPath::CaseIII));
        }

        // (IV): no element has a zx term.
        let h = reduced.iter().find(|e| !e.form.is_zero())?.clone();
        if !h.c(ZZ).is_zero() {
            let t = f.add(&h);
            return Self::smooth(&t).then(|| (t.combo, ConicPath::CaseIV));
        }
        if !h.c(XX).is_zero() {
            let t = g.add(&h);
            return Self::smooth(&t).then(|| (t.combo, ConicPath::CaseIV));
        }
        let phi = reduced.iter().map(|e| e.eliminate(YY, &h)).find(|e| !e.form.is_zero())?;
        let t = if !phi.c(ZZ).is_zero() { f.add(&phi) } else { g.add(&phi) };
        Self::smooth(&t).then(|| (t.combo, ConicPath::CaseIV))
    }

    /// Re-read a tracked element from the current basis after a coordinate
    /// change.
    fn refresh(&self, t: &Tracked<F>) -> Tracked<F> {
        let mut form = QuadraticForm3::zero();
        for (e, c) in self.els.iter().zip(&t.combo) {
            form = form.add(&e.form.scale(c));
        }
        Tracked { form, combo: t.combo.clone() }
    }
}

fn check_input<F: Field>(v: &ConicSubspace<F>) -> Result<(), VeroneseError> {
    if F::CHARACTERISTIC != 2 {
        return Err(VeroneseError::NotCharacteristicTwo(F::CHARACTERISTIC));
    }
    if v.dim() < 4 {
        return Err(VeroneseError::DimensionTooSmall(v.dim()));
    }
    Ok(())
}

/// A smooth conic in `v`, following the normalization and the cases (I)–(IV);
/// falls back to [`exhaustive_smooth_conic`] if a step does not produce one.
pub fn find_smooth_conic<F: FiniteField>(v: &ConicSubspace<F>) -> Result<Option<SmoothConic<F>>, VeroneseError> {
    check_input(v)?;
    let n = v.dim();
    let els = v
        .basis()
        .iter()
        .enumerate()
        .map(|(i, b)| Tracked {
            form: b.clone(),
            combo: (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect(),
        })
        .collect();
    if let Some((coefficients, path)) = (Search { els }).run() {
        let form = v.element(&coefficients);
        if !form.is_zero() && is_smooth_conic(&form)? {
            return Ok(Some(SmoothConic { form, coefficients, path }));
        }
    }
    exhaustive_smooth_conic(v)
}

/// First smooth member of `v` in lexicographic order of coefficients.
pub fn exhaustive_smooth_conic<F: FiniteField>(
    v: &ConicSubspace<F>,
) -> Result<Option<SmoothConic<F>>, VeroneseError> {
    check_input(v)?;
    let elements = F::elements();
    let n = v.dim();
    let mut idx = vec![0usize; n];
    loop {
        let coefficients: Vec<F> = idx.iter().map(|&i| elements[i].clone()).collect();
        let form = v.element(&coefficients);
        if !form.is_zero() && is_smooth_conic(&form)? {
            return Ok(Some(SmoothConic { form, coefficients, path: ConicPath::Exhaustive }));
        }
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < elements.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// A uniformly random subspace of the given dimension.
pub fn random_subspace<F: FiniteField, R: Rng>(rng: &mut R, dim: usize) -> ConicSubspace<F> {
    let elements = F::elements();
    loop {
        let basis: Vec<QuadraticForm3<F>> = (0..dim)
            .map(|_| {
                QuadraticForm3::new(std::array::from_fn(|_| elements.choose(rng).expect("nonempty field").clone()))
            })
            .collect();
        if let Ok(v) = ConicSubspace::new(basis) {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{F2, F4};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q2(c: [i64; 6]) -> QuadraticForm3<F2> {
        QuadraticForm3::from_i64(c)
    }

    /// Singular points of a characteristic-two conic are rational, so a
    /// point search over the field decides smoothness.
    fn point_oracle<F: FiniteField>(q: &QuadraticForm3<F>) -> bool {
        let el = F::elements();
        let grad = q.gradient_matrix();
        for a in &el {
            for b in &el {
                for c in &el {
                    let p = [a.clone(), b.clone(), c.clone()];
                    if p.iter().all(Field::is_zero) {
                        continue;
                    }
                    if q.eval(&p).is_zero() && grad.mul_vec(&p).iter().all(Field::is_zero) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn oracle_exists<F: FiniteField>(v: &ConicSubspace<F>) -> bool {
        let el = F::elements();
        let n = v.dim();
        let total = el.len().pow(n as u32);
        (1..total).any(|mut k| {
            let coeffs: Vec<F> = (0..n)
                .map(|_| {
                    let c = el[k % el.len()].clone();
                    k /= el.len();
                    c
                })
                .collect();
            let q = v.element(&coeffs);
            !q.is_zero() && point_oracle(&q)
        })
    }

    #[test]
    fn smoothness_examples() {
        assert!(is_smooth_conic(&q2([0, 0, 1, 0, 0, 1])).unwrap());
        assert!(!is_smooth_conic(&q2([1, 0, 0, 0, 0, 0])).unwrap());
        assert!(!is_smooth_conic(&q2([0, 0, 0, 0, 0, 1])).unwrap());
        assert_eq!(is_smooth_conic(&q2([0; 6])).unwrap_err(), VeroneseError::ZeroForm);
    }

    #[test]
    fn smoothness_agrees_with_point_search() {
        for bits in 1..64u32 {
            let q = q2(std::array::from_fn(|i| i64::from((bits >> i) & 1)));
            assert_eq!(is_smooth_conic(&q).unwrap(), point_oracle(&q), "{q}");
        }
    }

    #[test]
    fn rational_conics() {
        use crate::exactcore::Rational;
        let q = QuadraticForm3::<Rational>::from_i64([1, 1, -1, 0, 0, 0]);
        assert!(is_smooth_conic(&q).unwrap());
        let q = QuadraticForm3::<Rational>::from_i64([1, -1, 0, 0, 0, 0]);
        assert!(!is_smooth_conic(&q).unwrap());
    }

    #[test]
    fn diagonal_plus_xy() {
        let v = ConicSubspace::new(vec![
            q2([1, 0, 0, 0, 0, 0]),
            q2([0, 1, 0, 0, 0, 0]),
            q2([0, 0, 1, 0, 0, 0]),
            q2([0, 0, 1, 0, 0, 1]),
        ])
        .unwrap();
        let c = find_smooth_conic(&v).unwrap().unwrap();
        assert!(v.contains(&c.form));
        assert!(is_smooth_conic(&c.form).unwrap());
        let v = ConicSubspace::new(vec![
            q2([1, 0, 0, 0, 0, 0]),
            q2([0, 1, 0, 0, 0, 0]),
            q2([0, 0, 1, 0, 0, 0]),
            q2([0, 0, 0, 0, 0, 1]),
        ])
        .unwrap();
        let c = find_smooth_conic(&v).unwrap().unwrap();
        assert_eq!(c.path, ConicPath::CaseI);
        assert_eq!(c.form, q2([0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn small_or_odd_inputs_are_rejected() {
        let v = ConicSubspace::new(vec![q2([1, 0, 0, 0, 0, 0])]).unwrap();
        assert_eq!(find_smooth_conic(&v).unwrap_err(), VeroneseError::DimensionTooSmall(1));
        assert!(ConicSubspace::new(vec![q2([1, 0, 0, 0, 0, 0]), q2([1, 0, 0, 0, 0, 0])]).is_err());
    }

    fn agreement<F: FiniteField>(seed: u64, trials: usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let v = random_subspace::<F, _>(&mut rng, 4);
            let found = find_smooth_conic(&v).unwrap();
            assert_eq!(found.is_some(), oracle_exists(&v), "{v:?}");
            if let Some(c) = found {
                assert!(v.contains(&c.form) && is_smooth_conic(&c.form).unwrap());
                assert_eq!(v.element(&c.coefficients), c.form);
                assert_ne!(c.path, ConicPath::Exhaustive);
            }
        }
    }

    #[test]
    fn agrees_with_oracle_over_f2() {
        agreement::<F2>(1, 100);
    }

    #[test]
    fn agrees_with_oracle_over_f4() {
        agreement::<F4>(2, 30);
    }
}
