//! Exact polyhedral geometry of cones in dimension 2 and 3.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::exactcore::{int, Matrix, Rational};

pub type IVec = Vec<i64>;

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn cross(a: &[i64], b: &[i64]) -> IVec {
    vec![
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn det3(a: &[i64], b: &[i64], c: &[i64]) -> i64 {
    dot(&cross(a, b), c)
}

/// Divide by the gcd of the entries; `None` for the zero vector.
pub fn primitive(v: &[i64]) -> Option<IVec> {
    let g = v.iter().fold(0i64, |g, x| g.gcd(x));
    (g != 0).then(|| v.iter().map(|x| x / g).collect())
}

fn to_matrix(vectors: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(vectors.iter().map(|v| v.iter().map(|&x| int(x)).collect()).collect())
}

pub fn rank(vectors: &[&[i64]]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    to_matrix(vectors).rank()
}

/// Integer basis of the orthogonal complement of the span of `vectors` in `Z^d`.
pub fn orthogonal_complement(vectors: &[&[i64]], d: usize) -> Vec<IVec> {
    if vectors.is_empty() {
        return (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
    }
    to_matrix(vectors).kernel().into_iter().map(|v| clear_denominators(&v)).collect()
}

fn clear_denominators(v: &[Rational]) -> IVec {
    let l = v.iter().fold(num_bigint::BigInt::from(1), |l, x| l.lcm(x.denom()));
    let ints: Vec<i64> = v
        .iter()
        .map(|x| {
            let y = x * Rational::from_integer(l.clone());
            i64::try_from(y.to_integer()).expect("small coordinates")
        })
        .collect();
    primitive(&ints).expect("kernel vectors are nonzero")
}

/// Coefficients `λ` with `Σ λ_i basis_i = v`, if `v` lies in the span of the
/// (linearly independent) `basis`.
fn solve(basis: &[&[i64]], v: &[i64]) -> Option<Vec<Rational>> {
    let d = v.len();
    let k = basis.len();
    let mut rows = Vec::with_capacity(d);
    for i in 0..d {
        let mut row: Vec<Rational> = basis.iter().map(|b| int(b[i])).collect();
        row.push(int(v[i]));
        rows.push(row);
    }
    let (r, pivots) = Matrix::from_rows(rows).rref();
    if pivots.contains(&k) {
        return None;
    }
    let mut out = vec![int(0); k];
    for (row, &p) in pivots.iter().enumerate() {
        out[p] = r.get(row, k).clone();
    }
    Some(out)
}

/// All subsets of `0..n` of size between `lo` and `hi`.
fn subsets(n: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in lo..=hi.min(n) {
        out.extend(crate::exactcore::intmatrix::combinations(n, k));
    }
    out
}

/// Is `v` a non-negative combination of `gens`?
pub fn in_cone(v: &[i64], gens: &[&[i64]]) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    let d = v.len();
    for s in subsets(gens.len(), 1, d) {
        let basis: Vec<&[i64]> = s.iter().map(|&i| gens[i]).collect();
        if rank(&basis) != basis.len() {
            continue;
        }
        if let Some(coeffs) = solve(&basis, v) {
            if coeffs.iter().all(|c| *c >= int(0)) {
                return true;
            }
        }
    }
    false
}

/// A cone is strongly convex iff no minimal linear dependency among its
/// generators has all coefficients of one strict sign.
pub fn is_pointed(gens: &[&[i64]]) -> bool {
    if gens.iter().any(|g| g.iter().all(|&x| x == 0)) {
        return false;
    }
    let d = gens.first().map_or(0, |g| g.len());
    for s in subsets(gens.len(), 2, d + 1) {
        let vs: Vec<&[i64]> = s.iter().map(|&i| gens[i]).collect();
        let m = to_matrix(&vs).transpose();
        let ker = m.kernel();
        if ker.len() != 1 {
            continue;
        }
        let v = &ker[0];
        let zero = int(0);
        if v.iter().all(|c| *c > zero) || v.iter().all(|c| *c < zero) {
            return false;
        }
    }
    true
}

/// Inequality and equality description of a pointed cone.
#[derive(Clone, Debug)]
pub struct HRep {
    /// Normals `w` with `w · x = 0` on the span.
    pub equalities: Vec<IVec>,
    /// Facet normals `n` with `n · x >= 0`, and for each the indices of the
    /// generators on that facet.
    pub facets: Vec<(IVec, Vec<usize>)>,
}

pub fn h_rep(gens: &[&[i64]], d: usize) -> HRep {
    let k = rank(gens);
    let equalities = orthogonal_complement(gens, d);
    let mut pool: Vec<IVec> = gens.iter().map(|g| g.to_vec()).collect();
    pool.extend(equalities.iter().cloned());
    pool.extend((0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()));
    let mut candidates: BTreeSet<IVec> = BTreeSet::new();
    let mut add = |c: IVec| {
        if let Some(p) = primitive(&c) {
            candidates.insert(p.iter().map(|x| -x).collect());
            candidates.insert(p);
        }
    };
    for a in &pool {
        add(a.clone());
        if d == 2 {
            add(vec![-a[1], a[0]]);
        } else {
            for b in &pool {
                add(cross(a, b));
            }
        }
    }
    let mut facets: Vec<(IVec, Vec<usize>)> = Vec::new();
    for n in candidates {
        let values: Vec<i64> = gens.iter().map(|g| dot(&n, g)).collect();
        if values.iter().any(|&v| v < 0) || values.iter().all(|&v| v == 0) {
            continue;
        }
        let tight: Vec<usize> = (0..gens.len()).filter(|&i| values[i] == 0).collect();
        let tight_vecs: Vec<&[i64]> = tight.iter().map(|&i| gens[i]).collect();
        if rank(&tight_vecs) + 1 != k {
            continue;
        }
        if !facets.iter().any(|(_, t)| *t == tight) {
            facets.push((n, tight));
        }
    }
    facets.sort_by(|a, b| a.1.cmp(&b.1));
    HRep { equalities, facets }
}

/// Is the subset `s` (indices into `gens`) the generator set of a face?
pub fn is_face(gens: &[&[i64]], s: &[usize], d: usize) -> bool {
    let h = h_rep(gens, d);
    let mut closure: Vec<usize> = (0..gens.len()).collect();
    for (_, tight) in &h.facets {
        if s.iter().all(|i| tight.contains(i)) {
            closure.retain(|i| tight.contains(i));
        }
    }
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    closure == sorted
}

/// Candidate extreme rays of `cone(a) ∩ cone(b)`, filtered to lie in both.
pub fn intersection_generators(a: &[&[i64]], b: &[&[i64]], d: usize) -> Vec<IVec> {
    let mut cands: Vec<IVec> = Vec::new();
    cands.extend(a.iter().map(|g| g.to_vec()));
    cands.extend(b.iter().map(|g| g.to_vec()));
    if d == 3 {
        let normals = |g: &[&[i64]]| {
            let h = h_rep(g, d);
            let mut ns: Vec<IVec> = h.facets.into_iter().map(|(n, _)| n).collect();
            ns.extend(h.equalities);
            ns
        };
        let (na, nb) = (normals(a), normals(b));
        for x in &na {
            for y in &nb {
                let c = cross(x, y);
                if c.iter().any(|&v| v != 0) {
                    cands.push(c.iter().map(|v| -v).collect());
                    cands.push(c);
                }
            }
        }
    }
    cands.retain(|c| in_cone(c, a) && in_cone(c, b));
    cands
}

/// Exact comparison of 2D vectors by angle in `[0, 2π)`.
pub fn angle_cmp(a: &[i64], b: &[i64]) -> std::cmp::Ordering {
    let half = |v: &[i64]| if v[1] > 0 || (v[1] == 0 && v[0] > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&(a[0] * b[1] - a[1] * b[0])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pointedness() {
        let e = [vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let r: Vec<&[i64]> = e.iter().map(|v| v.as_slice()).collect();
        assert!(is_pointed(&r));
        let line = [vec![0, 0, 1], vec![0, 0, -1]];
        let r: Vec<&[i64]> = line.iter().map(|v| v.as_slice()).collect();
        assert!(!is_pointed(&r));
    }

    #[test]
    fn membership() {
        let g = [vec![1, 0], vec![1, 2]];
        let r: Vec<&[i64]> = g.iter().map(|v| v.as_slice()).collect();
        assert!(in_cone(&[2, 1], &r));
        assert!(!in_cone(&[0, 1], &r));
    }

    #[test]
    fn square_cone_faces() {
        let g = [vec![1, 0, 1], vec![0, 1, 1], vec![-1, 0, 1], vec![0, -1, 1]];
        let r: Vec<&[i64]> = g.iter().map(|v| v.as_slice()).collect();
        assert_eq!(h_rep(&r, 3).facets.len(), 4);
        assert!(is_face(&r, &[0, 1], 3));
        assert!(!is_face(&r, &[0, 2], 3));
        assert!(is_face(&r, &[], 3));
    }

    #[test]
    fn angular_order() {
        let mut v = vec![vec![0, -1], vec![-1, 3], vec![1, 0], vec![0, 1]];
        v.sort_by(|a, b| angle_cmp(a, b));
        assert_eq!(v, vec![vec![1, 0], vec![0, 1], vec![-1, 3], vec![0, -1]]);
    }
}
