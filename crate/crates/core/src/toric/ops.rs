//! Fan constructions: P^1-bundles, ray contraction, small simplicial
//! subdivisions, and the search for a toric morphism to P^1.

use super::geometry::{det3, dot, in_cone, is_pointed, primitive, IVec};
use super::{Cone, Fan, Ray, ToricError, TorusDivisor};

/// Rays `u_ρ - a_ρ e_3`, then `+e_3` and `-e_3`; every base cone is joined
/// first with `+e_3`, then with `-e_3`.
pub fn build_p1_bundle_fan(base: &Fan, a: &TorusDivisor) -> Result<Fan, ToricError> {
    if base.dim() != 2 {
        return Err(ToricError::WrongDimension(2));
    }
    if !base.is_complete() {
        return Err(ToricError::NotComplete);
    }
    let n = base.rays().len();
    if a.0.len() != n {
        return Err(ToricError::DivisorLength { found: a.0.len(), rays: n });
    }
    let mut rays: Vec<Ray> = base
        .rays()
        .iter()
        .zip(&a.0)
        .map(|(r, &ai)| Ray::new(&[r.vector()[0], r.vector()[1], -ai]))
        .collect::<Result<_, _>>()?;
    rays.push(Ray::new(&[0, 0, 1])?);
    rays.push(Ray::new(&[0, 0, -1])?);
    let mut cones = Vec::with_capacity(2 * base.cones().len());
    for top in [n, n + 1] {
        for c in base.cones() {
            let mut idx = c.rays().to_vec();
            idx.push(top);
            cones.push(Cone::new(idx));
        }
    }
    Fan::new(3, rays, cones)
}

/// Remove ray `idx` and replace the cones containing it by the single cone
/// on their remaining rays.
pub fn contract_ray(fan: &Fan, idx: usize) -> Result<Fan, ToricError> {
    let star: Vec<&Cone> = fan.cones().iter().filter(|c| c.contains(idx)).collect();
    let mut link: Vec<usize> = star.iter().flat_map(|c| c.rays().iter().copied()).filter(|&i| i != idx).collect();
    link.sort_unstable();
    link.dedup();
    let link_vecs: Vec<&[i64]> = link.iter().map(|&i| fan.ray(i)).collect();
    let mut with_ray = link_vecs.clone();
    with_ray.push(fan.ray(idx));
    if !is_pointed(&with_ray) {
        let mut all = link.clone();
        all.push(idx);
        all.sort_unstable();
        return Err(ToricError::NotStronglyConvex(all));
    }
    if !in_cone(fan.ray(idx), &link_vecs) {
        return Err(ToricError::NotInStar(idx));
    }
    let reindex = |i: usize| if i > idx { i - 1 } else { i };
    let rays: Vec<Ray> = fan
        .rays()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != idx)
        .map(|(_, r)| r.clone())
        .collect();
    let mut cones: Vec<Cone> = fan
        .cones()
        .iter()
        .filter(|c| !c.contains(idx))
        .map(|c| Cone::new(c.rays().iter().map(|&i| reindex(i)).collect()))
        .collect();
    cones.push(Cone::new(link.iter().map(|&i| reindex(i)).collect()));
    Fan::new(fan.dim(), rays, cones)
}

/// One simplicial subdivision, with the diagonal chosen in each split cone.
#[derive(Clone, Debug)]
pub struct Triangulation {
    /// For each non-simplicial cone, the pair of its rays joined by the new wall.
    pub diagonals: Vec<(usize, usize)>,
    pub fan: Fan,
}

/// The valid diagonals of a 4-ray cone in dimension 3, lexicographically.
fn diagonals(fan: &Fan, c: &Cone) -> Vec<((usize, usize), [Cone; 2])> {
    let r = c.rays();
    let mut out = Vec::new();
    for (p, q) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
        let others: Vec<usize> = (0..4).filter(|&k| k != p && k != q).collect();
        let (a, b) = (r[p], r[q]);
        let (x, y) = (r[others[0]], r[others[1]]);
        let sep = |u: usize, v: usize, s: usize, t: usize| {
            let d1 = det3(fan.ray(u), fan.ray(v), fan.ray(s));
            let d2 = det3(fan.ray(u), fan.ray(v), fan.ray(t));
            (d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)
        };
        if sep(a, b, x, y) && sep(x, y, a, b) {
            out.push(((a, b), [Cone::new(vec![a, b, x]), Cone::new(vec![a, b, y])]));
        }
    }
    out
}

/// All simplicial subdivisions that add no rays. Only cones with at most
/// four rays are handled.
pub fn enumerate_qfactorializations(fan: &Fan) -> Result<Vec<Triangulation>, ToricError> {
    let mut choices: Vec<(usize, Vec<((usize, usize), [Cone; 2])>)> = Vec::new();
    for (ci, c) in fan.cones().iter().enumerate() {
        if fan.is_simplicial_cone(c) {
            continue;
        }
        if c.rays().len() > 4 || fan.dim() != 3 {
            return Err(ToricError::BeyondDeskScale(c.rays().to_vec(), c.rays().len()));
        }
        choices.push((ci, diagonals(fan, c)));
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; choices.len()];
    if choices.iter().any(|(_, d)| d.is_empty()) {
        return Ok(out);
    }
    loop {
        let mut cones: Vec<Cone> = Vec::new();
        let mut diags = Vec::new();
        for (ci, c) in fan.cones().iter().enumerate() {
            match choices.iter().position(|(k, _)| *k == ci) {
                Some(slot) => {
                    let (d, split) = &choices[slot].1[pick[slot]];
                    diags.push(*d);
                    cones.extend(split.iter().cloned());
                }
                None => cones.push(c.clone()),
            }
        }
        out.push(Triangulation { diagonals: diags, fan: Fan::new(fan.dim(), fan.rays().to_vec(), cones)? });
        let mut k = choices.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < choices[k].1.len() {
                break;
            }
            pick[k] = 0;
        }
    }
}

/// [`fibration_to_p1_bounded`] with entries bounded by 3.
pub fn fibration_to_p1(fan: &Fan) -> Option<IVec> {
    fibration_to_p1_bounded(fan, 3)
}

/// First primitive covector `m` (first nonzero entry positive; ordered by max
/// norm, then lexicographically) such that every maximal cone lies on one
/// side of `m = 0`.
pub fn fibration_to_p1_bounded(fan: &Fan, bound: i64) -> Option<IVec> {
    let d = fan.dim();
    let mut cands: Vec<IVec> = Vec::new();
    let mut cur = vec![-bound; d];
    loop {
        if primitive(&cur).as_deref() == Some(cur.as_slice())
            && cur.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
        {
            cands.push(cur.clone());
        }
        let mut i = d;
        loop {
            if i == 0 {
                cands.sort_by_key(|m| (m.iter().map(|x| x.abs()).max(), m.clone()));
                return cands.into_iter().find(|m| defines_fibration(fan, m));
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] <= bound {
                break;
            }
            cur[i] = -bound;
        }
    }
}

pub fn defines_fibration(fan: &Fan, m: &[i64]) -> bool {
    fan.cones().iter().all(|c| {
        let vals: Vec<i64> = c.rays().iter().map(|&i| dot(m, fan.ray(i))).collect();
        vals.iter().all(|&v| v >= 0) || vals.iter().all(|&v| v <= 0)
    })
}
