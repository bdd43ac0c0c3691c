//! Fans in dimension 2 and 3.

pub mod geometry;
pub mod ops;
pub mod paper;
pub mod surface;

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactcore::IntMatrix;
use geometry::{intersection_generators, in_cone, is_face, is_pointed, primitive, rank, IVec};

pub use ops::{
    build_p1_bundle_fan, contract_ray, enumerate_qfactorializations, fibration_to_p1,
    fibration_to_p1_bounded, Triangulation,
};
pub use surface::{blow_up, principal_divisor, surface_intersection, surface_self_intersections};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("ray not primitive: {0:?}")]
    NotPrimitive(IVec),
    #[error("zero ray")]
    ZeroRay,
    #[error("unsupported dimension {0}")]
    BadDimension(usize),
    #[error("ray {index} has length {len}, expected {dim}")]
    RayLength { index: usize, len: usize, dim: usize },
    #[error("cone {cone} refers to missing ray {ray}")]
    MissingRay { cone: usize, ray: usize },
    #[error("ray {0} lies in no maximal cone")]
    UnusedRay(usize),
    #[error("cone {0:?} is not strongly convex")]
    NotStronglyConvex(Vec<usize>),
    #[error("cones {0:?} and {1:?} do not meet in a common face")]
    BadIntersection(Vec<usize>, Vec<usize>),
    #[error("cone {0:?} is not simplicial")]
    NotSimplicial(Vec<usize>),
    #[error("fan is not complete")]
    NotComplete,
    #[error("fan is not smooth")]
    NotSmooth,
    #[error("operation needs a {0}-dimensional fan")]
    WrongDimension(usize),
    #[error("divisor has {found} entries for {rays} rays")]
    DivisorLength { found: usize, rays: usize },
    #[error("self-intersection requested through surface_intersection; use surface_self_intersections")]
    SameDivisor,
    #[error("ray {0} is not in the cone spanned by its star")]
    NotInStar(usize),
    #[error("cone {0:?} has {1} rays: beyond desk scale")]
    BeyondDeskScale(Vec<usize>, usize),
    #[error("fan file: {0}")]
    Parse(String),
}

/// A primitive nonzero integer vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Ray(IVec);

impl Ray {
    /// Rejects zero and non-primitive vectors.
    pub fn new(v: &[i64]) -> Result<Self, ToricError> {
        let p = primitive(v).ok_or(ToricError::ZeroRay)?;
        if p != v {
            return Err(ToricError::NotPrimitive(v.to_vec()));
        }
        Ok(Ray(p))
    }

    /// The primitive vector on the half-line through `v`.
    pub fn primitive_from(v: &[i64]) -> Result<Self, ToricError> {
        primitive(v).map(Ray).ok_or(ToricError::ZeroRay)
    }

    pub fn vector(&self) -> &[i64] {
        &self.0
    }
}

/// Sorted ray indices of a cone.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Cone(Vec<usize>);

impl Cone {
    pub fn new(mut idx: Vec<usize>) -> Self {
        idx.sort_unstable();
        idx.dedup();
        Cone(idx)
    }

    pub fn rays(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }
}

/// Integer coefficient per ray.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TorusDivisor(pub Vec<i64>);

/// A validated fan: rays primitive, cones strongly convex, every ray used,
/// and any two maximal cones meeting in a common face.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fan {
    dim: usize,
    rays: Vec<Ray>,
    cones: Vec<Cone>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FanFile {
    dim: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn new(dim: usize, rays: Vec<Ray>, cones: Vec<Cone>) -> Result<Self, ToricError> {
        if !(2..=3).contains(&dim) {
            return Err(ToricError::BadDimension(dim));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.0.len() != dim {
                return Err(ToricError::RayLength { index: i, len: r.0.len(), dim });
            }
        }
        for (ci, c) in cones.iter().enumerate() {
            if let Some(&bad) = c.0.iter().find(|&&r| r >= rays.len()) {
                return Err(ToricError::MissingRay { cone: ci, ray: bad });
            }
        }
        for i in 0..rays.len() {
            if !cones.iter().any(|c| c.contains(i)) {
                return Err(ToricError::UnusedRay(i));
            }
        }
        let fan = Fan { dim, rays, cones };
        for c in &fan.cones {
            if !is_pointed(&fan.cone_vectors(c)) {
                return Err(ToricError::NotStronglyConvex(c.0.clone()));
            }
        }
        for (i, a) in fan.cones.iter().enumerate() {
            for b in &fan.cones[i + 1..] {
                if !fan.meet_in_face(a, b) {
                    return Err(ToricError::BadIntersection(a.0.clone(), b.0.clone()));
                }
            }
        }
        Ok(fan)
    }

    /// Build from raw vectors; every ray must already be primitive.
    pub fn from_vectors(dim: usize, rays: &[Vec<i64>], cones: &[Vec<usize>]) -> Result<Self, ToricError> {
        let rays = rays.iter().map(|r| Ray::new(r)).collect::<Result<_, _>>()?;
        Self::new(dim, rays, cones.iter().map(|c| Cone::new(c.clone())).collect())
    }

    pub fn from_json(src: &str) -> Result<Self, ToricError> {
        let file: FanFile = serde_json::from_str(src).map_err(|e| ToricError::Parse(e.to_string()))?;
        Self::from_vectors(file.dim, &file.rays, &file.cones)
    }

    pub fn to_json(&self) -> String {
        let file = FanFile {
            dim: self.dim,
            rays: self.rays.iter().map(|r| r.0.clone()).collect(),
            cones: self.cones.iter().map(|c| c.0.clone()).collect(),
        };
        serde_json::to_string_pretty(&file).expect("serializable")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &[i64] {
        &self.rays[i].0
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    /// Index of the cone with exactly these rays.
    pub fn find_cone(&self, idx: &[usize]) -> Option<usize> {
        let c = Cone::new(idx.to_vec());
        self.cones.iter().position(|x| *x == c)
    }

    pub fn cone_vectors(&self, c: &Cone) -> Vec<&[i64]> {
        c.0.iter().map(|&i| self.rays[i].0.as_slice()).collect()
    }

    fn meet_in_face(&self, a: &Cone, b: &Cone) -> bool {
        let va = self.cone_vectors(a);
        let vb = self.cone_vectors(b);
        let common: Vec<usize> = a.0.iter().copied().filter(|i| b.contains(*i)).collect();
        let common_vecs: Vec<&[i64]> = common.iter().map(|&i| self.rays[i].0.as_slice()).collect();
        let local = |c: &Cone| -> Vec<usize> {
            common.iter().map(|i| c.0.iter().position(|x| x == i).expect("common")).collect()
        };
        if !is_face(&va, &local(a), self.dim) || !is_face(&vb, &local(b), self.dim) {
            return false;
        }
        intersection_generators(&va, &vb, self.dim)
            .iter()
            .all(|g| in_cone(g, &common_vecs))
    }

    pub fn is_simplicial_cone(&self, c: &Cone) -> bool {
        rank(&self.cone_vectors(c)) == c.0.len()
    }

    pub fn is_simplicial(&self) -> bool {
        self.cones.iter().all(|c| self.is_simplicial_cone(c))
    }

    /// Smoothness and multiplicity (gcd of maximal minors of the ray matrix).
    pub fn cone_is_smooth(&self, c: &Cone) -> Result<(bool, BigInt), ToricError> {
        if !self.is_simplicial_cone(c) {
            return Err(ToricError::NotSimplicial(c.0.clone()));
        }
        let rows: Vec<Vec<i64>> = c.0.iter().map(|&i| self.rays[i].0.clone()).collect();
        let mult = IntMatrix::from_rows(&rows).maximal_minors_gcd();
        Ok((mult == BigInt::from(1), mult))
    }

    pub fn fan_is_smooth(&self) -> Result<bool, ToricError> {
        for c in &self.cones {
            if !self.cone_is_smooth(c)?.0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every facet of a maximal cone lies in exactly two maximal cones, all
    /// maximal cones are full-dimensional, and the adjacency graph is connected.
    pub fn is_complete(&self) -> bool {
        if self.cones.iter().any(|c| rank(&self.cone_vectors(c)) != self.dim) {
            return false;
        }
        let facets: Vec<Vec<Vec<usize>>> = self
            .cones
            .iter()
            .map(|c| {
                geometry::h_rep(&self.cone_vectors(c), self.dim)
                    .facets
                    .into_iter()
                    .map(|(_, t)| t.into_iter().map(|i| c.0[i]).collect())
                    .collect()
            })
            .collect();
        let n = self.cones.len();
        let mut adj = vec![Vec::new(); n];
        for (i, fs) in facets.iter().enumerate() {
            for f in fs {
                let owners: Vec<usize> =
                    (0..n).filter(|&j| facets[j].iter().any(|g| g == f)).collect();
                if owners.len() != 2 {
                    return false;
                }
                let other = if owners[0] == i { owners[1] } else { owners[0] };
                adj[i].push(other);
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            if seen[i] {
                continue;
            }
            seen[i] = true;
            stack.extend(adj[i].iter().copied());
        }
        n > 0 && seen.into_iter().all(|s| s)
    }

    /// Ray labels `v1, v2, ...` for a cone.
    pub fn cone_label(&self, c: &Cone) -> String {
        let names: Vec<String> = c.0.iter().map(|i| format!("v{}", i + 1)).collect();
        format!("Cone({})", names.join(","))
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fan of dimension {}", self.dim)?;
        for (i, r) in self.rays.iter().enumerate() {
            writeln!(f, "  v{} = {:?}", i + 1, r.0)?;
        }
        for c in &self.cones {
            writeln!(f, "  {}", self.cone_label(c))?;
        }
        Ok(())
    }
}
