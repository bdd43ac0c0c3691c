//! Intersection numbers on smooth complete toric surfaces.

use super::geometry::{angle_cmp, dot};
use super::{Cone, Fan, Ray, ToricError, TorusDivisor};

/// `div(χ^m) = Σ ⟨m, u_ρ⟩ D_ρ`.
pub fn principal_divisor(fan: &Fan, m: &[i64]) -> TorusDivisor {
    TorusDivisor(fan.rays().iter().map(|r| dot(m, r.vector())).collect())
}

fn check_surface(fan: &Fan) -> Result<(), ToricError> {
    if fan.dim() != 2 {
        return Err(ToricError::WrongDimension(2));
    }
    if !fan.is_complete() {
        return Err(ToricError::NotComplete);
    }
    if !fan.fan_is_smooth()? {
        return Err(ToricError::NotSmooth);
    }
    Ok(())
}

/// Ray indices in counterclockwise order starting from the smallest angle.
pub fn cyclic_order(fan: &Fan) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..fan.rays().len()).collect();
    idx.sort_by(|&a, &b| angle_cmp(fan.ray(a), fan.ray(b)));
    idx
}

/// `D_i^2 = -c` where `u_{i-1} + u_{i+1} = c u_i`, reported in ray order.
pub fn surface_self_intersections(fan: &Fan) -> Result<Vec<i64>, ToricError> {
    check_surface(fan)?;
    let order = cyclic_order(fan);
    let n = order.len();
    let mut out = vec![0; n];
    for k in 0..n {
        let i = order[k];
        let prev = fan.ray(order[(k + n - 1) % n]);
        let next = fan.ray(order[(k + 1) % n]);
        let u = fan.ray(i);
        let sum = [prev[0] + next[0], prev[1] + next[1]];
        let j = if u[0] != 0 { 0 } else { 1 };
        let c = sum[j] / u[j];
        debug_assert_eq!([c * u[0], c * u[1]], sum, "smooth complete fan");
        out[i] = -c;
    }
    Ok(out)
}

/// `D_i · D_j` for `i != j`: 1 if the two rays span a cone of the fan.
pub fn surface_intersection(fan: &Fan, i: usize, j: usize) -> Result<i64, ToricError> {
    if i == j {
        return Err(ToricError::SameDivisor);
    }
    check_surface(fan)?;
    Ok(i64::from(fan.cones().iter().any(|c| c.contains(i) && c.contains(j))))
}

/// Star subdivision of the 2D cone on rays `i, j` by `u_i + u_j`.
pub fn blow_up(fan: &Fan, i: usize, j: usize) -> Result<Fan, ToricError> {
    if fan.dim() != 2 {
        return Err(ToricError::WrongDimension(2));
    }
    let target = fan
        .find_cone(&[i, j])
        .ok_or_else(|| ToricError::BadIntersection(vec![i, j], vec![]))?;
    let new = fan.rays().len();
    let (u, v) = (fan.ray(i), fan.ray(j));
    let mut rays: Vec<Ray> = fan.rays().to_vec();
    rays.push(Ray::primitive_from(&[u[0] + v[0], u[1] + v[1]])?);
    let mut cones: Vec<Cone> = fan.cones().to_vec();
    cones.remove(target);
    cones.push(Cone::new(vec![i, new]));
    cones.push(Cone::new(vec![new, j]));
    Fan::new(2, rays, cones)
}
