//! Named fans: projective spaces, the scroll surfaces and their P^1-bundles.

use super::{build_p1_bundle_fan, Fan, TorusDivisor};

fn fan(dim: usize, rays: &[&[i64]], cones: &[&[usize]]) -> Fan {
    let rays: Vec<Vec<i64>> = rays.iter().map(|r| r.to_vec()).collect();
    let cones: Vec<Vec<usize>> = cones.iter().map(|c| c.to_vec()).collect();
    Fan::from_vectors(dim, &rays, &cones).expect("valid built-in fan")
}

/// `⟨e1, e2, -e1-e2⟩`.
pub fn p2() -> Fan {
    fan(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[0, 2]])
}

pub fn p3() -> Fan {
    fan(
        3,
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]],
        &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]],
    )
}

/// Hirzebruch surface `F_a`: rays `e1, e2, -e1 + a e2, -e2`.
pub fn hirzebruch(a: i64) -> Fan {
    fan(2, &[&[1, 0], &[0, 1], &[-1, a], &[0, -1]], &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]])
}

/// Base of the scroll `S(1,4)`: `e1, e2, -e1 + 3 e2, -e2`.
pub fn s14_base() -> Fan {
    hirzebruch(3)
}

/// Base of the scroll `S(2,3)`: `e1, e2, -e1 + e2, -e2`.
pub fn s23_base() -> Fan {
    hirzebruch(1)
}

/// P^1-bundle over `S(1,4)` twisted by `D = D_1 + D_4`.
pub fn l014_bundle() -> Fan {
    build_p1_bundle_fan(&s14_base(), &TorusDivisor(vec![1, 0, 0, 1])).expect("complete base")
}

/// P^1-bundle over `S(2,3)` twisted by `D = 2 D_1 + D_4`.
pub fn l023_bundle() -> Fan {
    build_p1_bundle_fan(&s23_base(), &TorusDivisor(vec![2, 0, 0, 1])).expect("complete base")
}
