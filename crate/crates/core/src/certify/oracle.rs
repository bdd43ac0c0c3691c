//! Closed formulas used as independent oracles.

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// Bott's formula for `h⁰(P^N, Ω^p(d))`.
pub fn bott_h0_omega(p: i64, d: i64, n: i64) -> i64 {
    if p == 0 {
        return binomial(n + d, n);
    }
    if d <= p {
        return 0;
    }
    binomial(d + n - p, d) * binomial(d - 1, p)
}

/// Chern numbers `c_k · H^{dim−k}` of a complete intersection, from
/// `c(T) = (1+H)^{N+1} / Π(1 + d_i H)`.
fn ci_chern_numbers(ambient_dim: u32, degrees: &[u32]) -> Vec<i64> {
    let dim = ambient_dim as usize - degrees.len();
    let mut series: Vec<i64> = (0..=dim).map(|k| binomial(i64::from(ambient_dim) + 1, k as i64)).collect();
    for &d in degrees {
        // multiply by 1/(1 + dH) = Σ (−d)^k H^k
        let mut next = vec![0i64; dim + 1];
        for (i, &a) in series.iter().enumerate() {
            let mut pw = 1i64;
            for slot in next.iter_mut().skip(i) {
                *slot += a * pw;
                pw *= -i64::from(d);
            }
        }
        series = next;
    }
    let deg: i64 = degrees.iter().map(|&d| i64::from(d)).product();
    series.into_iter().map(|c| c * deg).collect()
}

/// Topological Euler number `∫ c_top(T)`.
pub fn ci_topological_euler(ambient_dim: u32, degrees: &[u32]) -> i64 {
    *ci_chern_numbers(ambient_dim, degrees).last().expect("nonempty")
}

/// `h^{1,2}` of a complete intersection threefold with `h^{1,1} = 1`, from
/// `e = 2 + 2h^{1,1} − 2h^{3,0} − 2h^{2,1}` and `χ(O) = c_1c_2/24`.
pub fn ci_h12_from_chern(ambient_dim: u32, degrees: &[u32]) -> i64 {
    let dim = ambient_dim as usize - degrees.len();
    assert_eq!(dim, 3, "threefolds only");
    let n = i64::from(ambient_dim) + 1 - degrees.iter().map(|&d| i64::from(d)).sum::<i64>();
    let numbers = ci_chern_numbers(ambient_dim, degrees);
    // c1 = n H, so c1·c2 = n · (c2 · H)
    let chi_o = n * numbers[2] / 24;
    let h30 = 1 - chi_o;
    2 - h30 - numbers[3] / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bott_values() {
        assert_eq!(bott_h0_omega(2, 3, 3), 4);
        assert_eq!(bott_h0_omega(1, 2, 3), 6);
        assert_eq!(bott_h0_omega(0, 2, 3), 10);
        assert_eq!(bott_h0_omega(0, -1, 3), 0);
        assert_eq!(bott_h0_omega(3, 4, 3), 1);
        assert_eq!(bott_h0_omega(1, 1, 2), 0);
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(ci_topological_euler(4, &[3]), -6);
        assert_eq!(ci_topological_euler(4, &[4]), -56);
        assert_eq!(ci_topological_euler(4, &[1]), 4);
        assert_eq!(ci_topological_euler(3, &[4]), 24);
        assert_eq!(ci_h12_from_chern(4, &[3]), 5);
        assert_eq!(ci_h12_from_chern(4, &[4]), 30);
        assert_eq!(ci_h12_from_chern(5, &[2, 3]), 20);
    }
}
