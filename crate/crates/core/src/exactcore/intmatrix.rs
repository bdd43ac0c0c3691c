//! Integer matrices and lattice invariants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::ExactError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flat_map(|row| row.iter().cloned().map(Into::into)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix { rows: self.cols, cols: self.rows, data }
    }

    fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
        }
        IntMatrix { rows: idx.len(), cols: self.cols, data }
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::from(1));
        }
        let mut a: Vec<Vec<BigInt>> =
            (0..n).map(|i| self.data[i * n..(i + 1) * n].to_vec()).collect();
        let mut sign = 1i32;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    /// gcd of all maximal minors; for a square matrix this is `|det|`.
    pub fn maximal_minors_gcd(&self) -> BigInt {
        let (k, n) = (self.rows, self.cols);
        if k > n {
            return self.transpose().maximal_minors_gcd();
        }
        let t = self.transpose();
        let mut g = BigInt::zero();
        for cols in combinations(n, k) {
            let minor = t.select_rows(&cols).transpose();
            let d = minor.determinant().expect("square by construction");
            g = g.gcd(&d);
        }
        g
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> =
                self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `|det(m)|`.
pub fn lattice_index(m: &IntMatrix) -> Result<BigInt, ExactError> {
    m.determinant().map(|d| d.abs())
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
