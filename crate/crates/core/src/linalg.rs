//! Small exact linear-algebra kernels over Z and Q.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

type Q = Ratio<i128>;

/// Sign counts of a symmetric bilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

fn to_q(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    m.iter()
        .map(|row| row.iter().map(|&x| Q::from_integer(x as i128)).collect())
        .collect()
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Inertia of a symmetric integer matrix by congruence diagonalization over Q.
pub fn inertia(m: &[Vec<i64>]) -> Inertia {
    let n = m.len();
    let mut a = to_q(m);
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                swap_sym(&mut a, k, i);
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_zero())
            {
                // x_i -> x_i + x_j makes the (i, i) entry 2 a_ij, nonzero
                add_sym(&mut a, i, j);
                swap_sym(&mut a, k, i);
            } else {
                out.zero += n - k;
                return out;
            }
        }
        let pivot = a[k][k];
        if pivot.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        for r in k + 1..n {
            let f = a[r][k] / pivot;
            if f.is_zero() {
                continue;
            }
            for c in k..n {
                let v = a[k][c] * f;
                a[r][c] -= v;
            }
            for c in k..n {
                let v = a[c][k] * f;
                a[c][r] -= v;
            }
        }
    }
    out
}

fn swap_sym(a: &mut [Vec<Q>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Row i += row j and column i += column j.
fn add_sym(a: &mut [Vec<Q>], i: usize, j: usize) {
    let n = a.len();
    for c in 0..n {
        let v = a[j][c];
        a[i][c] += v;
    }
    for r in 0..n {
        let v = a[r][j];
        a[r][i] += v;
    }
}

/// A basis of the right kernel of an integer matrix, as rational vectors in
/// reduced form (one free variable set to 1 per vector).
pub fn kernel_basis(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut a = to_q(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c];
                for j in 0..cols {
                    let v = a[r][j] * f;
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f];
            }
            v
        })
        .collect()
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn primitive_integer(v: &[Q]) -> Vec<i64> {
    let l = v.iter().fold(1i128, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i128> = v.iter().map(|x| (x * Q::from_integer(l)).to_integer()).collect();
    let g = ints.iter().fold(0i128, |acc, x| acc.gcd(x));
    if g == 0 {
        return vec![0; v.len()];
    }
    let sign = match ints.iter().find(|x| **x != 0) {
        Some(x) if *x < 0 => -1,
        _ => 1,
    };
    ints.iter().map(|x| (sign * x / g) as i64).collect()
}

/// Integer matrix-vector product.
pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small_cases() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 2]]), 3);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), 0);
        // A_3 Cartan matrix
        let a3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(determinant(&a3), 4);
    }

    #[test]
    fn inertia_handles_zero_diagonal() {
        let hyperbolic = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(inertia(&hyperbolic), Inertia { positive: 1, negative: 1, zero: 0 });
        let degenerate = vec![vec![-2, 2], vec![2, -2]];
        assert_eq!(inertia(&degenerate), Inertia { positive: 0, negative: 1, zero: 1 });
        let zero = vec![vec![0, 0], vec![0, 0]];
        assert_eq!(inertia(&zero), Inertia { positive: 0, negative: 0, zero: 2 });
    }

    #[test]
    fn kernel_of_affine_a1() {
        let k = kernel_basis(&[vec![-2, 2], vec![2, -2]]);
        assert_eq!(k.len(), 1);
        assert_eq!(primitive_integer(&k[0]), vec![1, 1]);
    }

    #[test]
    fn primitive_normalizes_sign_and_content() {
        let v = vec![Q::new(-1, 2), Q::new(-3, 2), Q::zero()];
        assert_eq!(primitive_integer(&v), vec![1, 3, 0]);
    }
}
