//! Small dense exact linear algebra on row-major `Vec<Vec<_>>` matrices.

use crate::scalar::Scalar;

pub type Mat<T> = Vec<Vec<T>>;

pub fn to_scalar<T: Scalar>(m: &[Vec<i64>]) -> Mat<T> {
    m.iter().map(|r| r.iter().map(|&x| T::from_int(x)).collect()).collect()
}

pub fn identity_i64(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Mat<T> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Mat<T> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![T::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] = out[i][j].clone() + a[i][t].clone() * b[t][j].clone();
            }
        }
    }
    out
}

pub fn mat_vec<T: Scalar>(a: &[Vec<T>], v: &[T]) -> Vec<T> {
    a.iter().map(|r| dot(r, v)).collect()
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn mat_mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for t in 0..k {
            let x = a[i][t];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += x * b[t][j];
            }
        }
    }
    out
}

pub fn mat_vec_i64(a: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    a.iter().map(|r| dot_i64(r, v)).collect()
}

pub fn dot_i64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `v^T A w` in integers.
pub fn quad_i64(a: &[Vec<i64>], v: &[i64], w: &[i64]) -> i64 {
    dot_i64(v, &mat_vec_i64(a, w))
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn inverse<T: Scalar>(m: &[Vec<T>]) -> Option<Mat<T>> {
    let n = m.len();
    let mut a: Mat<T> = m.to_vec();
    let mut inv: Mat<T> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = a[col][j].clone() / p.clone();
            inv[col][j] = inv[col][j].clone() / p.clone();
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                a[r][j] = a[r][j].clone() - f.clone() * a[col][j].clone();
                inv[r][j] = inv[r][j].clone() - f.clone() * inv[col][j].clone();
            }
        }
    }
    Some(inv)
}

/// Converts an exact matrix with integral entries to `i64`.
pub fn to_i64<T: Scalar>(m: &[Vec<T>]) -> Option<Vec<Vec<i64>>> {
    m.iter()
        .map(|r| r.iter().map(|x| x.to_i64_exact()).collect::<Option<Vec<_>>>())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn inverse_of_cartan_a2() {
        let a = to_scalar::<BigRational>(&[vec![2, -1], vec![-1, 2]]);
        let inv = inverse(&a).unwrap();
        let id = mat_mul(&a, &inv);
        assert_eq!(id, to_scalar(&identity_i64(2)));
    }

    #[test]
    fn singular_has_no_inverse() {
        let a = to_scalar::<BigRational>(&[vec![2, -2], vec![-2, 2]]);
        assert!(inverse(&a).is_none());
    }
}
