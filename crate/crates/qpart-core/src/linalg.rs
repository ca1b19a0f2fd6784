//! Dense LU with partial pivoting on row-major square matrices.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Determinant plus a conditioning hint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LuDeterminant<T> {
    pub value: T,
    /// `min |u_ii| / max |u_ii|`; one for the empty matrix.
    pub min_pivot_ratio: T,
}

/// Determinant of the `n × n` row-major matrix `a` (overwritten).
pub fn lu_determinant<T: Real>(a: &mut [T], n: usize) -> LuDeterminant<T> {
    assert_eq!(a.len(), n * n, "matrix is not {n}x{n}");
    let mut det = T::one();
    let (mut pmin, mut pmax) = (T::infinity(), T::zero());
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[i * n + k].abs().partial_cmp(&a[j * n + k].abs()).unwrap_or(std::cmp::Ordering::Equal))
            .unwrap_or(k);
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            det = -det;
        }
        let piv = a[k * n + k];
        det *= piv;
        pmin = pmin.min(piv.abs());
        pmax = pmax.max(piv.abs());
        if piv == T::zero() {
            return LuDeterminant { value: T::zero(), min_pivot_ratio: T::zero() };
        }
        for i in k + 1..n {
            let f = a[i * n + k] / piv;
            if f != T::zero() {
                for j in k + 1..n {
                    let u = a[k * n + j];
                    a[i * n + j] -= f * u;
                }
            }
            a[i * n + k] = f;
        }
    }
    let ratio = if n == 0 { T::one() } else { pmin / pmax };
    LuDeterminant { value: det, min_pivot_ratio: ratio }
}

/// Solves `A x = b` for a row-major `n × n` matrix.
pub fn lu_solve<T: Real>(mut a: Vec<T>, n: usize, mut b: Vec<T>) -> Result<Vec<T>> {
    assert_eq!(a.len(), n * n);
    assert_eq!(b.len(), n);
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[i * n + k].abs().partial_cmp(&a[j * n + k].abs()).unwrap_or(std::cmp::Ordering::Equal))
            .unwrap_or(k);
        if a[p * n + k] == T::zero() {
            return Err(Error::Singular { what: "linear system", index: k });
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            b.swap(k, p);
        }
        let piv = a[k * n + k];
        for i in k + 1..n {
            let f = a[i * n + k] / piv;
            for j in k + 1..n {
                let u = a[k * n + j];
                a[i * n + j] -= f * u;
            }
            let bk = b[k];
            b[i] -= f * bk;
        }
    }
    for k in (0..n).rev() {
        let mut s = b[k];
        for j in k + 1..n {
            s -= a[k * n + j] * b[j];
        }
        b[k] = s / a[k * n + k];
    }
    Ok(b)
}

/// Builds the row-major matrix `f(i, j)`.
pub fn build<T, F: FnMut(usize, usize) -> T>(n: usize, mut f: F) -> Vec<T> {
    let mut m = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            m.push(f(i, j));
        }
    }
    m
}
