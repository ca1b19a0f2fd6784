//! Classical special functions used as `q → 1` targets.

use crate::error::{Error, Result};
use crate::scalar::{CompensatedSum, Real};

/// Bessel function of the first kind `J_n(x)` for integer `n`, by its power series.
///
/// Adequate for `|x| ≤ 20`.
pub fn bessel_j<T: Real>(n: i64, x: T) -> Result<T> {
    if x.abs() > T::lit(20.0) {
        return Err(Error::Domain(format!("power series for J_n limited to |x| <= 20, got {x}")));
    }
    let m = n.unsigned_abs() as i32;
    let h = x * T::half();
    let mut term = h.powi(m);
    for k in 1..=m {
        term /= T::of_i64(k as i64);
    }
    let mut acc = CompensatedSum::new();
    acc.add(term);
    let h2 = h * h;
    for k in 1..500 {
        term *= -h2 / (T::of_i64(k) * T::of_i64(k + m as i64));
        acc.add(term);
        if term.abs() <= T::epsilon() * T::lit(1e-3) * acc.value().abs() || term == T::zero() {
            break;
        }
    }
    let v = acc.value();
    Ok(if n < 0 && m % 2 == 1 { -v } else { v })
}
