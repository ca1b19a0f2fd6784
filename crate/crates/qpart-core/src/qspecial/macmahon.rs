use crate::error::{Error, Result};
use crate::params::QParams;
use crate::scalar::{CompensatedSum, Real};

/// Modified MacMahon function `M(ξ;q) = ∏_{n≥1} (1 − ξ² q^n)^{−n}`.
///
/// Accumulated as a log-sum; the factor loop ends once `n ξ² q^n < tail_tol`.
pub fn macmahon<T: Real>(params: &QParams<T>) -> Result<T> {
    Ok(log_macmahon(params)?.exp())
}

pub fn log_macmahon<T: Real>(params: &QParams<T>) -> Result<T> {
    let x = params.xi() * params.xi();
    if x == T::zero() {
        return Ok(T::zero());
    }
    let mut acc = CompensatedSum::new();
    let mut f = x * params.q();
    for n in 1..=params.max_terms() {
        let nn = T::of_usize(n);
        if nn * f < params.tail_tol() {
            return Ok(acc.value());
        }
        acc.add(-nn * (-f).ln_1p());
        f *= params.q();
    }
    Err(Error::NonConvergence { what: "MacMahon product", terms: params.max_terms() })
}

/// `M(ξ;q)` from its plethystic form `exp(∑_m ξ^{2m} q^m / (m (1 − q^m)²))`.
pub fn macmahon_exponential<T: Real>(params: &QParams<T>) -> Result<T> {
    Ok(log_macmahon_exponential(params)?.exp())
}

/// Log of [`macmahon_exponential`]; converges at rate `ξ²q`, so it stays cheap as `q → 1`.
pub fn log_macmahon_exponential<T: Real>(params: &QParams<T>) -> Result<T> {
    let x = params.xi() * params.xi();
    let q = params.q();
    let mut acc = CompensatedSum::new();
    let mut xm = T::one();
    let mut qm = T::one();
    for m in 1..=params.max_terms() {
        xm *= x;
        qm *= q;
        let d = T::one() - qm;
        let term = xm * qm / (T::of_usize(m) * d * d);
        acc.add(term);
        if term <= params.tail_tol() * acc.value() {
            return Ok(acc.value());
        }
    }
    Err(Error::NonConvergence { what: "MacMahon exponential sum", terms: params.max_terms() })
}

/// Coefficients of `∏_{n≥1}(1 − x^n)^{−n}` up to `x^{order}`: plane-partition counts.
pub fn plane_partition_counts(order: usize) -> Vec<u128> {
    let mut a = vec![0u128; order + 1];
    a[0] = 1;
    for n in 1..=order {
        for _ in 0..n {
            for k in n..=order {
                a[k] += a[k - n];
            }
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_at_zero_xi() {
        let p = QParams::new(0.5f64, 0.0).unwrap();
        assert_eq!(macmahon(&p).unwrap(), 1.0);
    }

    #[test]
    fn plane_partitions_known_prefix() {
        assert_eq!(plane_partition_counts(9), vec![1, 1, 3, 6, 13, 24, 48, 86, 160, 282]);
    }
}
