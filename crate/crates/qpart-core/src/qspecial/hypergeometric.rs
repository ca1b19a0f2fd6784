use crate::error::{Error, Result};
use crate::params::Truncation;
use crate::scalar::{CompensatedSum, Real};

/// Parameters of `_rφ_s(a_1..a_r; b_1..b_s; q, x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeometricSpec<T> {
    pub upper: Vec<T>,
    pub lower: Vec<T>,
    pub q: T,
    pub x: T,
}

impl<T: Real> HypergeometricSpec<T> {
    pub fn new(upper: Vec<T>, lower: Vec<T>, q: T, x: T) -> Self {
        Self { upper, lower, q, x }
    }

    /// Rejects lower parameters `b = q^{−m}` that zero a denominator.
    pub fn validate(&self, max_terms: usize) -> Result<()> {
        if self.q.abs() >= T::one() {
            return Err(Error::InvalidParameter(format!("|q| must be < 1, got {}", self.q)));
        }
        for &b in &self.lower {
            let mut f = b;
            for m in 0..=max_terms {
                if f.abs() < T::half() {
                    break;
                }
                if (T::one() - f).abs() <= T::epsilon() * T::lit(8.0) {
                    return Err(Error::InvalidParameter(format!("lower parameter {b} equals q^-{m}")));
                }
                f *= self.q;
            }
        }
        Ok(())
    }

    /// `1 + s − r`, the power of `(−1)^n q^{C(n,2)}` in each term.
    pub fn balance(&self) -> i32 {
        1 + self.lower.len() as i32 - self.upper.len() as i32
    }
}

/// Sums `_rφ_s` term by term.
///
/// Stops after two consecutive terms fall below `tail_tol` relative to the
/// running sum while the term ratio is contracting.
pub fn basic_hypergeometric<T: Real>(spec: &HypergeometricSpec<T>, tr: &Truncation<T>) -> Result<T> {
    spec.validate(tr.max_terms)?;
    let q = spec.q;
    let e = spec.balance();
    let sign = if e % 2 == 0 { T::one() } else { -T::one() };
    let mut term = T::one();
    let mut acc = CompensatedSum::new();
    acc.add(term);
    let mut qn = T::one();
    let mut small = 0;
    for _ in 0..tr.max_terms {
        let mut ratio = spec.x;
        for &a in &spec.upper {
            ratio *= T::one() - a * qn;
        }
        for &b in &spec.lower {
            ratio /= T::one() - b * qn;
        }
        ratio /= T::one() - qn * q;
        ratio *= sign * qn.powi(e);
        term *= ratio;
        acc.add(term);
        if term == T::zero() {
            return Ok(acc.value());
        }
        if term.abs() <= tr.tail_tol * acc.value().abs() && ratio.abs() < T::one() {
            small += 1;
            if small >= 2 {
                return Ok(acc.value());
            }
        } else {
            small = 0;
        }
        qn *= q;
    }
    Err(Error::NonConvergence { what: "basic hypergeometric series", terms: tr.max_terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_series_at_zero_argument_is_one() {
        let spec = HypergeometricSpec::new(vec![], vec![], 0.5f64, 0.0);
        assert_eq!(basic_hypergeometric(&spec, &Truncation::default()).unwrap(), 1.0);
    }

    #[test]
    fn q_binomial_theorem() {
        // 1φ0(a;−;q,x) = (ax;q)_∞/(x;q)_∞
        use crate::qspecial::{q_pochhammer, Order};
        let tr = Truncation::default();
        let (a, q, x) = (0.3f64, 0.6, 0.45);
        let spec = HypergeometricSpec::new(vec![a], vec![], q, x);
        let lhs = basic_hypergeometric(&spec, &tr).unwrap();
        let rhs = q_pochhammer(a * x, q, Order::Infinite, &tr).unwrap()
            / q_pochhammer(x, q, Order::Infinite, &tr).unwrap();
        assert!((lhs - rhs).abs() < 1e-14 * rhs);
    }

    #[test]
    fn rejects_denominator_zero() {
        let spec = HypergeometricSpec::new(vec![], vec![4.0f64], 0.5, 0.1);
        assert!(spec.validate(100).is_err());
    }
}
