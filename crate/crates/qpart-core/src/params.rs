use crate::error::{Error, Result};
use crate::scalar::Real;

pub const DEFAULT_TAIL_TOL: f64 = 1e-16;
pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// Series truncation controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation<T> {
    pub tail_tol: T,
    pub max_terms: usize,
}

impl<T: Real> Default for Truncation<T> {
    fn default() -> Self {
        Self { tail_tol: T::lit(DEFAULT_TAIL_TOL), max_terms: DEFAULT_MAX_TERMS }
    }
}

impl<T: Real> Truncation<T> {
    pub fn new(tail_tol: T, max_terms: usize) -> Result<Self> {
        if !(tail_tol > T::zero()) || !tail_tol.is_finite() {
            return Err(Error::InvalidParameter(format!("tail_tol must be positive, got {tail_tol}")));
        }
        if max_terms == 0 {
            return Err(Error::InvalidParameter("max_terms must be at least 1".into()));
        }
        Ok(Self { tail_tol, max_terms })
    }
}

/// The deformation pair `(q, ξ)` together with truncation controls.
///
/// Invariant: `0 ≤ q < 1`, `0 ≤ ξ < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QParams<T> {
    q: T,
    xi: T,
    trunc: Truncation<T>,
}

impl<T: Real> QParams<T> {
    pub fn new(q: T, xi: T) -> Result<Self> {
        Self::with_truncation(q, xi, Truncation::default())
    }

    pub fn with_truncation(q: T, xi: T, trunc: Truncation<T>) -> Result<Self> {
        let unit = |v: T| v >= T::zero() && v < T::one();
        if !unit(q) {
            return Err(Error::InvalidParameter(format!("q must lie in [0,1), got {q}")));
        }
        if !unit(xi) {
            return Err(Error::InvalidParameter(format!("xi must lie in [0,1), got {xi}")));
        }
        Truncation::new(trunc.tail_tol, trunc.max_terms)?;
        Ok(Self { q, xi, trunc })
    }

    #[inline]
    pub fn q(&self) -> T {
        self.q
    }

    #[inline]
    pub fn xi(&self) -> T {
        self.xi
    }

    #[inline]
    pub fn tail_tol(&self) -> T {
        self.trunc.tail_tol
    }

    #[inline]
    pub fn max_terms(&self) -> usize {
        self.trunc.max_terms
    }

    #[inline]
    pub fn truncation(&self) -> &Truncation<T> {
        &self.trunc
    }

    /// `ξ q^{1/2}`, the base point of every principal specialization.
    #[inline]
    pub fn a(&self) -> T {
        self.xi * self.q.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range() {
        assert!(QParams::new(1.2f64, 0.3).is_err());
        assert!(QParams::new(0.5f64, 1.0).is_err());
        assert!(QParams::new(-0.1f64, 0.3).is_err());
        assert!(QParams::new(f64::NAN, 0.3).is_err());
        assert!(QParams::new(0.0f64, 0.0).is_ok());
        assert!(Truncation::new(0.0f64, 10).is_err());
        assert!(Truncation::new(1e-12f64, 0).is_err());
    }
}
