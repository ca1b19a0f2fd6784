use num_complex::Complex;

use crate::error::{Error, Result};
use crate::params::Truncation;
use crate::scalar::Real;

/// Length of a q-shifted factorial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(usize),
    Infinite,
}

/// `(x;q)_n = ∏_{k<n} (1 − x q^k)`.
///
/// The infinite product stops once `|x q^k| < tail_tol`.
pub fn q_pochhammer<T: Real>(x: T, q: T, n: Order, tr: &Truncation<T>) -> Result<T> {
    match n {
        Order::Finite(n) => {
            let mut prod = T::one();
            let mut f = x;
            for _ in 0..n {
                prod *= T::one() - f;
                f *= q;
            }
            Ok(prod)
        }
        Order::Infinite => {
            if q.abs() >= T::one() {
                return Err(Error::Domain(format!("infinite q-Pochhammer needs |q| < 1, got {q}")));
            }
            let mut prod = T::one();
            let mut f = x;
            for _ in 0..tr.max_terms {
                if f.abs() < tr.tail_tol {
                    return Ok(prod);
                }
                prod *= T::one() - f;
                f *= q;
            }
            Err(Error::NonConvergence { what: "q-Pochhammer product", terms: tr.max_terms })
        }
    }
}

/// `(x;q)_∞` at complex `x`.
pub fn q_pochhammer_complex<T: Real>(x: Complex<T>, q: T, tr: &Truncation<T>) -> Result<Complex<T>> {
    if q.abs() >= T::one() {
        return Err(Error::Domain(format!("infinite q-Pochhammer needs |q| < 1, got {q}")));
    }
    let mut prod = Complex::new(T::one(), T::zero());
    let mut f = x;
    for _ in 0..tr.max_terms {
        if f.norm() < tr.tail_tol {
            return Ok(prod);
        }
        prod = prod * (Complex::new(T::one(), T::zero()) - f);
        f = f.scale(q);
    }
    Err(Error::NonConvergence { what: "complex q-Pochhammer product", terms: tr.max_terms })
}
