//! The symmetric inner product `⟨f,g⟩ = ∮ f((z+z⁻¹)/2) g((z+z⁻¹)/2) 𝕀(z) dz/(2πiz)`
//! by circle quadrature and by its residue series.

use crate::error::{Error, Result};
use crate::params::QParams;
use crate::qspecial::{q_pochhammer, Order, Weight};
use crate::scalar::{CompensatedSum, Real};

/// Horner evaluation of `∑ c_k x^k`.
pub fn poly_eval<T: Real>(coeffs: &[T], x: T) -> T {
    coeffs.iter().rev().fold(T::zero(), |acc, &c| acc * x + c)
}

/// Residue series
/// `((ξ²q;q)_∞(q;q)_∞)^{−1} ∑_n f(z_n) g(z_n) (ξ²q;q)_n/(q;q)_n (−1)^n q^{n(n−1)/2} q^n`,
/// `z_n = (ξq^{n+½} + ξ^{−1}q^{−n−½})/2`.
///
/// Alternating, with cancellation growing with the polynomial degree.
pub fn inner_product_series<T: Real>(f: &[T], g: &[T], params: &QParams<T>) -> Result<T> {
    let (q, xi) = (params.q(), params.xi());
    if xi == T::zero() {
        return Err(Error::Domain("residue nodes z_n escape to infinity at xi = 0".into()));
    }
    let tr = params.truncation();
    let xi2q = xi * xi * q;
    let pre = q_pochhammer(xi2q, q, Order::Infinite, tr)? * q_pochhammer(q, q, Order::Infinite, tr)?;
    let mut acc = CompensatedSum::new();
    // w_n = (ξ²q;q)_n/(q;q)_n (−1)^n q^{n(n−1)/2} q^n, advanced by its ratio.
    let mut w = T::one();
    let mut qn = T::one();
    let mut node = xi * q.sqrt();
    let mut peak = T::zero();
    let mut small = 0;
    for n in 0..tr.max_terms {
        let zn = (node + node.recip()) * T::half();
        let term = poly_eval(f, zn) * poly_eval(g, zn) * w;
        acc.add(term);
        peak = peak.max(term.abs());
        // Past the peak, terms fall super-exponentially.
        if term.abs() <= tr.tail_tol * peak && n > 0 {
            small += 1;
            if small >= 2 {
                return Ok(acc.value() / pre);
            }
        } else {
            small = 0;
        }
        w = -w * (T::one() - xi2q * qn) / (T::one() - q * qn) * qn * q;
        qn *= q;
        node *= q;
        if w == T::zero() {
            return Ok(acc.value() / pre);
        }
    }
    Err(Error::NonConvergence { what: "residue-series inner product", terms: tr.max_terms })
}

/// `(1/G) ∑_j f(cos θ_j) g(cos θ_j) 𝕀(e^{iθ_j})`, spectrally accurate for the analytic weight.
pub fn inner_product_quadrature<T: Real>(f: &[T], g: &[T], params: &QParams<T>, points: usize) -> Result<T> {
    if points == 0 {
        return Err(Error::Quadrature { what: "circle inner product", points });
    }
    let mut acc = CompensatedSum::new();
    for j in 0..points {
        let th = T::TAU() * T::of_usize(j) / T::of_usize(points);
        let c = th.cos();
        acc.add(poly_eval(f, c) * poly_eval(g, c) * Weight::I.on_circle(th, params)?);
    }
    Ok(acc.value() / T::of_usize(points))
}
