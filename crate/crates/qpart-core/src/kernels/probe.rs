//! Numerical probes of the sine and Airy scaling limits along `q ↑ 1`.

use crate::error::{Error, Result};
use crate::halfint::HalfInteger;
use crate::kernels::airy::airy_kernel;
use crate::kernels::kernel::QBesselKernel;
use crate::kernels::limit_shape::limit_shape;
use crate::kernels::table::BesselSource;
use crate::linalg::lu_solve;
use crate::params::QParams;
use crate::scalar::Real;

/// Fourier grid used by the probes; the ₁φ₁ series is useless this close to `q = 1`.
pub const PROBE_GRID: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProbeKind<T> {
    /// `K(r₀+offset, r₀)` with `r₀ ≈ x/ε` against `sin(πρ·offset)/(π·offset)`.
    BulkSine { x: T, offset: i64 },
    /// `(β₀/ε)^{1/3} K` near `α₀/ε` against `K_Ai(x, y)`.
    EdgeAiry { x: T, y: T },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeRow<T> {
    pub q: T,
    pub measured: T,
    pub target: T,
    pub deviation: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport<T> {
    pub rows: Vec<ProbeRow<T>>,
}

impl<T: Real> ProbeReport<T> {
    /// Whether the deviation strictly decreases along the schedule.
    pub fn monotone(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].deviation < w[0].deviation)
    }
}

/// Runs a scaling probe at `ξ` along `q_schedule`.
pub fn scaling_probe<T: Real>(kind: ProbeKind<T>, xi: T, q_schedule: &[T]) -> Result<ProbeReport<T>> {
    scaling_probe_with_grid(kind, xi, q_schedule, PROBE_GRID)
}

pub fn scaling_probe_with_grid<T: Real>(kind: ProbeKind<T>, xi: T, q_schedule: &[T], grid: usize) -> Result<ProbeReport<T>> {
    let shape = limit_shape(xi)?;
    if q_schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("q schedule must be strictly increasing".into()));
    }
    if let ProbeKind::BulkSine { x, .. } = kind {
        if !(x > shape.a && x < shape.b) {
            return Err(Error::Domain(format!("bulk point {x} outside ({}, {})", shape.a, shape.b)));
        }
    }
    let mut rows = Vec::with_capacity(q_schedule.len());
    for &q in q_schedule {
        let params = QParams::new(q, xi)?;
        let k = QBesselKernel::with_source(params, BesselSource::Fourier { grid })?;
        let eps = -q.ln();
        let (measured, target) = match kind {
            ProbeKind::BulkSine { x, offset } => {
                let r0 = HalfInteger::nearest(x / eps);
                let rho = shape.rho(x);
                let target = if offset == 0 {
                    rho
                } else {
                    let d = T::of_i64(offset);
                    (T::PI() * rho * d).sin() / (T::PI() * d)
                };
                (k.eval(r0 + offset, r0), target)
            }
            ProbeKind::EdgeAiry { x, y } => edge_value(&k, shape.alpha0, shape.beta0, eps, x, y)?,
        };
        rows.push(ProbeRow { q, measured, target, deviation: (measured - target).abs() });
    }
    Ok(ProbeReport { rows })
}

/// Cubic least-squares fit of `σK(r, r+d)` over the six sites nearest `α₀/ε + σx`,
/// evaluated at `x`; `σ = (β₀/ε)^{1/3}` and `d` is `σ(y−x)` rounded.
/// Returns the fitted value and `K_Ai(x, x + d/σ)`.
fn edge_value<T: Real>(k: &QBesselKernel<T>, alpha0: T, beta0: T, eps: T, x: T, y: T) -> Result<(T, T)> {
    let sigma = (beta0 / eps).cbrt();
    let centre = alpha0 / eps + sigma * x;
    let d = (sigma * (y - x)).round().to_i64().unwrap_or(0);
    let base = HalfInteger::nearest(centre);
    let sites: Vec<(T, T)> = (-3..3)
        .map(|j| {
            let r = base + j;
            ((r.value::<T>() - centre) / sigma, sigma * k.eval(r, r + d))
        })
        .collect();
    let coef = cubic_fit(&sites)?;
    let target = airy_kernel(x, x + T::of_i64(d) / sigma)?;
    Ok((coef[0], target))
}

/// Least-squares cubic through `(u, v)` samples; returns coefficients from the constant term up.
fn cubic_fit<T: Real>(pts: &[(T, T)]) -> Result<Vec<T>> {
    let mut a = vec![T::zero(); 16];
    let mut b = vec![T::zero(); 4];
    for &(u, v) in pts {
        let pw = [T::one(), u, u * u, u * u * u];
        for i in 0..4 {
            b[i] += pw[i] * v;
            for j in 0..4 {
                a[i * 4 + j] += pw[i] * pw[j];
            }
        }
    }
    lu_solve(a, 4, b)
}
