//! Limit shape of the squared-type measure under `q = e^{−ε}`, `ε → 0`.

use crate::error::{Error, Result};
use crate::params::Truncation;
use crate::scalar::{CompensatedSum, Real};

/// One-point function `ρ`, profile `Ω` and the edge constants `α₀, β₀`.
///
/// Invariant: `a ≤ 0 ≤ b`; `ρ = 1` left of `a`, `0` right of `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitShape<T> {
    pub xi: T,
    /// `−2 log(1+ξ)`.
    pub a: T,
    /// `−2 log(1−ξ)`.
    pub b: T,
    /// `−2 log(1−ξ)`, the edge location.
    pub alpha0: T,
    /// `ξ/(1−ξ)²`, the edge curvature.
    pub beta0: T,
}

/// Quadrature tolerance for `Ω`.
const OMEGA_TOL: f64 = 1e-13;

pub fn limit_shape<T: Real>(xi: T) -> Result<LimitShape<T>> {
    if !(xi >= T::zero() && xi < T::one()) {
        return Err(Error::InvalidParameter(format!("xi must lie in [0,1), got {xi}")));
    }
    let two = T::two();
    let b = -two * (-xi).ln_1p();
    Ok(LimitShape { xi, a: -two * xi.ln_1p(), b, alpha0: b, beta0: xi / ((T::one() - xi) * (T::one() - xi)) })
}

impl<T: Real> LimitShape<T> {
    /// `x(θ) = −log(1 − 2ξ cos θ + ξ²)`, the inverse of `πρ(x) = θ` on `[a,b]`.
    fn x_of_theta(&self, theta: T) -> T {
        let xi = self.xi;
        -(xi * xi - two_of(xi) * theta.cos()).ln_1p()
    }

    /// `ρ(x) = arccos[(ξ + (1−e^{−x})/ξ)/2]/π` on `[a,b]`.
    pub fn rho(&self, x: T) -> T {
        if x <= self.a {
            return T::one();
        }
        if x >= self.b {
            return T::zero();
        }
        let xi = self.xi;
        let arg = (xi - (-x).exp_m1() / xi) * T::half();
        // Clamp rounding at the endpoints; arg ∈ [−1,1] exactly on [a,b].
        arg.max(-T::one()).min(T::one()).acos() / T::PI()
    }

    /// `Ω(x) = |a| + ∫_a^x (1 − 2ρ)` on `[a,b]` and `|x|` outside.
    pub fn omega(&self, x: T) -> T {
        if x <= self.a || x >= self.b || self.xi == T::zero() {
            return x.abs();
        }
        -self.a + (x - self.a) - two_of(T::one()) * self.rho_integral(x)
    }

    /// `∫_a^x ρ`, computed in `θ` where the integrand is smooth:
    /// `∫_{θ(x)}^{π} (θ/π) |x′(θ)| dθ`, `|x′(θ)| = 2ξ sin θ/(1 − 2ξ cos θ + ξ²)`.
    pub fn rho_integral(&self, x: T) -> T {
        if x <= self.a {
            return T::zero();
        }
        let x = x.min(self.b);
        let theta = self.rho(x) * T::PI();
        let xi = self.xi;
        let f = |t: T| {
            let d = T::one() - two_of(xi) * t.cos() + xi * xi;
            (t / T::PI()) * two_of(xi) * t.sin() / d
        };
        adaptive_simpson(&f, theta, T::PI(), T::lit(OMEGA_TOL))
    }

    /// Samples `(x, ρ(x), Ω(x))` on `points` uniform nodes of `[a−1, b+1]`.
    pub fn table(&self, points: usize) -> Vec<(T, T, T)> {
        let (lo, hi) = (self.a - T::one(), self.b + T::one());
        let n = points.max(2);
        (0..n)
            .map(|i| {
                let x = lo + (hi - lo) * T::of_usize(i) / T::of_usize(n - 1);
                (x, self.rho(x), self.omega(x))
            })
            .collect()
    }

    /// Checks `x(πρ(x)) = x` at `x`; an internal consistency probe.
    pub fn inverse_residual(&self, x: T) -> T {
        (self.x_of_theta(self.rho(x) * T::PI()) - x).abs()
    }
}

fn two_of<T: Real>(v: T) -> T {
    v + v
}

/// `2 ∑ ξ^n/n`, the series form of `α₀`.
pub fn alpha0_series<T: Real>(xi: T, tr: &Truncation<T>) -> Result<T> {
    power_series(xi, tr, |n, p| p / T::of_usize(n)).map(|s| s + s)
}

/// `∑ n ξ^n`, the series form of `β₀`.
pub fn beta0_series<T: Real>(xi: T, tr: &Truncation<T>) -> Result<T> {
    power_series(xi, tr, |n, p| T::of_usize(n) * p)
}

fn power_series<T: Real>(xi: T, tr: &Truncation<T>, term: impl Fn(usize, T) -> T) -> Result<T> {
    let mut acc = CompensatedSum::new();
    let mut p = T::one();
    for n in 1..=tr.max_terms {
        p *= xi;
        let t = term(n, p);
        acc.add(t);
        if t.abs() <= tr.tail_tol * acc.value().abs() || t == T::zero() {
            return Ok(acc.value());
        }
    }
    Err(Error::NonConvergence { what: "edge-constant series", terms: tr.max_terms })
}

/// Adaptive Simpson quadrature with Richardson correction.
pub fn adaptive_simpson<T: Real>(f: &impl Fn(T) -> T, lo: T, hi: T, tol: T) -> T {
    fn rec<T: Real>(f: &impl Fn(T) -> T, a: T, b: T, fa: T, fm: T, fb: T, whole: T, tol: T, depth: u32) -> T {
        let m = (a + b) * T::half();
        let (lm, rm) = ((a + m) * T::half(), (m + b) * T::half());
        let (flm, frm) = (f(lm), f(rm));
        let six = T::lit(6.0);
        let left = (m - a) / six * (fa + T::lit(4.0) * flm + fm);
        let right = (b - m) / six * (fm + T::lit(4.0) * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= T::lit(15.0) * tol {
            return left + right + delta / T::lit(15.0);
        }
        rec(f, a, m, fa, flm, fm, left, tol * T::half(), depth - 1)
            + rec(f, m, b, fm, frm, fb, right, tol * T::half(), depth - 1)
    }
    if lo == hi {
        return T::zero();
    }
    let (fa, fb) = (f(lo), f(hi));
    let fm = f((lo + hi) * T::half());
    let whole = (hi - lo) / T::lit(6.0) * (fa + T::lit(4.0) * fm + fb);
    rec(f, lo, hi, fa, fm, fb, whole, tol, 48)
}
