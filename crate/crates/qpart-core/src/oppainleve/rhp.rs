//! The Riemann–Hilbert matrix
//! `Y_n(z) = [[π_n, C[w^{−n}π_n𝕀]], [−κ²_{n−1}π*_{n−1}, −κ²_{n−1}C[w^{−n}π*_{n−1}𝕀]]]`
//! with `C[f](z) = ∮ f(w)/(w−z) dw/(2πi)` taken by the trapezoidal rule.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::oppainleve::lax::{max_norm, CMat2};
use crate::oppainleve::sequence::{OpSequence, OpVariant};
use crate::qspecial::Weight;
use crate::scalar::Real;

/// First trapezoidal grid; doubled until two grids agree.
pub const RHP_START_POINTS: usize = 2048;
pub const RHP_MAX_POINTS: usize = 1 << 18;
/// Relative agreement between successive grids.
pub const RHP_QUADRATURE_TOL: f64 = 1e-13;

/// Monic `π_0..=π_N` (ascending coefficients) from `x_0..=x_N` by
/// `π_{k+1}(z) = zπ_k(z) + x_{k+1}π*_k(z)`.
pub fn monic_polynomials<T: Real>(x: &[T]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![vec![T::one()]];
    for k in 1..x.len() {
        let prev = &out[k - 1];
        let mut next = vec![T::zero(); k + 1];
        for (j, &c) in prev.iter().enumerate() {
            next[j + 1] += c;
            // π*_k has the coefficients of π_k reversed.
            next[k - 1 - j] += x[k] * c;
        }
        out.push(next);
    }
    out
}

fn horner<T: Real>(coeffs: &[T], z: Complex<T>) -> Complex<T> {
    coeffs.iter().rev().fold(Complex::new(T::zero(), T::zero()), |acc, &c| acc * z + c)
}

fn weight_of(variant: OpVariant) -> Weight {
    match variant {
        OpVariant::Plain => Weight::I,
        OpVariant::Check => Weight::ICheck,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhpSample<T> {
    pub n: usize,
    pub z: Complex<T>,
    pub y: CMat2<T>,
    pub det_y: Complex<T>,
    /// Trapezoidal points of the accepted grid.
    pub points: usize,
}

/// `Y_n(z)` with the Cauchy contour on `|w| = radius`. For `|z| < radius` this is the
/// inner branch continued; for `|z| > radius` the outer one.
pub fn rhp_matrix<T: Real>(seq: &OpSequence<T>, n: usize, z: Complex<T>, radius: T) -> Result<RhpSample<T>> {
    if n == 0 || n > seq.n_max {
        return Err(Error::InvalidParameter(format!("RHP matrix needs 1 <= n <= {}, got {n}", seq.n_max)));
    }
    let a = seq.params.a();
    if seq.variant == OpVariant::Plain && !(radius > a && radius * a < T::one()) {
        return Err(Error::Domain(format!("contour radius {radius} crosses a pole of the weight")));
    }
    if !(radius > T::zero()) || (z.norm() - radius).abs() <= T::epsilon() * radius {
        return Err(Error::Domain(format!("point {z} lies on the contour |w| = {radius}")));
    }
    let polys = monic_polynomials(&seq.x[..=n]);
    let (pn, pm) = (&polys[n], &polys[n - 1]);
    let pm_star: Vec<T> = pm.iter().rev().copied().collect();
    let weight = weight_of(seq.variant);
    let params = &seq.params;
    let cauchy = |points: usize| -> Result<(Complex<T>, Complex<T>)> {
        let mut s1 = Complex::new(T::zero(), T::zero());
        let mut s2 = s1;
        for j in 0..points {
            let th = T::TAU() * T::of_usize(j) / T::of_usize(points);
            let w = Complex::from_polar(radius, th);
            let f = weight.eval(w, params)? * w.powi(-(n as i32)) * w / (w - z);
            s1 += f * horner(pn, w);
            s2 += f * horner(&pm_star, w);
        }
        let g = T::of_usize(points);
        Ok((s1 / g, s2 / g))
    };
    let tol = T::lit(RHP_QUADRATURE_TOL);
    let mut points = RHP_START_POINTS;
    let mut prev = cauchy(points)?;
    loop {
        if points >= RHP_MAX_POINTS {
            return Err(Error::Quadrature { what: "RHP Cauchy transform", points });
        }
        points *= 2;
        let cur = cauchy(points)?;
        let scale = cur.0.norm().max(cur.1.norm()).max(T::one());
        let diff = (cur.0 - prev.0).norm().max((cur.1 - prev.1).norm());
        prev = cur;
        if diff <= tol * scale {
            break;
        }
    }
    let k2 = seq.kappa_sq[n - 1];
    let y = [[horner(pn, z), prev.0], [-horner(&pm_star, z) * k2, -prev.1 * k2]];
    let det_y = y[0][0] * y[1][1] - y[0][1] * y[1][0];
    Ok(RhpSample { n, z, y, det_y, points })
}

/// `Y_n(z)` with the contour on the unit circle.
pub fn rhp_sample<T: Real>(seq: &OpSequence<T>, n: usize, z: Complex<T>) -> Result<RhpSample<T>> {
    rhp_matrix(seq, n, z, T::one())
}

/// `‖Y_n(0) − [[x_n, κ_n^{−2}], [−κ²_{n−1}, x_n]]‖_max`.
pub fn y_at_zero_residual<T: Real>(seq: &OpSequence<T>, n: usize) -> Result<T> {
    let s = rhp_sample(seq, n, Complex::new(T::zero(), T::zero()))?;
    let c = |v: T| Complex::new(v, T::zero());
    let x = seq.x[n];
    let want = [[c(x), c(seq.kappa_sq[n].recip())], [c(-seq.kappa_sq[n - 1]), c(x)]];
    let mut d = s.y;
    for i in 0..2 {
        for j in 0..2 {
            d[i][j] -= want[i][j];
        }
    }
    Ok(max_norm(&d))
}

/// `‖Y_+(z) − Y_−(z) [[1, z^{−n}𝕀(z)], [0, 1]]‖_max / ‖Y_+(z)‖_max` at `z = (1−δ)e^{iφ}`.
///
/// `Y_+` is the inner branch with the contour on `𝕋`; `Y_−` is the outer branch continued
/// inward by shrinking the contour to radius `1 − 2δ`, so both sides are evaluated at the
/// same point and the check carries no `O(δ)` offset.
pub fn jump_residual<T: Real>(seq: &OpSequence<T>, n: usize, phi: T, delta: T) -> Result<T> {
    let z = Complex::from_polar(T::one() - delta, phi);
    let plus = rhp_matrix(seq, n, z, T::one())?.y;
    let minus = rhp_matrix(seq, n, z, T::one() - delta - delta)?.y;
    let jump = weight_of(seq.variant).eval(z, &seq.params)? * z.powi(-(n as i32));
    let mut d = plus;
    for i in 0..2 {
        d[i][1] -= minus[i][0] * jump + minus[i][1];
        d[i][0] -= minus[i][0];
    }
    Ok(max_norm(&d) / max_norm(&plus))
}

/// `‖Y_n(z) diag(z^{−n}, z^n) − 1‖_max`, which is `O(1/|z|)`.
pub fn normalization_residual<T: Real>(seq: &OpSequence<T>, n: usize, z: Complex<T>) -> Result<T> {
    let s = rhp_sample(seq, n, z)?;
    let zn = z.powi(n as i32);
    let one = Complex::new(T::one(), T::zero());
    let d = [
        [s.y[0][0] / zn - one, s.y[0][1] * zn],
        [s.y[1][0] / zn, s.y[1][1] * zn - one],
    ];
    Ok(max_norm(&d))
}
