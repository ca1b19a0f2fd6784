//! The Lax pair `Ψ_{n+1} = U_n Ψ_n`, `Ψ_n(qz) = T_n(z) Ψ_n(z)` and its residual checks.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::oppainleve::sequence::{OpSequence, OpVariant};
use crate::scalar::Real;

/// Real 2×2 matrix, row-major.
pub type Mat2<T> = [[T; 2]; 2];
/// Complex 2×2 matrix, row-major.
pub type CMat2<T> = [[Complex<T>; 2]; 2];

/// Probes closer than this to `0` or the pole of `T_n` are rejected.
pub const PROBE_MARGIN: f64 = 1e-6;

/// Coefficients of `U_n(z) = U1 z + U0` and `T_n(z) = (T2 z² + T1 z + T0)/(1 − z/z_pole)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaxMatrices<T> {
    pub n: usize,
    pub variant: OpVariant,
    pub u1: Mat2<T>,
    pub u0: Mat2<T>,
    pub t2: Mat2<T>,
    pub t1: Mat2<T>,
    pub t0: Mat2<T>,
    /// `ξq^{−1/2}` (plain) or `−ξq^{−1/2}` (check).
    pub z_pole: T,
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
    pub delta: T,
}

/// `U_n, T_n` from `x_{n−1}, x_n, x_{n+1}`; needs `1 ≤ n < n_max` and `x_n ≠ 0`.
pub fn lax_matrices<T: Real>(n: usize, seq: &OpSequence<T>) -> Result<LaxMatrices<T>> {
    if n == 0 || n >= seq.n_max {
        return Err(Error::InvalidParameter(format!("Lax matrices need 1 <= n < {}, got {n}", seq.n_max)));
    }
    let (q, xi) = (seq.params.q(), seq.params.xi());
    if xi == T::zero() {
        return Err(Error::Domain("Lax pair needs xi > 0".into()));
    }
    let (xm, x, xp) = (seq.x[n - 1], seq.x[n], seq.x[n + 1]);
    if x == T::zero() {
        return Err(Error::Singular { what: "Lax matrix T_n (x_n = 0)", index: n });
    }
    let (zero, one) = (T::zero(), T::one());
    let rq = q.sqrt();
    let qn = q.powi(n as i32);
    let u1 = [[one, zero], [zero, zero]];
    let u0 = [[x * xp, -xp], [-(one - xp * xp) * x, one - xp * xp]];
    let w = one - x * x;
    let (t2, t0, alpha, beta, gamma, delta, z_pole) = match seq.variant {
        OpVariant::Plain => {
            let delta = -rq / xi;
            let alpha = -qn * w * (q * xp + xm) / x + delta;
            (
                [[qn * q, zero], [zero, zero]],
                [[qn * w, qn * x], [qn * w * x, qn * x * x]],
                alpha,
                -qn * q * xp,
                -qn * w * xm,
                delta,
                xi / rq,
            )
        }
        OpVariant::Check => {
            let c = qn * rq / xi;
            (
                [[zero, zero], [zero, q]],
                [[x * x, -x], [-w * x, w]],
                c,
                xp,
                q * w * xm,
                c - w * (xp + q * xm) / x,
                -xi / rq,
            )
        }
    };
    Ok(LaxMatrices { n, variant: seq.variant, u1, u0, t2, t1: [[alpha, beta], [gamma, delta]], t0, z_pole, alpha, beta, gamma, delta })
}

fn cmul<T: Real>(a: &CMat2<T>, b: &CMat2<T>) -> CMat2<T> {
    let mut out = [[Complex::new(T::zero(), T::zero()); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn real<T: Real>(m: &Mat2<T>) -> CMat2<T> {
    m.map(|row| row.map(|v| Complex::new(v, T::zero())))
}

/// Largest entry modulus.
pub fn max_norm<T: Real>(m: &CMat2<T>) -> T {
    m.iter().flatten().fold(T::zero(), |acc, v| acc.max(v.norm()))
}

fn sub<T: Real>(a: &CMat2<T>, b: &CMat2<T>) -> CMat2<T> {
    let mut out = *a;
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] -= b[i][j];
        }
    }
    out
}

fn inverse<T: Real>(m: &CMat2<T>) -> CMat2<T> {
    let d = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    [[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]]
}

impl<T: Real> LaxMatrices<T> {
    pub fn u(&self, z: Complex<T>) -> CMat2<T> {
        let mut out = real(&self.u0);
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] += z * self.u1[i][j];
            }
        }
        out
    }

    pub fn t(&self, z: Complex<T>) -> CMat2<T> {
        let den = Complex::new(T::one(), T::zero()) - z / self.z_pole;
        let mut out = [[Complex::new(T::zero(), T::zero()); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = ((z * self.t2[i][j] + self.t1[i][j]) * z + self.t0[i][j]) / den;
            }
        }
        out
    }

    /// `K_n = [[x_n, −1], [−(1−x_n²), −x_n]]`, the involution of the inversion relation.
    pub fn k(&self, x: T) -> Mat2<T> {
        [[x, -T::one()], [-(T::one() - x * x), -x]]
    }
}

/// Residuals at one probe point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaxProbe<T> {
    pub z: Complex<T>,
    /// `‖U_n(qz)T_n(z) − T_{n+1}(z)U_n(z)‖_max`.
    pub compatibility: T,
    /// `‖T_n(z)^{−1} − q^{−n}K_n T_n((qz)^{−1}) K_n‖_max`; plain weight only.
    pub inversion: Option<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LaxReport<T> {
    pub n: usize,
    pub det_k: T,
    /// `‖K_n² − 1‖_max`.
    pub k_involution: T,
    pub probes: Vec<LaxProbe<T>>,
}

impl<T: Real> LaxReport<T> {
    pub fn max_compatibility(&self) -> T {
        self.probes.iter().fold(T::zero(), |m, p| m.max(p.compatibility))
    }

    pub fn max_inversion(&self) -> Option<T> {
        self.probes.iter().map(|p| p.inversion).try_fold(T::zero(), |m, v| v.map(|v| m.max(v)))
    }
}

/// Compatibility and inversion residuals at `probes`; needs `1 ≤ n` and `n + 2 ≤ n_max`.
pub fn lax_checks<T: Real>(n: usize, seq: &OpSequence<T>, probes: &[Complex<T>]) -> Result<LaxReport<T>> {
    let m = lax_matrices(n, seq)?;
    let m1 = lax_matrices(n + 1, seq)?;
    let q = seq.params.q();
    let margin = T::lit(PROBE_MARGIN);
    let x = seq.x[n];
    let k = m.k(x);
    let kc = real(&k);
    let det_k = k[0][0] * k[1][1] - k[0][1] * k[1][0];
    let kk = cmul(&kc, &kc);
    let k_involution = max_norm(&sub(&kk, &real(&[[T::one(), T::zero()], [T::zero(), T::one()]])));
    let mut out = Vec::with_capacity(probes.len());
    for &z in probes {
        let pole = Complex::new(m.z_pole, T::zero());
        let inv_pt = (z * q).inv();
        if z.norm() < margin || (z - pole).norm() < margin || (inv_pt - pole).norm() < margin {
            return Err(Error::Domain(format!("probe {z} too close to 0 or the pole {}", m.z_pole)));
        }
        let lhs = cmul(&m.u(z * q), &m.t(z));
        let rhs = cmul(&m1.t(z), &m.u(z));
        let compatibility = max_norm(&sub(&lhs, &rhs));
        let inversion = match seq.variant {
            OpVariant::Plain => {
                let scale = q.powi(-(n as i32));
                let mut r = cmul(&cmul(&kc, &m.t(inv_pt)), &kc);
                for v in r.iter_mut().flatten() {
                    *v = *v * scale;
                }
                Some(max_norm(&sub(&inverse(&m.t(z)), &r)))
            }
            OpVariant::Check => None,
        };
        out.push(LaxProbe { z, compatibility, inversion });
    }
    Ok(LaxReport { n, det_k, k_involution, probes: out })
}
