//! q-Painlevé V trajectories of the Verblunsky data, their d-P_II limit,
//! the τ-relation and the linearized q-Bessel tail.

use crate::error::{Error, Result};
use crate::oppainleve::mp::mp_recurrence;
use crate::oppainleve::sequence::{op_sequence_with, OpSequence, OpSource, OpVariant};
use crate::params::QParams;
use crate::qspecial::{q_bessel, BesselKind};
use crate::scalar::Real;

/// Below this a recurrence denominator is treated as zero.
pub const RECURRENCE_GUARD: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PainleveBranch {
    /// `𝗑_n = ξ^{1/2} q^{n/2} x_n`.
    X,
    /// `𝗒_n = (−ξ)^{1/2} q^{−n/2} y_n`, stored through its real part `ỹ_n = ξ^{1/2} q^{−n/2} y_n`
    /// so that `𝗒_n = iỹ_n`.
    Y,
}

impl PainleveBranch {
    pub fn variant(self) -> OpVariant {
        match self {
            PainleveBranch::X => OpVariant::Plain,
            PainleveBranch::Y => OpVariant::Check,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrajectorySource {
    /// Forward iteration seeded by `𝗑_0 = ξ^{1/2}` and the determinant value of `𝗑_1`,
    /// carried in multiprecision arithmetic.
    Recurrence,
    /// The same iteration in the scalar type `T`. The trajectory is the recessive solution,
    /// so rounding errors grow like `ε/𝗑_n²` and only the first few steps are meaningful.
    NativeRecurrence,
    /// `𝗑_n` read off the OP sequence of the given source.
    Determinant(OpSource),
}

/// A trajectory `values[n]`, `n = 0..=n_max` (`𝗑_n` or `ỹ_n`).
#[derive(Debug, Clone, PartialEq)]
pub struct PainleveState<T> {
    pub branch: PainleveBranch,
    pub values: Vec<T>,
    pub params: QParams<T>,
}

impl<T: Real> PainleveState<T> {
    /// `𝗑_n²`, or the real number `𝗒_n² = −ỹ_n²`.
    pub fn square(&self, n: usize) -> T {
        let v = self.values[n];
        match self.branch {
            PainleveBranch::X => v * v,
            PainleveBranch::Y => -v * v,
        }
    }

    /// `𝗑_n𝗑_{n+1}`, or the real number `𝗒_n𝗒_{n+1} = −ỹ_nỹ_{n+1}`.
    pub fn bilinear(&self, n: usize) -> T {
        let p = self.values[n] * self.values[n + 1];
        match self.branch {
            PainleveBranch::X => p,
            PainleveBranch::Y => -p,
        }
    }

    /// Right-hand side of the recurrence at `n`:
    /// `(𝗑²−ξ)(𝗑²−ξ⁻¹)/(1 − ξ⁻¹q^{−n}𝗑²)` or `(𝗒²+ξ)(𝗒²+ξ⁻¹)/(1 + ξ⁻¹q^{n}𝗒²)`.
    pub fn rhs(&self, n: usize) -> T {
        let (q, xi) = (self.params.q(), self.params.xi());
        let s = self.square(n);
        match self.branch {
            PainleveBranch::X => (s - xi) * (s - xi.recip()) / (T::one() - s / (xi * q.powi(n as i32))),
            PainleveBranch::Y => (s + xi) * (s + xi.recip()) / (T::one() + q.powi(n as i32) * s / xi),
        }
    }

    /// `|LHS − RHS| / max(1, |RHS|)` for `1 ≤ n < len − 1`.
    pub fn residual(&self, n: usize) -> Option<T> {
        if n == 0 || n + 1 >= self.values.len() {
            return None;
        }
        let lhs = (self.bilinear(n) - T::one()) * (self.bilinear(n - 1) - T::one());
        let rhs = self.rhs(n);
        Some((lhs - rhs).abs() / rhs.abs().max(T::one()))
    }

    /// Linearized tail: `|𝗑_{n−1} + 𝗑_{n+1} − ((1−q^{−n})/ξ + ξ)𝗑_n|`, and for the `𝗒` branch
    /// the same with `−((1−q^n)/ξ + ξ)`, relative to the largest of the three terms.
    /// The dropped nonlinear part is `O(𝗑_n²)` relative.
    pub fn linear_tail_residual(&self, n: usize) -> Option<T> {
        if n == 0 || n + 1 >= self.values.len() {
            return None;
        }
        let (q, xi) = (self.params.q(), self.params.xi());
        let v = &self.values;
        let coef = match self.branch {
            PainleveBranch::X => (T::one() - q.powi(-(n as i32))) / xi + xi,
            PainleveBranch::Y => -((T::one() - q.powi(n as i32)) / xi + xi),
        };
        let mid = coef * v[n];
        let scale = v[n - 1].abs().max(v[n + 1].abs()).max(mid.abs());
        Some((v[n - 1] + v[n + 1] - mid).abs() / scale)
    }

    /// `values[n] / (ξ^{1/2} J^(3)_{∓n}(±2ξ;q))`, which tends to one as `n → ∞`.
    pub fn bessel_ratio(&self, n: usize) -> Result<T> {
        let (q, xi) = (self.params.q(), self.params.xi());
        let tr = self.params.truncation();
        let nf = T::of_usize(n);
        let j = match self.branch {
            PainleveBranch::X => q_bessel(BesselKind::Third, -nf, xi + xi, q, tr)?,
            PainleveBranch::Y => q_bessel(BesselKind::Third, nf, -(xi + xi), q, tr)?,
        };
        Ok(self.values[n] / (xi.sqrt() * j))
    }
}

fn scaled<T: Real>(branch: PainleveBranch, seq: &OpSequence<T>) -> Vec<T> {
    let (q, xi) = (seq.params.q(), seq.params.xi());
    let rq = q.sqrt();
    let mut f = xi.sqrt();
    let step = match branch {
        PainleveBranch::X => rq,
        PainleveBranch::Y => rq.recip(),
    };
    seq.x
        .iter()
        .map(|&x| {
            let v = f * x;
            f *= step;
            v
        })
        .collect()
}

pub fn painleve_trajectory<T: Real>(
    branch: PainleveBranch,
    source: TrajectorySource,
    params: &QParams<T>,
    n_max: usize,
) -> Result<PainleveState<T>> {
    match source {
        TrajectorySource::Determinant(op) => {
            let seq = op_sequence_with(branch.variant(), op, params, n_max)?;
            Ok(PainleveState { branch, values: scaled(branch, &seq), params: *params })
        }
        TrajectorySource::Recurrence => Ok(PainleveState { branch, values: mp_recurrence(branch, params, n_max)?, params: *params }),
        TrajectorySource::NativeRecurrence => {
            let seed = op_sequence_with(branch.variant(), OpSource::Toeplitz, params, 1)?;
            let mut st = PainleveState { branch, values: scaled(branch, &seed), params: *params };
            st.values.truncate(n_max + 1);
            let guard = T::lit(RECURRENCE_GUARD);
            for n in 1..n_max {
                let prev = st.bilinear(n - 1) - T::one();
                let vn = st.values[n];
                if prev.abs() < guard {
                    return Err(Error::Singular { what: "q-P_V recurrence (product near one)", index: n });
                }
                if vn.abs() < guard {
                    return Err(Error::Singular { what: "q-P_V recurrence (vanishing iterate)", index: n });
                }
                let b = T::one() + st.rhs(n) / prev;
                let next = match branch {
                    PainleveBranch::X => b / vn,
                    PainleveBranch::Y => -b / vn,
                };
                st.values.push(next);
            }
            Ok(st)
        }
    }
}

/// Residual of `(x_{n−1}+x_{n+1})(1−x_n²) + (n/η)x_n` for each `q`, with `ξ = (1−q)η`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DpiiRow<T> {
    pub q: T,
    pub n: usize,
    pub residual_x: T,
    pub residual_y: T,
}

/// d-P_II residuals along `q_schedule` on determinant-sourced `x_n, y_n`.
pub fn dpii_limit_check<T: Real>(eta: T, q_schedule: &[T], n_range: std::ops::RangeInclusive<usize>) -> Result<Vec<DpiiRow<T>>> {
    if *n_range.start() == 0 {
        return Err(Error::InvalidParameter("d-P_II residual needs n >= 1".into()));
    }
    let mut rows = Vec::new();
    for &q in q_schedule {
        let params = QParams::new(q, (T::one() - q) * eta)?;
        let n_top = *n_range.end() + 1;
        let xs = op_sequence_with(OpVariant::Plain, OpSource::Toeplitz, &params, n_top)?.x;
        let ys = op_sequence_with(OpVariant::Check, OpSource::Toeplitz, &params, n_top)?.x;
        let res = |v: &[T], n: usize| ((v[n - 1] + v[n + 1]) * (T::one() - v[n] * v[n]) + T::of_usize(n) / eta * v[n]).abs();
        for n in n_range.clone() {
            rows.push(DpiiRow { q, n, residual_x: res(&xs, n), residual_y: res(&ys, n) });
        }
    }
    Ok(rows)
}

/// `log Z_{n+1} − 2 log Z_n + log Z_{n−1} − log(1 − x_n²)` for `1 ≤ n ≤ n_max`.
pub fn tau_relation_check<T: Real>(seq: &OpSequence<T>) -> Vec<(usize, T)> {
    (1..=seq.n_max)
        .map(|n| {
            let lz = |k: usize| seq.z[k].ln();
            let xn = seq.x[n];
            (n, lz(n + 1) - (lz(n) + lz(n)) + lz(n - 1) - (-xn * xn).ln_1p())
        })
        .collect()
}

/// Residual of the recurrence written in `x_n` before rescaling:
/// `(ξq^{n+½}x_{n−1}x_nx_{n+1} − (x_{n−1} + qx_{n+1}))(1 − x_n²) + q^{½}(ξ(1−x_n²) + ξ(1−q^n)x_n² + (1−q^{−n})/ξ)x_n`.
pub fn unscaled_residual<T: Real>(x: &[T], params: &QParams<T>, n: usize) -> Option<T> {
    if n == 0 || n + 1 >= x.len() {
        return None;
    }
    let (q, xi) = (params.q(), params.xi());
    let (a, b, c) = (x[n - 1], x[n], x[n + 1]);
    let qn = q.powi(n as i32);
    let one = T::one();
    let lhs = (xi * qn * q.sqrt() * a * b * c - (a + q * c)) * (one - b * b);
    let rhs = -q.sqrt() * (xi * (one - b * b) + xi * (one - qn) * b * b + (one - qn.recip()) / xi) * b;
    Some((lhs - rhs).abs())
}
