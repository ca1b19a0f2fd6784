//! Probability measures on partitions: Plancherel, Poissonized Plancherel,
//! the two q-Plancherel deformations and general Schur measures.

use num_bigint::BigUint;
use num_complex::Complex;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{build, lu_determinant};
use crate::params::{QParams, Truncation};
use crate::partitions::{cell_stats, enumerate_partitions, schur_specialized, Partition, Specialization};
use crate::qspecial::{log_macmahon, log_macmahon_exponential, q_pochhammer_complex};
use crate::scalar::{CompensatedSum, Real};

/// Guard on [`normalization_partial_sum`].
pub const MAX_PARTIAL_SUM_SIZE: usize = 40;

/// Miwa times `t_n`, either a finite list or a closed-form family.
#[derive(Debug, Clone, PartialEq)]
pub enum MiwaTimes<T> {
    /// `t_1..t_K`; zero beyond `K`.
    Finite(Vec<T>),
    /// `t_n = (ξq^{1/2})^n / (n(1−q^n))`, i.e. `x_i = ξq^{i−1/2}`.
    Principal { xi: T, q: T },
    /// `t_n = c δ_{n,1}`.
    Delta(T),
}

impl<T: Real> MiwaTimes<T> {
    pub fn finite(t: Vec<T>) -> Result<Self> {
        if t.is_empty() {
            return Err(Error::InvalidParameter("finite Miwa times need K >= 1".into()));
        }
        Ok(Self::Finite(t))
    }

    pub fn principal(params: &QParams<T>) -> Self {
        Self::Principal { xi: params.xi(), q: params.q() }
    }

    /// The first `k` times of `self` as a finite list.
    pub fn truncated(&self, k: usize) -> Self {
        Self::Finite((1..=k.max(1)).map(|n| self.coefficient(n)).collect())
    }

    fn validate(&self) -> Result<()> {
        match self {
            Self::Finite(t) if t.is_empty() => Err(Error::InvalidParameter("finite Miwa times need K >= 1".into())),
            Self::Principal { xi, q } => QParams::new(*q, *xi).map(|_| ()),
            _ => Ok(()),
        }
    }

    /// `t_n` for `n ≥ 1`.
    pub fn coefficient(&self, n: usize) -> T {
        if n == 0 {
            return T::zero();
        }
        match self {
            Self::Finite(t) => t.get(n - 1).copied().unwrap_or_else(T::zero),
            Self::Principal { xi, q } => {
                let a = *xi * q.sqrt();
                a.powi(n as i32) / (T::of_usize(n) * (T::one() - q.powi(n as i32)))
            }
            Self::Delta(c) => {
                if n == 1 {
                    *c
                } else {
                    T::zero()
                }
            }
        }
    }

    /// `exp(∑ t_n z^n)`.
    pub fn exp_sum(&self, z: Complex<T>, tr: &Truncation<T>) -> Result<Complex<T>> {
        match self {
            Self::Finite(t) => {
                let mut acc = Complex::new(T::zero(), T::zero());
                let mut zn = Complex::new(T::one(), T::zero());
                for &tn in t {
                    zn = zn * z;
                    acc = acc + zn * tn;
                }
                Ok(acc.exp())
            }
            Self::Principal { xi, q } => {
                let a = *xi * q.sqrt();
                Ok(q_pochhammer_complex(z * a, *q, tr)?.inv())
            }
            Self::Delta(c) => Ok((z * *c).exp()),
        }
    }

    /// `∑ n t_n t̃_n`, the log of the Cauchy-identity normalization.
    pub fn pairing(&self, other: &Self, tr: &Truncation<T>) -> Result<T> {
        let finite_len = |m: &Self| match m {
            Self::Finite(t) => Some(t.len()),
            Self::Delta(_) => Some(1),
            Self::Principal { .. } => None,
        };
        let bound = match (finite_len(self), finite_len(other)) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) | (None, Some(a)) => Some(a),
            (None, None) => None,
        };
        let mut sum = CompensatedSum::new();
        match bound {
            Some(k) => {
                for n in 1..=k {
                    sum.add(T::of_usize(n) * self.coefficient(n) * other.coefficient(n));
                }
            }
            None => {
                let mut small = 0;
                for n in 1..=tr.max_terms {
                    let term = T::of_usize(n) * self.coefficient(n) * other.coefficient(n);
                    sum.add(term);
                    if term.abs() <= tr.tail_tol * sum.value().abs() {
                        small += 1;
                        if small >= 2 {
                            return Ok(sum.value());
                        }
                    } else {
                        small = 0;
                    }
                }
                return Err(Error::NonConvergence { what: "Miwa pairing", terms: tr.max_terms });
            }
        }
        Ok(sum.value())
    }

    /// `s_λ` at these times; Jacobi–Trudi for finite lists.
    pub fn schur(&self, lambda: &Partition) -> T {
        match self {
            Self::Principal { xi, q } => schur_specialized(lambda, Specialization::Principal { xi: *xi, q: *q }),
            Self::Delta(c) => schur_specialized(lambda, Specialization::Exponential { xi: *c }),
            Self::Finite(t) => {
                // The dual form keeps the matrix small for tall shapes.
                let (shape, dual) = if lambda.length() > lambda.first() {
                    (lambda.transpose(), true)
                } else {
                    (lambda.clone(), false)
                };
                let l = shape.length();
                if l == 0 {
                    return T::one();
                }
                // k h_k = ∑ n t_n h_{k−n};  k e_k = ∑ (−1)^{n−1} n t_n e_{k−n}.
                let top = shape.first() + l;
                let mut h = vec![T::one(); top + 1];
                for k in 1..=top {
                    let mut s = T::zero();
                    for n in 1..=k.min(t.len()) {
                        let c = T::of_usize(n) * t[n - 1] * h[k - n];
                        if dual && n % 2 == 0 {
                            s -= c;
                        } else {
                            s += c;
                        }
                    }
                    h[k] = s / T::of_usize(k);
                }
                let mut m = build(l, |i, j| {
                    let idx = shape.part(i + 1) as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        T::zero()
                    } else {
                        h[idx as usize]
                    }
                });
                lu_determinant(&mut m, l).value
            }
        }
    }
}

/// The measures on partitions handled by this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum MeasureKind<T> {
    /// `(dim λ)²/n!` on `λ ⊢ n`.
    Plancherel(usize),
    /// `e^{−η²} η^{2|λ|} ∏ 1/h²`.
    PoissonizedPlancherel(T),
    /// `M(ξ;q)^{−1} (ξ²q)^{|λ|} q^{2b(λ)} ∏ (1−q^h)^{−2}`.
    QppSquared(QParams<T>),
    /// `e^{−ξ²/(1−q)} ξ^{2|λ|} q^{b(λ)} ∏ 1/(h(1−q^h))`.
    QppMixed(QParams<T>),
    /// `e^{−∑ n t_n t̃_n} s_λ(t) s_λ(t̃)`.
    Schur(MiwaTimes<T>, MiwaTimes<T>),
}

impl<T: Real> MeasureKind<T> {
    /// The Schur-measure times realizing this kind, when it has them.
    pub fn miwa_times(&self) -> Option<(MiwaTimes<T>, MiwaTimes<T>)> {
        match self {
            Self::Plancherel(_) => None,
            Self::PoissonizedPlancherel(eta) => Some((MiwaTimes::Delta(*eta), MiwaTimes::Delta(*eta))),
            Self::QppSquared(p) => Some((MiwaTimes::principal(p), MiwaTimes::principal(p))),
            Self::QppMixed(p) => Some((MiwaTimes::principal(p), MiwaTimes::Delta(p.xi() / p.q().sqrt()))),
            Self::Schur(t, tt) => Some((t.clone(), tt.clone())),
        }
    }

    fn truncation(&self) -> Truncation<T> {
        match self {
            Self::QppSquared(p) | Self::QppMixed(p) => *p.truncation(),
            _ => Truncation::default(),
        }
    }
}

/// A measure with its log-normalization evaluated once.
#[derive(Debug, Clone)]
pub struct Measure<T> {
    kind: MeasureKind<T>,
    log_norm: T,
}

impl<T: Real> Measure<T> {
    pub fn new(kind: MeasureKind<T>) -> Result<Self> {
        let log_norm = match &kind {
            MeasureKind::Plancherel(_) => T::zero(),
            MeasureKind::PoissonizedPlancherel(eta) => -*eta * *eta,
            MeasureKind::QppSquared(p) => -log_macmahon(p).or_else(|_| log_macmahon_exponential(p))?,
            MeasureKind::QppMixed(p) => -p.xi() * p.xi() / (T::one() - p.q()),
            MeasureKind::Schur(t, tt) => {
                t.validate()?;
                tt.validate()?;
                -t.pairing(tt, &kind.truncation())?
            }
        };
        Ok(Self { kind, log_norm })
    }

    pub fn kind(&self) -> &MeasureKind<T> {
        &self.kind
    }

    /// Logarithm of the normalizing factor multiplying the weight.
    pub fn log_normalization(&self) -> T {
        self.log_norm
    }

    pub fn probability(&self, lambda: &Partition) -> Result<T> {
        let n = lambda.size();
        let c = self.log_norm.exp();
        Ok(match &self.kind {
            MeasureKind::Plancherel(m) => {
                if n != *m {
                    return Err(Error::SizeMismatch { expected: *m, actual: n });
                }
                // n!/∏h² = exp(∑ ln k − 2∑ ln h), finite for any n.
                let lf: T = (1..=n).map(|k| T::of_usize(k).ln()).sum();
                let lh: T = lambda.hooks().iter().map(|&h| T::of_usize(h).ln()).sum();
                (lf - lh - lh).exp()
            }
            MeasureKind::PoissonizedPlancherel(eta) => {
                let s = schur_specialized(lambda, Specialization::Exponential { xi: *eta });
                c * s * s
            }
            MeasureKind::QppSquared(p) => {
                let s = schur_specialized(lambda, Specialization::Principal { xi: p.xi(), q: p.q() });
                c * s * s
            }
            MeasureKind::QppMixed(p) => {
                let (xi, q) = (p.xi(), p.q());
                let mut v = xi.powi(2 * n as i32) * q.powi(lambda.b() as i32);
                for h in lambda.hooks() {
                    v /= T::of_usize(h) * (T::one() - q.powi(h as i32));
                }
                c * v
            }
            MeasureKind::Schur(t, tt) => c * t.schur(lambda) * tt.schur(lambda),
        })
    }
}

/// `μ[λ]` for the given kind; recomputes the normalization every call.
pub fn measure<T: Real>(kind: &MeasureKind<T>, lambda: &Partition) -> Result<T> {
    Measure::new(kind.clone())?.probability(lambda)
}

/// Exact Plancherel weight as the reduced pair `((dim λ)², |λ|!)`.
pub fn plancherel_exact(lambda: &Partition) -> (BigUint, BigUint) {
    let d = cell_stats(lambda).dim_lambda;
    let f = (1..=lambda.size()).fold(BigUint::one(), |acc, k| acc * k);
    (&d * &d, f)
}

/// `∑_{|λ| ≤ max_size} μ[λ]` in enumeration order; sizes outside a
/// Plancherel(n) support contribute zero.
pub fn normalization_partial_sum<T: Real>(kind: &MeasureKind<T>, max_size: usize) -> Result<T> {
    if max_size > MAX_PARTIAL_SUM_SIZE {
        return Err(Error::LimitExceeded { what: "partial-sum size", value: max_size, limit: MAX_PARTIAL_SUM_SIZE });
    }
    let m = Measure::new(kind.clone())?;
    let mut sum = CompensatedSum::new();
    for lambda in enumerate_partitions(max_size)? {
        if let MeasureKind::Plancherel(n) = kind {
            if lambda.size() != *n {
                continue;
            }
        }
        sum.add(m.probability(&lambda)?);
    }
    Ok(sum.value())
}

/// One row of [`q_limit_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QLimitRow<T> {
    pub q: T,
    /// Squared type at `ξ = (1−q)η`.
    pub squared: T,
    /// Mixed type at `ξ = (1−q)^{1/2}η`.
    pub mixed: T,
    pub pp: T,
}

/// Both q-Plancherel measures along a schedule `q ↑ 1` next to `μ_PP[λ;η]`.
pub fn q_limit_check<T: Real>(lambda: &Partition, eta: T, q_schedule: &[T]) -> Result<Vec<QLimitRow<T>>> {
    if q_schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("q schedule must be strictly increasing".into()));
    }
    let pp = measure(&MeasureKind::PoissonizedPlancherel(eta), lambda)?;
    q_schedule
        .iter()
        .map(|&q| {
            let sq = QParams::new(q, (T::one() - q) * eta.abs())?;
            let mx = QParams::new(q, (T::one() - q).sqrt() * eta.abs())?;
            Ok(QLimitRow {
                q,
                squared: measure(&MeasureKind::QppSquared(sq), lambda)?,
                mixed: measure(&MeasureKind::QppMixed(mx), lambda)?,
                pp,
            })
        })
        .collect()
}
