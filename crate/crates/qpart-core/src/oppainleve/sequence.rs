//! Orthogonal polynomials on the unit circle for the weights `𝕀` and `𝕀̌`.

use crate::error::{Error, Result};
use crate::gap::{toeplitz_det, SymbolVariant};
use crate::measures::{MiwaTimes, MAX_PARTIAL_SUM_SIZE};
use crate::params::QParams;
use crate::partitions::PartitionsOf;
use crate::scalar::{CompensatedSum, Real};

/// Largest `n_max` accepted by [`op_sequence`].
pub const MAX_OP_N: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpVariant {
    /// Weight `𝕀`; Verblunsky data `x_n`.
    Plain,
    /// Weight `𝕀̌`; Verblunsky data `y_n`.
    Check,
}

impl OpVariant {
    pub fn symbol(self) -> SymbolVariant {
        match self {
            OpVariant::Plain => SymbolVariant::I,
            OpVariant::Check => SymbolVariant::ICheck,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OpSource {
    /// `Z_n` and the shifted `Z^{(1)}_n` as Toeplitz determinants by LU.
    #[default]
    Toeplitz,
    /// The same determinants expanded into positive Schur-function sums, which keep
    /// full relative accuracy in `x_n` however small it gets.
    SchurSum,
}

/// `Z_0..=Z_{n_max+1}`, `κ_n²` and `x_n = π_n(0)` for `n ≤ n_max`.
///
/// Invariants: `x_0 = 1`, `κ_n² = Z_n/Z_{n+1} > 0`, `Z_{n+1}Z_{n−1}/Z_n² = 1 − x_n²`.
#[derive(Debug, Clone, PartialEq)]
pub struct OpSequence<T> {
    pub variant: OpVariant,
    pub source: OpSource,
    pub params: QParams<T>,
    pub n_max: usize,
    /// `Z_n`, `n = 0..=n_max+1`.
    pub z: Vec<T>,
    /// `κ_n² = Z_n/Z_{n+1}`, `n = 0..=n_max`.
    pub kappa_sq: Vec<T>,
    /// `x_n` (or `y_n`), `n = 0..=n_max`.
    pub x: Vec<T>,
}

pub fn op_sequence<T: Real>(variant: OpVariant, params: &QParams<T>, n_max: usize) -> Result<OpSequence<T>> {
    op_sequence_with(variant, OpSource::default(), params, n_max)
}

pub fn op_sequence_with<T: Real>(variant: OpVariant, source: OpSource, params: &QParams<T>, n_max: usize) -> Result<OpSequence<T>> {
    if n_max > MAX_OP_N {
        return Err(Error::LimitExceeded { what: "OP sequence n_max", value: n_max, limit: MAX_OP_N });
    }
    let (z, z1) = match source {
        OpSource::Toeplitz => {
            let sym = variant.symbol();
            let mut z = Vec::with_capacity(n_max + 2);
            let mut z1 = Vec::with_capacity(n_max + 1);
            for n in 0..=n_max + 1 {
                let d = toeplitz_det(sym, n, 0, params)?;
                if d.singular || !(d.value > T::zero()) {
                    return Err(Error::Singular { what: "Toeplitz determinant Z_n", index: n });
                }
                z.push(d.value);
                if n <= n_max {
                    z1.push(toeplitz_det(sym, n, 1, params)?.value);
                }
            }
            (z, z1)
        }
        OpSource::SchurSum => schur_sums(variant, params, n_max)?,
    };
    let kappa_sq = (0..=n_max).map(|n| z[n] / z[n + 1]).collect();
    let x = (0..=n_max).map(|n| if n % 2 == 0 { z1[n] / z[n] } else { -z1[n] / z[n] }).collect();
    Ok(OpSequence { variant, source, params: *params, n_max, z, kappa_sq, x })
}

impl<T: Real> OpSequence<T> {
    /// `Z_{n+1}Z_{n−1}/Z_n² − (1 − x_n²)` for `1 ≤ n ≤ n_max`.
    pub fn zx_residual(&self, n: usize) -> Option<T> {
        if n == 0 || n > self.n_max {
            return None;
        }
        let xn = self.x[n];
        Some(self.z[n + 1] * self.z[n - 1] / (self.z[n] * self.z[n]) - (T::one() - xn * xn))
    }
}

/// Cauchy–Binet expansions with `s = s_λ(principal)`:
/// plain `Z_n = ∑_{ℓ(λ)≤n} s_λ²`, `Z^{(1)}_n = ∑_{ℓ(λ)≤n} s_λ s_{λ+(1^n)}`;
/// check `Ž_n = ∑_{λ₁≤n} s_λ²`, `Ž^{(1)}_n = ∑_{λ₁≤n} s_λ s_{(n,λ)}`.
/// Sizes are added until two consecutive shells change no sum beyond `1e−18` relative.
fn schur_sums<T: Real>(variant: OpVariant, params: &QParams<T>, n_max: usize) -> Result<(Vec<T>, Vec<T>)> {
    let t = MiwaTimes::principal(params);
    let mut z: Vec<CompensatedSum<T>> = (0..=n_max + 1).map(|_| CompensatedSum::new()).collect();
    let mut z1: Vec<CompensatedSum<T>> = (0..=n_max).map(|_| CompensatedSum::new()).collect();
    let tol = T::lit(1e-18);
    let mut quiet = 0;
    for size in 0..=MAX_PARTIAL_SUM_SIZE {
        let mut shell = vec![T::zero(); n_max + 2];
        let mut shell1 = vec![T::zero(); n_max + 1];
        for lambda in PartitionsOf::new(size) {
            let s = t.schur(&lambda);
            let reach = match variant {
                OpVariant::Plain => lambda.length(),
                OpVariant::Check => lambda.first(),
            };
            for n in reach..=n_max + 1 {
                shell[n] += s * s;
                if n <= n_max {
                    let partner = match variant {
                        OpVariant::Plain => lambda.add_column(n),
                        OpVariant::Check => lambda.prepend_row(n)?,
                    };
                    shell1[n] += s * t.schur(&partner);
                }
            }
        }
        let mut settled = true;
        for (acc, v) in z.iter_mut().zip(&shell).chain(z1.iter_mut().zip(&shell1)) {
            acc.add(*v);
            if v.abs() > tol * acc.value().abs() {
                settled = false;
            }
        }
        quiet = if settled { quiet + 1 } else { 0 };
        if quiet >= 2 {
            return Ok((z.iter().map(|s| s.value()).collect(), z1.iter().map(|s| s.value()).collect()));
        }
    }
    Err(Error::NonConvergence { what: "Schur-sum expansion of Toeplitz determinants", terms: MAX_PARTIAL_SUM_SIZE })
}
