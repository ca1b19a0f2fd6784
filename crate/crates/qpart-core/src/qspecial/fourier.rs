use num_complex::Complex;

use crate::error::{Error, Result};
use crate::params::QParams;
use crate::qspecial::weights::Weight;
use crate::scalar::{CompensatedSum, Real};

/// Magnitudes below this are stored as exact zeros.
pub const FLUSH_BELOW: f64 = 1e-300;

/// Default uniform grid for circle transforms.
pub const DEFAULT_GRID: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientFamily {
    /// `I_n = I^(1)_n(2ξq^{1/2};q)`.
    I,
    /// `Ǐ_n = q^{n²/2} I^(2)_n(2ξ;q)`.
    ICheck,
    /// `q^{n/2} J^(3)_n(2ξ;q)`, coefficients of `𝕁`.
    JGen,
    /// Coefficients of a Schur-measure `𝕁(z;t,t̃)`.
    JSchur,
    /// Coefficients of `𝕁(z;t̃,t)`.
    JTildeSchur,
    /// Unscaled `J^(3)_n(2ξ;q)`.
    J3QBessel,
}

/// Immutable table of coefficients `c_n`, `n ∈ [lo, lo + len)`; zero outside.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelTable<T> {
    family: CoefficientFamily,
    lo: i64,
    coeffs: Vec<T>,
}

impl<T: Real> KernelTable<T> {
    pub fn new(family: CoefficientFamily, lo: i64, coeffs: Vec<T>) -> Self {
        let flush = T::from_f64(FLUSH_BELOW).unwrap_or_else(T::min_positive_value);
        let coeffs = coeffs.into_iter().map(|c| if c.abs() < flush { T::zero() } else { c }).collect();
        Self { family, lo, coeffs }
    }

    pub fn family(&self) -> CoefficientFamily {
        self.family
    }

    #[inline]
    pub fn lo(&self) -> i64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    #[inline]
    pub fn get(&self, n: i64) -> T {
        if n < self.lo {
            return T::zero();
        }
        self.coeffs.get((n - self.lo) as usize).copied().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, T)> + '_ {
        self.coeffs.iter().enumerate().map(move |(i, &c)| (self.lo + i as i64, c))
    }
}

/// Windows wider than this go through the FFT.
const DIRECT_DFT_MAX_WIDTH: i64 = 64;

/// Real parts of `(1/G) ∑_j f(θ_j) e^{−inθ_j}` for `n ∈ [n_min, n_max]`.
///
/// Narrow windows are summed directly with phases looked up by `(n·j) mod G`,
/// so large orders do not lose the angle; wide windows use one forward FFT.
pub fn dft_real<T: Real>(samples: &[Complex<T>], n_min: i64, n_max: i64) -> Vec<T> {
    let g = samples.len();
    if g == 0 || n_max < n_min {
        return Vec::new();
    }
    let inv_g = T::one() / T::of_usize(g);
    if n_max - n_min >= DIRECT_DFT_MAX_WIDTH {
        let mut buf = samples.to_vec();
        rustfft::FftPlanner::<T>::new().plan_fft_forward(g).process(&mut buf);
        return (n_min..=n_max).map(|n| buf[n.rem_euclid(g as i64) as usize].re * inv_g).collect();
    }
    let tau = T::TAU() * inv_g;
    let table: Vec<(T, T)> = (0..g).map(|m| {
        let a = tau * T::of_usize(m);
        (a.cos(), a.sin())
    }).collect();
    (n_min..=n_max)
        .map(|n| {
            let step = n.rem_euclid(g as i64) as usize;
            let mut acc = CompensatedSum::new();
            let mut idx = 0usize;
            for f in samples {
                let (c, s) = table[idx];
                acc.add(f.re * c + f.im * s);
                idx += step;
                if idx >= g {
                    idx -= g;
                }
            }
            acc.value() * inv_g
        })
        .collect()
}

/// Samples `f(e^{iθ_j})` on the uniform grid of size `grid`.
pub fn sample_circle<T: Real, F>(grid: usize, mut f: F) -> Result<Vec<Complex<T>>>
where
    F: FnMut(Complex<T>) -> Result<Complex<T>>,
{
    let tau = T::TAU() / T::of_usize(grid);
    (0..grid).map(|j| f(Complex::from_polar(T::one(), tau * T::of_usize(j)))).collect()
}

/// Checks the grid against the requested order range.
pub fn check_grid(grid: usize, n_min: i64, n_max: i64) -> Result<()> {
    let need = 4 * (n_min.unsigned_abs() + n_max.unsigned_abs() + 1) as usize;
    if n_min > n_max || grid < need {
        return Err(Error::Aliasing { grid, n_min, n_max });
    }
    Ok(())
}

/// Fourier coefficients `c_n = (1/2π)∫ w(e^{iθ}) e^{−inθ} dθ` by the uniform-grid DFT.
pub fn fourier_coefficients<T: Real>(
    weight: Weight,
    params: &QParams<T>,
    n_min: i64,
    n_max: i64,
    grid: usize,
) -> Result<KernelTable<T>> {
    check_grid(grid, n_min, n_max)?;
    let samples = sample_circle(grid, |z| weight.eval(z, params))?;
    let family = match weight {
        Weight::I => CoefficientFamily::I,
        Weight::ICheck => CoefficientFamily::ICheck,
        Weight::JGen => CoefficientFamily::JGen,
    };
    Ok(KernelTable::new(family, n_min, dft_real(&samples, n_min, n_max)))
}
