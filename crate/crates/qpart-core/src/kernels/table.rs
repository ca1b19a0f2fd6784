//! Coefficient tables feeding the kernels.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::measures::MiwaTimes;
use crate::params::{QParams, Truncation};
use crate::qspecial::fourier::{dft_real, sample_circle};
use crate::qspecial::{bessel_j, q_bessel, BesselKind, CoefficientFamily, KernelTable, Weight};
use crate::scalar::Real;

/// Coefficients below this are treated as the end of a table.
pub const DECAY_FLOOR: f64 = 1e-40;
/// Largest Fourier grid tried by the automatic refinement.
pub const MAX_GRID: usize = 1 << 17;

/// How `J_n = J^(3)_n(2ξ;q)` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselSource {
    /// The ₁φ₁ series, order by order. Loses digits as `q → 1`.
    Series,
    /// DFT of the generating function `(a/z;q)_∞/(az;q)_∞` on the given grid.
    Fourier { grid: usize },
}

/// `J_n = J^(3)_n(2ξ;q)` over the window where it is above [`DECAY_FLOOR`].
#[derive(Debug, Clone)]
pub struct BesselTable<T> {
    params: QParams<T>,
    j: KernelTable<T>,
}

impl<T: Real> BesselTable<T> {
    pub fn new(params: QParams<T>, source: BesselSource) -> Result<Self> {
        let (q, xi) = (params.q(), params.xi());
        let floor = T::lit(DECAY_FLOOR);
        let (lo, coeffs) = match source {
            BesselSource::Series => {
                let tr = params.truncation();
                let eval = |n: i64| q_bessel(BesselKind::Third, T::of_i64(n), xi + xi, q, tr);
                let mut up = vec![eval(0)?];
                let mut n = 1;
                // Scan by q^{n/2}|J_n|, the size that enters every kernel sum.
                while !decayed(&up, |k| q.powf(T::of_usize(k) * T::half()), floor) {
                    up.push(eval(n)?);
                    n += 1;
                    if n as usize > tr.max_terms {
                        return Err(Error::NonConvergence { what: "q-Bessel table", terms: tr.max_terms });
                    }
                }
                let mut down = Vec::new();
                let mut m = 1;
                loop {
                    down.push(eval(-m)?);
                    m += 1;
                    if decayed(&down, |k| q.powf(-T::of_usize(k + 1) * T::half()), floor) {
                        break;
                    }
                    if m as usize > tr.max_terms {
                        return Err(Error::NonConvergence { what: "q-Bessel table", terms: tr.max_terms });
                    }
                }
                let lo = -(down.len() as i64);
                down.reverse();
                down.extend(up);
                (lo, down)
            }
            BesselSource::Fourier { grid } => {
                let l = (grid / 8).saturating_sub(1) as i64;
                let samples = sample_circle(grid, |z| Weight::JGen.eval(z, &params))?;
                let c = dft_real(&samples, -l, l);
                // c_n = q^{n/2} J_n.
                let j = c
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| v / q.powf(T::of_i64(i as i64 - l) * T::half()))
                    .collect();
                // Below a few ulp of the peak the DFT returns rounding noise.
                let peak = c.iter().fold(T::zero(), |m, x| m.max(x.abs()));
                let noise = (T::epsilon() * T::lit(4.0) * peak).max(floor);
                trim(-l, j, |n| q.powf(T::of_i64(n) * T::half()), noise)
            }
        };
        Ok(Self { params, j: KernelTable::new(CoefficientFamily::J3QBessel, lo, coeffs) })
    }

    pub fn params(&self) -> &QParams<T> {
        &self.params
    }

    /// `J_n`, zero outside the stored window.
    #[inline]
    pub fn j(&self, n: i64) -> T {
        self.j.get(n)
    }

    /// `q^{n/2} J_n`, the coefficient of `z^n` in the generating function.
    #[inline]
    pub fn c(&self, n: i64) -> T {
        let v = self.j.get(n);
        if v == T::zero() {
            v
        } else {
            v * self.params.q().powf(T::of_i64(n) * T::half())
        }
    }

    pub fn lo(&self) -> i64 {
        self.j.lo()
    }

    pub fn hi(&self) -> i64 {
        self.j.hi()
    }

    pub fn table(&self) -> &KernelTable<T> {
        &self.j
    }
}

/// Whether the last two scaled entries of `v` are below `floor`.
fn decayed<T: Real>(v: &[T], scale: impl Fn(usize) -> T, floor: T) -> bool {
    let k = v.len();
    k >= 2 && (k - 2..k).all(|i| (v[i] * scale(i)).abs() < floor)
}

/// Drops leading and trailing entries whose scaled size is below `floor`.
fn trim<T: Real>(lo: i64, v: Vec<T>, scale: impl Fn(i64) -> T, floor: T) -> (i64, Vec<T>) {
    let keep = |i: usize| (v[i] * scale(lo + i as i64)).abs() >= floor;
    let first = (0..v.len()).find(|&i| keep(i)).unwrap_or(0);
    let last = (0..v.len()).rev().find(|&i| keep(i)).unwrap_or(0);
    let mut v = v;
    v.truncate(last + 1);
    v.drain(..first.min(v.len()));
    (lo + first as i64, v)
}

/// Classical `J_n(2η)` over its significant window.
pub fn classical_table<T: Real>(eta: T) -> Result<KernelTable<T>> {
    let x = eta + eta;
    let floor = T::lit(DECAY_FLOOR);
    let mut up = vec![bessel_j(0, x)?];
    // J_n(x) only decays once n exceeds |x|.
    while up.len() < 3 || T::of_usize(up.len()) <= x.abs() || up[up.len() - 1].abs() >= floor {
        up.push(bessel_j(up.len() as i64, x)?);
    }
    let n = up.len() as i64 - 1;
    // J_{−m} = (−1)^m J_m.
    let coeffs = (-n..=n).map(|m| if m < 0 && m % 2 != 0 { -up[(-m) as usize] } else { up[m.unsigned_abs() as usize] }).collect();
    Ok(KernelTable::new(CoefficientFamily::J3QBessel, -n, coeffs))
}

/// Fourier coefficients of `𝕁(z;t,t̃) = exp(∑ t_n z^n − t̃_n z^{−n})` and of `𝕁(z;t̃,t)`.
///
/// The grid doubles from 512 until both tables have decayed at the window edges.
pub fn schur_tables<T: Real>(
    t: &MiwaTimes<T>,
    tt: &MiwaTimes<T>,
    grid: Option<usize>,
) -> Result<(KernelTable<T>, KernelTable<T>, usize)> {
    let tr = Truncation::default();
    let one = Complex::new(T::one(), T::zero());
    let gen = |a: &MiwaTimes<T>, b: &MiwaTimes<T>, g: usize| -> Result<Vec<T>> {
        let l = (g / 8).saturating_sub(1) as i64;
        let s = sample_circle(g, |z| Ok(a.exp_sum(z, &tr)? / b.exp_sum(one / z, &tr)?))?;
        Ok(dft_real(&s, -l, l))
    };
    // DFT output bottoms out at rounding level, so decay is judged relative to it.
    let floor = T::epsilon() * T::lit(64.0);
    let mut g = grid.unwrap_or(512);
    loop {
        let (j, jt) = (gen(t, tt, g)?, gen(tt, t, g)?);
        let l = (g / 8).saturating_sub(1) as i64;
        let edge = |v: &[T]| {
            let big = v.iter().fold(T::zero(), |m, x| m.max(x.abs()));
            v.first().map_or(true, |x| x.abs() <= floor * big) && v.last().map_or(true, |x| x.abs() <= floor * big)
        };
        if grid.is_some() || (edge(&j) && edge(&jt)) {
            return Ok((
                KernelTable::new(CoefficientFamily::JSchur, -l, j),
                KernelTable::new(CoefficientFamily::JTildeSchur, -l, jt),
                g,
            ));
        }
        if g >= MAX_GRID {
            return Err(Error::Aliasing { grid: g, n_min: -l, n_max: l });
        }
        g *= 2;
    }
}
