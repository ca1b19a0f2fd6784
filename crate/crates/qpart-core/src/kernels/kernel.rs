//! The three correlation kernels and k-point correlation functions.

use crate::error::{Error, Result};
use crate::halfint::HalfInteger;
use crate::kernels::table::{classical_table, schur_tables, BesselSource, BesselTable};
use crate::linalg::{build, lu_determinant};
use crate::measures::{MeasureKind, MiwaTimes};
use crate::params::QParams;
use crate::qspecial::KernelTable;
use crate::scalar::{CompensatedSum, Real};

/// A kernel on `ℤ′ × ℤ′`.
pub trait CorrelationKernel<T: Real> {
    fn kernel(&self, r: HalfInteger, s: HalfInteger) -> T;

    /// `1 − K(r,r)`; implementors override this with a cancellation-free sum.
    fn hole(&self, r: HalfInteger) -> T {
        T::one() - self.kernel(r, r)
    }
}

/// `∑_{m ≥ from} a_m b_{m+shift}` over the stored window of `a`.
fn tail_sum<T: Real>(a: impl Fn(i64) -> T, b: impl Fn(i64) -> T, from: i64, to: i64, shift: i64) -> T {
    let mut s = CompensatedSum::new();
    for m in from..=to {
        s.add(a(m) * b(m + shift));
    }
    s.value()
}

/// The q-Bessel kernel of the squared-type measure.
#[derive(Debug, Clone)]
pub struct QBesselKernel<T> {
    table: BesselTable<T>,
}

impl<T: Real> QBesselKernel<T> {
    pub fn new(params: QParams<T>) -> Result<Self> {
        Self::with_source(params, BesselSource::Series)
    }

    pub fn with_source(params: QParams<T>, source: BesselSource) -> Result<Self> {
        Ok(Self { table: BesselTable::new(params, source)? })
    }

    pub fn table(&self) -> &BesselTable<T> {
        &self.table
    }

    pub fn params(&self) -> &QParams<T> {
        self.table.params()
    }

    /// Christoffel–Darboux form off the diagonal, `∑_{m ≥ r+½} q^m J_m²` on it.
    pub fn eval(&self, r: HalfInteger, s: HalfInteger) -> T {
        let q = self.params().q();
        if r == s || q == T::zero() {
            return self.eval_series(r, s);
        }
        let j = |n| self.table.j(n);
        let d = T::of_i64(r - s) * T::half();
        let num = j(r.ceil()) * j(s.floor()) - j(r.floor()) * j(s.ceil());
        self.params().xi() * num / (q.powf(d) - q.powf(-d))
    }

    /// `∑_{k ∈ ℤ′_{>0}} c_{r+k} c_{s+k}` with `c_n = q^{n/2} J_n`.
    pub fn eval_series(&self, r: HalfInteger, s: HalfInteger) -> T {
        let t = &self.table;
        tail_sum(|m| t.c(m), |m| t.c(m), r.ceil().max(t.lo()), t.hi(), s - r)
    }
}

impl<T: Real> CorrelationKernel<T> for QBesselKernel<T> {
    fn kernel(&self, r: HalfInteger, s: HalfInteger) -> T {
        self.eval(r, s)
    }

    /// `∑_{m ≤ r−½} q^m J_m²`, using `∑_m q^m J_m² = 1`.
    fn hole(&self, r: HalfInteger) -> T {
        let t = &self.table;
        tail_sum(|m| t.c(m), |m| t.c(m), t.lo(), r.floor().min(t.hi()), 0)
    }
}

/// The Schur-measure kernel from Fourier coefficients of `𝕁`.
#[derive(Debug, Clone)]
pub struct SchurKernel<T> {
    j: KernelTable<T>,
    jt: KernelTable<T>,
    grid: usize,
}

impl<T: Real> SchurKernel<T> {
    /// Refines the Fourier grid automatically.
    pub fn new(t: &MiwaTimes<T>, tt: &MiwaTimes<T>) -> Result<Self> {
        let (j, jt, grid) = schur_tables(t, tt, None)?;
        Ok(Self { j, jt, grid })
    }

    pub fn with_grid(t: &MiwaTimes<T>, tt: &MiwaTimes<T>, grid: usize) -> Result<Self> {
        let (j, jt, grid) = schur_tables(t, tt, Some(grid))?;
        Ok(Self { j, jt, grid })
    }

    pub fn grid(&self) -> usize {
        self.grid
    }

    pub fn j_table(&self) -> &KernelTable<T> {
        &self.j
    }

    pub fn j_tilde_table(&self) -> &KernelTable<T> {
        &self.jt
    }

    /// `K(r,s) = ∑_{k ∈ ℤ′_{>0}} J_{r+k} J̃_{s+k}`.
    pub fn eval(&self, r: HalfInteger, s: HalfInteger) -> T {
        tail_sum(|m| self.j.get(m), |m| self.jt.get(m), r.ceil().max(self.j.lo()), self.j.hi(), s - r)
    }
}

impl<T: Real> CorrelationKernel<T> for SchurKernel<T> {
    fn kernel(&self, r: HalfInteger, s: HalfInteger) -> T {
        self.eval(r, s)
    }

    /// `∑_{m ≤ r−½} J_m J̃_m`, using `∑_m J_m J̃_m = 1`.
    fn hole(&self, r: HalfInteger) -> T {
        tail_sum(|m| self.j.get(m), |m| self.jt.get(m), self.j.lo(), r.floor().min(self.j.hi()), 0)
    }
}

/// The discrete Bessel kernel with classical `J_n(2η)`.
#[derive(Debug, Clone)]
pub struct DiscreteBesselKernel<T> {
    eta: T,
    j: KernelTable<T>,
}

impl<T: Real> DiscreteBesselKernel<T> {
    pub fn new(eta: T) -> Result<Self> {
        if !(eta >= T::zero()) {
            return Err(Error::InvalidParameter(format!("eta must be nonnegative, got {eta}")));
        }
        Ok(Self { eta, j: classical_table(eta)? })
    }

    pub fn eval(&self, r: HalfInteger, s: HalfInteger) -> T {
        let j = |n| self.j.get(n);
        if r == s {
            return tail_sum(j, j, r.ceil().max(self.j.lo()), self.j.hi(), 0);
        }
        let num = j(r.floor()) * j(s.ceil()) - j(r.ceil()) * j(s.floor());
        self.eta * num / T::of_i64(r - s)
    }
}

impl<T: Real> CorrelationKernel<T> for DiscreteBesselKernel<T> {
    fn kernel(&self, r: HalfInteger, s: HalfInteger) -> T {
        self.eval(r, s)
    }

    fn hole(&self, r: HalfInteger) -> T {
        let j = |n| self.j.get(n);
        tail_sum(j, j, self.j.lo(), r.floor().min(self.j.hi()), 0)
    }
}

/// Any of the kernels, chosen from a measure.
#[derive(Debug, Clone)]
pub enum Kernel<T> {
    QBessel(QBesselKernel<T>),
    Schur(SchurKernel<T>),
    DiscreteBessel(DiscreteBesselKernel<T>),
}

impl<T: Real> Kernel<T> {
    pub fn for_measure(kind: &MeasureKind<T>) -> Result<Self> {
        Ok(match kind {
            MeasureKind::Plancherel(_) => return Err(Error::NotDeterminantal("fixed-size Plancherel measure")),
            MeasureKind::PoissonizedPlancherel(eta) => Self::DiscreteBessel(DiscreteBesselKernel::new(eta.abs())?),
            MeasureKind::QppSquared(p) => Self::QBessel(QBesselKernel::new(*p)?),
            MeasureKind::QppMixed(_) | MeasureKind::Schur(..) => {
                let (t, tt) = kind.miwa_times().expect("Schur-type measure");
                Self::Schur(SchurKernel::new(&t, &tt)?)
            }
        })
    }
}

impl<T: Real> CorrelationKernel<T> for Kernel<T> {
    fn kernel(&self, r: HalfInteger, s: HalfInteger) -> T {
        match self {
            Self::QBessel(k) => k.kernel(r, s),
            Self::Schur(k) => k.kernel(r, s),
            Self::DiscreteBessel(k) => k.kernel(r, s),
        }
    }

    fn hole(&self, r: HalfInteger) -> T {
        match self {
            Self::QBessel(k) => k.hole(r),
            Self::Schur(k) => k.hole(r),
            Self::DiscreteBessel(k) => k.hole(r),
        }
    }
}

/// `det[K(z_i, z_j)]`, the probability that every point is occupied.
pub fn correlation_with<T: Real, K: CorrelationKernel<T> + ?Sized>(kernel: &K, points: &[HalfInteger]) -> Result<T> {
    for (i, a) in points.iter().enumerate() {
        if points[..i].contains(a) {
            return Err(Error::DuplicatePoint(a.to_string()));
        }
    }
    let n = points.len();
    let mut m = build(n, |i, j| kernel.kernel(points[i], points[j]));
    Ok(lu_determinant(&mut m, n).value)
}

/// k-point correlation function of a determinantal measure.
pub fn correlation<T: Real>(kind: &MeasureKind<T>, points: &[HalfInteger]) -> Result<T> {
    correlation_with(&Kernel::for_measure(kind)?, points)
}

/// `K(r,s)` of the squared-type measure; builds the table on each call.
pub fn q_bessel_kernel<T: Real>(params: &QParams<T>, r: HalfInteger, s: HalfInteger) -> Result<T> {
    Ok(QBesselKernel::new(*params)?.eval(r, s))
}

/// `K(r,s)` of the Schur measure with times `t, t̃`.
pub fn schur_kernel<T: Real>(t: &MiwaTimes<T>, tt: &MiwaTimes<T>, r: HalfInteger, s: HalfInteger) -> Result<T> {
    Ok(SchurKernel::new(t, tt)?.eval(r, s))
}

/// Discrete Bessel kernel `K_dB(r,s)`.
pub fn discrete_bessel_kernel<T: Real>(eta: T, r: HalfInteger, s: HalfInteger) -> Result<T> {
    Ok(DiscreteBesselKernel::new(eta)?.eval(r, s))
}
