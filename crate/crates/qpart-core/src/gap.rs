//! Gap probabilities `ℙ[ℓ(λ) ≤ N]` and `ℙ[λ₁ ≤ N]` for the squared-type measure,
//! by Toeplitz determinants, discrete Fredholm determinants and enumeration.

use crate::error::{Error, Result};
use crate::halfint::HalfInteger;
use crate::kernels::{CorrelationKernel, QBesselKernel};
use crate::linalg::{build, lu_determinant};
use crate::measures::{Measure, MeasureKind, MAX_PARTIAL_SUM_SIZE};
use crate::params::{QParams, Truncation};
use crate::partitions::enumerate_partitions;
use crate::qspecial::{fourier_coefficients, log_macmahon, log_macmahon_exponential, modified_q_bessel};
use crate::qspecial::{modified_q_bessel_rotated, ModifiedKind, Weight};
use crate::scalar::{CompensatedSum, Real};

/// Pivot ratio below which a Toeplitz LU is flagged as numerically singular.
pub const SINGULAR_PIVOT_RATIO: f64 = 1e-14;
/// Largest `N` accepted by scans.
pub const MAX_SCAN_N: usize = 40;
/// Starting Fredholm section size for [`FredholmSize::Auto`].
pub const DEFAULT_FREDHOLM_SIZE: usize = 40;
/// Smallest accepted Fredholm section.
pub const MIN_FREDHOLM_SIZE: usize = 10;
/// Bound on the diagonal mass left outside the Fredholm section.
pub const FREDHOLM_DROPPED_MASS: f64 = 1e-12;
const MAX_FREDHOLM_SIZE: usize = 1280;

/// Which circle weight supplies the Toeplitz symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolVariant {
    /// `I_n = I^(1)_n(2ξq^{1/2};q)`, weight `𝕀`.
    I,
    /// `Ǐ_n = q^{n²/2} I^(2)_n(2ξ;q)`, weight `𝕀̌`.
    ICheck,
}

/// How the symbol coefficients are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ToeplitzSymbol {
    /// Positive-term series; stable for all `q < 1`.
    #[default]
    Rotated,
    /// The ₁φ₁ residue sum; cancels as `q → 1`.
    Hypergeometric,
    /// DFT of the weight on a uniform circle grid.
    Fourier { grid: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToeplitzResult<T> {
    pub n: usize,
    pub shift: i64,
    pub value: T,
    pub variant: SymbolVariant,
    pub params: QParams<T>,
    pub min_pivot_ratio: T,
    /// Set when `min_pivot_ratio < 1e−14`; the value is still returned.
    pub singular: bool,
}

/// Symbol coefficients `c_n` for `n ∈ [lo, hi]`.
pub fn symbol_coefficients<T: Real>(
    variant: SymbolVariant,
    params: &QParams<T>,
    lo: i64,
    hi: i64,
    symbol: ToeplitzSymbol,
) -> Result<Vec<T>> {
    if lo > hi {
        return Ok(Vec::new());
    }
    let q = params.q();
    let tr = params.truncation();
    let xi = params.xi();
    if let ToeplitzSymbol::Fourier { grid } = symbol {
        let w = match variant {
            SymbolVariant::I => Weight::I,
            SymbolVariant::ICheck => Weight::ICheck,
        };
        return Ok(fourier_coefficients(w, params, lo, hi, grid)?.iter().map(|(_, c)| c).collect());
    }
    let eval = |n: i64| -> Result<T> {
        let f: fn(ModifiedKind, i64, T, T, &Truncation<T>) -> Result<T> = match symbol {
            ToeplitzSymbol::Rotated => modified_q_bessel_rotated,
            _ => modified_q_bessel,
        };
        match variant {
            SymbolVariant::I => f(ModifiedKind::First, n, (xi + xi) * q.sqrt(), q, tr),
            SymbolVariant::ICheck => {
                let n2 = T::of_i64(n * n);
                Ok(q.powf(n2 * T::half()) * f(ModifiedKind::Second, n, xi + xi, q, tr)?)
            }
        }
    };
    // c_n = c_{−n}: evaluate each |n| once.
    let m = lo.unsigned_abs().max(hi.unsigned_abs()) as i64;
    let half: Vec<T> = (0..=m).map(eval).collect::<Result<_>>()?;
    Ok((lo..=hi).map(|n| half[n.unsigned_abs() as usize]).collect())
}

/// Row-major `N × N` matrix with entries `c_{−i+j−shift}`.
pub fn toeplitz_matrix<T: Real>(
    variant: SymbolVariant,
    n: usize,
    shift: i64,
    params: &QParams<T>,
    symbol: ToeplitzSymbol,
) -> Result<Vec<T>> {
    let span = n as i64 - 1;
    let (lo, hi) = (-span - shift, span - shift);
    let c = symbol_coefficients(variant, params, lo, hi, symbol)?;
    Ok(build(n, |i, j| c[(j as i64 - i as i64 - shift - lo) as usize]))
}

/// `det_{0≤i,j<N} c_{−i+j−shift}` with the default symbol.
pub fn toeplitz_det<T: Real>(variant: SymbolVariant, n: usize, shift: i64, params: &QParams<T>) -> Result<ToeplitzResult<T>> {
    toeplitz_det_with(variant, n, shift, params, ToeplitzSymbol::default())
}

pub fn toeplitz_det_with<T: Real>(
    variant: SymbolVariant,
    n: usize,
    shift: i64,
    params: &QParams<T>,
    symbol: ToeplitzSymbol,
) -> Result<ToeplitzResult<T>> {
    let mut a = toeplitz_matrix(variant, n, shift, params, symbol)?;
    let lu = lu_determinant(&mut a, n);
    Ok(ToeplitzResult {
        n,
        shift,
        value: lu.value,
        variant,
        params: *params,
        min_pivot_ratio: lu.min_pivot_ratio,
        singular: lu.min_pivot_ratio < T::lit(SINGULAR_PIVOT_RATIO),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GapVariant {
    /// `ℓ(λ) ≤ N`.
    Length,
    /// `λ₁ ≤ N`.
    FirstPart,
}

impl GapVariant {
    pub fn symbol(self) -> SymbolVariant {
        match self {
            GapVariant::Length => SymbolVariant::I,
            GapVariant::FirstPart => SymbolVariant::ICheck,
        }
    }

    pub fn admits(self, lambda: &crate::partitions::Partition, n: usize) -> bool {
        match self {
            GapVariant::Length => lambda.length() <= n,
            GapVariant::FirstPart => lambda.first() <= n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapQuery<T> {
    pub variant: GapVariant,
    pub n: usize,
    pub params: QParams<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FredholmSize {
    Fixed(usize),
    /// Start at 40 and double until the dropped mass is below `1e−12`.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapMethod {
    Toeplitz,
    Fredholm(FredholmSize),
    Enumeration { max_size: usize },
}

/// A gap probability with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapEstimate<T> {
    pub value: T,
    /// Fredholm: diagonal mass outside the section. Enumeration: `1 − ∑` of all enumerated mass.
    /// Toeplitz: zero.
    pub tail: T,
    /// Section size or enumeration cutoff; `N` for Toeplitz.
    pub size: usize,
    /// Toeplitz only: the LU was flagged near-singular.
    pub singular: bool,
}

pub fn gap_probability<T: Real>(query: &GapQuery<T>, method: GapMethod) -> Result<GapEstimate<T>> {
    match method {
        GapMethod::Toeplitz => gap_toeplitz(query),
        GapMethod::Fredholm(size) => gap_fredholm(query, size),
        GapMethod::Enumeration { max_size } => gap_enumeration(query, max_size),
    }
}

fn log_m<T: Real>(params: &QParams<T>) -> Result<T> {
    log_macmahon(params).or_else(|_| log_macmahon_exponential(params))
}

fn gap_toeplitz<T: Real>(query: &GapQuery<T>) -> Result<GapEstimate<T>> {
    let z = toeplitz_det(query.variant.symbol(), query.n, 0, &query.params)?;
    let value = z.value * (-log_m(&query.params)?).exp();
    Ok(GapEstimate { value, tail: T::zero(), size: query.n, singular: z.singular })
}

fn gap_fredholm<T: Real>(query: &GapQuery<T>, size: FredholmSize) -> Result<GapEstimate<T>> {
    let kernel = QBesselKernel::new(query.params)?;
    let tol = T::lit(FREDHOLM_DROPPED_MASS);
    let (mut m, grow) = match size {
        FredholmSize::Fixed(m) if m < MIN_FREDHOLM_SIZE => {
            return Err(Error::LimitExceeded { what: "Fredholm section below minimum", value: m, limit: MIN_FREDHOLM_SIZE })
        }
        FredholmSize::Fixed(m) => (m, false),
        FredholmSize::Auto => (DEFAULT_FREDHOLM_SIZE, true),
    };
    loop {
        let (value, dropped) = fredholm_section(&kernel, query.variant, query.n, m);
        if dropped <= tol {
            return Ok(GapEstimate { value, tail: dropped, size: m, singular: false });
        }
        if !grow || m >= MAX_FREDHOLM_SIZE {
            return Err(Error::TruncationTooSmall { mass: dropped.to_f64().unwrap_or(f64::INFINITY), size: m });
        }
        m *= 2;
    }
}

/// Sites of the `M`-point section and the kernel mass beyond it.
///
/// First part: no particle of `Ξ(λ)` at or above `N+½`, i.e. `det(1 − K)` on `N+½, …, N+M−½`.
/// Length: no hole at or below `−N−½`, i.e. `det K` on `−N−½, …, −N−M+½`.
fn fredholm_section<T: Real>(k: &QBesselKernel<T>, variant: GapVariant, n: usize, m: usize) -> (T, T) {
    let n = n as i64;
    let m_i = m as i64;
    let (sites, beyond): (Vec<HalfInteger>, Box<dyn Fn(i64) -> T + '_>) = match variant {
        GapVariant::FirstPart => {
            let sites = (0..m_i).map(|j| HalfInteger::above(n + j)).collect();
            (sites, Box::new(move |j| k.eval(HalfInteger::above(n + m_i + j), HalfInteger::above(n + m_i + j))))
        }
        GapVariant::Length => {
            let sites = (0..m_i).map(|j| HalfInteger::below(-n - j)).collect();
            (sites, Box::new(move |j| k.hole(HalfInteger::below(-n - m_i - j))))
        }
    };
    let sign = match variant {
        GapVariant::FirstPart => -T::one(),
        GapVariant::Length => T::one(),
    };
    let mut a = build(m, |i, j| {
        let v = sign * k.eval(sites[i], sites[j]);
        if i == j && variant == GapVariant::FirstPart {
            T::one() + v
        } else {
            v
        }
    });
    let det = lu_determinant(&mut a, m).value;
    // Beyond the stored table the kernel diagonal is exactly zero (or one), so this terminates.
    let mut dropped = CompensatedSum::new();
    let reach = (k.table().hi() - k.table().lo()).max(0) + 2;
    for j in 0..reach {
        let d = beyond(j);
        dropped.add(d);
        if d == T::zero() {
            break;
        }
    }
    (det, dropped.value())
}

fn gap_enumeration<T: Real>(query: &GapQuery<T>, max_size: usize) -> Result<GapEstimate<T>> {
    if max_size > MAX_PARTIAL_SUM_SIZE {
        return Err(Error::LimitExceeded { what: "enumeration cutoff", value: max_size, limit: MAX_PARTIAL_SUM_SIZE });
    }
    let measure = Measure::new(MeasureKind::QppSquared(query.params))?;
    let (mut hit, mut all) = (CompensatedSum::new(), CompensatedSum::new());
    for lambda in enumerate_partitions(max_size)? {
        let p = measure.probability(&lambda)?;
        all.add(p);
        if query.variant.admits(&lambda, query.n) {
            hit.add(p);
        }
    }
    Ok(GapEstimate { value: hit.value(), tail: T::one() - all.value(), size: max_size, singular: false })
}

/// Szegő recursion on a symmetric symbol `c_0, …, c_{N}`: returns `E_n = κ_n^{−2} = Z_{n+1}/Z_n`
/// for `n < N` and `x_n = π_n(0)` for `n ≤ N`.
///
/// `π_{n+1}(z) = zπ_n(z) + x_{n+1}π_n^*(z)`, `x_{n+1} = −∑_j π_{n,j} c_{j+1} / E_n`, `E_{n+1} = E_n(1 − x_{n+1}²)`.
pub fn szego_recursion<T: Real>(c: &[T]) -> Result<(Vec<T>, Vec<T>)> {
    let Some(&c0) = c.first() else {
        return Ok((Vec::new(), vec![T::one()]));
    };
    let n_max = c.len() - 1;
    let mut e = Vec::with_capacity(n_max);
    let mut x = vec![T::one()];
    let mut pi = vec![T::one()];
    let mut en = c0;
    for n in 0..n_max {
        if !(en > T::zero()) {
            return Err(Error::Singular { what: "Szegő recursion", index: n });
        }
        e.push(en);
        let mut dot = CompensatedSum::new();
        for (j, &a) in pi.iter().enumerate() {
            dot.add(a * c[j + 1]);
        }
        let xn = -dot.value() / en;
        // π_{n+1} = zπ_n + x π_n^*; π_n^* has coefficients reversed.
        let mut next = vec![T::zero(); pi.len() + 1];
        for (j, &a) in pi.iter().enumerate() {
            next[j + 1] += a;
            next[pi.len() - 1 - j] += xn * a;
        }
        pi = next;
        x.push(xn);
        en *= T::one() - xn * xn;
    }
    Ok((e, x))
}

/// Toeplitz gap probabilities for `N = 0, …, N_max`, accumulated as `∏_{n<N} κ_n^{−2} / M`.
pub fn monotonicity_scan<T: Real>(variant: GapVariant, params: &QParams<T>, n_max: usize) -> Result<Vec<T>> {
    if n_max > MAX_SCAN_N {
        return Err(Error::LimitExceeded { what: "scan N_max", value: n_max, limit: MAX_SCAN_N });
    }
    let c = symbol_coefficients(variant.symbol(), params, 0, n_max as i64, ToeplitzSymbol::default())?;
    let (e, _) = szego_recursion(&c)?;
    let mut out = Vec::with_capacity(n_max + 1);
    let mut acc = (-log_m(params)?).exp();
    out.push(acc);
    for en in e {
        // κ_n^{−2} is a ratio of nested probabilities, hence ≥ 1; rounding can leave it an ulp below.
        acc *= en.max(T::one());
        out.push(acc);
    }
    Ok(out)
}
