//! Invariant suites behind `qpart verify`.

use num_complex::Complex;
use qpart_core::gap::{
    gap_probability, monotonicity_scan, symbol_coefficients, toeplitz_det, FredholmSize, GapMethod, GapQuery, GapVariant, SymbolVariant,
    ToeplitzSymbol,
};
use qpart_core::kernels::{
    alpha0_series, beta0_series, correlation_with, discrete_bessel_kernel, limit_shape, q_bessel_kernel, scaling_probe, Kernel,
    ProbeKind, QBesselKernel, SchurKernel,
};
use qpart_core::measures::{normalization_partial_sum, plancherel_exact, q_limit_check, Measure, MeasureKind, MiwaTimes};
use qpart_core::oppainleve::{
    dpii_limit_check, jump_residual, lax_checks, op_sequence, op_sequence_with, painleve_trajectory, rhp_sample, tau_relation_check,
    y_at_zero_residual, OpSource, OpVariant, PainleveBranch, TrajectorySource,
};
use qpart_core::partitions::{enumerate_partitions, PartitionsOf};
use qpart_core::qspecial::{macmahon, macmahon_exponential, plane_partition_counts, q_bessel, BesselKind, Weight};
use qpart_core::{HalfInteger, Partition, QParams};

use crate::cli::Suite;
use crate::report::Check;

type R = qpart_core::Result<f64>;

const BOTH: [OpVariant; 2] = [OpVariant::Plain, OpVariant::Check];
const Q_SCHEDULE: [f64; 3] = [0.9, 0.97, 0.99];

fn at_most(id: &str, paper_ref: &'static str, tol: f64, f: impl FnOnce() -> R) -> Check {
    match f() {
        Ok(m) => Check::at_most(id, paper_ref, m, tol),
        Err(e) => Check::failed(id, paper_ref, tol, e.to_string()),
    }
}

/// Trend check: `measured` is the largest ratio of successive deviations, which must be below one.
fn shrinking(id: &str, paper_ref: &'static str, f: impl FnOnce() -> qpart_core::Result<Vec<f64>>) -> Check {
    match f() {
        Ok(dev) => {
            let worst = dev.windows(2).map(|w| w[1] / w[0]).fold(0.0f64, f64::max);
            Check { pass: worst < 1.0, ..Check::at_most(id, paper_ref, worst, 1.0) }
        }
        Err(e) => Check::failed(id, paper_ref, 1.0, e.to_string()),
    }
}

fn half(twice: i64) -> HalfInteger {
    HalfInteger::from_twice(twice).expect("odd")
}

fn window(lo2: i64, hi2: i64) -> Vec<HalfInteger> {
    HalfInteger::range(half(lo2), half(hi2)).collect()
}

pub fn run(suite: Suite, p: &QParams<f64>) -> Vec<Check> {
    let suites: Vec<Suite> = match suite {
        Suite::All => vec![Suite::Special, Suite::Measures, Suite::Kernels, Suite::Gap, Suite::Painleve],
        s => vec![s],
    };
    // Suites are independent; ordering is restored by check_id.
    let mut checks: Vec<Check> = std::thread::scope(|scope| {
        let handles: Vec<_> = suites.into_iter().map(|s| scope.spawn(move || one(s, p))).collect();
        handles.into_iter().flat_map(|h| h.join().expect("suite thread")).collect()
    });
    checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    checks
}

fn one(suite: Suite, p: &QParams<f64>) -> Vec<Check> {
    match suite {
        Suite::Special => special(p),
        Suite::Measures => measures(p),
        Suite::Kernels => kernels(p),
        Suite::Gap => gap(p),
        Suite::Painleve => painleve(p),
        Suite::All => unreachable!("expanded by run"),
    }
}

fn special(p: &QParams<f64>) -> Vec<Check> {
    let (xi, q) = (p.xi(), p.q());
    let tr = *p.truncation();
    vec![
        at_most("special.macmahon_forms", "MacMahon product and exponential forms", 1e-12, || {
            Ok((macmahon(p)? / macmahon_exponential(p)? - 1.0).abs())
        }),
        at_most("special.plane_partition_counts", "MacMahon generating function", 0.0, || {
            let want = [1u128, 1, 3, 6, 13, 24, 48, 86];
            let got = plane_partition_counts(7);
            Ok(want.iter().zip(&got).filter(|(a, b)| a != b).count() as f64)
        }),
        at_most("special.negative_order_bessel", "q-Bessel J3 negative order", 1e-13, || {
            let x = xi + xi + 0.1;
            let lhs = q_bessel(BesselKind::Third, -3.0, x, q, &tr)?;
            let rhs = -q.powf(1.5) * q_bessel(BesselKind::Third, 3.0, x * q.powf(1.5), q, &tr)?;
            Ok((lhs - rhs).abs() / rhs.abs().max(1e-300))
        }),
        at_most("special.symbol_fourier", "modified q-Bessel symbols", 1e-10, || {
            let mut worst = 0.0f64;
            for v in [SymbolVariant::I, SymbolVariant::ICheck] {
                let rot = symbol_coefficients(v, p, -6, 6, ToeplitzSymbol::Rotated)?;
                let fft = symbol_coefficients(v, p, -6, 6, ToeplitzSymbol::Fourier { grid: 1024 })?;
                worst = rot.iter().zip(&fft).fold(worst, |m, (a, b)| m.max((a - b).abs()));
            }
            Ok(worst)
        }),
        at_most("special.weight_product", "circle weight I", 1e-13, || {
            let th = 0.7f64;
            let prod: f64 = (0..400)
                .map(|n| {
                    let c = xi * q.powf(n as f64 + 0.5);
                    1.0 / (1.0 + c * c - 2.0 * c * th.cos())
                })
                .product();
            Ok((Weight::I.on_circle(th, p)? - prod).abs() / prod)
        }),
    ]
}

fn measures(p: &QParams<f64>) -> Vec<Check> {
    let norm = |id: &str, kind: MeasureKind<f64>| match normalization_partial_sum(&kind, 25) {
        Ok(s) => {
            let m = 1.0 - s;
            Check { pass: (-1e-14..=1e-8).contains(&m), ..Check::at_most(id, "normalization", m, 1e-8) }
        }
        Err(e) => Check::failed(id, "normalization", 1e-8, e.to_string()),
    };
    vec![
        norm("measures.normalization_squared", MeasureKind::QppSquared(*p)),
        norm("measures.normalization_mixed", MeasureKind::QppMixed(*p)),
        at_most("measures.plancherel_exact", "Plancherel normalization", 0.0, || {
            let mut bad = 0;
            for n in 0..=8 {
                let mut num = num_bigint::BigUint::from(0u8);
                let mut den = num_bigint::BigUint::from(1u8);
                for l in PartitionsOf::new(n) {
                    let (a, b) = plancherel_exact(&l);
                    num += a;
                    den = b;
                }
                bad += usize::from(num != den);
            }
            Ok(bad as f64)
        }),
        shrinking("measures.q_limit", "q to 1 limit of the measures", || {
            let l = Partition::new(vec![2, 1])?;
            let rows = q_limit_check(&l, 0.8f64, &[0.9, 0.99, 0.999])?;
            Ok(rows.iter().map(|r| (r.squared - r.pp).abs()).collect())
        }),
    ]
}

fn kernels(p: &QParams<f64>) -> Vec<Check> {
    let xi = p.xi();
    vec![
        at_most("kernels.schur_equals_qbessel", "q-Bessel kernel theorem", 1e-10, || {
            let k = QBesselKernel::new(*p)?;
            let t = MiwaTimes::principal(p);
            let s = SchurKernel::new(&t, &t)?;
            let mut worst = 0.0f64;
            for r in window(-15, 15) {
                for u in window(-15, 15) {
                    worst = worst.max((s.eval(r, u) - k.eval(r, u)).abs());
                }
            }
            Ok(worst)
        }),
        at_most("kernels.symmetry", "q-Bessel kernel theorem", 1e-15, || {
            let k = QBesselKernel::new(*p)?;
            let mut worst = 0.0f64;
            for r in window(-11, 11) {
                for u in window(-11, 11) {
                    worst = worst.max((k.eval(r, u) - k.eval(u, r)).abs());
                }
            }
            Ok(worst)
        }),
        at_most("kernels.determinantal_law", "q-Bessel kernel theorem", 1e-5, || determinantal_law(p)),
        shrinking("kernels.discrete_bessel_limit", "q to 1 reduction of the kernel", || {
            let (r, s) = (half(1), half(3));
            let target = discrete_bessel_kernel(1.0, r, s)?;
            Q_SCHEDULE.iter().map(|&q| Ok((q_bessel_kernel(&QParams::new(q, 1.0 - q)?, r, s)? - target).abs())).collect()
        }),
        at_most("kernels.limit_shape_left_edge", "limit shape as xi tends to one", 1e-9, || {
            Ok((limit_shape(1.0 - 1e-12)?.a + 2.0 * 2f64.ln()).abs())
        }),
        at_most("kernels.edge_constants", "edge constants alpha0 beta0", 1e-14, || {
            let ls = limit_shape(xi)?;
            let tr = *p.truncation();
            let da = (alpha0_series(xi, &tr)? - ls.alpha0).abs() / ls.alpha0.max(1.0);
            let db = (beta0_series(xi, &tr)? - ls.beta0).abs() / ls.beta0.max(1.0);
            Ok(da.max(db))
        }),
        shrinking("kernels.bulk_probe", "bulk scaling limit", || {
            let ls = limit_shape(0.5)?;
            let r = scaling_probe(ProbeKind::BulkSine { x: 0.5 * (ls.a + ls.b), offset: 1 }, 0.5, &Q_SCHEDULE)?;
            Ok(r.rows.iter().map(|row| row.deviation).collect())
        }),
        shrinking("kernels.edge_probe", "edge scaling limit", || {
            let r = scaling_probe(ProbeKind::EdgeAiry { x: 0.0, y: 0.0 }, 0.5, &Q_SCHEDULE)?;
            Ok(r.rows.iter().map(|row| row.deviation).collect())
        }),
    ]
}

/// Largest gap between `det K` and the enumerated probability over 1- and 2-point sets
/// in `[−11/2, 11/2]`, plus the unenumerated mass beyond size 22.
fn determinantal_law(p: &QParams<f64>) -> R {
    let kind = MeasureKind::QppSquared(*p);
    let m = Measure::new(kind.clone())?;
    let mut states = Vec::new();
    let mut mass = 0.0;
    for l in enumerate_partitions(22)? {
        let w = m.probability(&l)?;
        mass += w;
        states.push((l.fermionic(l.length() + 16), w));
    }
    let k = Kernel::for_measure(&kind)?;
    let pts = window(-11, 11);
    let prob = |set: &[HalfInteger]| -> f64 { states.iter().filter(|(f, _)| set.iter().all(|&r| f.contains(r))).map(|s| s.1).sum() };
    let mut worst = 0.0f64;
    for (i, &a) in pts.iter().enumerate() {
        worst = worst.max((correlation_with(&k, &[a])? - prob(&[a])).abs());
        for &b in &pts[i + 1..] {
            worst = worst.max((correlation_with(&k, &[a, b])? - prob(&[a, b])).abs());
        }
    }
    Ok(worst + (1.0 - mass).max(0.0))
}

fn gap(p: &QParams<f64>) -> Vec<Check> {
    let routes = |route: GapMethod| -> R {
        let mut worst = 0.0f64;
        for variant in [GapVariant::Length, GapVariant::FirstPart] {
            for n in 0..=6 {
                let query = GapQuery { variant, n, params: *p };
                let t = gap_probability(&query, GapMethod::Toeplitz)?.value;
                worst = worst.max((t - gap_probability(&query, route)?.value).abs());
            }
        }
        Ok(worst)
    };
    vec![
        at_most("gap.toeplitz_vs_fredholm", "Toeplitz and Fredholm gap formulas", 1e-10, || {
            routes(GapMethod::Fredholm(FredholmSize::Auto))
        }),
        at_most("gap.toeplitz_vs_enumeration", "Toeplitz gap formula", 1e-6, || routes(GapMethod::Enumeration { max_size: 30 })),
        at_most("gap.z_infinity", "Z_infinity equals MacMahon", 1e-10, || {
            let m = macmahon(p)?;
            let mut worst = 0.0f64;
            for v in [SymbolVariant::I, SymbolVariant::ICheck] {
                worst = worst.max((toeplitz_det(v, 30, 0, p)?.value / m - 1.0).abs());
            }
            Ok(worst)
        }),
        at_most("gap.monotone", "gap probabilities", 0.0, || {
            let mut worst = 0.0f64;
            for v in [GapVariant::Length, GapVariant::FirstPart] {
                let s = monotonicity_scan(v, p, 30)?;
                worst = s.windows(2).fold(worst, |m, w| m.max(w[0] - w[1]));
            }
            Ok(worst)
        }),
    ]
}

fn painleve(p: &QParams<f64>) -> Vec<Check> {
    let positive = p.xi() > 0.0;
    let mut out = vec![
        at_most("painleve.zx_relation", "Z and x relation", 1e-9, || {
            let mut worst = 0.0f64;
            for v in BOTH {
                let s = op_sequence(v, p, 15)?;
                for n in 1..=15 {
                    worst = worst.max(s.zx_residual(n).map_or(f64::NAN, f64::abs));
                }
            }
            Ok(worst)
        }),
        at_most("painleve.tau_relation", "tau-function relation", 1e-9, || {
            let mut worst = 0.0f64;
            for v in BOTH {
                let s = op_sequence(v, p, 12)?;
                for (n, r) in tau_relation_check(&s) {
                    if n >= 2 {
                        worst = worst.max(r.abs());
                    }
                }
            }
            Ok(worst)
        }),
        at_most("painleve.rhp_det", "Riemann-Hilbert problem", 1e-8, || {
            let mut worst = 0.0f64;
            for v in BOTH {
                let s = op_sequence(v, p, 8)?;
                for n in 1..=8 {
                    worst = worst.max((rhp_sample(&s, n, Complex::new(2.0, 0.0))?.det_y - 1.0).norm());
                }
            }
            Ok(worst)
        }),
        at_most("painleve.rhp_value_at_zero", "Y at the origin", 1e-8, || {
            let mut worst = 0.0f64;
            for v in BOTH {
                let s = op_sequence(v, p, 8)?;
                for n in 1..=8 {
                    worst = worst.max(y_at_zero_residual(&s, n)?);
                }
            }
            Ok(worst)
        }),
        at_most("painleve.rhp_jump", "Riemann-Hilbert jump", 1e-4, || {
            let mut worst = 0.0f64;
            for v in BOTH {
                let s = op_sequence(v, p, 6)?;
                for n in [1, 3, 6] {
                    for phi in [0.3, 2.0, -1.2] {
                        worst = worst.max(jump_residual(&s, n, phi, 1e-2)?);
                    }
                }
            }
            Ok(worst)
        }),
    ];
    out.push(shrinking("painleve.dpii_x", "d-P_II limit", || {
        Ok(dpii_limit_check(1.0, &Q_SCHEDULE, 3..=3)?.iter().map(|r| r.residual_x).collect())
    }));
    out.push(shrinking("painleve.dpii_y", "d-P_II limit", || {
        Ok(dpii_limit_check(1.0, &Q_SCHEDULE, 3..=3)?.iter().map(|r| r.residual_y).collect())
    }));
    if !positive {
        // The remaining checks divide by x_n, which vanishes identically at ξ = 0.
        return out;
    }
    for (branch, id) in [(PainleveBranch::X, "painleve.qpv_x"), (PainleveBranch::Y, "painleve.qpv_y")] {
        out.push(at_most(id, "q-P_V recurrence", 1e-7, || {
            let st = painleve_trajectory(branch, TrajectorySource::Determinant(OpSource::Toeplitz), p, 13)?;
            Ok((1..=12).map(|n| st.residual(n).unwrap_or(f64::NAN)).fold(0.0, f64::max))
        }));
    }
    out.push(at_most("painleve.recurrence_vs_determinant", "q-P_V recurrence", 1e-7, || {
        let mut worst = 0.0f64;
        for b in [PainleveBranch::X, PainleveBranch::Y] {
            let rec = painleve_trajectory(b, TrajectorySource::Recurrence, p, 12)?;
            let det = painleve_trajectory(b, TrajectorySource::Determinant(OpSource::SchurSum), p, 12)?;
            for (a, d) in rec.values.iter().zip(&det.values) {
                worst = worst.max((a - d).abs() / d.abs());
            }
        }
        Ok(worst)
    }));
    out.push(at_most("painleve.bessel_tail", "q-Bessel asymptotics of the trajectory", 1e-6, || {
        let mut worst = 0.0f64;
        for b in [PainleveBranch::X, PainleveBranch::Y] {
            let st = painleve_trajectory(b, TrajectorySource::Determinant(OpSource::SchurSum), p, 14)?;
            worst = worst.max((st.bessel_ratio(14)? - 1.0).abs());
        }
        Ok(worst)
    }));
    let lax = |f: fn(&qpart_core::oppainleve::LaxReport<f64>) -> f64, variants: &[OpVariant]| -> R {
        let probes = [
            Complex::new(0.37, 0.21),
            Complex::new(-0.8, 0.5),
            Complex::new(1.3, -0.4),
            Complex::new(0.05, 0.9),
            Complex::new(-1.7, -1.1),
        ];
        let mut worst = 0.0f64;
        for &v in variants {
            let s = op_sequence_with(v, OpSource::SchurSum, p, 12)?;
            for n in 1..=10 {
                worst = worst.max(f(&lax_checks(n, &s, &probes)?));
            }
        }
        Ok(worst)
    };
    out.push(at_most("painleve.lax_compatibility", "Lax pair compatibility", 1e-8, || lax(|r| r.max_compatibility(), &BOTH)));
    out.push(at_most("painleve.lax_inversion", "T inversion lemma", 1e-8, || {
        lax(|r| r.max_inversion().unwrap_or(f64::NAN), &[OpVariant::Plain])
    }));
    out.push(at_most("painleve.det_k", "T inversion lemma", 4.0 * f64::EPSILON, || lax(|r| (r.det_k + 1.0).abs(), &BOTH)));
    out
}
