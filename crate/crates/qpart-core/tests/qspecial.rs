use num_complex::Complex64;
use qpart_core::qspecial::*;
use qpart_core::{QParams, Truncation};

fn tr() -> Truncation<f64> {
    Truncation::default()
}

fn j(kind: BesselKind, nu: f64, x: f64, q: f64) -> f64 {
    q_bessel(kind, nu, x, q, &tr()).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

#[test]
fn pochhammer_matches_long_partial_product() {
    // Oracle: log-sum of 200 factors with error-free ln_1p accumulation.
    let mut logs: Vec<f64> = (0..200).map(|k| (-(0.4 * 0.6f64.powi(k))).ln_1p()).collect();
    logs.sort_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap());
    let oracle = logs.iter().sum::<f64>().exp();
    let v = q_pochhammer(0.4, 0.6, Order::Infinite, &tr()).unwrap();
    assert!(rel(v, oracle) < 1e-14, "{v} vs {oracle}");
}

#[test]
fn one_phi_one_matches_term_oracle() {
    let (xi, q) = (0.3f64, 0.5f64);
    let a = xi * xi * q;
    let mut oracle = 0.0;
    for n in 0..60i32 {
        let num: f64 = (0..n).map(|k| 1.0 - a * q.powi(k)).product();
        let den: f64 = (1..=n).map(|k| 1.0 - q.powi(k)).product();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        oracle += num / den * sign * q.powi(n * (n - 1) / 2) * q.powi(n);
    }
    let spec = HypergeometricSpec::new(vec![a], vec![0.0], q, q);
    let v = basic_hypergeometric(&spec, &tr()).unwrap();
    assert!((v - oracle).abs() < 1e-15, "{v} vs {oracle}");
}

#[test]
fn third_kind_matches_its_phi_definition() {
    let (nu, x, q) = (2.0f64, 0.6f64, 0.5f64);
    let b = q.powf(nu + 1.0);
    let phi = basic_hypergeometric(&HypergeometricSpec::new(vec![0.0], vec![b], q, q * x * x / 4.0), &tr()).unwrap();
    let pre = q_pochhammer(b, q, Order::Infinite, &tr()).unwrap() / q_pochhammer(q, q, Order::Infinite, &tr()).unwrap();
    let want = pre * (x / 2.0).powf(nu) * phi;
    assert!(rel(j(BesselKind::Third, nu, x, q), want) < 1e-14);
}

#[test]
fn macmahon_product_equals_exponential_sum_on_grid() {
    for &xi in &[0.0, 0.1, 0.3, 0.5, 0.7] {
        for &q in &[0.0, 0.2, 0.5, 0.7, 0.9] {
            let p = QParams::new(q, xi).unwrap();
            let a = macmahon(&p).unwrap();
            let b = macmahon_exponential(&p).unwrap();
            assert!(rel(a, b) < 1e-12, "xi={xi} q={q}: {a} vs {b}");
        }
    }
}

#[test]
fn macmahon_displayed_exponential_form() {
    let (xi, q) = (0.3f64, 0.5f64);
    let s: f64 = (1..200)
        .map(|n| {
            let d = q.powf(n as f64 / 2.0) - q.powf(-(n as f64) / 2.0);
            xi.powi(2 * n) / (n as f64 * d * d)
        })
        .sum();
    let m = macmahon(&QParams::new(q, xi).unwrap()).unwrap();
    assert!((m - s.exp()).abs() < 1e-12);
}

#[test]
fn plane_partition_prefix() {
    assert_eq!(&plane_partition_counts(3)[..], &[1, 1, 3, 6]);
}

#[test]
fn third_kind_three_term_recurrence() {
    let (x, q) = (0.6f64, 0.5f64);
    for nu in [-6.0, -3.0, -1.0, 0.0, 1.0, 5.0, 0.5, 2.5] {
        let lhs = j(BesselKind::Third, nu + 1.0, x, q);
        let rhs = (2.0 / x * (1.0 - q.powf(nu)) + x / 2.0) * j(BesselKind::Third, nu, x, q)
            - j(BesselKind::Third, nu - 1.0, x, q);
        let scale = j(BesselKind::Third, nu - 1.0, x, q).abs().max(lhs.abs());
        assert!((lhs - rhs).abs() <= 1e-12 * scale, "nu={nu}: {lhs} vs {rhs}");
    }
}

#[test]
fn first_and_second_kind_recurrences() {
    let (x, q) = (0.9f64, 0.4f64);
    for kind in [BesselKind::First, BesselKind::Second] {
        for nu in [-4.0, -1.0, 0.0, 2.0, 3.5] {
            let lhs = q.powf(nu) * j(kind, nu + 1.0, x, q);
            let rhs = 2.0 / x * (1.0 - q.powf(nu)) * j(kind, nu, x, q) - j(kind, nu - 1.0, x, q);
            let scale = lhs.abs().max(j(kind, nu - 1.0, x, q).abs());
            assert!((lhs - rhs).abs() <= 1e-11 * scale, "{kind:?} nu={nu}");
        }
    }
}

#[test]
fn modified_recurrence_both_routes() {
    let (x, q) = (0.8f64, 0.5f64);
    for kind in [ModifiedKind::First, ModifiedKind::Second] {
        for route in 0..2 {
            let i = |n: i64| {
                if route == 0 {
                    modified_q_bessel(kind, n, x, q, &tr()).unwrap()
                } else {
                    modified_q_bessel_rotated(kind, n, x, q, &tr()).unwrap()
                }
            };
            for nu in -3i64..=4 {
                let qn = q.powi(nu as i32);
                let lhs = qn * i(nu + 1);
                let rhs = -2.0 / x * (1.0 - qn) * i(nu) + i(nu - 1);
                assert!((lhs - rhs).abs() <= 1e-11 * i(nu - 1).abs().max(lhs.abs()), "{kind:?} route {route} nu={nu}");
            }
        }
    }
}

#[test]
fn second_kind_is_first_kind_times_pochhammer() {
    let q = 0.45f64;
    for &x in &[0.3, 1.0, 1.9] {
        for nu in [0.0, 1.0, 2.5, -2.0] {
            let f = q_pochhammer(-x * x / 4.0, q, Order::Infinite, &tr()).unwrap();
            let a = j(BesselKind::Second, nu, x, q);
            let b = f * j(BesselKind::First, nu, x, q);
            assert!(rel(a, b) < 1e-13, "x={x} nu={nu}");
        }
    }
}

#[test]
fn negative_order_reflection() {
    let (x, q) = (0.6f64, 0.5f64);
    for n in 1..=12 {
        let nf = n as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let want = sign * q.powf(nf / 2.0) * j(BesselKind::Third, nf, x * q.powf(nf / 2.0), q);
        assert!(rel(j(BesselKind::Third, -nf, x, q), want) < 1e-13, "n={n}");
    }
}

#[test]
fn half_shift_relations() {
    let (x, q) = (0.7f64, 0.5f64);
    let s = q.sqrt();
    for nu in [0.0f64, 1.0, 3.0, 2.5] {
        for sg in [1.0f64, -1.0] {
            let j1 = |n: f64, y: f64| j(BesselKind::First, n, y, q);
            let lhs = j1(nu, x * s);
            let rhs = q.powf(sg * nu / 2.0) * (j1(nu, x) + sg * x / 2.0 * j1(nu + sg, x));
            assert!(rel(lhs, rhs) < 1e-11, "J nu={nu} sg={sg}");
            if nu.fract() == 0.0 {
                let i1 = |n: f64, y: f64| modified_q_bessel_rotated(ModifiedKind::First, n as i64, y, q, &tr()).unwrap();
                let lhs = i1(nu, x * s);
                let rhs = q.powf(sg * nu / 2.0) * (i1(nu, x) - x / 2.0 * i1(nu + sg, x));
                assert!(rel(lhs, rhs) < 1e-11, "I nu={nu} sg={sg}");
            }
        }
    }
}

#[test]
fn full_shift_relations() {
    let (x, q) = (0.7f64, 0.5f64);
    for nu in [1i64, 3] {
        let nf = nu as f64;
        for sg in [1i64, -1] {
            let s = sg as f64;
            let qp = q.powf(s * nf);
            let j1 = |n: f64, y: f64| j(BesselKind::First, n, y, q);
            let want = (qp - x * x / 4.0) * j1(nf, x) + s * x / 2.0 * (qp + 1.0) * j1(nf + s, x);
            assert!(rel(j1(nf, x * q), want) < 1e-11);
            let i1 = |n: i64, y: f64| modified_q_bessel_rotated(ModifiedKind::First, n, y, q, &tr()).unwrap();
            let want = (qp + x * x / 4.0) * i1(nu, x) - x / 2.0 * (qp + 1.0) * i1(nu + sg, x);
            assert!(rel(i1(nu, x * q), want) < 1e-11);
        }
    }
}

#[test]
fn classical_limit_is_monotone() {
    let eta = 1.0f64;
    let target = bessel_j(0, eta).unwrap();
    let devs: Vec<f64> = [0.9, 0.97, 0.99, 0.999]
        .iter()
        .map(|&q| (j(BesselKind::Third, 0.0, (1.0 - q) * eta, q) - target).abs())
        .collect();
    for w in devs.windows(2) {
        assert!(w[1] < w[0], "{devs:?}");
    }
    assert!(devs[3] < 1e-3);
}

#[test]
fn generating_function_on_circle() {
    let (xi, q) = (0.3f64, 0.5f64);
    let p = QParams::new(q, xi).unwrap();
    let coeffs: Vec<(i64, f64)> = (-40..=60).map(|n| (n, q.powf(n as f64 / 2.0) * j(BesselKind::Third, n as f64, 2.0 * xi, q))).collect();
    for k in 0..32 {
        let z = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / 32.0);
        let series: Complex64 = coeffs.iter().map(|&(n, c)| z.powi(n as i32) * c).sum();
        let closed = Weight::JGen.eval(z, &p).unwrap();
        assert!((series - closed).norm() < 1e-10, "k={k}");
    }
}

#[test]
fn modified_routes_agree() {
    let (xi, q) = (0.3f64, 0.5f64);
    let x1 = 2.0 * xi * q.sqrt();
    for n in 0..=10 {
        let a = modified_q_bessel(ModifiedKind::First, n, x1, q, &tr()).unwrap();
        let b = modified_q_bessel_rotated(ModifiedKind::First, n, x1, q, &tr()).unwrap();
        assert!(rel(a, b) < 1e-12, "kind1 n={n}: {a} vs {b}");
        let a = modified_q_bessel(ModifiedKind::Second, n, 2.0 * xi, q, &tr()).unwrap();
        let b = modified_q_bessel_rotated(ModifiedKind::Second, n, 2.0 * xi, q, &tr()).unwrap();
        assert!(rel(a, b) < 1e-12, "kind2 n={n}: {a} vs {b}");
    }
}

#[test]
fn modified_second_kind_at_origin() {
    let q = 0.4f64;
    let v = modified_q_bessel(ModifiedKind::Second, 0, 0.0, q, &tr()).unwrap();
    // ₁φ₁(0;0;q,q) = ∑ (−1)^n q^{C(n,2)} q^n/(q;q)_n = (q;q)_∞ by Euler.
    let mut phi = 0.0;
    for n in 0..80i32 {
        let den: f64 = (1..=n).map(|k| 1.0 - q.powi(k)).product();
        phi += if n % 2 == 0 { 1.0 } else { -1.0 } * q.powi(n * (n - 1) / 2 + n) / den;
    }
    let qq = q_pochhammer(q, q, Order::Infinite, &tr()).unwrap();
    assert!((v - phi / qq).abs() < 1e-14);
}

#[test]
fn fourier_coefficients_reproduce_symbols() {
    let (xi, q) = (0.3f64, 0.5f64);
    let p = QParams::new(q, xi).unwrap();
    let ti = fourier_coefficients(Weight::I, &p, -10, 10, 512).unwrap();
    let tc = fourier_coefficients(Weight::ICheck, &p, -10, 10, 512).unwrap();
    for n in -10i64..=10 {
        let i1 = modified_q_bessel(ModifiedKind::First, n, 2.0 * xi * q.sqrt(), q, &tr()).unwrap();
        assert!((ti.get(n) - i1).abs() < 1e-11, "I n={n}");
        let i2 = q.powf((n * n) as f64 / 2.0) * modified_q_bessel(ModifiedKind::Second, n, 2.0 * xi, q, &tr()).unwrap();
        assert!((tc.get(n) - i2).abs() < 1e-11, "Icheck n={n}");
        assert!((tc.get(n) - tc.get(-n)).abs() < 1e-15);
    }
    // Symmetry of I^(1) through an independent route.
    assert!((ti.get(3) - ti.get(-3)).abs() < 1e-13);
    let i3 = modified_q_bessel(ModifiedKind::First, 3, 2.0 * xi * q.sqrt(), q, &tr()).unwrap();
    assert!((ti.get(-3) - i3).abs() < 1e-13);
}

#[test]
fn fourier_generating_coefficient() {
    let p = QParams::new(0.5f64, 0.3).unwrap();
    let t = fourier_coefficients(Weight::JGen, &p, -8, 8, 512).unwrap();
    let want = 0.5 * j(BesselKind::Third, 2.0, 0.6, 0.5);
    assert!((t.get(2) - want).abs() < 1e-11);
}

#[test]
fn single_precision_tracks_double() {
    let tr32 = Truncation::<f32>::new(1e-8, 10_000).unwrap();
    let a = q_bessel(BesselKind::Third, 1.0f32, 0.6, 0.5, &tr32).unwrap() as f64;
    let b = j(BesselKind::Third, 1.0, 0.6, 0.5);
    assert!(rel(a, b) < 1e-5);
    let m = macmahon(&QParams::<f32>::new(0.5, 0.3).unwrap()).unwrap() as f64;
    assert!(rel(m, macmahon(&QParams::new(0.5, 0.3).unwrap()).unwrap()) < 1e-5);
}
