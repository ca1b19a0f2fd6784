use num_complex::Complex;
use qpart_core::gap::{toeplitz_det, SymbolVariant};
use qpart_core::oppainleve::{
    dpii_limit_check, inner_product_quadrature, inner_product_series, jump_residual, lax_checks, lax_matrices, monic_polynomials,
    normalization_residual, op_sequence, op_sequence_with, painleve_trajectory, rhp_sample, tau_relation_check, unscaled_residual,
    y_at_zero_residual, OpSource, OpVariant, PainleveBranch, TrajectorySource,
};
use qpart_core::qspecial::{modified_q_bessel, ModifiedKind};
use qpart_core::{Error, QParams, Truncation};

fn p(xi: f64, q: f64) -> QParams<f64> {
    QParams::new(q, xi).unwrap()
}

const BOTH: [OpVariant; 2] = [OpVariant::Plain, OpVariant::Check];

fn probes() -> Vec<Complex<f64>> {
    vec![
        Complex::new(0.37, 0.21),
        Complex::new(-0.8, 0.5),
        Complex::new(1.3, -0.4),
        Complex::new(0.05, 0.9),
        Complex::new(-1.7, -1.1),
    ]
}

/// Moments `c_k = ∮ z^{−k} w(z) dz/(2πiz)` of the cosine-product weight by the trapezoidal rule.
fn moments(variant: OpVariant, xi: f64, q: f64, kmax: usize, grid: usize) -> Vec<f64> {
    let mut c = vec![0.0; kmax + 1];
    for j in 0..grid {
        let th = std::f64::consts::TAU * j as f64 / grid as f64;
        let mut w = 1.0;
        for n in 0..400 {
            let a = xi * q.powf(n as f64 + 0.5);
            match variant {
                OpVariant::Plain => w /= 1.0 + a * a - 2.0 * a * th.cos(),
                OpVariant::Check => w *= 1.0 + a * a + 2.0 * a * th.cos(),
            }
        }
        for (k, ck) in c.iter_mut().enumerate() {
            *ck += w * (k as f64 * th).cos() / grid as f64;
        }
    }
    c
}

/// Monic OPs by Gram–Schmidt on `{1, z, …, z^N}` with `⟨z^j, z^k⟩ = c_{|j−k|}`.
fn gram_schmidt(c: &[f64], n: usize) -> Vec<Vec<f64>> {
    let ip = |a: &[f64], b: &[f64]| {
        let mut s = 0.0;
        for (j, x) in a.iter().enumerate() {
            for (k, y) in b.iter().enumerate() {
                s += x * y * c[j.abs_diff(k)];
            }
        }
        s
    };
    let mut out: Vec<Vec<f64>> = Vec::new();
    for k in 0..=n {
        let mut v = vec![0.0; k + 1];
        v[k] = 1.0;
        // Two passes of modified Gram–Schmidt.
        for _ in 0..2 {
            for prev in &out {
                let r = ip(&v, prev) / ip(prev, prev);
                for (i, pc) in prev.iter().enumerate() {
                    v[i] -= r * pc;
                }
            }
        }
        out.push(v);
    }
    out
}

#[test]
fn first_entries_are_trivial() {
    let pr = p(0.3, 0.5);
    let tr = Truncation::default();
    let i0 = modified_q_bessel(ModifiedKind::First, 0, 2.0 * 0.3 * 0.5f64.sqrt(), 0.5, &tr).unwrap();
    let s = op_sequence(OpVariant::Plain, &pr, 3).unwrap();
    assert_eq!(s.x[0], 1.0);
    assert!((s.kappa_sq[0] - 1.0 / i0).abs() < 1e-15);
    assert!(matches!(op_sequence(OpVariant::Plain, &pr, 26), Err(Error::LimitExceeded { .. })));
}

#[test]
fn zx_relation_and_positivity() {
    let pr = p(0.3, 0.5);
    for v in BOTH {
        let s = op_sequence(v, &pr, 15).unwrap();
        for n in 1..=15 {
            assert!(s.zx_residual(n).unwrap().abs() <= 1e-9, "{v:?} n={n}");
            let w = 1.0 - s.x[n] * s.x[n];
            assert!(w > 0.0 && w <= 1.0);
            assert!(s.kappa_sq[n] > 0.0);
        }
    }
}

#[test]
fn gram_schmidt_oracle() {
    for v in BOTH {
        let c = moments(v, 0.3, 0.5, 10, 256);
        let polys = gram_schmidt(&c, 10);
        let s = op_sequence(v, &p(0.3, 0.5), 10).unwrap();
        let mono = monic_polynomials(&s.x);
        for n in 0..=10 {
            assert!((polys[n][0] - s.x[n]).abs() <= 1e-8, "{v:?} n={n}: {} vs {}", polys[n][0], s.x[n]);
            for (a, b) in polys[n].iter().zip(&mono[n]) {
                assert!((a - b).abs() <= 1e-8);
            }
        }
    }
}

#[test]
fn schur_sums_reproduce_determinants() {
    let pr = p(0.3, 0.5);
    for v in BOTH {
        let t = op_sequence_with(v, OpSource::Toeplitz, &pr, 12).unwrap();
        let s = op_sequence_with(v, OpSource::SchurSum, &pr, 12).unwrap();
        for n in 0..=12 {
            assert!((t.z[n] - s.z[n]).abs() <= 1e-13 * s.z[n]);
            assert!((t.x[n] - s.x[n]).abs() <= 1e-14, "{v:?} n={n}");
        }
        // Positive sums keep the exact sign pattern `(−1)^n` however small `x_n` gets.
        for n in 1..=12 {
            assert!(s.x[n] != 0.0 && (s.x[n] < 0.0) == (n % 2 == 1), "{v:?} n={n}");
        }
    }
}

#[test]
fn jackson_series_matches_quadrature() {
    let pr = p(0.3, 0.5);
    let one = [1.0];
    let i0 = toeplitz_det(SymbolVariant::I, 1, 0, &pr).unwrap().value;
    let s = inner_product_series(&one, &one, &pr).unwrap();
    assert!((s - i0).abs() <= 1e-13, "{s} vs {i0}");
    // Products up to degree four; the series cancels harder as the degree grows.
    let polys: [&[f64]; 4] = [&[1.0], &[0.3, -1.0], &[0.2, 0.5, 2.0], &[-1.0, 0.0, 0.7, 1.5]];
    for f in &polys[..3] {
        for g in &polys[..3] {
            let a = inner_product_series(f, g, &pr).unwrap();
            let b = inner_product_quadrature(f, g, &pr, 256).unwrap();
            assert!((a - b).abs() <= 1e-10 * b.abs().max(1.0), "{f:?} {g:?}: {a} vs {b}");
        }
    }
    // Bilinearity and positivity.
    let (f, g, h) = ([0.3, -1.0, 0.0], [0.2, 0.5, 2.0], [-1.0, 0.4, 0.7]);
    let fg: Vec<f64> = f.iter().zip(&g).map(|(a, b)| a + b).collect();
    let lhs = inner_product_series(&fg, &h, &pr).unwrap();
    let rhs = inner_product_series(&f, &h, &pr).unwrap() + inner_product_series(&g, &h, &pr).unwrap();
    // Exact termwise; the residue series carries its peak term times ε, about 1e3ε at degree four.
    assert!((lhs - rhs).abs() <= 1e-11 * lhs.abs().max(1.0), "{lhs} vs {rhs}");
    for f in polys {
        assert!(inner_product_series(f, f, &pr).unwrap() > 0.0);
    }
    assert!(matches!(inner_product_series(&one, &one, &p(0.0, 0.5)), Err(Error::Domain(_))));
}

#[test]
fn recurrence_tracks_determinants() {
    let pr = p(0.3, 0.5);
    for b in [PainleveBranch::X, PainleveBranch::Y] {
        let rec = painleve_trajectory(b, TrajectorySource::Recurrence, &pr, 12).unwrap();
        let det = painleve_trajectory(b, TrajectorySource::Determinant(OpSource::SchurSum), &pr, 12).unwrap();
        assert_eq!(rec.values.len(), 13);
        assert!((det.values[0] - 0.3f64.sqrt()).abs() < 1e-16);
        assert_eq!(rec.values[0], det.values[0]);
        for n in 0..=12 {
            let (a, d) = (rec.values[n], det.values[n]);
            assert!((a - d).abs() <= 1e-7 * d.abs(), "{b:?} n={n}: {a} vs {d}");
        }
    }
}

#[test]
fn native_recurrence_loses_the_recessive_solution() {
    // Errors grow like ε/𝗑_n²: fine for a few steps, then the dominant solution takes over.
    let pr = p(0.3, 0.5);
    let det = painleve_trajectory(PainleveBranch::X, TrajectorySource::Determinant(OpSource::SchurSum), &pr, 12).unwrap();
    let nat = painleve_trajectory(PainleveBranch::X, TrajectorySource::NativeRecurrence, &pr, 12).unwrap();
    let rel = |n: usize| (nat.values[n] / det.values[n] - 1.0).abs();
    assert!(rel(3) < 1e-9);
    assert!(rel(12) > 1.0);
}

#[test]
fn qpv_residuals_on_grid() {
    for xi in [0.2, 0.3] {
        for q in [0.4, 0.5] {
            for b in [PainleveBranch::X, PainleveBranch::Y] {
                let st = painleve_trajectory(b, TrajectorySource::Determinant(OpSource::Toeplitz), &p(xi, q), 13).unwrap();
                for n in 1..=12 {
                    let r = st.residual(n).unwrap();
                    assert!(r <= 1e-7, "{b:?} ({xi},{q}) n={n}: {r}");
                }
            }
        }
    }
}

#[test]
fn unscaled_and_scaled_forms_agree() {
    let pr = p(0.3, 0.5);
    let seq = op_sequence_with(OpVariant::Plain, OpSource::SchurSum, &pr, 12).unwrap();
    let st = painleve_trajectory(PainleveBranch::X, TrajectorySource::Determinant(OpSource::SchurSum), &pr, 12).unwrap();
    for n in 1..12 {
        assert!(unscaled_residual(&seq.x, &pr, n).unwrap() <= 1e-12 * seq.x[n].abs().max(1e-300) + 1e-300);
        assert!(st.residual(n).unwrap() <= 1e-12);
    }
    // A perturbed sequence breaks both.
    let mut bad = seq.x.clone();
    bad[1] *= 1.01;
    assert!(unscaled_residual(&bad, &pr, 1).unwrap() > 1e-4);
    let mut st_bad = st.clone();
    st_bad.values[1] *= 1.01;
    assert!(st_bad.residual(1).unwrap() > 1e-4);
}

#[test]
fn dpii_residual_shrinks_as_q_tends_to_one() {
    let rows = dpii_limit_check(1.0, &[0.9, 0.97, 0.99], 3..=3).unwrap();
    assert_eq!(rows.len(), 3);
    for w in rows.windows(2) {
        assert!(w[1].residual_x < w[0].residual_x, "{rows:?}");
        assert!(w[1].residual_y < w[0].residual_y, "{rows:?}");
    }
    assert!(matches!(dpii_limit_check(1.0, &[0.9], 0..=2), Err(Error::InvalidParameter(_))));
}

#[test]
fn lax_pair_residuals() {
    let pr = p(0.3, 0.5);
    for v in BOTH {
        let seq = op_sequence_with(v, OpSource::SchurSum, &pr, 12).unwrap();
        for n in 1..=10 {
            let m = lax_matrices(n, &seq).unwrap();
            assert_eq!(m.u1, [[1.0, 0.0], [0.0, 0.0]]);
            let d = m.u0[0][0] * m.u0[1][1] - m.u0[0][1] * m.u0[1][0];
            assert!(d.abs() <= 1e-16);
            let rep = lax_checks(n, &seq, &probes()).unwrap();
            assert!(rep.max_compatibility() <= 1e-8, "{v:?} n={n}: {rep:?}");
            assert_eq!(rep.det_k, -1.0);
            assert!(rep.k_involution <= 1e-16);
            match v {
                OpVariant::Plain => assert!(rep.max_inversion().unwrap() <= 1e-8, "n={n}: {rep:?}"),
                OpVariant::Check => assert!(rep.max_inversion().is_none()),
            }
        }
    }
    let seq = op_sequence(OpVariant::Plain, &pr, 5).unwrap();
    let pole = Complex::new(0.3 / 0.5f64.sqrt(), 0.0);
    assert!(matches!(lax_checks(2, &seq, &[pole]), Err(Error::Domain(_))));
    assert!(matches!(lax_matrices(0, &seq), Err(Error::InvalidParameter(_))));
}

#[test]
fn rhp_determinant_and_value_at_zero() {
    let pr = p(0.3, 0.5);
    for v in BOTH {
        let seq = op_sequence(v, &pr, 9).unwrap();
        for n in 1..=8 {
            let s = rhp_sample(&seq, n, Complex::new(2.0, 0.0)).unwrap();
            assert!((s.det_y - 1.0).norm() <= 1e-8, "{v:?} n={n}: {}", s.det_y);
            assert!(y_at_zero_residual(&seq, n).unwrap() <= 1e-8);
        }
    }
}

#[test]
fn rhp_jump_and_normalization() {
    let pr = p(0.3, 0.5);
    for v in BOTH {
        let seq = op_sequence(v, &pr, 6).unwrap();
        for n in [1, 3, 6] {
            for phi in [0.3, 2.0, -1.2] {
                let r = jump_residual(&seq, n, phi, 1e-2).unwrap();
                assert!(r <= 1e-4, "{v:?} n={n} phi={phi}: {r}");
            }
            // `O(1/|z|)`; larger |z| would cancel `z^{−n}` against O(1) quadrature terms.
            let far = normalization_residual(&seq, n, Complex::new(4.0, 3.0)).unwrap();
            let farther = normalization_residual(&seq, n, Complex::new(40.0, 30.0)).unwrap();
            assert!(farther < 0.2 * far, "{v:?} n={n}: {far} {farther}");
        }
    }
    let seq = op_sequence(OpVariant::Plain, &pr, 3).unwrap();
    assert!(matches!(rhp_sample(&seq, 1, Complex::new(1.0, 0.0)), Err(Error::Domain(_))));
}

#[test]
fn tau_relation() {
    let pr = p(0.3, 0.5);
    for v in BOTH {
        let seq = op_sequence(v, &pr, 12).unwrap();
        for (n, r) in tau_relation_check(&seq) {
            if n >= 2 {
                assert!(r.abs() <= 1e-9, "{v:?} n={n}: {r}");
            }
        }
    }
}

#[test]
fn linear_tail_and_bessel_asymptotics() {
    // Deviations shrink monotonically until they reach rounding level, and stay there.
    let floor = 1e-13;
    let settles = |dev: &[f64]| {
        let k = dev.iter().position(|&d| d <= floor).expect("reaches rounding level");
        dev[..k].windows(2).all(|w| w[1] < w[0]) && dev[k..].iter().all(|&d| d <= floor) && k <= 12
    };
    let pr = p(0.3, 0.5);
    for b in [PainleveBranch::X, PainleveBranch::Y] {
        let st = painleve_trajectory(b, TrajectorySource::Determinant(OpSource::SchurSum), &pr, 20).unwrap();
        let tail: Vec<f64> = (1..20).map(|n| st.linear_tail_residual(n).unwrap()).collect();
        assert!(settles(&tail), "{b:?} {tail:?}");
        let dev: Vec<f64> = (1..=20).map(|n| (st.bessel_ratio(n).unwrap() - 1.0).abs()).collect();
        assert!(settles(&dev), "{b:?} {dev:?}");
        assert!((1..20).all(|n| st.values[n + 1].abs() < st.values[n].abs()));
    }
}
