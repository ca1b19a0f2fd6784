//! q-Bessel families.
//!
//! All three `J^(j)` and the positive-series forms of `I^(j)` share one
//! summation: the prefactor `(q^{ν+1};q)_∞` is folded into each term as
//! `(q^{ν+1+k};q)_∞`, so negative integer orders need no special casing
//! (terms with `ν+1+k ≤ 0` vanish identically).

use crate::error::{Error, Result};
use crate::params::Truncation;
use crate::qspecial::hypergeometric::{basic_hypergeometric, HypergeometricSpec};
use crate::qspecial::pochhammer::{q_pochhammer, Order};
use crate::scalar::{CompensatedSum, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselKind {
    First,
    Second,
    /// Hahn–Exton.
    Third,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModifiedKind {
    First,
    Second,
}

#[derive(Debug, Clone, Copy)]
enum Weighting {
    First,
    Second,
    Third,
}

/// `J^(kind)_ν(x;q)`.
pub fn q_bessel<T: Real>(kind: BesselKind, nu: T, x: T, q: T, tr: &Truncation<T>) -> Result<T> {
    let w = match kind {
        BesselKind::First => Weighting::First,
        BesselKind::Second => Weighting::Second,
        BesselKind::Third => Weighting::Third,
    };
    folded_series(w, -T::one(), nu, x, q, tr)
}

/// `I^(kind)_ν(x;q)` from the ₁φ₁ representation,
/// `I^(1)_ν(2y) = y^ν ₁φ₁(y²;0;q,q^{ν+1}) / (y²,q;q)_∞` and likewise without `(y²;q)_∞` for kind 2.
///
/// Integer orders are symmetric, so `|ν|` is used. Cancels badly as `q → 1`;
/// prefer [`modified_q_bessel_rotated`] there.
pub fn modified_q_bessel<T: Real>(kind: ModifiedKind, nu: i64, x: T, q: T, tr: &Truncation<T>) -> Result<T> {
    let y = x * T::half();
    let y2 = y * y;
    let n = nu.unsigned_abs() as i32;
    let qn1 = q.powi(n + 1);
    let phi = basic_hypergeometric(&HypergeometricSpec::new(vec![y2], vec![T::zero()], q, qn1), tr)?;
    let qq = q_pochhammer(q, q, Order::Infinite, tr)?;
    let pre = match kind {
        ModifiedKind::First => {
            if y2 >= T::one() {
                return Err(Error::Domain(format!("I^(1) needs x^2/4 < 1, got x = {x}")));
            }
            q_pochhammer(y2, q, Order::Infinite, tr)? * qq
        }
        ModifiedKind::Second => qq,
    };
    Ok(y.powi(n) * phi / pre)
}

/// `I^(kind)_ν(x;q) = e^{−iπν/2} J^(kind)_ν(ix;q)` summed directly; every term is positive.
pub fn modified_q_bessel_rotated<T: Real>(kind: ModifiedKind, nu: i64, x: T, q: T, tr: &Truncation<T>) -> Result<T> {
    let w = match kind {
        ModifiedKind::First => Weighting::First,
        ModifiedKind::Second => Weighting::Second,
    };
    folded_series(w, T::one(), T::of_i64(nu.abs()), x, q, tr)
}

fn is_integer<T: Real>(v: T) -> bool {
    v == v.round()
}

/// `(q;q)_∞^{-1} ∑_k (x/2)^{ν+2k} (q^{ν+1+k};q)_∞ s^k w_k / (q;q)_k`, with
/// `w_k = 1`, `q^{k(k−1)+(ν+1)k}`, `q^{k(k+1)/2}` for the three weightings.
fn folded_series<T: Real>(w: Weighting, s: T, nu: T, x: T, q: T, tr: &Truncation<T>) -> Result<T> {
    if !(T::zero()..T::one()).contains(&q) {
        return Err(Error::Domain(format!("q must lie in [0,1), got {q}")));
    }
    let h = x * T::half();
    if matches!(w, Weighting::First) && h.abs() >= T::one() {
        return Err(Error::Domain(format!("first-kind series needs |x| < 2, got {x}")));
    }
    let integer = is_integer(nu);
    if !integer && h < T::zero() {
        return Err(Error::Domain(format!("(x/2)^ν undefined for x = {x}, ν = {nu}")));
    }
    let k0: usize = if integer && nu < T::zero() { (-nu).to_usize().unwrap_or(usize::MAX) } else { 0 };
    if k0 >= tr.max_terms {
        return Err(Error::LimitExceeded { what: "negative order", value: k0, limit: tr.max_terms });
    }
    let kf = T::of_usize(k0);
    let e0 = nu + kf * T::two();
    if h == T::zero() {
        if e0 > T::zero() {
            return Ok(T::zero());
        }
        if e0 < T::zero() {
            return Err(Error::Domain(format!("pole at x = 0 for ν = {nu}")));
        }
    }
    let pow0 = if h == T::zero() {
        T::one()
    } else if integer {
        h.powi(e0.to_i32().expect("order fits in i32"))
    } else {
        h.powf(e0)
    };
    let extra0 = match w {
        Weighting::First => T::one(),
        Weighting::Second => q.powf(kf * (kf - T::one()) + (nu + T::one()) * kf),
        Weighting::Third => q.powf(kf * (kf + T::one()) * T::half()),
    };
    // q^{ν+1+k}, tracked separately so q = 0 with ν < 0 stays finite.
    let mut qe = q.powf(nu + T::one() + kf);
    // Integer ν: (q^{ν+1+k};q)_∞/(q;q)_∞ = 1/(q;q)_{ν+k}, no infinite product needed.
    let (p0, post) = if integer {
        let m = (nu + kf).to_usize().expect("nonnegative shifted order");
        (T::one() / q_pochhammer(q, q, Order::Finite(m), tr)?, T::one())
    } else {
        (q_pochhammer(qe, q, Order::Infinite, tr)?, T::one() / q_pochhammer(q, q, Order::Infinite, tr)?)
    };
    let qk0 = q_pochhammer(q, q, Order::Finite(k0), tr)?;
    let sign0 = if k0 % 2 == 1 { s } else { T::one() };
    let mut term = pow0 * p0 * extra0 * sign0 / qk0;
    let mut acc = CompensatedSum::new();
    acc.add(term);
    let h2 = h * h;
    let mut qk = q.powi(k0 as i32);
    let mut small = 0;
    let mut converged = term == T::zero();
    for _ in 0..tr.max_terms {
        if converged {
            break;
        }
        // qk = q^k on entry; advance term k → k+1.
        let extra = match w {
            Weighting::First => T::one(),
            Weighting::Second => qk * qe,
            Weighting::Third => qk * q,
        };
        let ratio = s * h2 * extra / ((T::one() - qk * q) * (T::one() - qe));
        term *= ratio;
        acc.add(term);
        if term == T::zero() {
            converged = true;
        } else if term.abs() <= tr.tail_tol * acc.value().abs() && ratio.abs() < T::one() {
            small += 1;
            converged = small >= 2;
        } else {
            small = 0;
        }
        qk *= q;
        qe *= q;
    }
    if !converged {
        return Err(Error::NonConvergence { what: "q-Bessel series", terms: tr.max_terms });
    }
    Ok(acc.value() * post)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_kind_at_origin() {
        let tr = Truncation::default();
        assert_eq!(q_bessel(BesselKind::Third, 0.0f64, 0.0, 0.5, &tr).unwrap(), 1.0);
        assert_eq!(q_bessel(BesselKind::Third, 2.0f64, 0.0, 0.5, &tr).unwrap(), 0.0);
        assert_eq!(q_bessel(BesselKind::Third, -2.0f64, 0.0, 0.5, &tr).unwrap(), 0.0);
    }

    #[test]
    fn domain_guards() {
        let tr = Truncation::default();
        assert!(q_bessel(BesselKind::First, 0.0f64, 2.5, 0.5, &tr).is_err());
        assert!(q_bessel(BesselKind::Third, 0.5f64, -0.3, 0.5, &tr).is_err());
        assert!(modified_q_bessel(ModifiedKind::First, 0, 2.0f64, 0.5, &tr).is_err());
    }
}
