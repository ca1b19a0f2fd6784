//! Airy function by its Maclaurin pair, and the Airy kernel.

use crate::error::{Error, Result};
use crate::scalar::{CompensatedSum, Real};

/// `Ai(0) = 3^{−2/3}/Γ(2/3)`.
pub const AI0: f64 = 0.355_028_053_887_817_239;
/// `Ai′(0) = −3^{−1/3}/Γ(1/3)`.
pub const AIP0: f64 = -0.258_819_403_792_806_798;
/// Range of the series evaluation.
pub const AIRY_RANGE: f64 = 8.0;

/// `(Ai(x), Ai′(x))` for `|x| ≤ 8`.
pub fn airy<T: Real>(x: T) -> Result<(T, T)> {
    if !(x.abs() <= T::lit(AIRY_RANGE)) {
        return Err(Error::Domain(format!("Airy series limited to |x| <= {AIRY_RANGE}, got {x}")));
    }
    // f = ∑ a_k x^{3k}, a_{k+1} = a_k/((3k+2)(3k+3));  g = ∑ b_k x^{3k+1}, b_{k+1} = b_k/((3k+3)(3k+4)).
    // Derivative terms: p_k = 3k a_k x^{3k−1}, r_k = (3k+1) b_k x^{3k}.
    let x3 = x * x * x;
    let mut sums = [CompensatedSum::new(), CompensatedSum::new(), CompensatedSum::new(), CompensatedSum::new()];
    let (mut tf, mut tg, mut p, mut r) = (T::one(), x, x * x * T::half(), T::one());
    for k in 0..300 {
        let k3 = T::of_usize(3 * k);
        for (acc, v) in sums.iter_mut().zip([tf, tg, p, r]) {
            acc.add(v);
        }
        let size = tf.abs() + tg.abs() + p.abs() + r.abs();
        let scale = sums.iter().fold(T::one(), |m, s| m.max(s.value().abs()));
        if size <= T::epsilon() * T::lit(1e-3) * scale {
            break;
        }
        let one = T::one();
        let (two, three, four) = (T::two(), T::lit(3.0), T::lit(4.0));
        tf = tf * x3 / ((k3 + two) * (k3 + three));
        tg = tg * x3 / ((k3 + three) * (k3 + four));
        // p starts at k = 1, so its ratio uses k+1.
        p = p * x3 / ((k3 + three) * (k3 + T::lit(5.0)));
        r = r * x3 / ((k3 + one) * (k3 + three));
    }
    let [f, g, fp, gp] = sums.map(|s| s.value());
    let (c1, c2) = (T::lit(AI0), -T::lit(AIP0));
    Ok((c1 * f - c2 * g, c1 * fp - c2 * gp))
}

/// `K_Ai(x,y) = (Ai(x)Ai′(y) − Ai′(x)Ai(y))/(x − y)`, with `Ai′(x)² − x Ai(x)²` on the diagonal.
pub fn airy_kernel<T: Real>(x: T, y: T) -> Result<T> {
    let (ax, apx) = airy(x)?;
    if x == y {
        return Ok(apx * apx - x * ax * ax);
    }
    let (ay, apy) = airy(y)?;
    Ok((ax * apy - apx * ay) / (x - y))
}
