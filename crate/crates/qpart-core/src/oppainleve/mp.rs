//! Forward q-P_V iteration in multiprecision arithmetic.
//!
//! The Verblunsky trajectory is the recessive solution of the recurrence: a relative
//! perturbation ε at step one grows like ε/𝗑_n², which is about 1e70 by n = 12 at
//! (ξ, q) = (0.3, 0.5). The seeds and every step are therefore carried at a working
//! precision that is doubled until two precisions agree.

use dashu_float::round::mode::HalfEven;
use dashu_float::{Context, FBig};

use crate::error::{Error, Result};
use crate::oppainleve::painleve::PainleveBranch;
use crate::params::QParams;
use crate::scalar::Real;

type F = FBig<HalfEven, 2>;

pub const MP_START_BITS: usize = 256;
pub const MP_MAX_BITS: usize = 1 << 14;
/// Relative agreement between successive precisions, after rounding to `f64`.
pub const MP_AGREEMENT: f64 = 1e-14;

struct Ctx {
    bits: usize,
}

impl Ctx {
    fn lift(&self, x: f64) -> F {
        F::try_from(x).expect("finite input").with_precision(self.bits).value()
    }

    fn sqrt(&self, x: &F) -> F {
        Context::<HalfEven>::new(self.bits).sqrt(x.repr()).value()
    }

    fn one(&self) -> F {
        self.lift(1.0)
    }

    /// Fourier coefficient `c_n` of `𝕀` (plain) or `𝕀̌` (check) as a positive series.
    fn symbol(&self, branch: PainleveBranch, n: usize, a: &F, q: &F) -> F {
        let one = self.one();
        let a2 = a * a;
        let mut qn = one.clone();
        let mut lead = one.clone();
        for k in 0..n {
            lead = lead * a / (&one - &qn * q);
            if branch == PainleveBranch::Y && k > 0 {
                // q^{C(n,2)} accumulated one factor q^k at a time.
                lead *= &qn;
            }
            qn *= q;
        }
        // qn = q^n; qk tracks q^k.
        let mut term = lead;
        let mut sum = term.clone();
        let mut qk = one.clone();
        let mut eps = one.clone();
        for _ in 0..self.bits / 64 + 1 {
            eps *= self.lift(2f64.powi(-64));
        }
        loop {
            let mut ratio = &a2 / ((&one - &qk * q) * (&one - &qk * &qn * q));
            if branch == PainleveBranch::Y {
                ratio = ratio * &qk * &qk * &qn;
            }
            term *= ratio;
            sum += &term;
            qk *= q;
            if term <= &sum * &eps {
                return sum;
            }
        }
    }

    fn run(&self, branch: PainleveBranch, xi: f64, q: f64, n_max: usize) -> Result<Vec<f64>> {
        let (xi, q) = (self.lift(xi), self.lift(q));
        let one = self.one();
        let rq = self.sqrt(&q);
        let rxi = self.sqrt(&xi);
        let a = &xi * &rq;
        let x1 = -(self.symbol(branch, 1, &a, &q) / self.symbol(branch, 0, &a, &q));
        let v1 = match branch {
            PainleveBranch::X => &rxi * &rq * x1,
            PainleveBranch::Y => &rxi / &rq * x1,
        };
        let mut v = vec![rxi, v1];
        v.truncate(n_max + 1);
        let xi_inv = &one / &xi;
        let mut qn = q.clone();
        for n in 1..n_max {
            // Bilinears and squares as real numbers; 𝗒 is stored through ỹ with 𝗒 = iỹ.
            let (bil_prev, s) = match branch {
                PainleveBranch::X => (&v[n - 1] * &v[n], &v[n] * &v[n]),
                PainleveBranch::Y => (-(&v[n - 1] * &v[n]), -(&v[n] * &v[n])),
            };
            let rhs = match branch {
                PainleveBranch::X => (&s - &xi) * (&s - &xi_inv) / (&one - &s / (&xi * &qn)),
                PainleveBranch::Y => (&s + &xi) * (&s + &xi_inv) / (&one + &qn * &s / &xi),
            };
            let prev = bil_prev - &one;
            if prev == F::ZERO {
                return Err(Error::Singular { what: "q-P_V recurrence (product equal to one)", index: n });
            }
            if v[n] == F::ZERO {
                return Err(Error::Singular { what: "q-P_V recurrence (vanishing iterate)", index: n });
            }
            let b = &one + rhs / prev;
            let next = match branch {
                PainleveBranch::X => b / &v[n],
                PainleveBranch::Y => -(b / &v[n]),
            };
            v.push(next);
            qn *= &q;
        }
        Ok(v.iter().map(|x| x.to_f64().value()).collect())
    }
}

/// `𝗑_0..=𝗑_{n_max}` (or `ỹ_n`) by forward iteration from `𝗑_0 = ξ^{1/2}` and the 1×1
/// determinant value of `𝗑_1`, at adaptively chosen precision.
pub fn mp_recurrence<T: Real>(branch: PainleveBranch, params: &QParams<T>, n_max: usize) -> Result<Vec<T>> {
    let to = |x: T| x.to_f64().expect("finite parameter");
    let (xi, q) = (to(params.xi()), to(params.q()));
    if xi <= 0.0 {
        return Err(Error::Domain("q-P_V recurrence needs xi > 0".into()));
    }
    let mut bits = MP_START_BITS;
    let mut prev = Ctx { bits }.run(branch, xi, q, n_max)?;
    while bits < MP_MAX_BITS {
        bits *= 2;
        let cur = Ctx { bits }.run(branch, xi, q, n_max)?;
        let settled = prev.iter().zip(&cur).all(|(a, b)| (a - b).abs() <= MP_AGREEMENT * b.abs());
        prev = cur;
        if settled {
            return Ok(prev.into_iter().map(T::lit).collect());
        }
    }
    Err(Error::NonConvergence { what: "multiprecision q-P_V recurrence", terms: bits })
}
