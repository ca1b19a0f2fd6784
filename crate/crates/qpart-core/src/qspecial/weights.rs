//! Weight functions on the unit circle and their generating-function cousins.

use num_complex::Complex;

use crate::error::Result;
use crate::params::QParams;
use crate::qspecial::pochhammer::q_pochhammer_complex;
use crate::scalar::Real;

/// The three circle weights whose Fourier coefficients feed kernels and Toeplitz symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    /// `𝕀(z) = 1/((az;q)_∞ (a/z;q)_∞)`, `a = ξq^{1/2}`.
    I,
    /// `𝕀̌(z) = (−az;q)_∞ (−a/z;q)_∞`.
    ICheck,
    /// `𝕁(z) = (a/z;q)_∞ / (az;q)_∞`.
    JGen,
}

impl Weight {
    pub fn eval<T: Real>(self, z: Complex<T>, params: &QParams<T>) -> Result<Complex<T>> {
        let tr = params.truncation();
        let q = params.q();
        let a = params.a();
        let inner = z.inv().scale(a);
        let outer = z.scale(a);
        Ok(match self {
            Weight::I => (q_pochhammer_complex(outer, q, tr)? * q_pochhammer_complex(inner, q, tr)?).inv(),
            Weight::ICheck => q_pochhammer_complex(-outer, q, tr)? * q_pochhammer_complex(-inner, q, tr)?,
            Weight::JGen => q_pochhammer_complex(inner, q, tr)? / q_pochhammer_complex(outer, q, tr)?,
        })
    }

    /// Real-valued evaluation at `e^{iθ}` for the two symmetric weights.
    pub fn on_circle<T: Real>(self, theta: T, params: &QParams<T>) -> Result<T> {
        let z = Complex::from_polar(T::one(), theta);
        Ok(self.eval(z, params)?.re)
    }
}
