//! Scalar q-special functions.

pub mod bessel;
pub mod classical;
pub mod fourier;
pub mod hypergeometric;
pub mod macmahon;
pub mod pochhammer;
pub mod weights;

pub use bessel::{modified_q_bessel, modified_q_bessel_rotated, q_bessel, BesselKind, ModifiedKind};
pub use classical::bessel_j;
pub use fourier::{dft_real, fourier_coefficients, CoefficientFamily, KernelTable, DEFAULT_GRID};
pub use hypergeometric::{basic_hypergeometric, HypergeometricSpec};
pub use macmahon::{log_macmahon, log_macmahon_exponential, macmahon, macmahon_exponential, plane_partition_counts};
pub use pochhammer::{q_pochhammer, q_pochhammer_complex, Order};
pub use weights::Weight;
