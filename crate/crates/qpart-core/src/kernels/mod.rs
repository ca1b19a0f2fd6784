//! Correlation kernels, correlation functions, the limit shape and scaling probes.

pub mod airy;
pub mod kernel;
pub mod limit_shape;
pub mod probe;
pub mod table;

pub use airy::{airy, airy_kernel};
pub use kernel::{
    correlation, correlation_with, discrete_bessel_kernel, q_bessel_kernel, schur_kernel, CorrelationKernel,
    DiscreteBesselKernel, Kernel, QBesselKernel, SchurKernel,
};
pub use limit_shape::{alpha0_series, beta0_series, limit_shape, LimitShape};
pub use probe::{scaling_probe, scaling_probe_with_grid, ProbeKind, ProbeReport, ProbeRow, PROBE_GRID};
pub use table::{BesselSource, BesselTable};
