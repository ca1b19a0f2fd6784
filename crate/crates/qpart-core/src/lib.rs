//! q-Plancherel measures on partitions and their integrable structure.
//!
//! Every routine is generic over [`Real`] (`f32` or `f64`); the `*64`
//! aliases below fix the scalar to `f64`.

pub mod error;
pub mod gap;
pub mod halfint;
pub mod kernels;
pub mod linalg;
pub mod measures;
pub mod oppainleve;
pub mod params;
pub mod partitions;
pub mod qspecial;
pub mod scalar;

pub use error::{Error, Result};
pub use gap::{GapMethod, GapQuery, GapVariant, SymbolVariant, ToeplitzResult};
pub use halfint::HalfInteger;
pub use kernels::{CorrelationKernel, LimitShape, QBesselKernel, SchurKernel};
pub use measures::{Measure, MeasureKind, MiwaTimes};
pub use oppainleve::{OpSequence, OpVariant, PainleveBranch, PainleveState};
pub use params::{QParams, Truncation};
pub use partitions::Partition;
pub use scalar::Real;

pub type QParams64 = QParams<f64>;
pub type MeasureKind64 = MeasureKind<f64>;
pub type MiwaTimes64 = MiwaTimes<f64>;
pub type QBesselKernel64 = QBesselKernel<f64>;
pub type LimitShape64 = LimitShape<f64>;
