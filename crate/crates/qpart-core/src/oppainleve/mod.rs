//! Orthogonal polynomials for the weights `𝕀`, `𝕀̌` and the discrete Painlevé
//! structure of their Verblunsky data.

pub mod inner;
pub mod lax;
pub mod mp;
pub mod painleve;
pub mod rhp;
pub mod sequence;

pub use inner::{inner_product_quadrature, inner_product_series, poly_eval};
pub use lax::{lax_checks, lax_matrices, LaxMatrices, LaxReport};
pub use painleve::{
    dpii_limit_check, painleve_trajectory, tau_relation_check, unscaled_residual, DpiiRow, PainleveBranch, PainleveState,
    TrajectorySource,
};
pub use mp::mp_recurrence;
pub use rhp::{jump_residual, monic_polynomials, normalization_residual, rhp_matrix, rhp_sample, y_at_zero_residual, RhpSample};
pub use sequence::{op_sequence, op_sequence_with, OpSequence, OpSource, OpVariant, MAX_OP_N};
