//! Floating-point checks on the Siegel side: the two modular actions, σ-fixed
//! period matrices of the cover, the Prym period `τ = B − C` and its
//! equivariance, and the reflection `τ ↦ −τ̄`.

pub mod period;
pub mod point;
pub mod sweep;

pub use period::{
    equivariance_check, prym_extract, random_siegel_point, random_symmetric_period, standard_sigma, CoverFrame,
    EquivarianceResidual, PeriodMatrix, Tolerances,
};
pub use point::{
    act, act_variant, antiholomorphic_check, block_form, composition_residual, residual, CMatrix, ModularElement,
    SiegelPoint,
};
pub use sweep::{
    antiholomorphic_sweep, composition_sweep, equivariance_sweep, to_csv, EquivarianceContext, SweepRow, SWEEP_WORD_LENGTH,
};
