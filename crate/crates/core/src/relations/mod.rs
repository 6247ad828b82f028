//! Chain relations under the homology representations and the σ-obstruction
//! to lifting the complementary-chain relation to the cover.

pub mod checks;
pub mod config;

pub use checks::{
    base_psi, verify_chain_boundary, verify_complementary_chains, verify_k_chain, verify_lifted_obstruction,
    verify_minus_id_span, verify_reduction, verify_two_chain, ObstructionReport, RelationReport,
};
pub use config::{chain_boundary_class, check_chain_pattern, ChainConfig, NamedCurve, TwoChainConfig};
