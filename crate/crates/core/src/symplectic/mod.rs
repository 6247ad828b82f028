//! Exact symplectic linear algebra over ℤ, 𝔽₂ and ℤ/p.

pub mod abelianization;
pub mod matrix;
pub mod reduction;
pub mod sampling;
pub mod space;
pub mod word;

pub use abelianization::{check_phi, in_lambda_p, lambda_p_generators, phi_p, LambdaReading, PhiReport};
pub use matrix::{
    block_z, interleaved_z, transvection, transvection_matrix, MatrixClass, SymplecticMatrix, TwistConvention,
};
pub use reduction::symplectic_basis;
pub use sampling::WordSampler;
pub use space::{pair_standard, pair_with, standard_form, HomologyVector, Ring, SymplecticSpace};
pub use word::{eval_word, BaseRepresentation, Representation, TrivialRepresentation, TwistWord};
