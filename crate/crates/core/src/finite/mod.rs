//! Finite computations in `Sp(2g, 𝔽₂)`: orbits under the stabilizer of β,
//! closure certificates, and the homology shadow of the curve complex.

pub mod f2;
pub mod group;
pub mod orbits;
pub mod shadow;

pub use f2::{pair2, transvect2, transvection2_matrix, F2Class};
pub use group::{symplectic_group_order, GroupClosure, ModMatrix};
pub use orbits::{
    closure_fixes, orbit_classify, orbit_classify_with, orbit_kind, predicted_stabilizer_order, stabilizer_closure,
    GeneratorPolicy, OrbitKind, OrbitPartition, MAX_CLOSURE_GENUS, MAX_ORBIT_GENUS,
};
pub use shadow::{shadow_n1, transitivity_report, ShadowGraph, TransitivityReport};
