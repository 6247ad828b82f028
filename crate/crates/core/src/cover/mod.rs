//! The double cover `S_{2g−1} → S_g` defined by β, its homology with the
//! deck action, lifted twists and the Prym representation.

pub mod double;
pub mod export;
pub mod homology;
pub mod lift;
pub mod prym;
pub mod ribbon;
pub mod search;
pub mod surface;
pub mod symmetric;

pub use double::{build_cover, CoverSurface, LoopLift};
pub use export::cover_json;
pub use homology::{cover_homology, CoverHomology, PrymFrame};
pub use lift::{lift_classes, lifted_twist, LiftedTwist};
pub use prym::{
    mod_ell_closure, prym, prym_images, simple_curve_family, CoverRepresentation, PrymRepresentation, SIGMA,
};
pub use ribbon::{CellularHomology, Dart, RibbonGraph};
pub use search::{find_simple_loop, is_chord_simple};
pub use surface::{standard_surface, Loop, RibbonSurface};
pub use symmetric::{symmetric_basis, SymmetricBasis};
