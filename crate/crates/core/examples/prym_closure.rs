// Prym images of lifted twists reduced mod ℓ, closed under multiplication
// and compared with |Sp(2(g−1), ℓ)|.
//
// ```bash
// cargo run --example prym_closure
// ```

use prymcheck::cover::{build_cover, cover_homology, mod_ell_closure, prym_images, simple_curve_family, standard_surface};
use prymcheck::finite::{symplectic_group_order, F2Class};
use prymcheck::symplectic::TwistConvention;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let surface = standard_surface(3)?;
    let cover = build_cover(&surface, F2Class::new(3, 0b10)?)?;
    let hom = cover_homology(&cover)?;
    let curves = simple_curve_family(&surface, 2);
    let images = prym_images(&cover, &hom, &curves, TwistConvention::Positive)?;
    println!("{} simple curves", curves.len());
    for ell in [2u8, 3] {
        let group = mod_ell_closure(&images, ell)?;
        println!("mod {ell}: {} elements, |Sp(4,{ell})| = {}", group.order(), symplectic_group_order(2, ell.into()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
