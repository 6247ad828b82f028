// The double cover S_{2g−1} → S_g of a mod-2 class, its homology with the
// deck involution, and the minus lattice with the halved form.
//
// ```bash
// cargo run --example double_cover
// ```

use prymcheck::cover::{build_cover, cover_homology, lifted_twist, standard_surface};
use prymcheck::finite::F2Class;
use prymcheck::symplectic::TwistConvention;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let surface = standard_surface(3)?;
    let beta = F2Class::parse("010000")?;
    let cover = build_cover(&surface, beta)?;
    let hom = cover_homology(&cover)?;
    println!(
        "base genus 3, cover genus {}, H1 rank {}, minus rank {}",
        cover.genus()?,
        hom.rank(),
        hom.minus_basis().cols()
    );
    println!("halved form on the minus lattice:\n{:?}", hom.minus_gram().to_rows());

    for word in ["a1", "b1", "a2 a3"] {
        let l = surface.parse_loop(word)?;
        let t = lifted_twist(&cover, &hom, &l, TwistConvention::Positive)?;
        let p = hom.prym_frame().restrict(&t.matrix)?;
        println!("{word}: monodromy {}, {} lift(s), Prym image {:?}", t.monodromy, t.lift_classes.len(), p.to_rows());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
