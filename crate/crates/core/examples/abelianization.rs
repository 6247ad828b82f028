// The homomorphism φ_p on the level subgroup fixing e₁ mod p.
//
// ```bash
// cargo run --example abelianization
// ```

use prymcheck::symplectic::{check_phi, phi_p, transvection, SymplecticSpace, TwistConvention};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let space = SymplecticSpace::new(2)?;
    for p in [2i128, 3, 5, 7] {
        let u = transvection(&space.b(1), &space, TwistConvention::Positive)?.pow(p as u32);
        let r = check_phi(&space, p, 1000, 6, 1)?;
        println!(
            "p={p}: phi(T_b1^p) = {}, additivity failures {}, image {:?}",
            phi_p(&space, &u, p)?,
            r.additivity_failures,
            r.image
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
