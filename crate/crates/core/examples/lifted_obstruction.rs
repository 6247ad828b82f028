// Lifting the complementary-chain relation to the cover: the two sides
// differ by the deck involution, and their Prym images by a sign.
//
// ```bash
// cargo run --example lifted_obstruction
// ```

use prymcheck::relations::{verify_lifted_obstruction, ChainConfig};
use prymcheck::symplectic::TwistConvention;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = ChainConfig::canonical(4)?;
    println!("lifted left word  {}", config.lifted_left_word());
    println!("lifted right word {}", config.lifted_right_word());
    let r = verify_lifted_obstruction(&config, TwistConvention::Positive)?;
    println!("H1(cover) rank {}", r.cover_rank);
    println!("L != R: {}", r.l_differs_from_r);
    println!("L = sigma R: {}", r.sigma_corrected.holds);
    println!("Prym(L) = -Prym(R): {}", r.prym_opposite.holds);
    println!("agree on the plus lattice: {}", r.plus_agree);
    assert!(r.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
