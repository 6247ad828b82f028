// The 2-chain relation, the complementary odd chains around the β-curve,
// and the cube of a 2-chain acting as −Id on its span.
//
// ```bash
// cargo run --example chain_relations
// ```

use prymcheck::relations::{
    verify_complementary_chains, verify_minus_id_span, verify_two_chain, ChainConfig, TwoChainConfig,
};
use prymcheck::symplectic::{Ring, SymplecticSpace, TwistConvention};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let conv = TwistConvention::Positive;
    let two = TwoChainConfig::canonical(3)?;
    let r = verify_two_chain(&two, &two.representation(Ring::Integer, conv)?, "psi")?;
    println!("(T_a^2 T_b)^4 = T_d: {}", r.holds);

    for genus in [4, 5] {
        let config = ChainConfig::canonical(genus)?;
        let words: Vec<String> = config.curves().map(|c| format!("{}={}", c.name, c.text)).collect();
        println!("g={genus} curves: {}", words.join(", "));
        let rep = config.representation(Ring::Integer, conv)?;
        let r = verify_complementary_chains(&config, &rep, "psi")?;
        println!("g={genus} {} = {}: {}", config.left_word(), config.right_word(), r.holds);
        assert!(r.holds);
    }

    let space = SymplecticSpace::new(3)?;
    let r = verify_minus_id_span(&space, &space.a(1), &space.b(1), conv)?;
    println!("(T_a1 T_b1)^3 = -Id on span, Id elsewhere: {}", r.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
