// Dehn twists as transvections on H₁(S_g; ℤ), word evaluation, and the
// mod-2 reduction.
//
// ```bash
// cargo run --example twist_matrices
// ```

use prymcheck::symplectic::{
    eval_word, transvection, BaseRepresentation, MatrixClass, Ring, SymplecticSpace, TwistConvention, TwistWord,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let space = SymplecticSpace::new(2)?;
    let t = transvection(&space.b(1), &space, TwistConvention::Positive)?;
    println!("T_b1 on H1(S_2):\n{:?}", t.entries().to_rows());
    assert_eq!(t.classify(&space)?, MatrixClass::Symplectic);

    let rep = BaseRepresentation::new(space, Ring::Integer, TwistConvention::Positive).with_basis_curves();
    let w = TwistWord::parse("a1 b1 a1")?;
    let v = TwistWord::parse("b1 a1 b1")?;
    // the braid relation between curves meeting once
    assert_eq!(eval_word(&w, &rep)?, eval_word(&v, &rep)?);
    println!("braid relation {w} = {v} holds");

    let mod2 = rep.with_ring(Ring::F2);
    let m = eval_word(&TwistWord::parse("a1^2 b2")?, &mod2)?;
    println!("a1^2 b2 mod 2:\n{:?}", m.entries().to_rows());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
