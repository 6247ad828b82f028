// Orbits of the stabilizer of β on nonzero mod-2 classes, and the order of
// the group generated by the β-orthogonal transvections.
//
// ```bash
// cargo run --example stabilizer_orbits
// ```

use prymcheck::finite::{
    orbit_classify, predicted_stabilizer_order, stabilizer_closure, F2Class, GeneratorPolicy, OrbitPartition,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for genus in 2..=4 {
        let beta = F2Class::new(genus, 0b10)?;
        let part = orbit_classify(genus, beta)?;
        println!(
            "g={genus} beta={} orbit sizes {:?} (predicted {:?})",
            beta.to_bitstring(),
            part.sizes(),
            OrbitPartition::predicted_sizes(genus)
        );
        assert!(part.matches_predicate());
    }
    for genus in 2..=3 {
        let beta = F2Class::new(genus, 0b10)?;
        let closure = stabilizer_closure(genus, beta, &GeneratorPolicy::BetaOrthogonal)?;
        println!("g={genus} closure order {} = {}", closure.order(), predicted_stabilizer_order(genus));
        assert_eq!(closure.order() as u128, predicted_stabilizer_order(genus));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
