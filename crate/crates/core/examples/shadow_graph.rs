// The homology shadow of the curve complex: odd classes against β, joined
// when they pair to zero mod 2.
//
// ```bash
// cargo run --example shadow_graph
// ```

use prymcheck::finite::{shadow_n1, stabilizer_closure, transitivity_report, F2Class, GeneratorPolicy};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for genus in 2..=4 {
        let beta = F2Class::new(genus, 0b10)?;
        let graph = shadow_n1(genus, beta)?;
        println!(
            "g={genus}: {} vertices, {} edges, {} component(s)",
            graph.vertex_count(),
            graph.edges().len(),
            graph.component_count()
        );
    }
    let beta = F2Class::new(3, 0b10)?;
    let graph = shadow_n1(3, beta)?;
    let group = stabilizer_closure(3, beta, &GeneratorPolicy::BetaOrthogonal)?;
    let t = transitivity_report(&graph, &group)?;
    println!("g=3 orbits on vertices {}, on ordered edges {}", t.vertex_orbits, t.ordered_edge_orbits);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
