use serde_json::{json, Value};

use super::double::CoverSurface;
use super::homology::CoverHomology;
use super::ribbon::Dart;
use crate::linalg::IntMatrix;

fn rows(m: &IntMatrix) -> Vec<Vec<i128>> {
    m.to_rows()
}

fn dart_name(names: &[String], d: &Dart) -> String {
    if d.forward {
        names[d.edge].clone()
    } else {
        format!("{}^-1", names[d.edge])
    }
}

/// Machine-readable description of the cover and its homology.
pub fn cover_json(cover: &CoverSurface, hom: &CoverHomology) -> Value {
    let names = cover.edge_names();
    let base_names = cover.base().edge_names();
    let g = cover.graph();
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(t, h))| {
            json!({
                "name": names[i],
                "base_edge": base_names[i / 2],
                "tail": t,
                "head": h,
                "monodromy": cover.monodromy()[i / 2],
            })
        })
        .collect();
    let faces: Vec<Vec<String>> =
        g.faces().iter().map(|f| f.iter().map(|d| dart_name(&names, d)).collect()).collect();
    json!({
        "base_genus": cover.base().genus(),
        "beta": cover.beta().to_bitstring(),
        "vertices": g.vertex_count(),
        "euler_characteristic": g.euler_characteristic(),
        "edges": edges,
        "faces": faces,
        "homology_rank": hom.rank(),
        "homology_representatives": rows(&hom.cellular().representatives().transpose()),
        "gram": rows(hom.gram()),
        "sigma": rows(hom.sigma()),
        "minus_basis": rows(&hom.minus_basis().transpose()),
        "minus_gram": rows(hom.minus_gram()),
        "prym_basis": rows(&hom.prym_frame().basis().transpose()),
    })
}
