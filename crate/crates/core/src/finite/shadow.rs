//! The homology shadow of the curve complex `N₁`: vertices are mod-2
//! classes odd against β, edges join classes with `î₂(u,v) = 1` and
//! `u + v ≠ β`. These are necessary-condition checks for the curve-level
//! statements; geometric intersection numbers are not modeled.

use std::collections::HashMap;

use serde::Serialize;
use serde_json::json;

use super::f2::{bits_to_string, pair2, F2Class};
use super::group::GroupClosure;
use super::orbits::MAX_ORBIT_GENUS;
use crate::error::{Error, Result};

/// Shadow graph with adjacency computed on demand.
#[derive(Debug, Clone)]
pub struct ShadowGraph {
    genus: usize,
    beta: F2Class,
    vertices: Vec<u64>,
}

pub fn shadow_n1(genus: usize, beta: F2Class) -> Result<ShadowGraph> {
    if genus < 2 {
        return Err(Error::usage("genus must be at least 2"));
    }
    if beta.genus() != genus {
        return Err(Error::usage("beta does not live in the requested genus"));
    }
    if genus > MAX_ORBIT_GENUS {
        return Err(Error::Capability(format!("shadow graphs are limited to genus {MAX_ORBIT_GENUS}")));
    }
    let vertices = (1u64..1 << (2 * genus)).filter(|&v| pair2(v, beta.bits()) == 1).collect();
    Ok(ShadowGraph { genus, beta, vertices })
}

impl ShadowGraph {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn beta(&self) -> F2Class {
        self.beta
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, v: u64) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn is_edge(&self, u: u64, v: u64) -> bool {
        pair2(u, v) == 1 && u ^ v != self.beta.bits()
    }

    /// Neighbor indices of vertex `i`, increasing.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let u = self.vertices[i];
        self.vertices.iter().enumerate().filter(move |&(_, &v)| self.is_edge(u, v)).map(|(j, _)| j)
    }

    /// Unordered edges `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.vertices.len() {
            out.extend(self.neighbors(i).filter(|&j| j > i).map(|j| (i, j)));
        }
        out
    }

    /// Number of connected components, by BFS.
    pub fn component_count(&self) -> usize {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut components = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(i) = stack.pop() {
                for j in self.neighbors(i) {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `{vertices: [bitstrings], edges: [[i, j]]}` plus genus and beta.
    pub fn to_json(&self) -> serde_json::Value {
        let dim = 2 * self.genus;
        let vertices: Vec<String> = self.vertices.iter().map(|&v| bits_to_string(v, dim)).collect();
        let edges: Vec<[usize; 2]> = self.edges().into_iter().map(|(i, j)| [i, j]).collect();
        json!({
            "genus": self.genus,
            "beta": self.beta.to_bitstring(),
            "vertices": vertices,
            "edges": edges,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TransitivityReport {
    pub vertices: usize,
    pub ordered_edges: usize,
    pub vertex_orbits: usize,
    pub ordered_edge_orbits: usize,
}

/// Orbit counts of the group on shadow vertices and on ordered edges.
pub fn transitivity_report(graph: &ShadowGraph, group: &GroupClosure) -> Result<TransitivityReport> {
    if group.modulus() != 2 || group.dim() != 2 * graph.genus {
        return Err(Error::usage("group does not act on the graph's mod-2 homology"));
    }
    let beta = graph.beta.bits();
    if group.generators().iter().any(|m| m.apply_bits(beta) != beta) {
        return Err(Error::Precondition("group does not stabilize beta".into()));
    }
    let gens = group.generators();

    let vertex_orbits = count_orbits(graph.vertices.clone(), |v| gens.iter().map(|m| m.apply_bits(v)).collect())?;

    let mut ordered = Vec::new();
    for i in 0..graph.vertex_count() {
        for j in graph.neighbors(i) {
            ordered.push((graph.vertices[i], graph.vertices[j]));
        }
    }
    let ordered_edges = ordered.len();
    let edge_orbits =
        count_orbits(ordered, |(u, v)| gens.iter().map(|m| (m.apply_bits(u), m.apply_bits(v))).collect())?;

    Ok(TransitivityReport {
        vertices: graph.vertex_count(),
        ordered_edges,
        vertex_orbits,
        ordered_edge_orbits: edge_orbits,
    })
}

fn count_orbits<T, F>(points: Vec<T>, images: F) -> Result<usize>
where
    T: Copy + Eq + std::hash::Hash,
    F: Fn(T) -> Vec<T>,
{
    let index: HashMap<T, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut seen = vec![false; points.len()];
    let mut orbits = 0;
    for s in 0..points.len() {
        if seen[s] {
            continue;
        }
        orbits += 1;
        seen[s] = true;
        let mut stack = vec![points[s]];
        while let Some(p) = stack.pop() {
            for q in images(p) {
                let k = *index
                    .get(&q)
                    .ok_or_else(|| Error::internal("group element moved a point off the graph"))?;
                if !seen[k] {
                    seen[k] = true;
                    stack.push(q);
                }
            }
        }
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::orbits::{stabilizer_closure, GeneratorPolicy};

    fn b1(genus: usize) -> F2Class {
        F2Class::new(genus, 0b10).unwrap()
    }

    #[test]
    fn genus_two_shadow() {
        let g = shadow_n1(2, b1(2)).unwrap();
        assert_eq!(g.vertex_count(), 8);
        // two copies of a vertex joined to a triangle
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.edges().len(), 12);
        for (i, j) in g.edges() {
            let (u, v) = (g.vertices()[i], g.vertices()[j]);
            assert_eq!(pair2(u, v), 1);
            assert_ne!(u ^ v, 0b10);
        }
    }

    #[test]
    fn genus_three_shadow_is_connected() {
        let g = shadow_n1(3, b1(3)).unwrap();
        assert_eq!(g.vertex_count(), 32);
        assert!(g.is_connected());
    }

    #[test]
    fn pairs_summing_to_beta_are_not_edges() {
        let g = shadow_n1(3, b1(3)).unwrap();
        for &u in g.vertices() {
            let v = u ^ 0b10;
            assert!(!g.is_edge(u, v));
        }
    }

    #[test]
    fn trivial_group_has_singleton_orbits() {
        let g = shadow_n1(2, b1(2)).unwrap();
        let r = transitivity_report(&g, &GroupClosure::trivial(4, 2)).unwrap();
        assert_eq!(r.vertex_orbits, 8);
        assert_eq!(r.ordered_edge_orbits, 2 * g.edges().len());
    }

    #[test]
    fn full_stabilizer_is_transitive_in_genus_two() {
        let g = shadow_n1(2, b1(2)).unwrap();
        let c = stabilizer_closure(2, b1(2), &GeneratorPolicy::BetaOrthogonal).unwrap();
        let r = transitivity_report(&g, &c).unwrap();
        assert_eq!((r.vertex_orbits, r.ordered_edge_orbits), (1, 1));
    }

    #[test]
    fn json_export_shape() {
        let g = shadow_n1(2, b1(2)).unwrap();
        let j = g.to_json();
        assert_eq!(j["vertices"].as_array().unwrap().len(), 8);
        assert_eq!(j["edges"].as_array().unwrap().len(), g.edges().len());
    }
}
