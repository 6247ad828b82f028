//! The one-vertex model of `S_g` and closed edge-loops on it.

use std::fmt;

use serde::Serialize;

use super::ribbon::{Dart, RibbonGraph};
use crate::error::{Error, Result};
use crate::symplectic::{HomologyVector, SymplecticSpace};

/// `S_g` as one vertex, edges `a₁, b₁, …, a_g, b_g` and a single face with
/// boundary `∏ [aᵢ, bᵢ]`. Edge `k` carries the interleaved basis vector `k`.
#[derive(Debug, Clone)]
pub struct RibbonSurface {
    genus: usize,
    graph: RibbonGraph,
    names: Vec<String>,
}

pub fn standard_surface(genus: usize) -> Result<RibbonSurface> {
    if genus < 2 {
        return Err(Error::usage("the surface model needs genus at least 2"));
    }
    let mut face = Vec::with_capacity(4 * genus);
    for i in 0..genus {
        let (a, b) = (2 * i, 2 * i + 1);
        face.extend([Dart::new(a, true), Dart::new(b, true), Dart::new(a, false), Dart::new(b, false)]);
    }
    let graph = RibbonGraph::new(1, vec![(0, 0); 2 * genus], vec![face])?;
    let names = SymplecticSpace::new(genus)?.labels();
    let surface = RibbonSurface { genus, graph, names };
    let h = surface.graph.homology()?;
    if h.gram() != &SymplecticSpace::new(genus)?.form() {
        return Err(Error::internal("standard surface does not carry the standard form"));
    }
    Ok(surface)
}

impl RibbonSurface {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn space(&self) -> SymplecticSpace {
        SymplecticSpace::new(self.genus).expect("positive genus")
    }

    pub fn graph(&self) -> &RibbonGraph {
        &self.graph
    }

    pub fn edge_names(&self) -> &[String] {
        &self.names
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Boundary word of the single face.
    pub fn face_word(&self) -> &[Dart] {
        &self.graph.faces()[0]
    }

    pub fn homology_class(&self, l: &Loop) -> HomologyVector {
        HomologyVector::integer(self.graph.chain(l.darts()))
    }

    pub fn parse_loop(&self, text: &str) -> Result<Loop> {
        let mut darts = Vec::new();
        for tok in text.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (n, e.parse::<i64>().map_err(|_| Error::usage(format!("bad exponent in {tok:?}")))?),
                None => (tok, 1),
            };
            let e = self.edge_index(name).ok_or_else(|| Error::usage(format!("unknown edge {name:?}")))?;
            for _ in 0..exp.unsigned_abs() {
                darts.push(Dart::new(e, exp > 0));
            }
        }
        Loop::new(darts)
    }

    pub fn format_loop(&self, l: &Loop) -> String {
        l.darts()
            .iter()
            .map(|d| if d.forward { self.names[d.edge].clone() } else { format!("{}^-1", self.names[d.edge]) })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A nonempty cyclically reduced closed edge-path.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Loop {
    darts: Vec<Dart>,
}

impl Loop {
    /// Freely and cyclically reduces the word; the empty result is rejected.
    pub fn new(darts: Vec<Dart>) -> Result<Self> {
        let mut out: Vec<Dart> = Vec::with_capacity(darts.len());
        for d in darts {
            if out.last() == Some(&d.reversed()) {
                out.pop();
            } else {
                out.push(d);
            }
        }
        let mut lo = 0;
        let mut hi = out.len();
        while hi - lo >= 2 && out[lo] == out[hi - 1].reversed() {
            lo += 1;
            hi -= 1;
        }
        if lo == hi {
            return Err(Error::Degenerate("loop reduces to the empty word".into()));
        }
        Ok(Loop { darts: out[lo..hi].to_vec() })
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn inverse(&self) -> Loop {
        Loop { darts: self.darts.iter().rev().map(|d| d.reversed()).collect() }
    }
}

impl fmt::Debug for Loop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.darts.iter().map(|d| format!("{}{}", if d.forward { "" } else { "-" }, d.edge)).collect();
        write!(f, "Loop[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_model() {
        let s = standard_surface(2).unwrap();
        let g = s.graph();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (1, 4, 1));
        assert_eq!(g.euler_characteristic(), -2);
        assert_eq!(s.homology_class(&s.parse_loop("a1").unwrap()), s.space().a(1));
    }

    #[test]
    fn commutator_loop_is_null_homologous() {
        let s = standard_surface(2).unwrap();
        let l = s.parse_loop("a1 b1 a1^-1 b1^-1").unwrap();
        assert!(s.homology_class(&l).is_zero());
    }

    #[test]
    fn cyclic_reduction() {
        let s = standard_surface(2).unwrap();
        let l = s.parse_loop("a2^-1 a1 b1 a2").unwrap();
        assert_eq!(s.format_loop(&l), "a1 b1");
        let l = s.parse_loop("a2^-1 a1 b1 b1^-1 a2").unwrap();
        assert_eq!(s.format_loop(&l), "a1");
        assert!(s.parse_loop("a1 a1^-1").is_err());
        assert!(matches!(standard_surface(1), Err(Error::Usage(_))));
    }
}
