//! The double cover of `S_g` determined by a nonzero mod-2 class β.
//!
//! Cover edge `2e + s` is the lift of base edge `e` starting on sheet `s`;
//! it ends on sheet `s + m(e)` where `m(e) = î₂([e], β)`. The deck
//! transformation swaps the two lifts of every edge.

use serde::Serialize;

use super::ribbon::{Dart, RibbonGraph};
use super::surface::{Loop, RibbonSurface};
use crate::error::{Error, Result};
use crate::finite::{pair2, F2Class};

#[derive(Debug, Clone)]
pub struct CoverSurface {
    base: RibbonSurface,
    beta: F2Class,
    monodromy: Vec<u8>,
    graph: RibbonGraph,
}

/// Lifts of a closed loop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LoopLift {
    /// Monodromy 0: two disjoint lifts, starting on sheets 0 and 1.
    Pair([Loop; 2]),
    /// Monodromy 1: one connected lift of the doubled loop.
    Connected(Loop),
}

pub fn build_cover(base: &RibbonSurface, beta: F2Class) -> Result<CoverSurface> {
    let g = base.genus();
    if beta.genus() != g {
        return Err(Error::usage(format!("beta has genus {} but the surface has genus {g}", beta.genus())));
    }
    let monodromy: Vec<u8> = (0..2 * g).map(|e| pair2(1 << e, beta.bits())).collect();
    let mut edges = Vec::with_capacity(4 * g);
    for &m in &monodromy {
        for s in 0..2usize {
            edges.push((s, s ^ m as usize));
        }
    }
    let mut faces = Vec::with_capacity(2);
    for s in 0..2 {
        let (word, end) = lift_path_with(&monodromy, base.face_word(), s);
        if end != s {
            return Err(Error::internal("face boundary has nontrivial monodromy"));
        }
        faces.push(word);
    }
    let graph = RibbonGraph::new(2, edges, faces)?;
    let cover = CoverSurface { base: base.clone(), beta, monodromy, graph };
    if !cover.graph.is_connected() {
        return Err(Error::internal("cover of a nonzero class is disconnected"));
    }
    if cover.graph.euler_characteristic() != 2 * base.graph().euler_characteristic() {
        return Err(Error::internal("cover Euler characteristic is not twice the base"));
    }
    Ok(cover)
}

fn lift_path_with(monodromy: &[u8], word: &[Dart], mut sheet: usize) -> (Vec<Dart>, usize) {
    let mut out = Vec::with_capacity(word.len());
    for d in word {
        let m = monodromy[d.edge] as usize;
        if d.forward {
            out.push(Dart::new(2 * d.edge + sheet, true));
            sheet ^= m;
        } else {
            sheet ^= m;
            out.push(Dart::new(2 * d.edge + sheet, false));
        }
    }
    (out, sheet)
}

impl CoverSurface {
    pub fn base(&self) -> &RibbonSurface {
        &self.base
    }

    pub fn beta(&self) -> F2Class {
        self.beta
    }

    pub fn graph(&self) -> &RibbonGraph {
        &self.graph
    }

    /// `m(e) = î₂([e], β)` per base edge.
    pub fn monodromy(&self) -> &[u8] {
        &self.monodromy
    }

    pub fn genus(&self) -> Result<usize> {
        self.graph.genus()
    }

    pub fn loop_monodromy(&self, l: &Loop) -> u8 {
        l.darts().iter().fold(0, |acc, d| acc ^ self.monodromy[d.edge])
    }

    /// Lifts a dart path starting on `sheet`; returns the path and the end sheet.
    pub fn lift_path(&self, word: &[Dart], sheet: usize) -> (Vec<Dart>, usize) {
        lift_path_with(&self.monodromy, word, sheet)
    }

    pub fn lift_loop(&self, l: &Loop) -> Result<LoopLift> {
        let (w0, end) = self.lift_path(l.darts(), 0);
        if end == 0 {
            let (w1, _) = self.lift_path(l.darts(), 1);
            Ok(LoopLift::Pair([Loop::new(w0)?, Loop::new(w1)?]))
        } else {
            let (w1, back) = self.lift_path(l.darts(), 1);
            debug_assert_eq!(back, 0);
            let mut w = w0;
            w.extend(w1);
            Ok(LoopLift::Connected(Loop::new(w)?))
        }
    }

    pub fn deck_dart(&self, d: Dart) -> Dart {
        Dart::new(d.edge ^ 1, d.forward)
    }

    /// Image of an edge chain under the deck transformation.
    pub fn deck_chain(&self, chain: &[i128]) -> Vec<i128> {
        (0..chain.len()).map(|i| chain[i ^ 1]).collect()
    }

    /// Pushes an edge chain of the cover down to the base.
    pub fn project_chain(&self, chain: &[i128]) -> Vec<i128> {
        (0..chain.len() / 2).map(|e| chain[2 * e] + chain[2 * e + 1]).collect()
    }

    /// Cover edge names `a1.0`, `a1.1`, … (base edge and starting sheet).
    pub fn edge_names(&self) -> Vec<String> {
        self.base.edge_names().iter().flat_map(|n| [format!("{n}.0"), format!("{n}.1")]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::surface::standard_surface;

    #[test]
    fn genus_two_over_b1() {
        let s = standard_surface(2).unwrap();
        let c = build_cover(&s, F2Class::parse("0100").unwrap()).unwrap();
        assert_eq!(c.monodromy(), &[1, 0, 0, 0]);
        assert_eq!(c.graph().euler_characteristic(), -4);
        assert_eq!(c.genus().unwrap(), 3);
        assert_eq!(c.graph().face_count(), 2);
    }

    #[test]
    fn lifts_by_monodromy() {
        let s = standard_surface(2).unwrap();
        let c = build_cover(&s, F2Class::parse("0100").unwrap()).unwrap();
        match c.lift_loop(&s.parse_loop("b1").unwrap()).unwrap() {
            LoopLift::Pair([l0, l1]) => {
                assert_eq!(l0.len(), 1);
                assert_eq!(c.deck_dart(l0.darts()[0]), l1.darts()[0]);
            }
            other => panic!("unexpected {other:?}"),
        }
        match c.lift_loop(&s.parse_loop("a1").unwrap()).unwrap() {
            LoopLift::Connected(l) => assert_eq!(l.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn every_class_gives_a_connected_cover() {
        for g in 2..=4 {
            let s = standard_surface(g).unwrap();
            for beta in F2Class::all(g).unwrap().into_iter().step_by(7) {
                let c = build_cover(&s, beta).unwrap();
                assert!(c.graph().is_connected());
                assert_eq!(c.genus().unwrap(), 2 * g - 1);
            }
        }
    }
}
