//! Ribbon graphs: cellular surfaces given by oriented edges and face
//! boundary words. The rotation system is read off the faces, and the
//! intersection pairing of two edge cycles is computed by pushing one cycle
//! off the vertices along the rotation.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// An edge traversed forwards or backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Dart {
    pub edge: usize,
    pub forward: bool,
}

impl Dart {
    pub fn new(edge: usize, forward: bool) -> Self {
        Dart { edge, forward }
    }

    pub fn reversed(self) -> Self {
        Dart { edge: self.edge, forward: !self.forward }
    }

    /// Half-edge at which the dart leaves its start vertex.
    pub fn start_half(self) -> usize {
        2 * self.edge + usize::from(!self.forward)
    }

    /// Half-edge at which the dart arrives.
    pub fn end_half(self) -> usize {
        2 * self.edge + usize::from(self.forward)
    }
}

/// Half-edge `2e` is the tail end of edge `e`, `2e + 1` the head end.
fn is_head(half: usize) -> bool {
    half % 2 == 1
}

#[derive(Debug, Clone)]
pub struct RibbonGraph {
    vertex_count: usize,
    /// `(tail, head)` per edge.
    edges: Vec<(usize, usize)>,
    faces: Vec<Vec<Dart>>,
    /// Cyclic order of half-edges around each vertex.
    rotation: Vec<Vec<usize>>,
}

impl RibbonGraph {
    /// Builds the graph and derives the rotation system. Every dart must
    /// occur exactly once on the face boundaries and consecutive darts must
    /// meet at a vertex; each vertex link must be a single cycle.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, faces: Vec<Vec<Dart>>) -> Result<Self> {
        let halves = 2 * edges.len();
        if edges.iter().any(|&(t, h)| t >= vertex_count || h >= vertex_count) {
            return Err(Error::usage("edge endpoint out of range"));
        }
        let vertex_of = |half: usize| {
            let (t, h) = edges[half / 2];
            if is_head(half) {
                h
            } else {
                t
            }
        };
        let mut used = vec![false; halves];
        let mut next = vec![usize::MAX; halves];
        for face in &faces {
            if face.is_empty() {
                return Err(Error::usage("empty face"));
            }
            for (i, &d) in face.iter().enumerate() {
                if d.edge >= edges.len() {
                    return Err(Error::usage("face uses an unknown edge"));
                }
                if std::mem::replace(&mut used[d.start_half()], true) {
                    return Err(Error::usage("a dart occurs twice on the face boundaries"));
                }
                let out = face[(i + 1) % face.len()];
                if vertex_of(d.end_half()) != vertex_of(out.start_half()) {
                    return Err(Error::usage("face boundary is not a closed walk"));
                }
                next[out.start_half()] = d.end_half();
            }
        }
        if used.iter().any(|u| !u) {
            return Err(Error::usage("some dart is missing from the face boundaries"));
        }
        let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
        let mut seen = vec![false; halves];
        for h in 0..halves {
            if seen[h] {
                continue;
            }
            let v = vertex_of(h);
            if !rotation[v].is_empty() {
                return Err(Error::usage(format!("the link of vertex {v} is not a single cycle")));
            }
            let mut x = h;
            loop {
                seen[x] = true;
                rotation[v].push(x);
                x = next[x];
                if x == h {
                    break;
                }
            }
        }
        Ok(RibbonGraph { vertex_count, edges, faces, rotation })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn genus(&self) -> Result<usize> {
        let chi = self.euler_characteristic();
        if !self.is_connected() || chi > 2 || chi % 2 != 0 {
            return Err(Error::Degenerate("not a connected closed orientable surface".into()));
        }
        Ok(((2 - chi) / 2) as usize)
    }

    pub fn is_connected(&self) -> bool {
        self.spanning_tree().1.iter().all(|p| p.is_some())
    }

    pub fn start(&self, d: Dart) -> usize {
        let (t, h) = self.edges[d.edge];
        if d.forward {
            t
        } else {
            h
        }
    }

    pub fn end(&self, d: Dart) -> usize {
        self.start(d.reversed())
    }

    /// Edge chain of a dart sequence.
    pub fn chain(&self, word: &[Dart]) -> Vec<i128> {
        let mut c = vec![0; self.edges.len()];
        for d in word {
            c[d.edge] += if d.forward { 1 } else { -1 };
        }
        c
    }

    pub fn boundary(&self, chain: &[i128]) -> Vec<i128> {
        let mut b = vec![0; self.vertex_count];
        for (e, &(t, h)) in self.edges.iter().enumerate() {
            b[h] += chain[e];
            b[t] -= chain[e];
        }
        b
    }

    pub fn is_cycle(&self, chain: &[i128]) -> bool {
        self.boundary(chain).iter().all(|&x| x == 0)
    }

    /// Algebraic intersection number of two edge cycles.
    ///
    /// `y` is pushed slightly off every vertex into the corners between
    /// consecutive half-edges; the pushed copy is disjoint from `x` except
    /// near vertices, where the signed count of `x`'s outgoing strands
    /// meeting the corner function of `y` gives the intersection number.
    pub fn intersection(&self, x: &[i128], y: &[i128]) -> Result<i128> {
        if !self.is_cycle(x) || !self.is_cycle(y) {
            return Err(Error::Precondition("intersection of non-cycles".into()));
        }
        let mut total = 0i128;
        for cyc in &self.rotation {
            let k = cyc.len();
            let mut s = vec![0i128; k];
            for (j, &h) in cyc.iter().enumerate() {
                let ye = y[h / 2];
                if is_head(h) {
                    s[(j + k - 1) % k] += ye;
                } else {
                    s[j] -= ye;
                }
            }
            let mut f = 0i128;
            for (j, &h) in cyc.iter().enumerate() {
                let xe = x[h / 2];
                total += if is_head(h) { -xe } else { xe } * f;
                f += s[j];
            }
            if f != 0 {
                return Err(Error::internal("corner function does not close up"));
            }
        }
        Ok(total)
    }

    /// BFS spanning tree from vertex 0: tree edge flags and, per vertex,
    /// the parent dart (pointing from the parent to the vertex).
    fn spanning_tree(&self) -> (Vec<bool>, Vec<Option<Option<Dart>>>) {
        let mut in_tree = vec![false; self.edges.len()];
        let mut parent: Vec<Option<Option<Dart>>> = vec![None; self.vertex_count];
        if self.vertex_count == 0 {
            return (in_tree, parent);
        }
        parent[0] = Some(None);
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for (e, &(t, h)) in self.edges.iter().enumerate() {
                for (from, to, forward) in [(t, h, true), (h, t, false)] {
                    if from == v && parent[to].is_none() {
                        parent[to] = Some(Some(Dart::new(e, forward)));
                        in_tree[e] = true;
                        queue.push_back(to);
                    }
                }
            }
        }
        (in_tree, parent)
    }

    /// Integral first homology with a fixed basis.
    pub fn homology(&self) -> Result<CellularHomology> {
        let (in_tree, parent) = self.spanning_tree();
        if parent.iter().any(|p| p.is_none()) {
            return Err(Error::Degenerate("graph is disconnected".into()));
        }
        let m = self.edges.len();
        // chain of the tree path from the root to each vertex
        let mut root_path: Vec<Option<Vec<i128>>> = vec![None; self.vertex_count];
        fn path_to(
            v: usize,
            g: &RibbonGraph,
            parent: &[Option<Option<Dart>>],
            memo: &mut Vec<Option<Vec<i128>>>,
        ) -> Vec<i128> {
            if let Some(p) = &memo[v] {
                return p.clone();
            }
            let p = match parent[v].expect("connected") {
                None => vec![0; g.edges.len()],
                Some(d) => {
                    let mut p = path_to(g.start(d), g, parent, memo);
                    p[d.edge] += if d.forward { 1 } else { -1 };
                    p
                }
            };
            memo[v] = Some(p.clone());
            p
        }
        let nontree: Vec<usize> = (0..m).filter(|&e| !in_tree[e]).collect();
        let k = nontree.len();
        let fundamental: Vec<Vec<i128>> = nontree
            .iter()
            .map(|&e| {
                let (t, h) = self.edges[e];
                let pt = path_to(t, self, &parent, &mut root_path);
                let ph = path_to(h, self, &parent, &mut root_path);
                let mut z: Vec<i128> = pt.iter().zip(&ph).map(|(a, b)| a - b).collect();
                z[e] += 1;
                z
            })
            .collect();

        let restrict = |z: &[i128]| -> Vec<i128> { nontree.iter().map(|&e| z[e]).collect() };
        let relations: Vec<Vec<i128>> = self.faces.iter().map(|f| restrict(&self.chain(f))).collect();
        let b = IntMatrix::from_rows(&relations);
        // column echelon of the relation rows: b · v = [c | 0]
        let e = b.transpose().echelon();
        let r = e.pivots.len();
        let v = e.u.transpose();
        let top = e.h.select(&(0..r).collect::<Vec<_>>(), &(0..self.faces.len()).collect::<Vec<_>>());
        if !top.transpose().is_saturated() {
            return Err(Error::Degenerate("first homology has torsion".into()));
        }
        let v_inv = v.inverse_unimodular()?;
        let rank = k - r;
        let projection = v.select(&(0..k).collect::<Vec<_>>(), &(r..k).collect::<Vec<_>>());
        let reps: Vec<Vec<i128>> = (r..k)
            .map(|i| {
                let coeffs = v_inv.row(i);
                let mut z = vec![0i128; m];
                for (c, f) in coeffs.iter().zip(&fundamental) {
                    for (zi, fi) in z.iter_mut().zip(f) {
                        *zi += c * fi;
                    }
                }
                z
            })
            .collect();
        let representatives = IntMatrix::from_columns(m, &reps);
        let mut gram = IntMatrix::zeros(rank, rank);
        for i in 0..rank {
            for j in 0..rank {
                gram[(i, j)] = self.intersection(&reps[i], &reps[j])?;
            }
        }
        if !gram.is_skew() || gram.det().abs() != 1 {
            return Err(Error::internal("intersection form is not skew and unimodular"));
        }
        Ok(CellularHomology { nontree, projection, representatives, gram })
    }
}

/// `H₁` of a ribbon graph: coordinates of cycles and their intersection form.
#[derive(Debug, Clone)]
pub struct CellularHomology {
    nontree: Vec<usize>,
    /// Maps non-tree coordinates of a cycle to homology coordinates.
    projection: IntMatrix,
    /// Edge cycles representing the basis, as columns.
    representatives: IntMatrix,
    gram: IntMatrix,
}

impl CellularHomology {
    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn representatives(&self) -> &IntMatrix {
        &self.representatives
    }

    /// Homology coordinates of an edge cycle (the caller checks it is one).
    pub fn class_of(&self, cycle: &[i128]) -> Vec<i128> {
        let z: Vec<i128> = self.nontree.iter().map(|&e| cycle[e]).collect();
        self.projection.transpose().mul_vec(&z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> RibbonGraph {
        let f = vec![Dart::new(0, true), Dart::new(1, true), Dart::new(0, false), Dart::new(1, false)];
        RibbonGraph::new(1, vec![(0, 0), (0, 0)], vec![f]).unwrap()
    }

    #[test]
    fn torus_pairing() {
        let t = torus();
        assert_eq!(t.euler_characteristic(), 0);
        assert_eq!(t.genus().unwrap(), 1);
        assert_eq!(t.intersection(&[1, 0], &[0, 1]).unwrap(), 1);
        assert_eq!(t.intersection(&[0, 1], &[1, 0]).unwrap(), -1);
        assert_eq!(t.intersection(&[1, 1], &[1, 1]).unwrap(), 0);
        let h = t.homology().unwrap();
        assert_eq!(h.rank(), 2);
        assert_eq!(h.gram().det(), 1);
    }

    #[test]
    fn sphere_from_one_edge() {
        // a single edge between two vertices, one face e e⁻¹
        let f = vec![Dart::new(0, true), Dart::new(0, false)];
        let s = RibbonGraph::new(2, vec![(0, 1)], vec![f]).unwrap();
        assert_eq!(s.genus().unwrap(), 0);
        assert_eq!(s.homology().unwrap().rank(), 0);
    }

    #[test]
    fn rejects_open_walks() {
        let f = vec![Dart::new(0, true), Dart::new(0, true)];
        assert!(RibbonGraph::new(2, vec![(0, 1)], vec![f]).is_err());
    }
}
