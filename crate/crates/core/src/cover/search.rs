//! Simplicity filter for edge-loops and the bounded search for simple loop
//! representatives of a homology class.

use super::ribbon::{Dart, RibbonGraph};
use super::surface::{Loop, RibbonSurface};
use crate::error::{Error, Result};
use crate::symplectic::HomologyVector;

/// Longest word the representative search will consider.
pub const MAX_SEARCH_LENGTH: usize = 10;

/// True iff the loop uses every edge at most once and its turns at each
/// vertex are pairwise non-crossing chords of the rotation, so that the
/// loop can be drawn as a simple closed curve near the graph.
pub fn is_chord_simple(graph: &RibbonGraph, l: &Loop) -> bool {
    let darts = l.darts();
    let mut used = vec![false; graph.edge_count()];
    for d in darts {
        if std::mem::replace(&mut used[d.edge], true) {
            return false;
        }
    }
    let mut position = vec![0usize; 2 * graph.edge_count()];
    for cyc in graph.rotation() {
        for (i, &h) in cyc.iter().enumerate() {
            position[h] = i;
        }
    }
    let n = darts.len();
    let mut chords: Vec<Vec<(usize, usize)>> = vec![Vec::new(); graph.vertex_count()];
    for i in 0..n {
        let (din, dout) = (darts[i], darts[(i + 1) % n]);
        let v = graph.end(din);
        let (p, q) = (position[din.end_half()], position[dout.start_half()]);
        chords[v].push((p.min(q), p.max(q)));
    }
    chords.iter().all(|cs| {
        cs.iter().enumerate().all(|(i, &(p, q))| {
            cs[i + 1..].iter().all(|&(r, s)| {
                let inside = |x: usize| p < x && x < q;
                inside(r) == inside(s)
            })
        })
    })
}

/// The first chord-simple loop with class `target`, searching orderings of
/// the letters `±eᵢ` read off the coordinates. Only classes with
/// coordinates in {−1, 0, 1} have such representatives.
pub fn find_simple_loop(surface: &RibbonSurface, target: &HomologyVector) -> Result<Loop> {
    let coords = target.coords();
    if coords.len() != 2 * surface.genus() {
        return Err(Error::usage("target class has the wrong dimension"));
    }
    if coords.iter().any(|c| c.abs() > 1) {
        return Err(Error::config(format!("class {coords:?} has no representative with distinct letters")));
    }
    let letters: Vec<Dart> =
        coords.iter().enumerate().filter(|(_, &c)| c != 0).map(|(e, &c)| Dart::new(e, c > 0)).collect();
    if letters.is_empty() {
        return Err(Error::Degenerate("zero class has no loop representative".into()));
    }
    if letters.len() > MAX_SEARCH_LENGTH {
        return Err(Error::config("class needs a word longer than the search bound"));
    }
    // the first letter is fixed, since rotating a cyclic word changes nothing
    let mut rest: Vec<usize> = (1..letters.len()).collect();
    loop {
        let word: Vec<Dart> = std::iter::once(letters[0]).chain(rest.iter().map(|&i| letters[i])).collect();
        let l = Loop::new(word)?;
        if is_chord_simple(surface.graph(), &l) {
            return Ok(l);
        }
        if !next_permutation(&mut rest) {
            return Err(Error::config(format!("no simple representative found for class {coords:?}")));
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::surface::standard_surface;

    #[test]
    fn basis_curves_are_simple() {
        let s = standard_surface(3).unwrap();
        for name in ["a1", "b1", "a2", "b3"] {
            assert!(is_chord_simple(s.graph(), &s.parse_loop(name).unwrap()));
        }
    }

    #[test]
    fn repeated_letters_are_rejected() {
        let s = standard_surface(2).unwrap();
        assert!(!is_chord_simple(s.graph(), &s.parse_loop("a1 a1").unwrap()));
    }

    #[test]
    fn search_finds_class_representatives() {
        let s = standard_surface(3).unwrap();
        let sp = s.space();
        for v in [sp.a(1).add(&sp.a(2)), sp.b(1).add(&sp.b(2)), sp.a(2).add(&sp.a(3))] {
            let l = find_simple_loop(&s, &v).unwrap();
            assert_eq!(s.homology_class(&l), v);
            assert!(is_chord_simple(s.graph(), &l));
        }
    }

    #[test]
    fn classes_without_distinct_letter_representatives() {
        let s = standard_surface(3).unwrap();
        let sp = s.space();
        // a1 b3 and b3 a1 both cross at the vertex
        assert!(matches!(find_simple_loop(&s, &sp.a(1).add(&sp.b(3))), Err(Error::Configuration(_))));
        assert!(matches!(find_simple_loop(&s, &sp.a(1).scale(2)), Err(Error::Configuration(_))));
    }

    #[test]
    fn permutations_are_exhaustive() {
        let mut v = vec![1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 6);
    }
}
