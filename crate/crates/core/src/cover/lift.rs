//! Lifts of twists to the cover: a multitwist along the two lifts when the
//! loop has monodromy 0, a single twist along the connected lift (lifting
//! the squared twist) when it has monodromy 1.

use serde::Serialize;

use super::double::{CoverSurface, LoopLift};
use super::homology::CoverHomology;
use super::search::is_chord_simple;
use super::surface::Loop;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::symplectic::{pair_standard, transvection_matrix, TwistConvention};

#[derive(Debug, Clone, Serialize)]
pub struct LiftedTwist {
    pub monodromy: u8,
    /// Homology classes of the lift components.
    pub lift_classes: Vec<Vec<i128>>,
    #[serde(skip)]
    pub matrix: IntMatrix,
}

impl LiftedTwist {
    /// `[lift⁰] − [lift¹]` for a two-component lift.
    pub fn lift_difference(&self) -> Option<Vec<i128>> {
        match self.lift_classes.as_slice() {
            [x, y] => Some(x.iter().zip(y).map(|(a, b)| a - b).collect()),
            _ => None,
        }
    }

    /// Full preimage class `[p⁻¹(c)]`.
    pub fn transfer(&self) -> Vec<i128> {
        let n = self.lift_classes[0].len();
        (0..n).map(|i| self.lift_classes.iter().map(|v| v[i]).sum()).collect()
    }
}

pub fn lift_classes(cover: &CoverSurface, hom: &CoverHomology, l: &Loop) -> Result<Vec<Vec<i128>>> {
    let g = cover.graph();
    match cover.lift_loop(l)? {
        LoopLift::Pair(ls) => ls.iter().map(|x| hom.class_of_cycle(cover, &g.chain(x.darts()))).collect(),
        LoopLift::Connected(x) => Ok(vec![hom.class_of_cycle(cover, &g.chain(x.darts()))?]),
    }
}

/// Lifted twist of a simple loop, after the realizability filter.
pub fn lifted_twist(
    cover: &CoverSurface,
    hom: &CoverHomology,
    l: &Loop,
    convention: TwistConvention,
) -> Result<LiftedTwist> {
    let base = cover.base();
    if !is_chord_simple(base.graph(), l) {
        return Err(Error::config(format!("loop {} is not simple", base.format_loop(l))));
    }
    let monodromy = cover.loop_monodromy(l);
    let classes = lift_classes(cover, hom, l)?;
    let sigma = hom.sigma();
    match (monodromy, classes.as_slice()) {
        (0, [x, y]) => {
            if hom.pair(x, y) != 0 {
                return Err(Error::config("the two lifts intersect algebraically"));
            }
            if sigma.mul_vec(x) != *y {
                return Err(Error::config("deck action does not swap the lift classes"));
            }
        }
        (1, [x]) => {
            if sigma.mul_vec(x) != *x {
                return Err(Error::config("connected lift class is not deck invariant"));
            }
        }
        _ => return Err(Error::internal("lift count does not match the monodromy")),
    }
    let twist = LiftedTwist { monodromy, lift_classes: classes, matrix: IntMatrix::zeros(0, 0) };

    // projection formula: î(p⁻¹c, y) = î(c, p_* y)
    let c = base.homology_class(l);
    let transfer = twist.transfer();
    for j in 0..hom.rank() {
        let mut y = vec![0; hom.rank()];
        y[j] = 1;
        let down = hom.projection().mul_vec(&y);
        if hom.pair(&transfer, &y) != pair_standard(c.coords(), &down) {
            return Err(Error::internal("lift violates the projection formula"));
        }
    }

    let gram = hom.gram();
    let mut matrix = IntMatrix::identity(hom.rank());
    for v in &twist.lift_classes {
        matrix = matrix.mul(&transvection_matrix(gram, v, convention));
    }
    if matrix.mul(sigma) != sigma.mul(&matrix) {
        return Err(Error::internal("lifted twist does not commute with the deck action"));
    }
    if matrix.congruence(gram) != *gram {
        return Err(Error::internal("lifted twist does not preserve the intersection form"));
    }
    Ok(LiftedTwist { matrix, ..twist })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{build_cover, cover_homology, standard_surface};
    use crate::finite::F2Class;

    #[test]
    fn lifted_twists_over_b1() {
        let s = standard_surface(2).unwrap();
        let c = build_cover(&s, F2Class::parse("0100").unwrap()).unwrap();
        let h = cover_homology(&c).unwrap();
        let conv = TwistConvention::Positive;

        let t = lifted_twist(&c, &h, &s.parse_loop("a1").unwrap(), conv).unwrap();
        assert_eq!(t.monodromy, 1);
        assert!(h.prym_frame().restrict(&t.matrix).unwrap().is_identity());

        let t = lifted_twist(&c, &h, &s.parse_loop("b1").unwrap(), conv).unwrap();
        assert_eq!(t.monodromy, 0);
        let diff = t.lift_difference().unwrap();
        assert_eq!(h.sigma().mul_vec(&t.lift_classes[0]), t.lift_classes[1]);
        let frame = h.prym_frame();
        let v = frame.coordinates(&diff).unwrap();
        let expected = transvection_matrix(&crate::symplectic::standard_form(1), &v, conv);
        assert_eq!(frame.restrict(&t.matrix).unwrap(), expected);
    }
}
