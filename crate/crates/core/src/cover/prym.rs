//! Cover and Prym representations of lifted twist words.

use std::collections::BTreeMap;

use super::double::CoverSurface;
use super::homology::{CoverHomology, PrymFrame};
use super::lift::lifted_twist;
use super::search::find_simple_loop;
use super::surface::{Loop, RibbonSurface};
use crate::error::{Error, Result};
use crate::finite::{GroupClosure, ModMatrix};
use crate::linalg::IntMatrix;
use crate::symplectic::{
    eval_word, standard_form, HomologyVector, Representation, Ring, SymplecticMatrix, TwistConvention, TwistWord,
};

/// Name under which the deck involution is registered.
pub const SIGMA: &str = "sigma";

/// Action on `H₁(cover)` of named lifted twists and `σ`.
#[derive(Debug, Clone)]
pub struct CoverRepresentation {
    gram: IntMatrix,
    gram_inverse: IntMatrix,
    table: BTreeMap<String, IntMatrix>,
}

impl CoverRepresentation {
    pub fn new(hom: &CoverHomology) -> Result<Self> {
        let mut table = BTreeMap::new();
        table.insert(SIGMA.to_string(), hom.sigma().clone());
        Ok(CoverRepresentation {
            gram: hom.gram().clone(),
            gram_inverse: hom.gram().inverse_unimodular()?,
            table,
        })
    }

    pub fn insert(&mut self, name: impl Into<String>, matrix: IntMatrix) -> Result<()> {
        if matrix.rows() != self.gram.rows() || !matrix.is_square() {
            return Err(Error::usage("generator matrix has the wrong size"));
        }
        self.table.insert(name.into(), matrix);
        Ok(())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.table.keys().map(String::as_str)
    }
}

impl Representation for CoverRepresentation {
    fn dim(&self) -> usize {
        self.gram.rows()
    }

    fn ring(&self) -> Ring {
        Ring::Integer
    }

    fn generator(&self, name: &str) -> Result<IntMatrix> {
        self.table.get(name).cloned().ok_or_else(|| Error::usage(format!("unknown generator {name:?}")))
    }

    fn invert(&self, m: &IntMatrix) -> IntMatrix {
        self.gram_inverse.mul(&m.transpose()).mul(&self.gram)
    }
}

/// Restriction of the cover representation to the minus lattice.
#[derive(Debug, Clone)]
pub struct PrymRepresentation {
    cover: CoverRepresentation,
    frame: PrymFrame,
    form: IntMatrix,
}

impl PrymRepresentation {
    pub fn new(cover: CoverRepresentation, frame: PrymFrame) -> Self {
        let form = standard_form(frame.rank() / 2);
        PrymRepresentation { cover, frame, form }
    }

    pub fn frame(&self) -> &PrymFrame {
        &self.frame
    }

    pub fn cover(&self) -> &CoverRepresentation {
        &self.cover
    }
}

impl Representation for PrymRepresentation {
    fn dim(&self) -> usize {
        self.frame.rank()
    }

    fn ring(&self) -> Ring {
        Ring::Integer
    }

    fn generator(&self, name: &str) -> Result<IntMatrix> {
        self.frame.restrict(&self.cover.generator(name)?)
    }

    fn invert(&self, m: &IntMatrix) -> IntMatrix {
        self.form.neg().mul(&m.transpose()).mul(&self.form)
    }
}

/// `Prym_*(w)`, checked to preserve `î₋` exactly.
pub fn prym(rep: &PrymRepresentation, w: &TwistWord) -> Result<SymplecticMatrix> {
    let m = eval_word(w, rep)?;
    if !m.is_symplectic_for(&rep.form) {
        return Err(Error::internal("Prym image does not preserve the halved form"));
    }
    Ok(m)
}

/// Simple curves whose classes have between 1 and `max_letters` nonzero
/// coordinates, all ±1 with the first one positive. Classes without a
/// simple distinct-letter word are skipped.
pub fn simple_curve_family(surface: &RibbonSurface, max_letters: usize) -> Vec<(String, Loop)> {
    let n = 2 * surface.genus();
    let mut out = Vec::new();
    for support in 1u32..(1 << n) {
        let k = support.count_ones() as usize;
        if k > max_letters {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|i| support >> i & 1 == 1).collect();
        for signs in 0u32..(1 << (k - 1)) {
            let mut coords = vec![0i128; n];
            for (j, &i) in idx.iter().enumerate() {
                coords[i] = if j > 0 && signs >> (j - 1) & 1 == 1 { -1 } else { 1 };
            }
            if let Ok(l) = find_simple_loop(surface, &HomologyVector::integer(coords)) {
                out.push((surface.format_loop(&l), l));
            }
        }
    }
    out
}

/// Prym images of the lifted twists of the given curves.
pub fn prym_images(
    cover: &CoverSurface,
    hom: &CoverHomology,
    curves: &[(String, Loop)],
    convention: TwistConvention,
) -> Result<Vec<IntMatrix>> {
    curves
        .iter()
        .map(|(_, l)| hom.prym_frame().restrict(&lifted_twist(cover, hom, l, convention)?.matrix))
        .collect()
}

/// Budget for mod-ℓ closures; `|Sp(4,3)| = 51840` fits comfortably.
pub const MOD_ELL_BUDGET: usize = 200_000;

/// BFS closure of the mod-ℓ reductions of the given matrices.
pub fn mod_ell_closure(matrices: &[IntMatrix], ell: u8) -> Result<GroupClosure> {
    let dim = matrices.first().map(IntMatrix::rows).ok_or_else(|| Error::usage("no matrices given"))?;
    if ell < 2 {
        return Err(Error::usage("ell must be at least 2"));
    }
    let mut gens: Vec<ModMatrix> = Vec::new();
    for m in matrices {
        let r = ModMatrix::from_int(m, ell);
        if !r.is_identity() && !gens.contains(&r) {
            gens.push(r);
        }
    }
    GroupClosure::generate(dim, ell, gens, MOD_ELL_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{build_cover, cover_homology, standard_surface};
    use crate::finite::{symplectic_group_order, F2Class};

    #[test]
    fn genus_two_family_generates_sp2_mod_small_primes() {
        let s = standard_surface(2).unwrap();
        let c = build_cover(&s, F2Class::parse("0100").unwrap()).unwrap();
        let h = cover_homology(&c).unwrap();
        let family = simple_curve_family(&s, 2);
        assert!(family.iter().any(|(w, _)| w == "a1 a2"));
        let images = prym_images(&c, &h, &family, TwistConvention::Positive).unwrap();
        for ell in [2u8, 3] {
            let closure = mod_ell_closure(&images, ell).unwrap();
            assert_eq!(closure.order() as u128, symplectic_group_order(1, u64::from(ell)));
        }
    }

    #[test]
    fn genus_three_family_generates_sp4_mod_two_and_three() {
        let s = standard_surface(3).unwrap();
        let c = build_cover(&s, F2Class::parse("010000").unwrap()).unwrap();
        let h = cover_homology(&c).unwrap();
        let images = prym_images(&c, &h, &simple_curve_family(&s, 2), TwistConvention::Positive).unwrap();
        assert_eq!(mod_ell_closure(&images, 2).unwrap().order(), 720);
        assert_eq!(mod_ell_closure(&images, 3).unwrap().order(), 51840);
    }
}
