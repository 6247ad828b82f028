//! Seeded residual sweeps and their CSV export.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::period::{equivariance_check, random_siegel_point, random_symmetric_period, CoverFrame, Tolerances};
use super::point::{antiholomorphic_check, composition_residual, ModularElement};
use crate::cover::{
    build_cover, cover_homology, lifted_twist, simple_curve_family, standard_surface, CoverRepresentation, SIGMA,
};
use crate::error::Result;
use crate::finite::F2Class;
use crate::linalg::IntMatrix;
use crate::symplectic::{
    eval_word, BaseRepresentation, Ring, SymplecticSpace, TwistConvention, TwistWord, WordSampler,
};

/// Longest random word used by the numeric sweeps.
pub const SWEEP_WORD_LENGTH: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub seed: u64,
    pub genus: usize,
    pub word_length: u64,
    pub residual: f64,
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("seed,genus,word_length,residual\n");
    for r in rows {
        writeln!(out, "{},{},{},{:e}", r.seed, r.genus, r.word_length, r.residual).expect("writing to a string");
    }
    out
}

/// Lifted twists of the short simple curves, plus σ, on one cover.
pub struct EquivarianceContext {
    pub genus: usize,
    pub frame: CoverFrame,
    pub representation: CoverRepresentation,
    pub generators: Vec<String>,
}

impl EquivarianceContext {
    pub fn new(genus: usize, beta: F2Class, convention: TwistConvention) -> Result<Self> {
        let surface = standard_surface(genus)?;
        let cover = build_cover(&surface, beta)?;
        let hom = cover_homology(&cover)?;
        let frame = CoverFrame::new(&hom)?;
        let mut representation = CoverRepresentation::new(&hom)?;
        let mut generators = vec![SIGMA.to_string()];
        for (name, l) in simple_curve_family(&surface, 2) {
            representation.insert(name.clone(), lifted_twist(&cover, &hom, &l, convention)?.matrix)?;
            generators.push(name);
        }
        Ok(EquivarianceContext { genus, frame, representation, generators })
    }

    pub fn evaluate(&self, w: &TwistWord) -> Result<IntMatrix> {
        Ok(eval_word(w, &self.representation)?.into_entries())
    }
}

/// Per seed: a σ-fixed period matrix and a random lifted word; the residual
/// is the larger of the variant and standard equivariance residuals.
pub fn equivariance_sweep(ctx: &EquivarianceContext, seeds: &[u64], max_length: usize, tol: Tolerances) -> Result<Vec<SweepRow>> {
    seeds
        .iter()
        .map(|&seed| {
            let pi = random_symmetric_period(ctx.frame.sigma(), ctx.genus, seed, tol)?;
            let w = WordSampler::new(ctx.generators.clone(), max_length, seed).sample();
            let r = equivariance_check(&ctx.frame, &ctx.evaluate(&w)?, &pi, tol)?;
            Ok(SweepRow { seed, genus: ctx.genus, word_length: w.length(), residual: r.variant.max(r.standard) })
        })
        .collect()
}

fn basis_word_element(h: usize, w: &TwistWord) -> Result<ModularElement> {
    let space = SymplecticSpace::new(h)?;
    let rep = BaseRepresentation::new(space, Ring::Integer, TwistConvention::Positive).with_basis_curves();
    let q = space.interleaved_to_block();
    ModularElement::new(q.mul(eval_word(w, &rep)?.entries()).mul(&q.transpose()))
}

fn basis_names(h: usize) -> Vec<String> {
    (1..=h).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect()
}

/// `‖G(M·τ) − ZMZ·G(τ)‖` for random words `M` in basis twists.
pub fn antiholomorphic_sweep(h: usize, seeds: &[u64], max_length: usize, tol: Tolerances) -> Result<Vec<SweepRow>> {
    seeds
        .iter()
        .map(|&seed| {
            let w = WordSampler::new(basis_names(h), max_length, seed).sample();
            let m = basis_word_element(h, &w)?;
            let tau = random_siegel_point(h, &mut ChaCha8Rng::seed_from_u64(seed));
            let residual = antiholomorphic_check(&m, &tau, tol.membership)?;
            Ok(SweepRow { seed, genus: h, word_length: w.length(), residual })
        })
        .collect()
}

/// `‖(MN)·τ − M·(N·τ)‖` for pairs of random words.
pub fn composition_sweep(h: usize, seeds: &[u64], max_length: usize, tol: Tolerances) -> Result<Vec<SweepRow>> {
    seeds
        .iter()
        .map(|&seed| {
            let mut sampler = WordSampler::new(basis_names(h), max_length, seed);
            let (u, v) = (sampler.sample(), sampler.sample());
            let (m, n) = (basis_word_element(h, &u)?, basis_word_element(h, &v)?);
            let tau = random_siegel_point(h, &mut ChaCha8Rng::seed_from_u64(seed));
            let residual = composition_residual(&m, &n, &tau, tol.membership)?;
            Ok(SweepRow { seed, genus: h, word_length: u.length() + v.length(), residual })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweeps_stay_within_tolerance() {
        let tol = Tolerances::default();
        let seeds: Vec<u64> = (0..10).collect();
        let ctx = EquivarianceContext::new(3, F2Class::parse("010000").unwrap(), TwistConvention::Positive).unwrap();
        for row in equivariance_sweep(&ctx, &seeds, SWEEP_WORD_LENGTH, tol).unwrap() {
            assert!(row.residual <= tol.equivariance, "{row:?}");
        }
        for row in antiholomorphic_sweep(3, &seeds, SWEEP_WORD_LENGTH, tol).unwrap() {
            assert!(row.residual <= tol.membership, "{row:?}");
        }
        for row in composition_sweep(3, &seeds, SWEEP_WORD_LENGTH, tol).unwrap() {
            assert!(row.residual <= tol.membership, "{row:?}");
        }
    }

    #[test]
    fn csv_layout() {
        let rows = [SweepRow { seed: 3, genus: 4, word_length: 2, residual: 1.5e-12 }];
        assert_eq!(to_csv(&rows), "seed,genus,word_length,residual\n3,4,2,1.5e-12\n");
    }
}
