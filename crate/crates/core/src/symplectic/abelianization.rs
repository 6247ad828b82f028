//! The level subgroup `Λ_g[p]` of matrices moving `e₁` by a multiple of `p`,
//! and its surjective homomorphism `φ_p : Λ_g[p] → ℤ/p`.

use serde::{Deserialize, Serialize};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::{transvection, SymplecticMatrix, TwistConvention};
use super::space::{pair_standard, HomologyVector, Ring, SymplecticSpace};
use crate::error::{Error, Result};

/// Reading of the membership condition `Ae₁ = e₁ + p·a`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum LambdaReading {
    /// `Ae₁ ≡ e₁ (mod p)`: `a` is any integer vector.
    #[default]
    Congruence,
    /// `Ae₁ − e₁ ∈ pℤ·b₁`: `a` is confined to the line of the partner `b₁`
    /// of `e₁ = a₁`. This set is not closed under products.
    Strict,
}

fn check_input(space: &SymplecticSpace, a: &SymplecticMatrix, p: i128) -> Result<()> {
    if p < 2 {
        return Err(Error::usage(format!("p must be at least 2, got {p}")));
    }
    if a.ring() != Ring::Integer {
        return Err(Error::usage("Λ_g[p] consists of integer matrices"));
    }
    if a.dim() != space.dim() {
        return Err(Error::usage("matrix dimension does not match the space"));
    }
    Ok(())
}

/// `Ae₁ − e₁` with `e₁ = a₁`.
fn displacement(a: &SymplecticMatrix) -> Vec<i128> {
    let mut d = a.entries().column(0);
    d[0] -= 1;
    d
}

pub fn in_lambda_p(space: &SymplecticSpace, a: &SymplecticMatrix, p: i128, reading: LambdaReading) -> Result<bool> {
    check_input(space, a, p)?;
    let d = displacement(a);
    Ok(match reading {
        LambdaReading::Congruence => d.iter().all(|x| x % p == 0),
        LambdaReading::Strict => d.iter().enumerate().all(|(i, x)| if i == 1 { x % p == 0 } else { *x == 0 }),
    })
}

/// `φ_p(A) = ((Ae₁ − e₁) ∧ e₁)/p mod p`, with `∧` the symplectic pairing.
pub fn phi_p(space: &SymplecticSpace, a: &SymplecticMatrix, p: i128) -> Result<i128> {
    if !in_lambda_p(space, a, p, LambdaReading::Congruence)? {
        return Err(Error::Precondition(format!("matrix is not in Λ_g[{p}]")));
    }
    let d = displacement(a);
    let mut e1 = vec![0; space.dim()];
    e1[0] = 1;
    let w = pair_standard(&d, &e1);
    if w % p != 0 {
        return Err(Error::internal(format!("pairing {w} is not divisible by {p}")));
    }
    Ok((w / p).rem_euclid(p))
}

/// Generators of `Λ_g[p]` used for sampling: twists along `a₁` and along
/// `aᵢ, bᵢ, a₁+aᵢ` for `i ≥ 2` (all fix `e₁`), and the `p`-th powers of the
/// twists along `b₁` and `b₁+aᵢ`.
pub fn lambda_p_generators(space: &SymplecticSpace, p: i128) -> Result<Vec<SymplecticMatrix>> {
    if p < 2 {
        return Err(Error::usage(format!("p must be at least 2, got {p}")));
    }
    let e = u32::try_from(p).map_err(|_| Error::usage("p is too large"))?;
    let conv = TwistConvention::Positive;
    let mut fixing: Vec<HomologyVector> = vec![space.a(1)];
    let mut powered: Vec<HomologyVector> = vec![space.b(1)];
    for i in 2..=space.genus() {
        fixing.extend([space.a(i), space.b(i), space.a(1).add(&space.a(i))]);
        powered.push(space.b(1).add(&space.a(i)));
    }
    let mut out = Vec::new();
    for c in &fixing {
        out.push(transvection(c, space, conv)?);
    }
    for c in &powered {
        out.push(transvection(c, space, conv)?.pow(e));
    }
    for m in &out {
        debug_assert!(in_lambda_p(space, m, p, LambdaReading::Congruence)?);
    }
    Ok(out)
}

/// Additivity and surjectivity of `φ_p` on seeded random words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub p: i128,
    pub pairs: usize,
    pub additivity_failures: usize,
    /// Sorted distinct values of `φ_p` met on the sampled elements.
    pub image: Vec<i128>,
    pub surjective: bool,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        self.additivity_failures == 0 && self.surjective
    }
}

/// Samples `pairs` pairs of words of length at most `max_length` over the
/// generators and their inverses, and checks `φ_p(AB) = φ_p(A) + φ_p(B)`.
pub fn check_phi(space: &SymplecticSpace, p: i128, pairs: usize, max_length: usize, seed: u64) -> Result<PhiReport> {
    let gens = lambda_p_generators(space, p)?;
    let j = space.form();
    let inverses: Vec<SymplecticMatrix> = gens.iter().map(|g| g.symplectic_inverse(&j, &j.neg())).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = |rng: &mut ChaCha8Rng| {
        let len = rng.gen_range(1..=max_length.max(1));
        let mut m = SymplecticMatrix::identity(Ring::Integer, space.dim());
        for _ in 0..len {
            let k = rng.gen_range(0..gens.len());
            m = m.mul(if rng.gen_bool(0.5) { &gens[k] } else { &inverses[k] });
        }
        m
    };
    let mut failures = 0;
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..pairs {
        let a = sample(&mut rng);
        let b = sample(&mut rng);
        let (fa, fb) = (phi_p(space, &a, p)?, phi_p(space, &b, p)?);
        let fab = phi_p(space, &a.mul(&b), p)?;
        if fab != (fa + fb).rem_euclid(p) {
            failures += 1;
        }
        seen.extend([fa, fb, fab]);
    }
    let image: Vec<i128> = seen.into_iter().collect();
    let surjective = image.len() as i128 == p;
    Ok(PhiReport { p, pairs, additivity_failures: failures, image, surjective })
}
