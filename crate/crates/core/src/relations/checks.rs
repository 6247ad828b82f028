use serde::Serialize;

use super::config::{chain_boundary_class, check_chain_pattern, ChainConfig, TwoChainConfig};
use crate::cover::{
    build_cover, cover_homology, lifted_twist, prym, standard_surface, CoverRepresentation, PrymRepresentation,
};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::symplectic::{
    eval_word, BaseRepresentation, HomologyVector, Representation, Ring, SymplecticSpace,
    TwistConvention, TwistWord,
};

/// Outcome of comparing the two sides of a relation in one representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub name: String,
    pub representation: String,
    pub left: Vec<Vec<i128>>,
    pub right: Vec<Vec<i128>>,
    pub holds: bool,
    /// `left − right`, present only when the sides differ.
    pub discrepancy: Option<Vec<Vec<i128>>>,
}

impl RelationReport {
    pub fn compare(name: impl Into<String>, representation: impl Into<String>, left: &IntMatrix, right: &IntMatrix) -> Self {
        let holds = left == right;
        RelationReport {
            name: name.into(),
            representation: representation.into(),
            left: left.to_rows(),
            right: right.to_rows(),
            holds,
            discrepancy: (!holds).then(|| left.sub(right).to_rows()),
        }
    }
}

fn evaluate(w: &TwistWord, rep: &dyn Representation) -> Result<IntMatrix> {
    Ok(eval_word(w, rep)?.into_entries())
}

/// `(T_a² T_b)⁴` against `T_d`.
pub fn verify_two_chain(config: &TwoChainConfig, rep: &dyn Representation, label: &str) -> Result<RelationReport> {
    let sp = SymplecticSpace::new(config.genus)?;
    check_chain_pattern(&sp, &[config.a.class.clone(), config.b.class.clone()])?;
    let left = TwistWord::single("a", 2).then("b", 1).power(4);
    let right = TwistWord::single("d", 1);
    Ok(RelationReport::compare("two-chain", label, &evaluate(&left, rep)?, &evaluate(&right, rep)?))
}

/// `(T_a² T_{c₁} T_{c₂})³` against `(T_{a'}² T_{c₃} ⋯ T_{c_{2g−2}})^{2g−3}`.
pub fn verify_complementary_chains(config: &ChainConfig, rep: &dyn Representation, label: &str) -> Result<RelationReport> {
    if config.genus < 4 {
        return Err(Error::usage("complementary chains need genus at least 4"));
    }
    let left = evaluate(&config.left_word(), rep)?;
    let right = evaluate(&config.right_word(), rep)?;
    Ok(RelationReport::compare("complementary-chains", label, &left, &right))
}

/// The left chain word against `T_{d₁} T_{d₂}`, which acts on homology as
/// the squared twist along the common boundary class.
pub fn verify_chain_boundary(config: &ChainConfig, rep: &dyn Representation, label: &str) -> Result<RelationReport> {
    let left = evaluate(&config.left_word(), rep)?;
    let right = evaluate(&TwistWord::single("d", 2), rep)?;
    Ok(RelationReport::compare("chain-boundary", label, &left, &right))
}

/// `M = (T_{c₁} T_{c₂})³` against `I − 2P`, where `P` projects onto
/// `span{c₁, c₂}` along its orthogonal complement: `M` is `−Id` on the span
/// and the identity on the complement.
pub fn verify_minus_id_span(
    space: &SymplecticSpace,
    c1: &HomologyVector,
    c2: &HomologyVector,
    convention: TwistConvention,
) -> Result<RelationReport> {
    let eps = space.pair(c1, c2)?;
    if eps.abs() != 1 {
        return Err(Error::config(format!("span curves pair to {eps}, not ±1")));
    }
    let mut rep = BaseRepresentation::new(*space, Ring::Integer, convention);
    rep.insert("c1", c1.clone())?;
    rep.insert("c2", c2.clone())?;
    let m = evaluate(&TwistWord::single("c1", 1).then("c2", 1).power(3), &rep)?;
    let n = space.dim();
    // P x = ε(î(x,c₂)c₁ − î(x,c₁)c₂)
    let j = space.form();
    let (u, v) = (j.mul_vec(c2.coords()), j.mul_vec(c1.coords()));
    let expected = IntMatrix::from_fn(n, n, |i, k| {
        let p = eps * (c1.coords()[i] * u[k] - c2.coords()[i] * v[k]);
        i128::from(i == k) - 2 * p
    });
    Ok(RelationReport::compare("minus-id-span", "psi", &m, &expected))
}

/// Experimental k-chain relation on homology: `(T_{c₁} ⋯ T_{c_k})^{2k+2}`
/// against `T_d` for even `k`, `(T_{c₁} ⋯ T_{c_k})^{k+1}` against `T_d²`
/// for odd `k`.
pub fn verify_k_chain(
    space: &SymplecticSpace,
    chain: &[HomologyVector],
    convention: TwistConvention,
) -> Result<RelationReport> {
    if chain.is_empty() {
        return Err(Error::usage("empty chain"));
    }
    check_chain_pattern(space, chain)?;
    let d = chain_boundary_class(space, chain)?;
    let mut rep = BaseRepresentation::new(*space, Ring::Integer, convention);
    let mut word = TwistWord::new();
    for (i, c) in chain.iter().enumerate() {
        rep.insert(format!("c{}", i + 1), c.clone())?;
        word = word.then(format!("c{}", i + 1), 1);
    }
    rep.insert("d", d)?;
    let k = chain.len() as u32;
    let (left, right) = if k.is_multiple_of(2) {
        (word.power(2 * k + 2), TwistWord::single("d", 1))
    } else {
        (word.power(k + 1), TwistWord::single("d", 2))
    };
    Ok(RelationReport::compare(format!("{k}-chain"), "psi", &evaluate(&left, &rep)?, &evaluate(&right, &rep)?))
}

/// Compares a relation under the `ℤ/p` reduction of `rep` with the entrywise
/// reduction of its integer sides.
pub fn verify_reduction(
    name: &str,
    left: &TwistWord,
    right: &TwistWord,
    rep: &BaseRepresentation,
    p: u32,
) -> Result<RelationReport> {
    let reduced = rep.with_ring(Ring::Mod(p));
    let l = eval_word(left, &reduced)?;
    let r = eval_word(right, &reduced)?;
    let li = eval_word(left, rep)?.reduce_mod(p)?;
    let ri = eval_word(right, rep)?.reduce_mod(p)?;
    if l != li || r != ri {
        return Err(Error::internal(format!("reduction mod {p} is not a homomorphism on {name}")));
    }
    Ok(RelationReport::compare(name, format!("psi mod {p}"), l.entries(), r.entries()))
}

/// The lifted complementary-chain words on the cover of genus `2g−1`.
#[derive(Debug, Clone, Serialize)]
pub struct ObstructionReport {
    pub genus: usize,
    pub cover_rank: usize,
    /// `L = σ_*·R` on `H₁(cover)`.
    pub sigma_corrected: RelationReport,
    pub l_differs_from_r: bool,
    /// `Prym(L) = −Prym(R)`.
    pub prym_opposite: RelationReport,
    /// `L` and `R` agree on the plus lattice.
    pub plus_agree: bool,
    pub holds: bool,
}

/// Evaluates the lifted words without σ and checks the σ-corrected form.
pub fn verify_lifted_obstruction(config: &ChainConfig, convention: TwistConvention) -> Result<ObstructionReport> {
    let base = standard_surface(config.genus)?;
    let cover = build_cover(&base, config.beta)?;
    let hom = cover_homology(&cover)?;
    let mut cover_rep = CoverRepresentation::new(&hom)?;
    for c in config.curves() {
        let curve = c.curve.as_ref().ok_or_else(|| Error::config(format!("curve {} has no loop", c.name)))?;
        cover_rep.insert(c.name.clone(), lifted_twist(&cover, &hom, curve, convention)?.matrix)?;
    }
    let l = evaluate(&config.lifted_left_word(), &cover_rep)?;
    let r = evaluate(&config.lifted_right_word(), &cover_rep)?;
    let sigma = hom.sigma();
    let sigma_corrected = RelationReport::compare("lifted-chains-sigma", "cover", &l, &sigma.mul(&r));

    let prym_rep = PrymRepresentation::new(cover_rep, hom.prym_frame().clone());
    let pl = prym(&prym_rep, &config.lifted_left_word())?.into_entries();
    let pr = prym(&prym_rep, &config.lifted_right_word())?.into_entries();
    if pl != hom.prym_frame().restrict(&l)? || pr != hom.prym_frame().restrict(&r)? {
        return Err(Error::internal("restriction to the minus lattice is not multiplicative"));
    }
    let prym_opposite = RelationReport::compare("lifted-chains-prym", "prym", &pl, &pr.neg());

    let plus = hom.plus_basis();
    let plus_agree = l.mul(plus) == r.mul(plus);
    let l_differs_from_r = l != r;
    let holds = sigma_corrected.holds && prym_opposite.holds && plus_agree && l_differs_from_r;
    Ok(ObstructionReport {
        genus: config.genus,
        cover_rank: hom.rank(),
        sigma_corrected,
        l_differs_from_r,
        prym_opposite,
        plus_agree,
        holds,
    })
}

/// Convenience: the integer ψ representation of a chain configuration.
pub fn base_psi(config: &ChainConfig, convention: TwistConvention) -> Result<BaseRepresentation> {
    config.representation(Ring::Integer, convention)
}
