//! The verification suites behind the CLI: each turns one module's claims
//! into named pass/fail checks.

use std::time::Instant;

use serde_json::{json, Value};

use crate::cover::{
    build_cover, cover_homology, lifted_twist, mod_ell_closure, prym, prym_images, simple_curve_family,
    standard_surface, CoverRepresentation, PrymRepresentation, SIGMA,
};
use crate::error::{Error, Result};
use crate::finite::{
    closure_fixes, orbit_classify, predicted_stabilizer_order, shadow_n1, stabilizer_closure, symplectic_group_order,
    transitivity_report, F2Class, GeneratorPolicy, OrbitPartition, MAX_CLOSURE_GENUS,
};
use crate::linalg::IntMatrix;
use crate::relations::{
    verify_chain_boundary, verify_complementary_chains, verify_lifted_obstruction, verify_minus_id_span,
    verify_reduction, verify_two_chain, ChainConfig, RelationReport, TwoChainConfig,
};
use crate::report::{Check, Parameters, SuiteReport};
use crate::siegel::{
    antiholomorphic_sweep, composition_sweep, equivariance_sweep, random_symmetric_period, EquivarianceContext,
    SweepRow, SWEEP_WORD_LENGTH,
};
use crate::symplectic::{
    check_phi, standard_form, transvection_matrix, Ring, SymplecticSpace, TrivialRepresentation, TwistConvention,
    TwistWord, WordSampler,
};

/// Minimum number of sampled pairs for the φ_p additivity check.
pub const MIN_PHI_PAIRS: usize = 1000;

/// Primes used by the abelianization suite when `--p` is absent.
pub const DEFAULT_PRIMES: [u32; 4] = [2, 3, 5, 7];

/// Moduli used by the surjectivity shadow when `--ell` is absent.
pub const DEFAULT_ELLS: [u8; 2] = [2, 3];

/// Genus of the cover whose Prym images are closed mod ℓ.
pub const SURJECTIVITY_GENUS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Orbits,
    Generation,
    ShadowComplex,
    ChainRelations,
    Cover,
    Prym,
    Abelianization,
    Siegel,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 8] = [
        Suite::Orbits,
        Suite::Generation,
        Suite::ShadowComplex,
        Suite::ChainRelations,
        Suite::Cover,
        Suite::Prym,
        Suite::Abelianization,
        Suite::Siegel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orbits => "orbits",
            Suite::Generation => "generation",
            Suite::ShadowComplex => "shadow-complex",
            Suite::ChainRelations => "chain-relations",
            Suite::Cover => "cover",
            Suite::Prym => "prym",
            Suite::Abelianization => "abelianization",
            Suite::Siegel => "siegel",
            Suite::All => "all",
        }
    }
}

/// Collects checks, timing them on request. Usage and capability errors
/// abort the suite; any other error becomes a failed check.
pub struct Recorder {
    prefix: String,
    timings: bool,
    checks: Vec<Check>,
}

impl Recorder {
    pub fn new(timings: bool) -> Self {
        Recorder { prefix: String::new(), timings, checks: Vec::new() }
    }

    pub fn run(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, Value)>) -> Result<()> {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed().as_millis() as u64;
        let mut check = match outcome {
            Ok((ok, details)) => Check::new(format!("{}{name}", self.prefix), ok, details),
            Err(e @ (Error::Usage(_) | Error::Capability(_))) => return Err(e),
            Err(e) => Check::new(format!("{}{name}", self.prefix), false, json!({ "error": e.to_string() })),
        };
        if self.timings {
            check.elapsed_ms = Some(elapsed);
        }
        self.checks.push(check);
        Ok(())
    }

    pub fn into_checks(self) -> Vec<Check> {
        self.checks
    }
}

/// `β` from the parameters, `b₁` by default.
pub fn beta_of(params: &Parameters, genus: usize) -> Result<F2Class> {
    match &params.beta {
        Some(text) => {
            let b = F2Class::parse(text)?;
            if b.genus() != genus {
                return Err(Error::usage(format!("--beta has {} bits but genus {genus} needs {}", text.len(), 2 * genus)));
            }
            Ok(b)
        }
        None => F2Class::new(genus, 0b10),
    }
}

/// Three nonzero classes for cover sweeps: `b₁`, `a₁ + b₂` and the all-ones class.
pub fn default_cover_betas(genus: usize) -> Result<Vec<F2Class>> {
    Ok(vec![F2Class::new(genus, 0b10)?, F2Class::new(genus, 0b1001)?, F2Class::new(genus, (1 << (2 * genus)) - 1)?])
}

pub fn orbits(rec: &mut Recorder, params: &Parameters) -> Result<()> {
    let g = params.genus;
    let beta = beta_of(params, g)?;
    rec.run("orbit-partition", || {
        let part = orbit_classify(g, beta)?;
        let sizes = part.sizes();
        let predicted = OrbitPartition::predicted_sizes(g);
        let ok = sizes == predicted && part.matches_predicate();
        Ok((ok, json!({ "genus": g, "beta": beta.to_bitstring(), "sizes": sizes, "predicted": predicted, "matches_predicate": part.matches_predicate() })))
    })
}

pub fn generation(rec: &mut Recorder, params: &Parameters) -> Result<()> {
    let g = params.genus;
    let beta = beta_of(params, g)?;
    rec.run("stabilizer-order", || {
        let closure = stabilizer_closure(g, beta, &GeneratorPolicy::BetaOrthogonal)?;
        let order = closure.order() as u128;
        let predicted = predicted_stabilizer_order(g);
        let fixes = closure_fixes(&closure, beta);
        Ok((order == predicted && fixes, json!({ "genus": g, "order": order, "predicted": predicted, "fixes_beta": fixes })))
    })
}

pub fn shadow_complex(rec: &mut Recorder, params: &Parameters) -> Result<()> {
    let g = params.genus;
    let beta = beta_of(params, g)?;
    rec.run("shadow-connected", || {
        let graph = shadow_n1(g, beta)?;
        let components = graph.component_count();
        Ok((components == 1, json!({ "genus": g, "vertices": graph.vertex_count(), "edges": graph.edges().len(), "components": components })))
    })?;
    if g <= MAX_CLOSURE_GENUS {
        rec.run("shadow-transitivity", || {
            let graph = shadow_n1(g, beta)?;
            let closure = stabilizer_closure(g, beta, &GeneratorPolicy::BetaOrthogonal)?;
            let t = transitivity_report(&graph, &closure)?;
            Ok((t.vertex_orbits == 1 && t.ordered_edge_orbits == 1, serde_json::to_value(t).unwrap_or(Value::Null)))
        })?;
    }
    Ok(())
}

fn relation(r: RelationReport) -> (bool, Value) {
    (r.holds, serde_json::to_value(&r).unwrap_or(Value::Null))
}

pub fn chain_relations(rec: &mut Recorder, params: &Parameters) -> Result<()> {
    let g = params.genus;
    let p = params.p.unwrap_or(3);
    let conventions = [("positive", TwistConvention::Positive), ("negative", TwistConvention::Negative)];
    let two = TwoChainConfig::canonical(g)?;
    for (tag, conv) in conventions {
        rec.run(&format!("two-chain-{tag}"), || {
            let rep = two.representation(Ring::Integer, conv)?;
            Ok(relation(verify_two_chain(&two, &rep, "psi")?))
        })?;
    }
    for modulus in [2, p] {
        rec.run(&format!("two-chain-mod-{modulus}"), || {
            let rep = two.representation(Ring::Integer, TwistConvention::Positive)?;
            let left = TwistWord::single("a", 2).then("b", 1).power(4);
            Ok(relation(verify_reduction("two-chain", &left, &TwistWord::single("d", 1), &rep, modulus)?))
        })?;
    }
    for (tag, conv) in conventions {
        rec.run(&format!("minus-id-span-{tag}"), || {
            let sp = SymplecticSpace::new(g)?;
            Ok(relation(verify_minus_id_span(&sp, &sp.a(1), &sp.b(1), conv)?))
        })?;
    }
    if g < 4 {
        return Ok(());
    }
    let config = ChainConfig::canonical(g)?;
    for (tag, conv) in conventions {
        rec.run(&format!("complementary-chains-{tag}"), || {
            let rep = config.representation(Ring::Integer, conv)?;
            Ok(relation(verify_complementary_chains(&config, &rep, "psi")?))
        })?;
    }
    rec.run("chain-boundary", || {
        let rep = config.representation(Ring::Integer, TwistConvention::Positive)?;
        Ok(relation(verify_chain_boundary(&config, &rep, "psi")?))
    })?;
    for modulus in [2, p] {
        rec.run(&format!("complementary-chains-mod-{modulus}"), || {
            let rep = config.representation(Ring::Integer, TwistConvention::Positive)?;
            Ok(relation(verify_reduction("complementary-chains", &config.left_word(), &config.right_word(), &rep, modulus)?))
        })?;
    }
    rec.run("complementary-chains-trivial", || {
        Ok(relation(verify_complementary_chains(&config, &TrivialRepresentation { dim: 2 * g }, "trivial")?))
    })
}

/// Cover checks for one `β`.
pub fn cover_for(rec: &mut Recorder, genus: usize, beta: F2Class) -> Result<()> {
    let tag = beta.to_bitstring();
    let surface = standard_surface(genus)?;
    let cover = build_cover(&surface, beta)?;
    let hom = cover_homology(&cover)?;
    let n = hom.rank();
    rec.run(&format!("cover-topology-{tag}"), || {
        let cg = cover.genus()?;
        let chi = cover.graph().euler_characteristic();
        let ok = cg == 2 * genus - 1 && chi == 2 - 2 * cg as i64 && cover.graph().is_connected() && n == 2 * cg;
        Ok((ok, json!({ "cover_genus": cg, "euler_characteristic": chi, "homology_rank": n })))
    })?;
    rec.run(&format!("deck-involution-{tag}"), || {
        let s = hom.sigma();
        let ok = s.mul(s) == IntMatrix::identity(n) && *s != IntMatrix::identity(n);
        Ok((ok, json!({ "sigma_squared_identity": s.mul(s) == IntMatrix::identity(n) })))
    })?;
    rec.run(&format!("minus-lattice-{tag}"), || {
        let minus = hom.minus_basis();
        let full = minus.congruence(hom.gram());
        let even = full.to_rows().iter().flatten().all(|x| x % 2 == 0);
        let det = hom.minus_gram().det();
        let ok = minus.cols() == 2 * genus - 2 && hom.plus_basis().cols() == 2 * genus && even && det.abs() == 1;
        Ok((ok, json!({ "minus_rank": minus.cols(), "plus_rank": hom.plus_basis().cols(), "even": even, "halved_det": det })))
    })?;
    let frame = hom.prym_frame();
    let h = frame.rank();
    rec.run(&format!("prym-sigma-{tag}"), || {
        let ps = frame.restrict(hom.sigma())?;
        Ok((ps == IntMatrix::identity(h).neg(), json!({ "prym_rank": h })))
    })?;
    let family = simple_curve_family(&surface, 2);
    let conv = TwistConvention::Positive;
    rec.run(&format!("prym-connected-lifts-{tag}"), || {
        let mut count = 0;
        let mut ok = true;
        for (_, l) in &family {
            if cover.loop_monodromy(l) == 1 {
                let t = lifted_twist(&cover, &hom, l, conv)?;
                ok &= frame.restrict(&t.matrix)?.is_identity();
                count += 1;
            }
        }
        Ok((ok && count > 0, json!({ "curves": count })))
    })?;
    rec.run(&format!("prym-multitwists-{tag}"), || {
        let mut count = 0;
        let mut ok = true;
        for (_, l) in &family {
            if cover.loop_monodromy(l) == 0 {
                let t = lifted_twist(&cover, &hom, l, conv)?;
                let diff = t.lift_difference().ok_or_else(|| Error::internal("even curve with a connected lift"))?;
                let expected = transvection_matrix(&standard_form(h / 2), &frame.coordinates(&diff)?, conv);
                ok &= frame.restrict(&t.matrix)? == expected;
                count += 1;
            }
        }
        Ok((ok && count > 0, json!({ "curves": count })))
    })
}

pub fn cover(rec: &mut Recorder, params: &Parameters) -> Result<()> {
    let g = params.genus;
    let betas = match params.beta {
        Some(_) => vec![beta_of(params, g)?],
        None => default_cover_betas(g)?,
    };
    for beta in betas {
        cover_for(rec, g, beta)?;
    }
    Ok(())
}

pub fn prym_suite(rec: &mut Recorder, params: &Parameters) -> Result<()> {
    let g = params.genus;
    let beta = beta_of(params, g)?;
    rec.run("prym-symplectic", || {
        let surface = standard_surface(g)?;
        let cover = build_cover(&surface, beta)?;
        let hom = cover_homology(&cover)?;
        let mut rep = CoverRepresentation::new(&hom)?;
        let mut names = vec![SIGMA.to_string()];
        for (name, l) in simple_curve_family(&surface, 2) {
            rep.insert(name.clone(), lifted_twist(&cover, &hom, &l, TwistConvention::Positive)?.matrix)?;
            names.push(name);
        }
        let prym_rep = PrymRepresentation::new(rep, hom.prym_frame().clone());
        let mut sampler = WordSampler::new(names, SWEEP_WORD_LENGTH, params.seed);
        for _ in 0..params.trials {
            prym(&prym_rep, &sampler.sample())?;
        }
        Ok((true, json!({ "words": params.trials })))
    })?;
    if g >= 4 {
        rec.run("sigma-obstruction", || {
            let r = verify_lifted_obstruction(&ChainConfig::canonical(g)?, TwistConvention::Positive)?;
            Ok((r.holds, json!({
                "cover_rank": r.cover_rank,
                "l_differs_from_r": r.l_differs_from_r,
                "l_equals_sigma_r": r.sigma_corrected.holds,
                "prym_opposite": r.prym_opposite.holds,
                "plus_lattice_agree": r.plus_agree,
            })))
        })?;
    }
    let ells: Vec<u8> = params.ell.map_or(DEFAULT_ELLS.to_vec(), |e| vec![e]);
    for ell in ells {
        rec.run(&format!("surjectivity-shadow-mod-{ell}"), || {
            let g3 = SURJECTIVITY_GENUS;
            let surface = standard_surface(g3)?;
            let cover = build_cover(&surface, F2Class::new(g3, 0b10)?)?;
            let hom = cover_homology(&cover)?;
            let images = prym_images(&cover, &hom, &simple_curve_family(&surface, 2), TwistConvention::Positive)?;
            let order = mod_ell_closure(&images, ell)?.order() as u128;
            let expected = symplectic_group_order((g3 - 1) as u32, u64::from(ell));
            Ok((order == expected, json!({ "genus": g3, "ell": ell, "order": order, "expected": expected })))
        })?;
    }
    Ok(())
}

pub fn abelianization(rec: &mut Recorder, params: &Parameters) -> Result<()> {
    let g = params.genus;
    let primes: Vec<u32> = params.p.map_or(DEFAULT_PRIMES.to_vec(), |p| vec![p]);
    let pairs = params.trials.max(MIN_PHI_PAIRS);
    for p in primes {
        rec.run(&format!("phi-{p}"), || {
            let r = check_phi(&SymplecticSpace::new(g)?, i128::from(p), pairs, 6, params.seed)?;
            Ok((r.passed(), serde_json::to_value(&r).unwrap_or(Value::Null)))
        })?;
    }
    Ok(())
}

fn max_residual(rows: &[SweepRow]) -> f64 {
    rows.iter().map(|r| r.residual).fold(0.0, f64::max)
}

fn seeds(params: &Parameters) -> Vec<u64> {
    (0..params.trials as u64).map(|i| params.seed.wrapping_add(i)).collect()
}

/// Siegel checks; also returns every sweep row for CSV export.
pub fn siegel(rec: &mut Recorder, params: &Parameters) -> Result<Vec<SweepRow>> {
    let g = params.genus;
    if g < 2 {
        return Err(Error::usage("the Siegel suite needs genus at least 2"));
    }
    let tol = params.tolerances;
    let beta = beta_of(params, g)?;
    let h = g - 1;
    let seeds = seeds(params);
    let mut all = Vec::new();

    let mut rows = Vec::new();
    rec.run("action-composition", || {
        rows = composition_sweep(h.max(1), &seeds, SWEEP_WORD_LENGTH, tol)?;
        let r = max_residual(&rows);
        Ok((r <= tol.membership, json!({ "size": h, "seeds": seeds.len(), "max_residual": r, "tolerance": tol.membership })))
    })?;
    all.append(&mut rows);

    rec.run("period-fixed-points", || {
        let ctx = EquivarianceContext::new(g, beta, TwistConvention::Positive)?;
        let mut worst = 0.0f64;
        for &s in &seeds {
            let pi = random_symmetric_period(ctx.frame.sigma(), g, s, tol)?;
            worst = worst.max(pi.fixed_residual(tol)?);
            crate::siegel::prym_extract(&pi, tol)?;
        }
        Ok((worst <= tol.fixed_point, json!({ "seeds": seeds.len(), "max_fixed_residual": worst, "tolerance": tol.fixed_point })))
    })?;

    let mut rows = Vec::new();
    rec.run("prym-equivariance", || {
        let ctx = EquivarianceContext::new(g, beta, TwistConvention::Positive)?;
        rows = equivariance_sweep(&ctx, &seeds, SWEEP_WORD_LENGTH, tol)?;
        let r = max_residual(&rows);
        Ok((r <= tol.equivariance, json!({ "genus": g, "seeds": seeds.len(), "max_residual": r, "tolerance": tol.equivariance })))
    })?;
    all.append(&mut rows);

    let mut rows = Vec::new();
    rec.run("antiholomorphic-z-equivariance", || {
        rows = antiholomorphic_sweep(h.max(1), &seeds, SWEEP_WORD_LENGTH, tol)?;
        let r = max_residual(&rows);
        Ok((r <= tol.membership, json!({ "size": h, "seeds": seeds.len(), "max_residual": r, "tolerance": tol.membership })))
    })?;
    all.append(&mut rows);
    Ok(all)
}

/// Runs one suite (or all of them) and assembles the report. Sweep rows
/// from the Siegel suite are returned alongside.
pub fn run_suite(suite: Suite, params: &Parameters, timings: bool) -> Result<(SuiteReport, Vec<SweepRow>)> {
    let mut rec = Recorder::new(timings);
    let rows = run_into(&mut rec, suite, params)?;
    Ok((SuiteReport::new(suite.name(), params.clone(), rec.into_checks())?, rows))
}

fn run_into(rec: &mut Recorder, suite: Suite, params: &Parameters) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    match suite {
        Suite::Orbits => orbits(rec, params)?,
        Suite::Generation => generation(rec, params)?,
        Suite::ShadowComplex => shadow_complex(rec, params)?,
        Suite::ChainRelations => chain_relations(rec, params)?,
        Suite::Cover => cover(rec, params)?,
        Suite::Prym => prym_suite(rec, params)?,
        Suite::Abelianization => abelianization(rec, params)?,
        Suite::Siegel => rows = siegel(rec, params)?,
        Suite::All => {
            for part in Suite::PARTS {
                rec.prefix = format!("{}/", part.name());
                let mut p = params.clone();
                // the closure certificate is only computed up to its budget genus
                if part == Suite::Generation && p.genus > MAX_CLOSURE_GENUS {
                    p.genus = MAX_CLOSURE_GENUS;
                    p.beta = None;
                }
                rows.extend(run_into(rec, part, &p)?);
            }
            rec.prefix.clear();
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(genus: usize) -> Parameters {
        Parameters { genus, trials: 5, ..Parameters::default() }
    }

    #[test]
    fn orbit_suite_at_genus_two() {
        let (r, _) = run_suite(Suite::Orbits, &params(2), false).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks[0].details["sizes"], json!([8, 6, 1]));
    }

    #[test]
    fn generation_beyond_budget_is_capability_error() {
        assert!(matches!(run_suite(Suite::Generation, &params(5), false), Err(Error::Capability(_))));
    }

    #[test]
    fn bad_beta_is_usage_error() {
        let p = Parameters { beta: Some("0100".into()), ..params(3) };
        assert!(matches!(run_suite(Suite::Orbits, &p, false), Err(Error::Usage(_))));
    }

    #[test]
    fn timings_only_on_request() {
        let (r, _) = run_suite(Suite::Orbits, &params(2), true).unwrap();
        assert!(r.checks[0].elapsed_ms.is_some());
    }
}
