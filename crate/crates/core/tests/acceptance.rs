// Acceptance suite: one line per criterion, nonzero exit on any unexpected
// failure. Run with `cargo test --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use prymcheck::cover::{build_cover, cover_homology, mod_ell_closure, prym_images, simple_curve_family, standard_surface};
use prymcheck::finite::{shadow_n1, symplectic_group_order, F2Class};
use prymcheck::relations::{verify_lifted_obstruction, ChainConfig};
use prymcheck::report::{Parameters, SuiteReport};
use prymcheck::suites::{run_suite, Suite};
use prymcheck::symplectic::TwistConvention;

type Outcome = Result<String, String>;

type Criterion = (u32, &'static str, fn() -> Outcome);

/// Criteria that cannot hold as stated; their FAIL lines do not fail the run.
const KNOWN_RED: [u32; 1] = [3];

fn suite(suite: Suite, genus: usize, trials: usize) -> Result<SuiteReport, String> {
    let params = Parameters { genus, trials, ..Parameters::default() };
    run_suite(suite, &params, false).map(|(r, _)| r).map_err(|e| e.to_string())
}

fn require(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn failing(report: &SuiteReport) -> String {
    let names: Vec<&str> = report.checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
    format!("{} g={}: {}", report.suite, report.parameters.genus, names.join(", "))
}

fn passing(report: &SuiteReport) -> Result<(), String> {
    require(report.passed(), failing(report))
}

fn within(start: Instant, limit: u64, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    require(t <= Duration::from_secs(limit), format!("{what} took {t:.1?}, limit {limit}s"))
}

fn orbits() -> Outcome {
    for g in 2..=4 {
        let start = Instant::now();
        passing(&suite(Suite::Orbits, g, 1)?)?;
        if g == 4 {
            within(start, 60, "g=4 orbits")?;
        }
    }
    Ok("orbit partitions match the predicate at g=2,3,4".into())
}

fn generation() -> Outcome {
    for (g, order) in [(2usize, 48u64), (3, 23040)] {
        let start = Instant::now();
        let r = suite(Suite::Generation, g, 1)?;
        passing(&r)?;
        require(r.checks[0].details["order"] == order, format!("g={g} order {}", r.checks[0].details["order"]))?;
        if g == 3 {
            within(start, 120, "g=3 closure")?;
        }
    }
    Ok("closure orders 48 and 23040".into())
}

fn shadow() -> Outcome {
    for g in 2..=3 {
        let r = suite(Suite::ShadowComplex, g, 1)?;
        let t = r.checks.iter().find(|c| c.name == "shadow-transitivity").ok_or("no transitivity check")?;
        require(t.passed(), format!("g={g} transitivity {}", t.details))?;
    }
    let mut disconnected = Vec::new();
    for g in 2..=5 {
        let graph = shadow_n1(g, F2Class::new(g, 0b10).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        if graph.component_count() != 1 {
            disconnected.push(format!("g={g} has {} components", graph.component_count()));
        }
    }
    require(disconnected.is_empty(), disconnected.join(", "))?;
    Ok("connected for g=2..5, transitive for g=2,3".into())
}

fn chains() -> Outcome {
    for g in [4, 5] {
        passing(&suite(Suite::ChainRelations, g, 1)?)?;
    }
    Ok("two-chain, complementary chains and -Id on span hold exactly at g=4,5".into())
}

fn cover() -> Outcome {
    for g in 3..=5 {
        let start = Instant::now();
        let r = suite(Suite::Cover, g, 1)?;
        passing(&r)?;
        require(r.checks.len() >= 3 * 6, format!("g={g}: only {} checks", r.checks.len()))?;
        within(start, 10, &format!("g={g} cover"))?;
    }
    Ok("three classes each at g=3,4,5".into())
}

fn obstruction() -> Outcome {
    let config = ChainConfig::canonical(4).map_err(|e| e.to_string())?;
    let r = verify_lifted_obstruction(&config, TwistConvention::Positive).map_err(|e| e.to_string())?;
    require(r.sigma_corrected.holds, "L != sigma R")?;
    require(r.l_differs_from_r, "L = R")?;
    require(r.prym_opposite.holds, "Prym(L) != -Prym(R)")?;
    Ok(format!("L = sigma R != R, Prym(L) = -Prym(R) on rank {}", r.cover_rank))
}

fn surjectivity() -> Outcome {
    let start = Instant::now();
    let e = |e: prymcheck::Error| e.to_string();
    let surface = standard_surface(3).map_err(e)?;
    let cover = build_cover(&surface, F2Class::new(3, 0b10).map_err(e)?).map_err(e)?;
    let hom = cover_homology(&cover).map_err(e)?;
    let images = prym_images(&cover, &hom, &simple_curve_family(&surface, 2), TwistConvention::Positive).map_err(e)?;
    let mut orders = Vec::new();
    for (ell, expected) in [(2u8, 720u128), (3, 51840)] {
        let order = mod_ell_closure(&images, ell).map_err(e)?.order() as u128;
        require(order == expected && order == symplectic_group_order(2, u64::from(ell)), format!("mod {ell}: {order}"))?;
        orders.push(order.to_string());
    }
    within(start, 120, "surjectivity closures")?;
    Ok(format!("orders {}", orders.join(" and ")))
}

fn abelianization() -> Outcome {
    let r = suite(Suite::Abelianization, 2, 1000)?;
    passing(&r)?;
    for c in &r.checks {
        require(c.details["pairs"].as_u64().unwrap_or(0) >= 1000, format!("{}: too few pairs", c.name))?;
    }
    Ok("phi_p additive on 1000 pairs and onto for p=2,3,5,7".into())
}

fn siegel() -> Outcome {
    let mut worst = Vec::new();
    for g in [3, 4] {
        let r = suite(Suite::Siegel, g, 100)?;
        passing(&r)?;
        let eq = r.checks.iter().find(|c| c.name == "prym-equivariance").ok_or("no equivariance check")?;
        worst.push(format!("g={g} {}", eq.details["max_residual"]));
    }
    Ok(format!("100 seeds, max equivariance residual {}", worst.join(", ")))
}

fn determinism() -> Outcome {
    let start = Instant::now();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_prymcheck"))
            .args(["verify", "all", "--genus", "4", "--seed", "7", "--json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (first, second) = (run()?, run()?);
    require(first.status.success(), format!("exit status {}", first.status))?;
    require(first.stdout == second.stdout, "outputs differ")?;
    within(start, 300, "two full runs")?;
    Ok(format!("{} identical bytes", first.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "orbit classification", orbits),
        (2, "generation certificate", generation),
        (3, "shadow complex", shadow),
        (4, "chain relations", chains),
        (5, "cover pipeline", cover),
        (6, "sigma obstruction", obstruction),
        (7, "surjectivity shadow", surjectivity),
        (8, "abelianization homomorphism", abelianization),
        (9, "Siegel numerics", siegel),
        (10, "determinism", determinism),
    ];
    let mut unexpected = 0;
    for (n, name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let t = start.elapsed();
        let known = KNOWN_RED.contains(&n);
        match (&outcome, known) {
            (Ok(msg), false) => println!("PASS criterion {n} ({name}): {msg} [{t:.1?}]"),
            (Err(msg), true) => println!("FAIL criterion {n} ({name}): {msg} [{t:.1?}] (known red)"),
            (Err(msg), false) => {
                println!("FAIL criterion {n} ({name}): {msg} [{t:.1?}]");
                unexpected += 1;
            }
            (Ok(msg), true) => {
                println!("PASS criterion {n} ({name}): {msg} [{t:.1?}] (listed as known red; update the list)");
                unexpected += 1;
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
