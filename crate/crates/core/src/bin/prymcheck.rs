//! Command-line front end: runs verification suites and writes reports.
//!
//! Exit codes: 0 pass, 1 check failure, 2 usage error, 3 capability error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use prymcheck::cover::{build_cover, cover_homology, cover_json, standard_surface};
use prymcheck::finite::shadow_n1;
use prymcheck::report::{canonical_json, Parameters};
use prymcheck::siegel::{to_csv, Tolerances};
use prymcheck::suites::{beta_of, run_suite, Suite};
use prymcheck::Error;

#[derive(Parser)]
#[command(name = "prymcheck", version, about = "Exact checks for Prym representations of surface double covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        suite: SuiteArg,
        #[command(flatten)]
        common: Common,
        /// Seed for every random choice.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Seeds or words per randomized check.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Prime for the abelianization and mod-p relation checks.
        #[arg(long)]
        p: Option<u32>,
        /// Prime for the mod-ℓ surjectivity closure.
        #[arg(long)]
        ell: Option<u8>,
        /// Tolerance override, e.g. `equivariance=1e-8`; repeatable.
        #[arg(long = "tol", value_name = "KEY=VALUE")]
        tol: Vec<String>,
        /// Emit canonical JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Record wall-clock time per check (makes output run-dependent).
        #[arg(long)]
        timings: bool,
        /// Write the Siegel sweep residuals as CSV.
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
    },
    /// Export a graph.
    Graph {
        #[arg(value_enum)]
        which: GraphArg,
        #[command(flatten)]
        common: Common,
    },
    /// Export a combinatorial object.
    Export {
        #[arg(value_enum)]
        which: ExportArg,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 4)]
    genus: usize,
    /// Interleaved bitstring a1 b1 a2 b2 …; defaults to b1.
    #[arg(long)]
    beta: Option<String>,
    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
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

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Orbits => Suite::Orbits,
            SuiteArg::Generation => Suite::Generation,
            SuiteArg::ShadowComplex => Suite::ShadowComplex,
            SuiteArg::ChainRelations => Suite::ChainRelations,
            SuiteArg::Cover => Suite::Cover,
            SuiteArg::Prym => Suite::Prym,
            SuiteArg::Abelianization => Suite::Abelianization,
            SuiteArg::Siegel => Suite::Siegel,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphArg {
    ShadowN1,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportArg {
    Cover,
}

fn tolerances(overrides: &[String]) -> Result<Tolerances, Error> {
    let mut tol = Tolerances::default();
    for item in overrides {
        let (key, value) = item.split_once('=').ok_or_else(|| Error::usage(format!("--tol expects KEY=VALUE, got {item:?}")))?;
        let value: f64 = value.parse().map_err(|_| Error::usage(format!("bad tolerance value {value:?}")))?;
        if value.is_nan() || value <= 0.0 {
            return Err(Error::usage("tolerances must be positive"));
        }
        match key {
            "membership" => tol.membership = value,
            "equivariance" => tol.equivariance = value,
            "fixed-point" => tol.fixed_point = value,
            _ => return Err(Error::usage(format!("unknown tolerance {key:?}"))),
        }
    }
    Ok(tol)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn params(common: &Common) -> Parameters {
    Parameters { genus: common.genus, beta: common.beta.clone(), ..Parameters::default() }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Verify { suite, common, seed, trials, p, ell, tol, json, timings, csv } => {
            let params = Parameters { seed, trials, p, ell, tolerances: tolerances(&tol)?, ..params(&common) };
            let (report, rows) = run_suite(suite.into(), &params, timings)?;
            let text = if json { report.to_json()? } else { report.to_text() };
            emit(&text, common.out.as_ref())?;
            if let Some(path) = csv {
                emit(&to_csv(&rows), Some(&path))?;
            }
            Ok(report.passed())
        }
        Command::Graph { which: GraphArg::ShadowN1, common } => {
            let graph = shadow_n1(common.genus, beta_of(&params(&common), common.genus)?)?;
            emit(&canonical_json(&graph.to_json())?, common.out.as_ref())?;
            Ok(true)
        }
        Command::Export { which: ExportArg::Cover, common } => {
            let beta = beta_of(&params(&common), common.genus)?;
            let cover = build_cover(&standard_surface(common.genus)?, beta)?;
            let hom = cover_homology(&cover)?;
            emit(&canonical_json(&cover_json(&cover, &hom))?, common.out.as_ref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("prymcheck: {e}");
            ExitCode::from(match e {
                Error::Usage(_) => 2,
                Error::Capability(_) => 3,
                _ => 1,
            })
        }
    }
}
