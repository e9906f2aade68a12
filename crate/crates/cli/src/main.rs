//! `mldeg`: exact ML-degree computations from the command line.
//!
//! Subcommands map one-to-one onto the library routes: `generic` (series
//! coefficients), `toric` (mixed-volume alternating sum), `arrangement`
//! (bounded regions), `oracle` (exact critical-point counting), and `viro`
//! (plane-curve bound vs. degree). All output is deterministic for a fixed
//! seed.
//!
//! Exit codes: 0 success, 2 parse/input error, 3 violated hypothesis or
//! degenerate input, 4 crosscheck disagreement, 5 precision exhaustion.

mod golden;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use mldegree::arrangement::{
    bounded_regions, bounded_regions_bruteforce, build_poset, characteristic_polynomial,
    linear_ml_degree, regions, terao_degree,
};
use mldegree::formulas::{
    generic_ml_degree, generic_series, plane_curve_ml_degree, toric_ml_degree,
    toric_ml_degree_2d_fastpath, viro_bound, DenseModelSpec, ToricModelSpec, Weights,
};
use mldegree::model::{
    arrangement_from_json, generic_poly_on_vertices, random_dense_poly, random_weights,
    seeded_rng, ArrangementJson, ModelJson, ReportJson, DEFAULT_SEED,
};
use mldegree::oracle::{build_system, count_critical, OracleOptions};
use mldegree::rational::{rat_from_str, rat_to_string};
use mldegree::Error;

#[derive(Parser)]
#[command(name = "mldeg", version, about = "Exact maximum likelihood degrees")]
struct Cli {
    /// Run every committed golden example and report PASS/FAIL per case.
    #[arg(long)]
    all_golden: bool,

    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Precision ceiling in bits for certified root enclosures.
    #[arg(long, global = true, default_value_t = 4096)]
    precision: u32,

    /// Enclosure tolerance, e.g. "2^-40" or "1/1000000".
    #[arg(long, global = true, default_value = "2^-40")]
    tol: String,

    /// Seed for random shears and generic coefficient generation.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Print the per-term decomposition of formula results.
    #[arg(long, global = true)]
    explain: bool,

    /// Cross-check the result along an independent route.
    #[arg(long, global = true)]
    crosscheck: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// ML degree of a dense generic model from its degree list.
    Generic {
        /// Number of parameters.
        #[arg(short)]
        d: usize,
        /// Comma-separated degrees b_1,...,b_n.
        #[arg(short, value_delimiter = ',', required = true)]
        b: Vec<u64>,
        /// Also print generating-series coefficients c_0..c_N.
        #[arg(long)]
        series: Option<usize>,
    },
    /// Toric ML degree of a polytope model file.
    Toric {
        file: PathBuf,
        /// Use the translated-polytope area shortcut (2D only).
        #[arg(long)]
        fastpath: bool,
    },
    /// Region counts and linear ML degree of an arrangement file.
    Arrangement {
        file: PathBuf,
        /// Comma-separated weights for the linear ML degree.
        #[arg(short, value_delimiter = ',')]
        u: Option<Vec<i64>>,
        /// Cross-check bounded regions by sign-vector enumeration.
        #[arg(long)]
        brute: bool,
    },
    /// Certified critical-point count of a model file (d <= 2).
    Oracle {
        file: PathBuf,
        /// Override the weights in the model file.
        #[arg(short, value_delimiter = ',')]
        u: Option<Vec<i64>>,
    },
    /// Viro bound next to the plane-curve ML degree.
    Viro {
        /// Comma-separated curve degrees.
        #[arg(short, value_delimiter = ',', required = true)]
        b: Vec<u64>,
    },
}

/// A run either succeeds, fails inside the library, or fails a crosscheck.
enum Failure {
    Core(Error),
    Disagree(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type RunResult = Result<(), Failure>;

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Disagree(_) => 4,
        Failure::Core(e) => match e {
            Error::Json(_) | Error::InvalidInput(_) => 2,
            Error::PrecisionExhausted { .. } => 5,
            _ => 3,
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Disagree(msg) => eprintln!("crosscheck disagreement: {msg}"),
            }
            ExitCode::from(exit_code(&f))
        }
    }
}

fn run(cli: &Cli) -> RunResult {
    if cli.all_golden {
        return golden::run_all(cli.seed);
    }
    let Some(cmd) = &cli.command else {
        return Err(Failure::Core(Error::InvalidInput(
            "a subcommand (or --all-golden) is required".into(),
        )));
    };
    match cmd {
        Command::Generic { d, b, series } => cmd_generic(cli, *d, b, *series),
        Command::Toric { file, fastpath } => cmd_toric(cli, file, *fastpath),
        Command::Arrangement { file, u, brute } => cmd_arrangement(cli, file, u.as_deref(), *brute),
        Command::Oracle { file, u } => cmd_oracle(cli, file, u.as_deref()),
        Command::Viro { b } => cmd_viro(cli, b),
    }
}

fn load_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Core(Error::InvalidInput(format!("{}: {e}", path.display()))))?;
    Ok(serde_json::from_str(&text).map_err(Error::Json)?)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn cmd_generic(cli: &Cli, d: usize, b: &[u64], series: Option<usize>) -> RunResult {
    let spec = DenseModelSpec::new(d, b.to_vec())?;
    let degree = generic_ml_degree(&spec);
    let coeffs = series.map(|n| generic_series(&spec, n + 1));
    if cli.json {
        let mut out = serde_json::json!({ "ml_degree": degree.to_string() });
        if let Some(cs) = &coeffs {
            out["series"] = serde_json::json!(cs.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        }
        println!("{}", serde_json::to_string_pretty(&out).map_err(Error::Json)?);
    } else {
        println!("ml_degree: {degree}");
        if let Some(cs) = &coeffs {
            println!("series: {}", join(cs));
        }
    }
    Ok(())
}

fn cmd_toric(cli: &Cli, file: &PathBuf, fastpath: bool) -> RunResult {
    let model: ModelJson = load_json(file)?;
    let spec = model.to_toric_spec()?;
    if fastpath {
        let degree = toric_ml_degree_2d_fastpath(&spec)?;
        if cli.json {
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "toric_ml_degree": degree.to_string(),
                    "route": "fastpath",
                }))
                .map_err(Error::Json)?
            );
        } else {
            println!("toric_ml_degree: {degree}");
            println!("route: fastpath");
        }
        return Ok(());
    }
    let breakdown = toric_ml_degree(&spec)?;
    if cli.crosscheck {
        match toric_ml_degree_2d_fastpath(&spec) {
            Ok(fast) if fast != breakdown.total => {
                return Err(Failure::Disagree(format!(
                    "general formula {} vs area shortcut {fast}",
                    breakdown.total
                )));
            }
            _ => {} // shortcut inapplicable or agreeing
        }
    }
    if cli.json {
        let terms: Vec<_> = breakdown
            .terms
            .iter()
            .map(|t| {
                serde_json::json!({
                    "c": t.c,
                    "rays": t.rays,
                    "value": rat_to_string(&t.value),
                })
            })
            .collect();
        let out = serde_json::json!({
            "toric_ml_degree": breakdown.total.to_string(),
            "support": breakdown.support.support,
            "rays": breakdown.support.fan.rays(),
            "upper_bound_only": breakdown.upper_bound_only,
            "summand_areas": breakdown.summand_volumes.iter().map(rat_to_string).collect::<Vec<_>>(),
            "minkowski_area": rat_to_string(&breakdown.minkowski_volume),
            "terms": terms,
        });
        println!("{}", serde_json::to_string_pretty(&out).map_err(Error::Json)?);
    } else {
        println!("toric_ml_degree: {}", breakdown.total);
        println!("support: [{}]", join(&breakdown.support.support));
        let rays: Vec<String> = breakdown
            .support
            .fan
            .rays()
            .iter()
            .map(|r| format!("({})", join(r)))
            .collect();
        println!("rays: {}", rays.join(" "));
        if breakdown.upper_bound_only {
            println!("note: concrete weights shrink the support; value is an upper bound");
        }
        if cli.explain {
            println!(
                "summand_areas: {}",
                breakdown.summand_volumes.iter().map(rat_to_string).collect::<Vec<_>>().join(", ")
            );
            println!("minkowski_area: {}", rat_to_string(&breakdown.minkowski_volume));
            for t in &breakdown.terms {
                println!(
                    "term: c={} rays=[{}] mixed_volume_sum={}",
                    t.c,
                    join(&t.rays),
                    rat_to_string(&t.value)
                );
            }
        }
    }
    Ok(())
}

fn cmd_arrangement(cli: &Cli, file: &PathBuf, u: Option<&[i64]>, brute: bool) -> RunResult {
    let aj: ArrangementJson = load_json(file)?;
    let a = arrangement_from_json(&aj)?;
    let bounded = bounded_regions(&a)?;
    let total = regions(&a)?;
    let chi = characteristic_polynomial(&build_poset(&a)?);
    let ml = u.map(|w| linear_ml_degree(&a, w)).transpose()?;
    let coned = terao_degree(&a).ok();
    let brute_count = if brute {
        let b = bounded_regions_bruteforce(&a)?;
        if b != bounded {
            return Err(Failure::Disagree(format!(
                "characteristic polynomial gives {bounded} bounded regions, enumeration gives {b}"
            )));
        }
        Some(b)
    } else {
        None
    };
    if cli.json {
        let mut out = serde_json::json!({
            "bounded_regions": bounded.to_string(),
            "regions": total.to_string(),
            "characteristic_polynomial": chi.to_string(),
        });
        if let Some(r) = &ml {
            out["ml_degree"] = serde_json::json!(r.ml_degree.to_string());
            out["all_critical_points_real"] = serde_json::json!(r.all_critical_points_real);
        }
        if let Some(t) = &coned {
            out["coned_degree"] = serde_json::json!(t.to_string());
        }
        if let Some(b) = &brute_count {
            out["bounded_regions_bruteforce"] = serde_json::json!(b.to_string());
        }
        println!("{}", serde_json::to_string_pretty(&out).map_err(Error::Json)?);
    } else {
        println!("bounded_regions: {bounded}");
        println!("regions: {total}");
        println!("characteristic_polynomial: {chi}");
        if let Some(r) = &ml {
            println!("ml_degree: {}", r.ml_degree);
            println!("all_critical_points_real: {}", r.all_critical_points_real);
        }
        if let Some(t) = &coned {
            println!("coned_degree: {t}");
        }
        if brute_count.is_some() {
            println!("bruteforce: agree");
        }
    }
    Ok(())
}

/// Instantiates a model file as concrete polynomial factors plus weights,
/// together with the generic formula value when one applies and a flag
/// telling whether the weights themselves are generic (random) or concrete.
struct OracleInputs {
    factors: Vec<mldegree::exactmath::MultiPoly>,
    weights: Vec<i64>,
    formula: Option<BigInt>,
    weights_generic: bool,
}

fn oracle_inputs(model: &ModelJson, seed: u64) -> Result<OracleInputs, Error> {
    let mut rng = seeded_rng(seed);
    match model.mode.as_str() {
        "dense" => {
            let degrees = model.dense_degrees()?;
            let factors: Vec<_> = degrees
                .iter()
                .map(|&b| random_dense_poly(model.d, b, &mut rng))
                .collect();
            let (weights, generic) = match model.weights()? {
                Weights::Concrete(v) => (v, false),
                Weights::Generic => (random_weights(factors.len(), &mut rng), true),
            };
            let spec = DenseModelSpec::new(model.d, degrees)?;
            Ok(OracleInputs {
                factors,
                weights,
                formula: Some(generic_ml_degree(&spec)),
                weights_generic: generic,
            })
        }
        "toric" => {
            let spec = model.to_toric_spec()?;
            let factors: Vec<_> = spec
                .polytopes
                .iter()
                .map(|p| generic_poly_on_vertices(p, &mut rng))
                .collect();
            let (weights, generic) = match model.weights()? {
                Weights::Concrete(v) => (v, false),
                Weights::Generic => (random_weights(factors.len(), &mut rng), true),
            };
            // formula value is always the generic-weight degree: for concrete
            // weights it acts as the semicontinuity upper bound
            let generic_spec = ToricModelSpec::new(spec.polytopes.clone(), Weights::Generic)?;
            let breakdown = toric_ml_degree(&generic_spec)?;
            Ok(OracleInputs {
                factors,
                weights,
                formula: Some(breakdown.total),
                weights_generic: generic,
            })
        }
        "explicit" => {
            let factors = model.explicit_factors()?;
            let Weights::Concrete(weights) = model.weights()? else {
                return Err(Error::InvalidInput(
                    "explicit models need concrete weights".into(),
                ));
            };
            Ok(OracleInputs {
                factors,
                weights,
                formula: None,
                weights_generic: false,
            })
        }
        other => Err(Error::InvalidInput(format!("unknown model mode {other:?}"))),
    }
}

fn cmd_oracle(cli: &Cli, file: &PathBuf, u: Option<&[i64]>) -> RunResult {
    if !(64..=4096).contains(&cli.precision) {
        return Err(Failure::Core(Error::InvalidInput(
            "--precision must lie in [64, 4096]".into(),
        )));
    }
    let tol = rat_from_str(&cli.tol).map_err(|_| {
        Failure::Core(Error::InvalidInput(format!("unparseable tolerance {:?}", cli.tol)))
    })?;
    let model: ModelJson = load_json(file)?;
    let mut inputs = oracle_inputs(&model, cli.seed)?;
    if let Some(w) = u {
        inputs.weights = w.to_vec();
        inputs.weights_generic = false;
    }
    let sys = build_system(model.d, &inputs.factors, &inputs.weights)?;
    let opts = OracleOptions {
        tol,
        max_bits: cli.precision,
        seed: cli.seed,
    };
    let report = count_critical(&sys, &opts)?;

    let crosscheck_result = if cli.crosscheck {
        match &inputs.formula {
            None => Some("skipped (no formula route for explicit models)".to_string()),
            Some(expected) => {
                let got = BigInt::from(report.complex_count);
                if inputs.weights_generic && got != *expected {
                    return Err(Failure::Disagree(format!(
                        "oracle counted {got}, formula says {expected}"
                    )));
                }
                if !inputs.weights_generic && got > *expected {
                    return Err(Failure::Disagree(format!(
                        "oracle counted {got}, above the generic bound {expected}"
                    )));
                }
                if inputs.weights_generic {
                    Some(format!("PASS (formula {expected})"))
                } else {
                    Some(format!("PASS (within generic bound {expected})"))
                }
            }
        }
    } else {
        None
    };

    if cli.json {
        let rj = ReportJson::from(&report);
        let mut out = serde_json::to_value(&rj).map_err(Error::Json)?;
        if let Some(c) = &crosscheck_result {
            out["crosscheck"] = serde_json::json!(c);
        }
        println!("{}", serde_json::to_string_pretty(&out).map_err(Error::Json)?);
    } else {
        println!("complex_count: {}", report.complex_count);
        println!("real_count: {}", report.real_count);
        println!("certified: {}", report.certified);
        println!("filtered_extraneous: {}", report.filtered_extraneous);
        println!("precision_bits: {}", report.precision_bits);
        for p in report.points.iter().filter(|p| p.is_real) {
            let coords: Vec<String> = p.approx.iter().map(|(re, _)| format!("{re:.6}")).collect();
            println!("real_point: ({})", coords.join(", "));
        }
        if let Some(c) = &crosscheck_result {
            println!("crosscheck: {c}");
        }
    }
    Ok(())
}

fn cmd_viro(cli: &Cli, b: &[u64]) -> RunResult {
    if b.is_empty() {
        return Err(Failure::Core(Error::InvalidInput("need at least one degree".into())));
    }
    let bound = viro_bound(b);
    let degree = plane_curve_ml_degree(b);
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "viro_bound": bound.to_string(),
                "plane_curve_ml_degree": degree.to_string(),
            }))
            .map_err(Error::Json)?
        );
    } else {
        println!("viro_bound: {bound}");
        println!("plane_curve_ml_degree: {degree}");
    }
    Ok(())
}

