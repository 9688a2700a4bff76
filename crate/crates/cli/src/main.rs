use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use toricdeg::classes::{csm_standard_complement, euler_hypersurface_off_h, euler_standard_complement};
use toricdeg::constructions::{default_corpus, verify_propositions, Corpus, HarnessOptions};
use toricdeg::curves::plane_degree_formula;
use toricdeg::maps::{gradient_map, multidegrees, toric_polar_map};
use toricdeg::parse::identifiers;
use toricdeg::{parse_polynomial, Error, Polynomial, PrimeField, RandomizationConfig, DEFAULT_PRIME};

#[derive(Parser)]
#[command(name = "toricdeg", version, about = "Multidegrees of toric polar maps and related invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multidegrees of the toric polar map (or, with --gradient, the gradient map)
    Multidegrees {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
        /// Use the gradient map instead of the toric polar map
        #[arg(long)]
        gradient: bool,
    },
    /// CSM class and Euler characteristics of the complement of V(f) and the coordinate hyperplanes
    Csm {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
    },
    /// Plane-curve invariants and the degree formula, cross-checked against the engine
    CurveReport {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
    },
    /// Run the verification harness on a corpus manifest (default: built-in corpus)
    Verify {
        /// Corpus manifest, one `name | variables | polynomial | expected` entry per line
        #[arg(long)]
        file: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
        /// Number of random coprime curve pairs for the reducible-curve check
        #[arg(long, default_value_t = 10)]
        pairs: usize,
        /// Also check the union identity on the untranslated conic x0^2 - x1*x2 (expected to fail)
        #[arg(long)]
        include_nongeneral_conic: bool,
    },
}

#[derive(Args)]
struct Input {
    /// Polynomial text, e.g. "x1^2 + x0*x1 + x0*x2"
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    poly: Option<String>,
    /// File containing the polynomial text
    #[arg(long)]
    file: Option<PathBuf>,
    /// Comma-separated variable names; inferred from the polynomial if omitted
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
}

#[derive(Args)]
struct Common {
    /// Prime modulus of the coefficient field
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Master seed for all random choices
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Number of independent trials that must agree
    #[arg(long, default_value_t = 2)]
    trials: u32,
    /// Print JSON instead of text
    #[arg(long)]
    json: bool,
}

impl Common {
    fn config(&self) -> Result<RandomizationConfig, Failure> {
        Ok(RandomizationConfig::new(self.prime, self.seed, self.trials)?)
    }
}

enum Failure {
    Core(Error),
    Io(String),
    ChecksFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Sorts `x10` after `x9` by comparing the numeric suffix as a number.
fn natural_key(name: &str) -> (String, u64, String) {
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (stem, digits) = name.split_at(split);
    (stem.to_string(), digits.parse().unwrap_or(0), name.to_string())
}

fn read_polynomial(input: &Input, field: PrimeField) -> Result<(Polynomial, Vec<String>), Failure> {
    let text = match (&input.poly, &input.file) {
        (Some(p), _) => p.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => unreachable!("clap requires one of --poly and --file"),
    };
    let vars = match &input.vars {
        Some(v) => v.iter().map(|s| s.trim().to_string()).collect(),
        None => {
            let mut ids = identifiers(&text);
            ids.sort_by_key(|s| natural_key(s));
            ids
        }
    };
    let f = parse_polynomial(text.trim(), &vars, field)?;
    Ok((f, vars))
}

#[derive(Serialize)]
struct MultidegreeOutput {
    map: &'static str,
    n: usize,
    degree: u64,
    multidegrees: Vec<u64>,
    prime: u64,
    seed: u64,
    trials: u32,
}

#[derive(Serialize)]
struct CsmOutput {
    n: usize,
    multidegrees: Vec<u64>,
    class: Vec<i64>,
    euler_complement: i64,
    euler_hypersurface_off_h: i64,
    prime: u64,
    seed: u64,
    trials: u32,
}

#[derive(Serialize)]
struct CurveOutput {
    k: u32,
    milnor_sum: u64,
    incidence: u32,
    tangency: u32,
    degree: i64,
    engine_degree: u64,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    passed: bool,
    checks: &'a [toricdeg::constructions::CheckOutcome],
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("output serializes"));
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Multidegrees { input, common, gradient } => {
            let cfg = common.config()?;
            let (f, vars) = read_polynomial(&input, cfg.field()?)?;
            let map = if gradient { gradient_map(&f)? } else { toric_polar_map(&f)? };
            let d = multidegrees(&map, &cfg)?;
            let out = MultidegreeOutput {
                map: if gradient { "gradient" } else { "toric" },
                n: d.n(),
                degree: d.topological_degree(),
                multidegrees: d.values().to_vec(),
                prime: cfg.prime,
                seed: cfg.seed,
                trials: cfg.trials,
            };
            if common.json {
                print_json(&out);
            } else {
                println!("{} map of {} in {}", out.map, f.to_string_with(&vars), vars.join(","));
                println!("multidegrees: {}", join(&out.multidegrees));
                println!("degree: {}", out.degree);
            }
        }
        Command::Csm { input, common } => {
            let cfg = common.config()?;
            let (f, vars) = read_polynomial(&input, cfg.field()?)?;
            let d = multidegrees(&toric_polar_map(&f)?, &cfg)?;
            let class = csm_standard_complement(&d);
            let out = CsmOutput {
                n: d.n(),
                multidegrees: d.values().to_vec(),
                class: class.coefficients().to_vec(),
                euler_complement: euler_standard_complement(&d),
                euler_hypersurface_off_h: euler_hypersurface_off_h(&d),
                prime: cfg.prime,
                seed: cfg.seed,
                trials: cfg.trials,
            };
            if common.json {
                print_json(&out);
            } else {
                println!("hypersurface {} in {}", f.to_string_with(&vars), vars.join(","));
                println!("csm class of the complement: {class}");
                println!("euler characteristic of the complement: {}", out.euler_complement);
                println!("euler characteristic of the hypersurface off the hyperplanes: {}", out.euler_hypersurface_off_h);
            }
        }
        Command::CurveReport { input, common } => {
            let cfg = common.config()?;
            let (f, _) = read_polynomial(&input, cfg.field()?)?;
            let report = plane_degree_formula(&f)?;
            let engine = multidegrees(&toric_polar_map(&f)?, &cfg)?.topological_degree();
            let out = CurveOutput {
                k: report.k,
                milnor_sum: report.milnor_sum,
                incidence: report.incidence,
                tangency: report.tangency,
                degree: report.degree_formula,
                engine_degree: engine,
            };
            if common.json {
                print_json(&out);
            } else {
                println!("degree k: {}", out.k);
                println!("sum of milnor numbers: {}", out.milnor_sum);
                println!("fundamental points on the curve: {}", out.incidence);
                println!("tangency with coordinate lines: {}", out.tangency);
                println!("distinct points per coordinate line: {}", join(&report.per_line));
                println!("degree formula: {}", out.degree);
                println!("engine degree: {}", out.engine_degree);
                if out.degree != out.engine_degree as i64 {
                    println!("warning: the two degrees differ; singularities may not be quasi-homogeneous");
                }
            }
        }
        Command::Verify { file, common, pairs, include_nongeneral_conic } => {
            let cfg = common.config()?;
            let field = cfg.field()?;
            let corpus = match file {
                None => default_corpus(field),
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
                    Corpus::parse(&text, field)?
                }
            };
            let mut options = HarnessOptions::new(cfg);
            options.reducible_pairs = pairs;
            options.include_nongeneral_conic = include_nongeneral_conic;
            let report = verify_propositions(&corpus, &options);
            if common.json {
                print_json(&VerifyOutput { passed: report.all_passed(), checks: &report.checks });
            } else {
                print!("{report}");
                let failed = report.failures().count();
                println!("{} checks, {} failed", report.len(), failed);
            }
            if !report.all_passed() {
                return Err(Failure::ChecksFailed);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ChecksFailed) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            let code = if e.is_parse_error() || matches!(e, Error::Manifest { .. }) {
                2
            } else if e.is_specialization_failure() {
                4
            } else {
                3
            };
            ExitCode::from(code)
        }
    }
}
