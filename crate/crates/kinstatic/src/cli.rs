//! Command-line front end.
//!
//! The binary is a thin wrapper over [`execute`], which returns the
//! full stdout payload and exit code so the surface can be tested
//! in-process. Exit codes: 0 success, 1 verification failure, 2
//! usage/input error. Data goes to stdout; diagnostics to stderr.
//!
//! Defaults may be set in a `kinstatic.toml` file in the working
//! directory (keys: `tolerance`, `classify_tol`, `format`, `seed`,
//! `trials`); command-line flags override it.

use std::io::Read;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::algebra::{registry_get, AlgebraName, AlgebraParams};
use crate::coadjoint::{classify, to_chart, ChartPoint, DualVector, Orbit, OrbitReport};
use crate::dynamics::{action_kernel, sample_flow, FlowMethod, KernelReport};
use crate::errata::ERRATA;
use crate::error::{Error, Result};
use crate::tables::{render_csv, render_text, summary_tables};
use crate::verify::{self, CheckStatus, Suite, VerifyConfig};

/// Coadjoint-orbit toolkit for the one-dimensional static kinematical
/// group.
#[derive(Debug, Parser)]
#[command(name = "kinstatic", version, disable_help_subcommand = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format for commands that support several.
    #[arg(long, global = true)]
    pub format: Option<OutputFormat>,

    /// Residual tolerance for checks (default 1e-9).
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Absolute threshold below which (m, f, I) slots count as zero
    /// (default 1e-12).
    #[arg(long, global = true)]
    pub classify_tol: Option<f64>,

    /// Seed for the randomized suites (default 42).
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Trials per randomized check (default 1000).
    #[arg(long, global = true)]
    pub trials: Option<usize>,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Config file path (default: ./kinstatic.toml when present).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List, dump, or check the registry algebras.
    Algebras {
        #[command(subcommand)]
        action: AlgebrasAction,
    },
    /// Classify a dual vector into its coadjoint-orbit class.
    Classify(MuInput),
    /// Apply a group element to a dual vector by the coadjoint action.
    Act(ActArgs),
    /// Trace the Hamiltonian flow on an orbit chart as CSV.
    Flow(FlowArgs),
    /// Run the seeded verification suites.
    Verify {
        /// One of: group, cocycle, coadjoint, dynamics, all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Print the massive and massless summary tables with errata flags.
    Tables,
}

#[derive(Debug, Subcommand)]
pub enum AlgebrasAction {
    /// Print all registry identifiers.
    List,
    /// Emit one table as JSON.
    Dump {
        #[arg(long)]
        name: String,
        /// Velocity constant (required by the relativistic tables).
        #[arg(long)]
        cvel: Option<f64>,
        /// Frequency (required by the oscillating tables).
        #[arg(long)]
        omega: Option<f64>,
    },
    /// Check the Jacobi identity of one table.
    Check {
        #[arg(long)]
        name: String,
        #[arg(long)]
        cvel: Option<f64>,
        #[arg(long)]
        omega: Option<f64>,
    },
}

/// A dual vector given as JSON, as component flags, or on stdin.
#[derive(Debug, Args, Default)]
pub struct MuInput {
    /// Dual vector as JSON: {"m":…,"f":…,"I":…,"k":…,"p":…,"e":…}.
    #[arg(long)]
    pub mu: Option<String>,
    #[arg(long = "m", allow_negative_numbers = true)]
    pub m: Option<f64>,
    #[arg(long = "f", allow_negative_numbers = true)]
    pub f: Option<f64>,
    #[arg(long = "I", allow_negative_numbers = true)]
    pub impetus: Option<f64>,
    #[arg(long = "k", allow_negative_numbers = true)]
    pub k: Option<f64>,
    #[arg(long = "p", allow_negative_numbers = true)]
    pub p: Option<f64>,
    #[arg(long = "e", allow_negative_numbers = true)]
    pub e: Option<f64>,
}

impl MuInput {
    fn has_components(&self) -> bool {
        self.m.is_some()
            || self.f.is_some()
            || self.impetus.is_some()
            || self.k.is_some()
            || self.p.is_some()
            || self.e.is_some()
    }

    /// Resolve to a dual vector, falling back to stdin JSON.
    pub fn resolve(&self) -> Result<DualVector> {
        if let Some(json) = &self.mu {
            return parse_json(json);
        }
        if self.has_components() {
            return Ok(DualVector::new(
                self.m.unwrap_or(0.0),
                self.f.unwrap_or(0.0),
                self.impetus.unwrap_or(0.0),
                self.k.unwrap_or(0.0),
                self.p.unwrap_or(0.0),
                self.e.unwrap_or(0.0),
            ));
        }
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| Error::InvalidInput(format!("reading stdin: {e}")))?;
        parse_json(&buffer)
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
}

#[derive(Debug, Args)]
pub struct ActArgs {
    /// Group element JSON {"v":…,"x":…,"t":…}; the extended form with
    /// {"xi","zeta","y"} is accepted too (the central part acts
    /// trivially on the dual).
    #[arg(long)]
    pub g: String,

    #[command(flatten)]
    pub mu: MuInput,
}

#[derive(Debug, Args)]
pub struct FlowArgs {
    #[command(flatten)]
    pub mu: MuInput,

    /// Orbit as JSON {"class":…, "invariants":{…}}; use with --chart.
    #[arg(long, conflicts_with = "mu")]
    pub orbit: Option<String>,

    /// Chart point as JSON, e.g. {"kind":"PQ","p":…,"q":…}.
    #[arg(long, requires = "orbit")]
    pub chart: Option<String>,

    /// Flow duration.
    #[arg(long = "t", allow_negative_numbers = true)]
    pub duration: f64,

    /// Number of uniform steps (rows beyond the initial one).
    #[arg(long, default_value_t = 10)]
    pub steps: usize,

    /// One of: exact, euler, rk4.
    #[arg(long, default_value = "exact")]
    pub method: String,
}

/// Settings after merging the config file and the command line.
#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub tol: f64,
    pub classify_tol: f64,
    pub format: Option<OutputFormat>,
    pub seed: u64,
    pub trials: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            classify_tol: 1e-12,
            format: None,
            seed: 42,
            trials: 1000,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
struct FileConfig {
    tolerance: Option<f64>,
    classify_tol: Option<f64>,
    format: Option<String>,
    seed: Option<u64>,
    trials: Option<usize>,
}

fn load_file_config(path: Option<&PathBuf>) -> Result<FileConfig> {
    let default_path = PathBuf::from("kinstatic.toml");
    let path = match path {
        Some(p) => p.clone(),
        None if default_path.exists() => default_path,
        None => return Ok(FileConfig::default()),
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

impl Config {
    /// Merge defaults, the config file, and command-line flags.
    pub fn resolve(cli: &Cli) -> Result<Self> {
        let file = load_file_config(cli.config.as_ref())?;
        let mut cfg = Config::default();
        if let Some(t) = file.tolerance {
            cfg.tol = t;
        }
        if let Some(t) = file.classify_tol {
            cfg.classify_tol = t;
        }
        if let Some(f) = &file.format {
            cfg.format = Some(match f.as_str() {
                "json" => OutputFormat::Json,
                "csv" => OutputFormat::Csv,
                "table" => OutputFormat::Table,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "config format must be json|csv|table, got `{other}`"
                    )))
                }
            });
        }
        if let Some(s) = file.seed {
            cfg.seed = s;
        }
        if let Some(t) = file.trials {
            cfg.trials = t;
        }
        if let Some(t) = cli.tol {
            cfg.tol = t;
        }
        if let Some(t) = cli.classify_tol {
            cfg.classify_tol = t;
        }
        if let Some(f) = cli.format {
            cfg.format = Some(f);
        }
        if let Some(s) = cli.seed {
            cfg.seed = s;
        }
        if let Some(t) = cli.trials {
            cfg.trials = t;
        }
        if cfg.tol < 0.0 || cfg.classify_tol < 0.0 {
            return Err(Error::InvalidInput("tolerances must be >= 0".into()));
        }
        if cfg.trials == 0 {
            return Err(Error::InvalidInput("trials must be >= 1".into()));
        }
        Ok(cfg)
    }
}

/// Stdout payload plus process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            exit_code: 0,
        }
    }
}

/// Run a parsed command. Input errors surface as `Err` (exit 2);
/// verification failures as `Ok` with exit code 1.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let cfg = Config::resolve(cli)?;
    match &cli.command {
        Command::Algebras { action } => run_algebras(action, &cfg),
        Command::Classify(input) => run_classify(input, &cfg),
        Command::Act(args) => run_act(args),
        Command::Flow(args) => run_flow(args, &cfg),
        Command::Verify { suite } => run_verify(suite, &cfg),
        Command::Tables => run_tables(&cfg),
    }
}

/// Parse a group element, accepting the extended six-parameter form.
fn parse_group_element(text: &str) -> Result<crate::group::GroupElement> {
    if let Ok(ext) = serde_json::from_str::<crate::group::ExtGroupElement>(text) {
        return Ok(ext.g);
    }
    parse_json(text)
}

fn run_act(args: &ActArgs) -> Result<Outcome> {
    let g = parse_group_element(&args.g)?;
    let mu = args.mu.resolve()?;
    let moved = crate::coadjoint::coadjoint_act(&g, &mu);
    let json = serde_json::to_string_pretty(&moved).unwrap();
    Ok(Outcome::ok(format!("{json}\n")))
}

fn algebra_params(cvel: Option<f64>, omega: Option<f64>) -> AlgebraParams {
    AlgebraParams::new(cvel, omega)
}

fn run_algebras(action: &AlgebrasAction, cfg: &Config) -> Result<Outcome> {
    match action {
        AlgebrasAction::List => {
            let names: Vec<&str> = AlgebraName::ALL.iter().map(|n| n.as_str()).collect();
            let text = match cfg.format {
                Some(OutputFormat::Json) => {
                    format!("{}\n", serde_json::to_string_pretty(&names).unwrap())
                }
                _ => {
                    let mut s = names.join("\n");
                    s.push('\n');
                    s
                }
            };
            Ok(Outcome::ok(text))
        }
        AlgebrasAction::Dump { name, cvel, omega } => {
            let name = AlgebraName::from_str(name)?;
            let table = registry_get(name, &algebra_params(*cvel, *omega))?;
            let json = serde_json::to_string_pretty(&table.dump()).unwrap();
            Ok(Outcome::ok(format!("{json}\n")))
        }
        AlgebrasAction::Check { name, cvel, omega } => {
            let parsed = AlgebraName::from_str(name)?;
            let table = registry_get(parsed, &algebra_params(*cvel, *omega))?;
            let report = table.check_jacobi(cfg.tol);
            let text = match cfg.format {
                Some(OutputFormat::Json) => {
                    #[derive(Serialize)]
                    struct Out<'a> {
                        name: &'a str,
                        #[serde(flatten)]
                        report: &'a crate::algebra::JacobiReport,
                    }
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&Out {
                            name: parsed.as_str(),
                            report: &report,
                        })
                        .unwrap()
                    )
                }
                _ => format!(
                    "{}: jacobi {} (max residual {:e} at [{}, {}, {}], tol {:e})\n",
                    parsed,
                    if report.pass { "pass" } else { "FAIL" },
                    report.max_residual,
                    report.worst_triple[0],
                    report.worst_triple[1],
                    report.worst_triple[2],
                    cfg.tol,
                ),
            };
            let code = if report.pass { 0 } else { 1 };
            Ok(Outcome {
                stdout: text,
                exit_code: code,
            })
        }
    }
}

/// Orbit report extended with the action-kernel audit.
#[derive(Debug, Serialize)]
pub struct ClassifyOutput {
    #[serde(flatten)]
    pub orbit: OrbitReport,
    pub kernel: KernelReport,
}

fn run_classify(input: &MuInput, cfg: &Config) -> Result<Outcome> {
    let mu = input.resolve()?;
    let orbit = classify(&mu, cfg.classify_tol);
    let output = ClassifyOutput {
        orbit: orbit.report(),
        kernel: action_kernel(&orbit),
    };
    let json = serde_json::to_string_pretty(&output).unwrap();
    Ok(Outcome::ok(format!("{json}\n")))
}

fn run_flow(args: &FlowArgs, cfg: &Config) -> Result<Outcome> {
    let method = FlowMethod::from_str(&args.method)?;
    let (orbit, z0) = if let Some(orbit_json) = &args.orbit {
        let orbit: Orbit = parse_json(orbit_json)?;
        let chart_json = args
            .chart
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("--orbit requires --chart".into()))?;
        let z0: ChartPoint = parse_json(chart_json)?;
        (orbit, z0)
    } else {
        let mu = args.mu.resolve()?;
        let orbit = classify(&mu, cfg.classify_tol);
        let z0 = to_chart(&orbit, &mu)?;
        (orbit, z0)
    };
    let samples = sample_flow(&orbit, &z0, args.duration, args.steps, method)?;
    let (c1, c2) = orbit.chart_kind().coord_names();
    let mut out = format!("t,{c1},{c2},H\n");
    for s in &samples {
        out.push_str(&format!("{},{},{},{}\n", s.t, s.c1, s.c2, s.h));
    }
    Ok(Outcome::ok(out))
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    passed: bool,
    reports: &'a [verify::SuiteReport],
    errata: &'static [crate::errata::Erratum],
}

fn run_verify(suite: &str, cfg: &Config) -> Result<Outcome> {
    let suite = Suite::from_str(suite)?;
    let vcfg = VerifyConfig {
        tol: cfg.tol,
        seed: cfg.seed,
        trials: cfg.trials,
    };
    let reports = verify::run(suite, &vcfg);
    let passed = verify::all_passed(&reports);
    let stdout = match cfg.format {
        Some(OutputFormat::Json) => {
            let out = VerifyOutput {
                passed,
                reports: &reports,
                errata: ERRATA,
            };
            format!("{}\n", serde_json::to_string_pretty(&out).unwrap())
        }
        _ => {
            let mut text = String::new();
            let mut checks = 0;
            let mut failures = 0;
            for report in &reports {
                text.push_str(&format!("suite {}\n", report.suite));
                for check in &report.checks {
                    checks += 1;
                    if check.status == CheckStatus::Fail {
                        failures += 1;
                    }
                    text.push_str(&format!(
                        "  {:<16} {:<34} residual {:.3e} (tol {:.1e}, {} samples)\n",
                        check.status.to_string(),
                        check.name,
                        check.max_residual,
                        check.tolerance,
                        check.samples,
                    ));
                    if let Some(note) = &check.note {
                        text.push_str(&format!("                   note: {note}\n"));
                    }
                }
            }
            text.push_str(&format!(
                "summary: {} suites, {} checks, {} failures (seed {}, trials {})\n",
                reports.len(),
                checks,
                failures,
                cfg.seed,
                cfg.trials,
            ));
            text.push_str("errata ledger:\n");
            for e in ERRATA {
                text.push_str(&format!(
                    "  {}: {}: printed `{}`, corrected `{}` ({})\n",
                    e.id, e.location, e.printed, e.corrected, e.rationale
                ));
            }
            text
        }
    };
    Ok(Outcome {
        stdout,
        exit_code: if passed { 0 } else { 1 },
    })
}

#[derive(Serialize)]
struct TablesOutput {
    #[serde(flatten)]
    tables: crate::tables::SummaryTables,
    errata: &'static [crate::errata::Erratum],
}

fn run_tables(cfg: &Config) -> Result<Outcome> {
    let tables = summary_tables();
    let stdout = match cfg.format {
        Some(OutputFormat::Json) => {
            let out = TablesOutput {
                tables,
                errata: ERRATA,
            };
            format!("{}\n", serde_json::to_string_pretty(&out).unwrap())
        }
        Some(OutputFormat::Csv) => render_csv(&tables),
        _ => render_text(&tables),
    };
    Ok(Outcome::ok(stdout))
}
