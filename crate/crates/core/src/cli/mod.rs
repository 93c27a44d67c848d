//! Command-line front end. [`run`] parses arguments, dispatches to the library and returns
//! the exit code together with whatever should go to stdout and stderr.
//!
//! Exit codes: 0 success, 2 a verification failed, 3 invalid input.

pub mod reports;

pub use reports::{
    explore, lemma_report, round_trip_report, theta_grid, verify_family, BellSummary, DemoSummary,
    ExplorerPoint, ExplorerReport, FamilyVerifyReport, IsotropySummary, LemmaPoint, LemmaReport,
    Residuals, RoundTripReport, EMPIRICAL_ONLY,
};

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{catalog_family, CoherentFamily, FamilyLabel, FamilyName};
use crate::grothendieck::{
    demonstrate_region, estimate_g, DemoOptions, EstimateOptions, PhaseVector,
};
use crate::logic::{bell_report, violation_scan};
use crate::numerics::{matrix_from_csv, matrix_from_json, ComplexMatrix, Tolerance};
use crate::representation::{SearchMode, SearchOptions, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cyclic-coherent",
    version,
    about = "Coherent-state families under the cyclic shift group"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the JSON report to PATH; with no PATH, or when omitted, JSON goes to stdout.
    #[arg(long, global = true, value_name = "PATH", num_args = 0..=1)]
    pub json: Option<Option<PathBuf>>,

    /// Write a flattened CSV view to PATH, or to stdout when PATH is omitted.
    #[arg(long, global = true, value_name = "PATH", num_args = 0..=1)]
    pub csv: Option<Option<PathBuf>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coherence checks (resolution of identity, orbit matrices, isotropy, projector).
    #[command(subcommand)]
    Family(FamilyCmd),
    /// n-tuple representation checks and the uniform-modulus search.
    #[command(subcommand)]
    Repr(ReprCmd),
    /// Grothendieck bound estimates and the quantum-form demonstration.
    #[command(subcommand)]
    Groth(GrothCmd),
    /// Logical Bell-like inequalities on coherent-state orbits.
    #[command(subcommand)]
    Bell(BellCmd),
    /// Measured values for a family over a θ grid, without any verdict.
    Explore(ExploreArgs),
    /// Run one check over a θ grid and flag the points where the generic behaviour fails.
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
pub struct FamilyArg {
    /// Catalog family: C36, C48, C412, C510, C515 or C612.
    #[arg(long)]
    pub name: String,
}

#[derive(Debug, Args)]
pub struct Budget {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub restarts: Option<usize>,
    #[arg(long)]
    pub iters: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCmd {
    /// Verify one family at one θ, or a user matrix given with --matrix.
    Verify {
        #[arg(long, required_unless_present = "matrix")]
        name: Option<String>,
        /// d×n matrix file (JSON or CSV) whose columns are √(d/n) times the states.
        #[arg(long, conflicts_with = "name")]
        matrix: Option<PathBuf>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Verify a family over a uniform θ grid.
    Report {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long, default_value_t = 20)]
        grid: usize,
        #[arg(long)]
        tol: Option<f64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReprCmd {
    /// Parseval, reproducing kernel, round trip, scalar products and stroboscopic drift on
    /// random states.
    Roundtrip {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Search for a state whose n-tuple has uniform modulus.
    Lemma {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "grid")]
        theta: Option<f64>,
        #[arg(long, alias = "theta-grid")]
        grid: Option<usize>,
        #[command(flatten)]
        budget: Budget,
        /// Search over all normalised states instead of equal-modulus ones.
        #[arg(long)]
        full_state: bool,
        #[arg(long)]
        tol: Option<f64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GrothCmd {
    /// Lower bound on g(Θ) for a matrix file.
    Estimate {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        budget: Budget,
    },
    /// θ = λΠ with V = W = Π/𝒩(Π) for a catalog family.
    Demo {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0.9, allow_negative_numbers = true)]
        theta: f64,
        #[command(flatten)]
        budget: Budget,
    },
}

#[derive(Debug, Subcommand)]
pub enum BellCmd {
    /// Witness operator, spectrum and both sums at one θ.
    Report {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        orbit: usize,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        theta: f64,
    },
    /// Minimum eigenvalue and violation flag over a θ grid.
    Scan {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        orbit: usize,
        #[arg(long, default_value_t = 72)]
        grid: usize,
    },
}

#[derive(Debug, Args)]
pub struct ExploreArgs {
    #[command(flatten)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 12)]
    pub grid: usize,
    #[command(flatten)]
    pub budget: Budget,
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanCheck {
    /// Coherence properties hold.
    Family,
    /// No uniform-modulus state exists.
    Lemma,
    /// Orbit-0 inequality is violated.
    Bell,
    /// 𝔔 lands in (1, 1.4049].
    Groth,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub family: FamilyArg,
    #[arg(long, value_enum)]
    pub check: ScanCheck,
    #[arg(long, default_value_t = 36)]
    pub grid: usize,
    #[command(flatten)]
    pub budget: Budget,
    #[arg(long)]
    pub tol: Option<f64>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn invalid(msg: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: e.render().to_string(),
                },
            }
        }
    };
    match execute(&cli) {
        Ok(o) => o,
        Err(e @ Error::InternalConsistency(_)) => Outcome {
            code: EXIT_VERIFICATION,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Err(e) => Outcome::invalid(e),
    }
}

/// A finished report: JSON body, optional CSV rows, and whether all checks passed.
struct Rendered {
    json: String,
    csv: Option<String>,
    ok: bool,
    summary: String,
}

fn render<T: Serialize>(
    report: &T,
    csv: Option<String>,
    ok: bool,
    summary: String,
) -> Result<Rendered> {
    let mut json = serde_json::to_string_pretty(report)?;
    json.push('\n');
    Ok(Rendered {
        json,
        csv,
        ok,
        summary,
    })
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)
            .map_err(|e| Error::InvalidInput(format!("csv: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidInput(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidInput(format!("csv: {e}")))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let rendered = dispatch(&cli.command)?;
    let mut out = Outcome {
        code: if rendered.ok {
            EXIT_OK
        } else {
            EXIT_VERIFICATION
        },
        stdout: String::new(),
        stderr: String::new(),
    };
    match &cli.json {
        Some(Some(path)) => {
            write_file(path, &rendered.json)?;
            out.stdout.push_str(&rendered.summary);
        }
        _ => {
            if !matches!(cli.csv, Some(None)) || cli.json.is_some() {
                out.stdout.push_str(&rendered.json);
            }
        }
    }
    if let Some(target) = &cli.csv {
        let body = rendered
            .csv
            .ok_or_else(|| Error::InvalidInput("this command has no CSV view".into()))?;
        match target {
            Some(path) => write_file(path, &body)?,
            None => out.stdout.push_str(&body),
        }
    }
    if !rendered.ok {
        out.stderr.push_str("verification failed\n");
    }
    Ok(out)
}

fn write_file(path: &Path, body: &str) -> Result<()> {
    std::fs::write(path, body)
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

fn parse_family(name: &str) -> Result<FamilyName> {
    name.parse()
}

fn tolerance(tol: Option<f64>, default: f64) -> Result<Tolerance> {
    Tolerance::uniform(tol.unwrap_or(default))
}

fn grid(n: usize, min: usize) -> Result<Vec<f64>> {
    if n < min {
        return Err(Error::InvalidInput(format!(
            "grid needs at least {min} point(s), got {n}"
        )));
    }
    Ok(theta_grid(n))
}

fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        matrix_from_json(&text)
    } else {
        matrix_from_csv(&text)
    }
}

fn demo_options(b: &Budget) -> DemoOptions {
    DemoOptions {
        estimate: estimate_options(b),
        ..DemoOptions::default()
    }
}

fn estimate_options(b: &Budget) -> EstimateOptions {
    let d = EstimateOptions::default();
    EstimateOptions {
        restarts: b.restarts.unwrap_or(d.restarts),
        iters: b.iters.unwrap_or(d.iters),
        seed: b.seed,
        ..d
    }
}

fn search_options(b: &Budget, full_state: bool, tol: Option<f64>) -> Result<SearchOptions> {
    let d = SearchOptions::default();
    let restarts = b.restarts.unwrap_or(d.restarts);
    if restarts == 0 {
        return Err(Error::InvalidInput("restarts must be at least 1".into()));
    }
    Ok(SearchOptions {
        restarts,
        iters: b.iters.unwrap_or(d.iters),
        seed: b.seed,
        abs_tol: tolerance(tol, d.abs_tol)?.abs_tol,
        mode: if full_state {
            SearchMode::FullState
        } else {
            SearchMode::EqualModulus
        },
    })
}

#[derive(Serialize)]
struct FamilyCsvRow {
    family: String,
    theta: f64,
    resolution: f64,
    idempotent: f64,
    transpose_identity: f64,
    vv2: f64,
    isotropic: bool,
    pass: bool,
}

impl From<&FamilyVerifyReport> for FamilyCsvRow {
    fn from(r: &FamilyVerifyReport) -> Self {
        Self {
            family: r.family.clone(),
            theta: r.theta,
            resolution: r.residuals.resolution,
            idempotent: r.residuals.idempotent,
            transpose_identity: r.residuals.transpose_identity,
            vv2: r.residuals.vv2,
            isotropic: r.isotropy.isotropic,
            pass: r.pass,
        }
    }
}

/// Report for a user matrix that is not a valid family.
#[derive(Serialize)]
struct RejectedMatrix {
    family: &'static str,
    theta: f64,
    pass: bool,
    resolution_residual: f64,
    reason: String,
}

fn dispatch(cmd: &Command) -> Result<Rendered> {
    match cmd {
        Command::Family(FamilyCmd::Verify {
            name,
            matrix,
            theta,
            tol,
        }) => {
            let tol = tolerance(*tol, 1e-10)?;
            let family: CoherentFamily = match (name, matrix) {
                (Some(name), _) => catalog_family(parse_family(name)?, *theta)?,
                (None, Some(path)) => {
                    let m = read_matrix(path)?;
                    match CoherentFamily::from_matrix(m.clone(), *theta, FamilyLabel::Seeded, &tol)
                    {
                        Ok(f) => f,
                        Err(e @ (Error::InvalidDimension(_) | Error::Parse(_))) => return Err(e),
                        Err(e) => {
                            let rep = RejectedMatrix {
                                family: "seeded",
                                theta: *theta,
                                pass: false,
                                resolution_residual: crate::families::ResolutionReport::for_matrix(
                                    &m, &tol,
                                )
                                .residual,
                                reason: e.to_string(),
                            };
                            return render(
                                &rep,
                                None,
                                false,
                                format!("not a coherent family: {e}\n"),
                            );
                        }
                    }
                }
                (None, None) => return Err(Error::InvalidInput("need --name or --matrix".into())),
            };
            let rep = verify_family(&family, &tol)?;
            let summary = format!(
                "{} θ={}: {} (max residual {:.3e})\n",
                rep.family,
                rep.theta,
                if rep.pass { "pass" } else { "FAIL" },
                rep.residuals.max()
            );
            let csv = to_csv(&[FamilyCsvRow::from(&rep)])?;
            let ok = rep.pass;
            render(&rep, Some(csv), ok, summary)
        }
        Command::Family(FamilyCmd::Report {
            family,
            grid: g,
            tol,
        }) => {
            let name = parse_family(&family.name)?;
            let tol = tolerance(*tol, 1e-10)?;
            let thetas = grid(*g, 1)?;
            let points = thetas
                .par_iter()
                .map(|&t| verify_family(&catalog_family(name, t)?, &tol))
                .collect::<Result<Vec<_>>>()?;
            let all_pass = points.iter().all(|p| p.pass);
            #[derive(Serialize)]
            struct GridReport {
                family: String,
                grid: usize,
                all_pass: bool,
                points: Vec<FamilyVerifyReport>,
            }
            let rows: Vec<FamilyCsvRow> = points.iter().map(FamilyCsvRow::from).collect();
            let summary = format!(
                "{name}: {}/{} grid points pass\n",
                points.iter().filter(|p| p.pass).count(),
                points.len()
            );
            render(
                &GridReport {
                    family: name.to_string(),
                    grid: *g,
                    all_pass,
                    points,
                },
                Some(to_csv(&rows)?),
                all_pass,
                summary,
            )
        }
        Command::Repr(ReprCmd::Roundtrip {
            family,
            theta,
            samples,
            seed,
            tol,
        }) => {
            let f = catalog_family(parse_family(&family.name)?, *theta)?;
            if *samples == 0 {
                return Err(Error::InvalidInput("samples must be at least 1".into()));
            }
            let rep = round_trip_report(&f, *samples, *seed, tolerance(*tol, 1e-11)?.abs_tol)?;
            let summary = format!(
                "{} θ={}: {} over {} states\n",
                rep.family,
                rep.theta,
                if rep.pass { "pass" } else { "FAIL" },
                rep.samples
            );
            let csv = to_csv(std::slice::from_ref(&rep))?;
            let ok = rep.pass;
            render(&rep, Some(csv), ok, summary)
        }
        Command::Repr(ReprCmd::Lemma {
            family,
            theta,
            grid: g,
            budget,
            full_state,
            tol,
        }) => {
            let name = parse_family(&family.name)?;
            let thetas = match (theta, g) {
                (Some(t), _) => vec![*t],
                (None, Some(n)) => grid(*n, 1)?,
                (None, None) => grid(36, 1)?,
            };
            let rep = lemma_report(name, &thetas, &search_options(budget, *full_state, *tol)?)?;
            #[derive(Serialize)]
            struct Row {
                theta: f64,
                best_residual: f64,
                feasible: bool,
                verdict: Verdict,
            }
            let rows: Vec<Row> = rep
                .points
                .iter()
                .map(|p| Row {
                    theta: p.theta,
                    best_residual: p.best_residual,
                    feasible: p.feasible,
                    verdict: p.verdict,
                })
                .collect();
            let summary = format!(
                "{name}: feasible at {} of {} θ values\n",
                rep.points.iter().filter(|p| p.feasible).count(),
                rep.points.len()
            );
            render(&rep, Some(to_csv(&rows)?), true, summary)
        }
        Command::Groth(GrothCmd::Estimate { matrix, budget }) => {
            let theta = read_matrix(matrix)?;
            let est = estimate_g(&theta, &estimate_options(budget))?;
            let check = crate::grothendieck::classical_form(&theta, &est.best_a, &est.best_b)?;
            #[derive(Serialize)]
            struct EstimateReport {
                rows: usize,
                cols: usize,
                g_lower: f64,
                upper_bound: f64,
                certificate_residual: f64,
                converged_fraction: f64,
                restarts_used: usize,
                monotone: bool,
                best_a: PhaseVector,
                best_b: PhaseVector,
            }
            let rep = EstimateReport {
                rows: theta.rows(),
                cols: theta.cols(),
                g_lower: est.g_lower,
                upper_bound: est.upper_bound,
                certificate_residual: (check - est.g_lower).abs(),
                converged_fraction: est.converged_fraction,
                restarts_used: est.restarts_used,
                monotone: est.monotone,
                best_a: est.best_a,
                best_b: est.best_b,
            };
            let ok = rep.monotone
                && rep.certificate_residual <= 1e-12
                && rep.g_lower <= rep.upper_bound + 1e-9;
            let summary = format!("g >= {} (upper bound {})\n", rep.g_lower, rep.upper_bound);
            render(&rep, None, ok, summary)
        }
        Command::Groth(GrothCmd::Demo {
            family,
            theta,
            budget,
        }) => {
            let f = catalog_family(parse_family(&family.name)?, *theta)?;
            let q = demonstrate_region(&f, &demo_options(budget))?;
            let rep = DemoSummary::from(&q);
            let summary = match rep.q {
                Some(q) => format!(
                    "{} θ={}: q = {q} (in region: {})\n",
                    rep.family, rep.theta, rep.in_region
                ),
                None => format!(
                    "{} θ={}: empty λ-window, g >= {}\n",
                    rep.family, rep.theta, rep.g_lower
                ),
            };
            #[derive(Serialize)]
            struct Row {
                family: String,
                theta: f64,
                g_lower: f64,
                window_lo: f64,
                window_hi: f64,
                window_empty: bool,
                lambda: Option<f64>,
                q: Option<f64>,
                in_region: bool,
            }
            let row = Row {
                family: rep.family.clone(),
                theta: rep.theta,
                g_lower: rep.g_lower,
                window_lo: rep.window.lo,
                window_hi: rep.window.hi,
                window_empty: rep.window.empty,
                lambda: rep.lambda,
                q: rep.q,
                in_region: rep.in_region,
            };
            render(&rep, Some(to_csv(&[row])?), true, summary)
        }
        Command::Bell(BellCmd::Report {
            family,
            orbit,
            theta,
        }) => {
            let f = catalog_family(parse_family(&family.name)?, *theta)?;
            let r = bell_report(&f, *orbit, None)?;
            let rep = BellSummary::from(&r);
            let summary = format!(
                "{} orbit {} θ={}: min eig {}, sum {} ({})\n",
                rep.family,
                rep.orbit,
                rep.theta,
                rep.min_eig,
                rep.sum_direct,
                if rep.violated {
                    "violated"
                } else {
                    "not violated"
                }
            );
            #[derive(Serialize)]
            struct Row {
                theta: f64,
                min_eig: f64,
                witness_nu: Option<usize>,
                sum_direct: f64,
                sum_complement: f64,
                violated: bool,
            }
            let row = Row {
                theta: rep.theta,
                min_eig: rep.min_eig,
                witness_nu: rep.witness_nu,
                sum_direct: rep.sum_direct,
                sum_complement: rep.sum_complement,
                violated: rep.violated,
            };
            render(&rep, Some(to_csv(&[row])?), true, summary)
        }
        Command::Bell(BellCmd::Scan {
            family,
            orbit,
            grid: g,
        }) => {
            let name = parse_family(&family.name)?;
            let points = violation_scan(name, *orbit, &grid(*g, 1)?)?;
            #[derive(Serialize)]
            struct ScanReport {
                family: String,
                orbit: usize,
                grid: usize,
                non_violating: Vec<f64>,
                hypothesis_not_met: Vec<f64>,
                points: Vec<crate::logic::ScanPoint>,
            }
            let rep = ScanReport {
                family: name.to_string(),
                orbit: *orbit,
                grid: *g,
                non_violating: points
                    .iter()
                    .filter(|p| !p.violated)
                    .map(|p| p.theta)
                    .collect(),
                hypothesis_not_met: points
                    .iter()
                    .filter(|p| !p.hypothesis_met)
                    .map(|p| p.theta)
                    .collect(),
                points,
            };
            let summary = format!(
                "{name} orbit {orbit}: violated at {}/{} grid points\n",
                rep.points.iter().filter(|p| p.violated).count(),
                rep.points.len()
            );
            let csv = to_csv(&rep.points)?;
            render(&rep, Some(csv), true, summary)
        }
        Command::Explore(a) => {
            let name = parse_family(&a.family.name)?;
            let rep = explore(
                name,
                &grid(a.grid, 1)?,
                &demo_options(&a.budget),
                &tolerance(a.tol, 1e-10)?,
            )?;
            #[derive(Serialize)]
            struct Row {
                theta: f64,
                coherence_max_residual: f64,
                isotropic: bool,
                g_lower: f64,
                n: usize,
                window_empty: bool,
                q: Option<f64>,
                bell_min_eig: f64,
            }
            let rows: Vec<Row> = rep
                .points
                .iter()
                .map(|p| Row {
                    theta: p.theta,
                    coherence_max_residual: p.coherence.residuals.max(),
                    isotropic: p.coherence.isotropy.isotropic,
                    g_lower: p.g_lower,
                    n: p.n,
                    window_empty: p.window.empty,
                    q: p.q,
                    bell_min_eig: p.bell_min_eig.iter().copied().fold(f64::INFINITY, f64::min),
                })
                .collect();
            let summary = format!(
                "{name}: explored {} θ values (measured values only)\n",
                rep.points.len()
            );
            render(&rep, Some(to_csv(&rows)?), true, summary)
        }
        Command::Scan(a) => scan(a),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanPointReport {
    pub theta: f64,
    /// Whether the generic-z behaviour holds at this point.
    pub holds: bool,
    /// The measured quantity behind `holds`.
    pub value: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub family: String,
    pub check: ScanCheck,
    pub grid: usize,
    /// Points where the generic behaviour fails: candidates for the excluded set of `z`.
    pub flagged: Vec<f64>,
    pub points: Vec<ScanPointReport>,
}

fn scan(a: &ScanArgs) -> Result<Rendered> {
    let name = parse_family(&a.family.name)?;
    let thetas = grid(a.grid, 2)?;
    let points: Vec<ScanPointReport> = match a.check {
        ScanCheck::Family => {
            let tol = tolerance(a.tol, 1e-10)?;
            thetas
                .par_iter()
                .map(|&t| {
                    let r = verify_family(&catalog_family(name, t)?, &tol)?;
                    Ok(ScanPointReport {
                        theta: t,
                        holds: r.pass,
                        value: r.residuals.max(),
                    })
                })
                .collect::<Result<_>>()?
        }
        ScanCheck::Lemma => lemma_report(name, &thetas, &search_options(&a.budget, false, a.tol)?)?
            .points
            .into_iter()
            .map(|p| ScanPointReport {
                theta: p.theta,
                holds: p.verdict == Verdict::Infeasible,
                value: p.best_residual,
            })
            .collect(),
        ScanCheck::Bell => violation_scan(name, 0, &thetas)?
            .into_iter()
            .map(|p| ScanPointReport {
                theta: p.theta,
                holds: p.violated,
                value: p.min_eig,
            })
            .collect(),
        ScanCheck::Groth => {
            let opts = demo_options(&a.budget);
            thetas
                .iter()
                .map(|&t| {
                    let q = demonstrate_region(&catalog_family(name, t)?, &opts)?;
                    Ok(ScanPointReport {
                        theta: t,
                        holds: q.demonstrated,
                        value: q.g_lower,
                    })
                })
                .collect::<Result<_>>()?
        }
    };
    let flagged: Vec<f64> = points
        .iter()
        .filter(|p| !p.holds)
        .map(|p| p.theta)
        .collect();
    let summary = format!(
        "{name} {:?} scan: {} of {} points flagged\n",
        a.check,
        flagged.len(),
        points.len()
    );
    let csv = to_csv(&points)?;
    let rep = ScanReport {
        family: name.to_string(),
        check: a.check,
        grid: a.grid,
        flagged,
        points,
    };
    render(&rep, Some(csv), true, summary)
}
