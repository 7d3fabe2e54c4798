//! Command-line interface: body construction, solver runs, verification
//! suites, the conjecture search, and shadow-system profiling.
//!
//! Exit codes: 0 success / all checks passed, 1 verification failure,
//! 2 invalid input. Numeric results print with 12 fractional digits.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bodies;
use crate::harness::polygen::PolygonGenParams;
use crate::harness::search::conjecture_search;
use crate::harness::{all_pass, suites, VerificationReport};
use crate::io::{self, RunRecord};
use crate::normed::{mu, VolumeKind};
use crate::shadow;
use crate::solvers::{
    max_cross_polytope, max_inscribed_polytope, min_circumscribed_parallelotope, santalo_point,
    ExtremalWitness, SolverBudget,
};
use crate::svg;

#[derive(Parser)]
#[command(
    name = "normvol",
    version,
    about = "Normed volumes of convex bodies: extremal solvers and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct named bodies and write them as Body JSON
    Bodies {
        #[command(subcommand)]
        action: BodiesCmd,
    },
    /// Compute extremal objects and normed volumes of a body
    Compute {
        #[command(subcommand)]
        what: ComputeCmd,
    },
    /// Run a verification suite; exit 0 iff every check passes
    Verify(VerifyArgs),
    /// Randomized searches over symmetric bodies
    Search {
        #[command(subcommand)]
        what: SearchCmd,
    },
    /// Shadow-system profiles and the projection cascade
    Shadow {
        #[command(subcommand)]
        what: ShadowCmd,
    },
}

#[derive(Subcommand)]
enum BodiesCmd {
    /// Write a named body to --out
    Make(MakeArgs),
}

#[derive(Args)]
struct MakeArgs {
    /// simplex | cross | cube | ngon | symmetral | pair | radon-hexagon
    #[arg(long)]
    kind: String,
    /// Ambient dimension (2..=6) for dimensioned kinds
    #[arg(long)]
    dim: Option<usize>,
    /// Vertex count for ngon
    #[arg(long)]
    n: Option<usize>,
    /// Circumradius for ngon
    #[arg(long, default_value_t = 1.0)]
    circumradius: f64,
    /// Dimension split for pair (simplex dimensions k and dim-k)
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum ComputeCmd {
    /// Maximum-volume inscribed polytope with at most N vertices
    Qn(QnArgs),
    /// Maximum-volume inscribed cross-polytope
    Cross(SolverArgs),
    /// Minimum-volume circumscribed parallelotope
    Para(SolverArgs),
    /// Santalo point
    Santalo(SolverArgs),
    /// Normed volume of the maximal inscribed polytope
    Mu(MuArgs),
}

#[derive(Args)]
struct QnArgs {
    #[arg(long)]
    body: PathBuf,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Overlay of the body and the witness (2D only)
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct SolverArgs {
    #[arg(long)]
    body: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct MuArgs {
    #[arg(long)]
    body: PathBuf,
    #[arg(long)]
    n: usize,
    /// bus | ht | mass | mass-star
    #[arg(long)]
    vol: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// bus-max | ht-plane | mass | mass-star | ht-simplex | combinatorics |
    /// shadow | all
    #[arg(long)]
    suite: String,
    /// Override the per-claim tolerances with a uniform one
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Sample random symmetric polygons and record vol(Q6) * vol(polar)
    Conjecture(ConjectureArgs),
}

#[derive(Args)]
struct ConjectureArgs {
    #[arg(long)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    csv: PathBuf,
    /// Where to write flagged counterexamples (default: alongside the CSV)
    #[arg(long)]
    counterexamples: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ShadowCmd {
    /// Volume profile with a convexity certificate
    Profile(ProfileArgs),
    /// Santalo-centered reciprocal polar-volume profile
    Mr(ProfileArgs),
    /// Greedy simultaneous-projection cascade
    Cascade(CascadeArgs),
}

#[derive(Args)]
struct ProfileArgs {
    #[arg(long)]
    system: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    t_min: f64,
    #[arg(long, allow_hyphen_values = true)]
    t_max: f64,
    #[arg(long)]
    steps: usize,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct CascadeArgs {
    #[arg(long)]
    system: PathBuf,
    #[arg(long, default_value_t = 1e-9)]
    eps: f64,
    #[arg(long, default_value_t = 10_000)]
    max_sweeps: usize,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    json: Option<PathBuf>,
}

fn fmt12(x: f64) -> String {
    format!("{x:.12}")
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Io(#[from] io::IoError),
    #[error("{0}")]
    File(#[from] std::io::Error),
    #[error("{0}")]
    Geom(#[from] crate::geom::GeomError),
    #[error("{0}")]
    Solver(#[from] crate::solvers::SolverError),
    #[error("{0}")]
    Shadow(#[from] shadow::ShadowError),
    #[error("{0}")]
    Usage(String),
}

/// Parse and execute; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Bodies { action: BodiesCmd::Make(args) } => make_body(args),
        Command::Compute { what } => compute(what),
        Command::Verify(args) => verify(args),
        Command::Search { what: SearchCmd::Conjecture(args) } => search(args),
        Command::Shadow { what } => shadow_cmd(what),
    }
}

fn need_dim(args: &MakeArgs) -> Result<usize, CliError> {
    args.dim.ok_or_else(|| CliError::Usage(format!("--dim is required for kind {}", args.kind)))
}

fn make_body(args: MakeArgs) -> Result<i32, CliError> {
    let body = match args.kind.as_str() {
        "simplex" => bodies::regular_simplex(need_dim(&args)?)?,
        "cross" => bodies::cross_polytope(need_dim(&args)?)?,
        "cube" => bodies::cube(need_dim(&args)?)?,
        "symmetral" => bodies::simplex_symmetral(need_dim(&args)?)?,
        "pair" => {
            let d = need_dim(&args)?;
            let k = args
                .k
                .ok_or_else(|| CliError::Usage("--k is required for kind pair".into()))?;
            bodies::simplex_pair_body(d, k)?
        }
        "ngon" => {
            let n = args
                .n
                .ok_or_else(|| CliError::Usage("--n is required for kind ngon".into()))?;
            bodies::regular_ngon(n, args.circumradius)?
        }
        "radon-hexagon" => bodies::radon_hexagon(),
        other => return Err(CliError::Usage(format!("unknown body kind: {other}"))),
    };
    io::write_body(&args.out, &body)?;
    println!("wrote {} ({} vertices, dim {})", args.out.display(), body.vertex_count(), body.dim);
    Ok(0)
}

fn witness_output(
    record: RunRecord,
    witness: &ExtremalWitness,
    body: &crate::geom::Polytope,
    out: Option<&PathBuf>,
    svg_path: Option<&PathBuf>,
) -> Result<(), CliError> {
    println!("{}", fmt12(witness.value));
    if let Some(path) = out {
        let doc = json!({ "run": record, "witness": witness });
        std::fs::write(path, serde_json::to_string_pretty(&doc).expect("serializable") + "\n")?;
    }
    if let Some(path) = svg_path {
        let doc = svg::polygons_svg(&[(body, "#1f77b4"), (&witness.object, "#d62728")])?;
        std::fs::write(path, doc)?;
    }
    Ok(())
}

fn compute(what: ComputeCmd) -> Result<i32, CliError> {
    match what {
        ComputeCmd::Qn(args) => {
            let body = io::read_body(&args.body)?;
            let budget = SolverBudget::seeded(args.seed);
            let w = max_inscribed_polytope(&body, args.n, &budget)?;
            let record = RunRecord::new("compute qn", args.seed)
                .with("body", args.body.display())
                .with("n", args.n);
            witness_output(record, &w, &body, args.out.as_ref(), args.svg.as_ref())?;
        }
        ComputeCmd::Cross(args) => {
            let body = io::read_body(&args.body)?;
            let budget = SolverBudget::seeded(args.seed);
            let w = max_cross_polytope(&body, &budget)?;
            let record =
                RunRecord::new("compute cross", args.seed).with("body", args.body.display());
            witness_output(record, &w, &body, args.out.as_ref(), args.svg.as_ref())?;
        }
        ComputeCmd::Para(args) => {
            let body = io::read_body(&args.body)?;
            let budget = SolverBudget::seeded(args.seed);
            let w = min_circumscribed_parallelotope(&body, &budget)?;
            let record =
                RunRecord::new("compute para", args.seed).with("body", args.body.display());
            witness_output(record, &w, &body, args.out.as_ref(), args.svg.as_ref())?;
        }
        ComputeCmd::Santalo(args) => {
            let body = io::read_body(&args.body)?;
            let budget = SolverBudget::seeded(args.seed);
            let s = santalo_point(&body, &budget)?;
            println!("{}", s.iter().map(|x| fmt12(*x)).collect::<Vec<_>>().join(" "));
            if let Some(path) = args.out {
                let record =
                    RunRecord::new("compute santalo", args.seed).with("body", args.body.display());
                let doc = json!({ "run": record, "santalo_point": s });
                std::fs::write(path, serde_json::to_string_pretty(&doc).expect("serializable") + "\n")?;
            }
        }
        ComputeCmd::Mu(args) => {
            let body = io::read_body(&args.body)?;
            let kind = VolumeKind::parse(&args.vol)
                .ok_or_else(|| CliError::Usage(format!("unknown volume kind: {}", args.vol)))?;
            let budget = SolverBudget::seeded(args.seed);
            let result = mu(&body, args.n, kind, &budget)?;
            println!("{}", fmt12(result.value));
            if let Some(path) = args.out {
                let record = RunRecord::new("compute mu", args.seed)
                    .with("body", args.body.display())
                    .with("n", args.n)
                    .with("vol", kind);
                let doc = json!({ "run": record, "mu": result });
                std::fs::write(path, serde_json::to_string_pretty(&doc).expect("serializable") + "\n")?;
            }
        }
    }
    Ok(0)
}

fn run_suite(name: &str, budget: &SolverBudget) -> Result<Vec<VerificationReport>, CliError> {
    Ok(match name {
        "bus-max" => {
            let mut reports = suites::verify_bus_plane(budget)?;
            for d in 3..=5 {
                reports.extend(suites::verify_bus_max(d, budget)?);
            }
            reports
        }
        "ht-plane" => suites::verify_ht_plane(&[4, 6, 8], budget)?,
        "mass" => suites::verify_mass(budget)?,
        "mass-star" => suites::verify_mass_star(budget)?,
        "ht-simplex" => suites::verify_ht_simplex_local(50, budget)?,
        "combinatorics" => suites::verify_combinatorics(),
        "shadow" => suites::verify_shadow(budget)?,
        "all" => {
            let mut reports = Vec::new();
            for s in ["bus-max", "ht-plane", "mass", "mass-star", "ht-simplex", "combinatorics", "shadow"] {
                reports.extend(run_suite(s, budget)?);
            }
            reports
        }
        other => return Err(CliError::Usage(format!("unknown suite: {other}"))),
    })
}

fn verify(args: VerifyArgs) -> Result<i32, CliError> {
    let budget = SolverBudget::seeded(args.seed);
    let mut reports = run_suite(&args.suite, &budget)?;
    if let Some(tol) = args.tol {
        for r in reports.iter_mut() {
            r.tol = tol;
            r.pass = r.rel_err <= tol;
        }
    }
    for r in &reports {
        println!("{}", r.line());
    }
    let ok = all_pass(&reports);
    println!(
        "suite {}: {}/{} checks passed",
        args.suite,
        reports.iter().filter(|r| r.pass).count(),
        reports.len()
    );
    if let Some(path) = args.json {
        let record = RunRecord::new("verify", args.seed).with("suite", &args.suite);
        let doc = json!({ "run": record, "suite": args.suite, "reports": reports, "all_pass": ok });
        std::fs::write(path, serde_json::to_string_pretty(&doc).expect("serializable") + "\n")?;
    }
    Ok(if ok { 0 } else { 1 })
}

fn search(args: ConjectureArgs) -> Result<i32, CliError> {
    let params = PolygonGenParams::default();
    let mut csv = Vec::new();
    let summary = conjecture_search(args.samples, args.seed, &params, &mut csv)?;
    std::fs::write(&args.csv, &csv)?;
    let min = &summary.min_record;
    println!(
        "min product {} at sample {} (margin {})",
        fmt12(min.product),
        min.sample_id,
        fmt12(min.margin)
    );
    if summary.violations.is_empty() {
        println!("no violations below 8 - 1e-6 in {} samples", summary.samples);
    } else {
        let path = args
            .counterexamples
            .unwrap_or_else(|| args.csv.with_extension("counterexamples.json"));
        let record = RunRecord::new("search conjecture", args.seed)
            .with("samples", args.samples)
            .with("csv", args.csv.display());
        let doc = json!({ "run": record, "flagged": summary.violations });
        std::fs::write(&path, serde_json::to_string_pretty(&doc).expect("serializable") + "\n")?;
        println!(
            "FLAGGED {} candidate counterexamples -> {}",
            summary.violations.len(),
            path.display()
        );
    }
    Ok(0)
}

fn shadow_cmd(what: ShadowCmd) -> Result<i32, CliError> {
    match what {
        ShadowCmd::Profile(args) => {
            let system = io::read_shadow_system(&args.system)?;
            let tol = args.tol.unwrap_or(1e-8);
            let report =
                shadow::volume_profile(&system, args.t_min, args.t_max, args.steps, tol)?;
            profile_output("shadow profile", &args, report)?;
        }
        ShadowCmd::Mr(args) => {
            let system = io::read_shadow_system(&args.system)?;
            let tol = args.tol.unwrap_or(1e-6);
            let budget = SolverBudget::seeded(args.seed);
            let report =
                shadow::mr_profile(&system, args.t_min, args.t_max, args.steps, tol, &budget)?;
            profile_output("shadow mr", &args, report)?;
        }
        ShadowCmd::Cascade(args) => {
            let spec = io::read_cascade_spec(&args.system)?;
            let result =
                shadow::projection_cascade(&spec.normals, &spec.points, args.eps, args.max_sweeps)?;
            println!(
                "status {:?}: f {} -> {} in {} projections",
                result.status,
                fmt12(result.trace[0]),
                fmt12(*result.trace.last().expect("nonempty")),
                result.trace.len() - 1
            );
            if let Some(path) = args.json {
                let record = RunRecord::new("shadow cascade", 0)
                    .with("system", args.system.display())
                    .with("eps", args.eps);
                let doc = json!({ "run": record, "result": result });
                std::fs::write(path, serde_json::to_string_pretty(&doc).expect("serializable") + "\n")?;
            } else if let Some(path) = args.svg {
                std::fs::write(path, svg::trace_svg(&result.trace))?;
            }
        }
    }
    Ok(0)
}

fn profile_output(
    command: &str,
    args: &ProfileArgs,
    report: shadow::ConvexityReport,
) -> Result<(), CliError> {
    println!(
        "{}: min second difference {} over {} samples",
        if report.pass { "convex" } else { "NOT CONVEX" },
        fmt12(report.min_second_difference),
        report.values.len()
    );
    if let Some(path) = &args.svg {
        std::fs::write(path, svg::profile_svg(&report.grid, &report.values))?;
    }
    if let Some(path) = &args.json {
        let record = RunRecord::new(command, args.seed)
            .with("system", args.system.display())
            .with("steps", args.steps);
        let doc = json!({ "run": record, "report": report });
        std::fs::write(path, serde_json::to_string_pretty(&doc).expect("serializable") + "\n")?;
    }
    Ok(())
}
