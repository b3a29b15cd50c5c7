//! `itc` — interval tensor certification front end.
//!
//! Subcommands: `check-pd`, `check-hurwitz`, `gen`, `corpus`, `bench`.
//! Exit codes: 0 = requested property holds with sound certificates,
//! 1 = refuted, 2 = undecided, 64 = input error.

mod doc;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itc_core::certify::{
    check_hurwitz_general, check_hurwitz_symmetric, check_interval_pd, oracle_extreme_points_pd,
    CheckOptions, Mode, Status, Verdict,
};
use itc_core::corpus::{CorpusInstance, CORPUS_NAMES};
use itc_core::interval::{enumerate_sign_vectors, IntervalTensor};
use itc_core::tensor::DenseTensor;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use doc::{InputDocument, IntervalDocument, TensorDocument};

const EXIT_HOLDS: u8 = 0;
const EXIT_REFUTED: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_INPUT: u8 = 64;

#[derive(Parser)]
#[command(name = "itc", about = "Positive definiteness and Hurwitz stability of interval tensors", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide positive (semi-)definiteness of a tensor or interval tensor.
    CheckPd(CheckPdArgs),
    /// Decide Hurwitz stability of an interval tensor.
    CheckHurwitz(CheckHurwitzArgs),
    /// Generate a random interval document.
    Gen(GenArgs),
    /// Emit a built-in boundary instance.
    Corpus(CorpusArgs),
    /// Compare the vertex reduction against extreme-point enumeration.
    Bench(BenchArgs),
}

#[derive(Args, Clone, Copy)]
struct SolverArgs {
    /// Random starts for the eigenvalue iterations.
    #[arg(long, default_value_t = 32)]
    starts: usize,
    /// Iteration cap per start.
    #[arg(long, default_value_t = 5000)]
    max_iter: usize,
    /// Residual tolerance for convergence.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Strictness margin for definiteness decisions.
    #[arg(long, default_value_t = 1e-8)]
    margin: f64,
    /// Master seed for the random starts (env ITC_SEED overrides).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for the per-vertex map.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl SolverArgs {
    fn check_options(&self) -> CheckOptions {
        let mut opts = CheckOptions::default();
        opts.solver.starts = self.starts;
        opts.solver.max_iter = self.max_iter;
        opts.solver.tol_residual = self.tol;
        opts.solver.seed = env_seed().unwrap_or(self.seed);
        opts.margin = self.margin;
        opts.jobs = self.jobs.max(1);
        opts
    }
}

fn env_seed() -> Option<u64> {
    std::env::var("ITC_SEED").ok()?.parse().ok()
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Pd,
    Psd,
}

#[derive(Args)]
struct CheckPdArgs {
    /// Input file: TensorDocument or IntervalDocument JSON.
    input: PathBuf,
    /// Property to decide.
    #[arg(long, value_enum, default_value = "pd")]
    mode: ModeArg,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Args)]
struct CheckHurwitzArgs {
    /// Input file: IntervalDocument JSON (point tensors are zero-radius).
    input: PathBuf,
    /// Require the symmetric path; fail if the symmetry scan fails.
    #[arg(long)]
    assume_symmetric: bool,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 4)]
    order: usize,
    #[arg(long, default_value_t = 3)]
    dim: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Fraction of entries that are nonzero.
    #[arg(long, default_value_t = 1.0)]
    density: f64,
    /// Radius magnitude relative to the center scale; 0 gives a point.
    #[arg(long, default_value_t = 0.1)]
    radius_scale: f64,
    /// Symmetrize center and radius.
    #[arg(long)]
    symmetric: bool,
}

#[derive(Args)]
struct CorpusArgs {
    /// Instance name, e.g. theorem-5.1 (see `itc corpus --list`).
    name: Option<String>,
    /// List the available names.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 2)]
    min_dim: usize,
    #[arg(long, default_value_t = 4)]
    max_dim: usize,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[command(flatten)]
    solver: SolverArgs,
}

/// Serialized verdict; `schema` is bumped on breaking changes.
#[derive(Serialize)]
struct VerdictJson {
    schema: u32,
    status: String,
    sound: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<f64>>,
    certificates: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    per_vertex: Option<BTreeMap<String, String>>,
    diagnostics: Vec<String>,
    timing_ms: f64,
}

impl VerdictJson {
    fn new(v: &Verdict, timing_ms: f64) -> Self {
        Self {
            schema: 1,
            status: v.status.to_string(),
            sound: v.sound,
            witness: v.witness.clone(),
            certificates: v.certificates.iter().map(|c| c.to_string()).collect(),
            per_vertex: v.per_vertex.as_ref().map(|pv| {
                pv.iter()
                    .map(|(z, s)| (z.label(), s.to_string()))
                    .collect()
            }),
            diagnostics: v.diagnostics.clone(),
            timing_ms,
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run() -> Result<u8, String> {
    match Cli::parse().command {
        Command::CheckPd(args) => cmd_check_pd(args),
        Command::CheckHurwitz(args) => cmd_check_hurwitz(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Corpus(args) => cmd_corpus(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

fn read_input(path: &PathBuf) -> Result<IntervalTensor, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let doc: InputDocument = serde_json::from_str(&text)
        .map_err(|e| format!("{}: not a tensor or interval document: {e}", path.display()))?;
    doc.to_interval()
}

fn cmd_check_pd(args: CheckPdArgs) -> Result<u8, String> {
    let interval = read_input(&args.input)?;
    let mode = match args.mode {
        ModeArg::Pd => Mode::Pd,
        ModeArg::Psd => Mode::Psd,
    };
    let opts = args.solver.check_options();
    let start = Instant::now();
    let verdict = check_interval_pd(&interval, mode, &opts).map_err(|e| e.to_string())?;
    let timing = start.elapsed().as_secs_f64() * 1e3;
    print_verdict(&verdict, timing)?;
    Ok(match verdict.status {
        Status::Pd if verdict.sound => EXIT_HOLDS,
        Status::PsdNotPd if verdict.sound => match mode {
            Mode::Psd => EXIT_HOLDS,
            Mode::Pd => EXIT_REFUTED,
        },
        Status::NotPsd => EXIT_REFUTED,
        _ => EXIT_UNKNOWN,
    })
}

fn cmd_check_hurwitz(args: CheckHurwitzArgs) -> Result<u8, String> {
    let interval = read_input(&args.input)?;
    if args.assume_symmetric && !interval.is_symmetric() {
        return Err("input failed the symmetry scan but --assume-symmetric was given".into());
    }
    let opts = args.solver.check_options();
    let start = Instant::now();
    let verdict = if interval.is_symmetric() {
        check_hurwitz_symmetric(&interval, &opts)
    } else {
        check_hurwitz_general(&interval, &opts)
    }
    .map_err(|e| e.to_string())?;
    let timing = start.elapsed().as_secs_f64() * 1e3;
    print_verdict(&verdict, timing)?;
    Ok(match verdict.status {
        Status::Stable if verdict.sound => EXIT_HOLDS,
        Status::NotStable => EXIT_REFUTED,
        _ => EXIT_UNKNOWN,
    })
}

fn print_verdict(v: &Verdict, timing_ms: f64) -> Result<(), String> {
    let json = VerdictJson::new(v, timing_ms);
    println!(
        "{}",
        serde_json::to_string_pretty(&json).map_err(|e| e.to_string())?
    );
    Ok(())
}

fn cmd_gen(args: GenArgs) -> Result<u8, String> {
    if args.order < 2 || args.dim < 1 {
        return Err("order must be >= 2 and dim >= 1".into());
    }
    if !(0.0..=1.0).contains(&args.density) || args.radius_scale < 0.0 {
        return Err("density must be in [0,1] and radius-scale nonnegative".into());
    }
    let seed = env_seed().unwrap_or(args.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = args.dim.pow(args.order as u32);
    let draw = |scale: f64, rng: &mut ChaCha8Rng| -> Vec<f64> {
        (0..len)
            .map(|_| {
                if rng.gen_range(0.0..1.0f64) < args.density {
                    rng.gen_range(-scale..=scale)
                } else {
                    0.0
                }
            })
            .collect()
    };
    let center_entries = draw(1.0, &mut rng);
    let radius_entries: Vec<f64> = draw(args.radius_scale, &mut rng)
        .into_iter()
        .map(f64::abs)
        .collect();
    let mut center = DenseTensor::from_entries(args.order, args.dim, center_entries)
        .map_err(|e| e.to_string())?;
    let mut radius = DenseTensor::from_entries(args.order, args.dim, radius_entries)
        .map_err(|e| e.to_string())?;
    if args.symmetric {
        center = center.symmetrize();
        radius = radius.symmetrize();
    }
    let document = IntervalDocument::CenterRadius {
        center: TensorDocument::dense(&center),
        radius: TensorDocument::dense(&radius),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&document).map_err(|e| e.to_string())?
    );
    Ok(EXIT_HOLDS)
}

fn cmd_corpus(args: CorpusArgs) -> Result<u8, String> {
    if args.list {
        for name in CORPUS_NAMES {
            println!("{name}");
        }
        return Ok(EXIT_HOLDS);
    }
    let name = args.name.ok_or_else(|| {
        format!("missing instance name; valid names: {}", CORPUS_NAMES.join(", "))
    })?;
    let inst = CorpusInstance::from_name(&name).ok_or_else(|| {
        format!("unknown instance {name:?}; valid names: {}", CORPUS_NAMES.join(", "))
    })?;
    let i = inst.build();
    let document = IntervalDocument::CenterRadius {
        center: TensorDocument::coo_closure(i.center()),
        radius: TensorDocument::coo_closure(i.radius()),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&document).map_err(|e| e.to_string())?
    );
    Ok(EXIT_HOLDS)
}

fn cmd_bench(args: BenchArgs) -> Result<u8, String> {
    if args.min_dim < 1 || args.max_dim < args.min_dim || args.max_dim > 6 {
        return Err("bench dims must satisfy 1 <= min <= max <= 6".into());
    }
    let opts = args.solver.check_options();
    let seed = opts.solver.seed;
    println!(
        "{:<6} {:<6} {:>8} {:>12} {:>10} {:>12}  agreement",
        "order", "dim", "vertices", "vertex_ms", "extremes", "oracle_ms"
    );
    for n in args.min_dim..=args.max_dim {
        for order in [2usize, 4] {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((order as u64) << 32 | n as u64));
            let mut vertex_ms = 0.0;
            let mut oracle_ms = 0.0;
            let mut oracle_runs = 0usize;
            let mut extreme_count: Option<u128> = None;
            let mut agree = true;
            for _ in 0..args.trials.max(1) {
                let interval = bench_instance(&mut rng, order, n);
                let t0 = Instant::now();
                let reduced = check_interval_pd(&interval, Mode::Pd, &opts)
                    .map_err(|e| e.to_string())?;
                vertex_ms += t0.elapsed().as_secs_f64() * 1e3;

                // The naive oracle is only feasible for matrices and small
                // 4th-order instances with restricted free entries.
                let feasible = order == 2 && n <= 2 || order == 4 && n == 2;
                if feasible {
                    let t1 = Instant::now();
                    let oracle = oracle_extreme_points_pd(&interval, Mode::Pd, 1 << 20)
                        .map_err(|e| e.to_string())?;
                    oracle_ms += t1.elapsed().as_secs_f64() * 1e3;
                    oracle_runs += 1;
                    extreme_count = Some(
                        interval
                            .enumerate_extreme_points(1 << 20)
                            .map_err(|e| e.to_string())?
                            .len() as u128,
                    );
                    agree &= match (oracle.status, reduced.status) {
                        (Status::Pd, s) => s == Status::Pd,
                        (Status::NotPsd, s) => s == Status::NotPsd,
                        _ => true,
                    };
                }
            }
            let vertices = enumerate_sign_vectors(n, true).len();
            let (extremes, oracle_cell) = match extreme_count {
                Some(c) => (c.to_string(), format!("{:.2}", oracle_ms / oracle_runs as f64)),
                None => ("skipped".into(), "-".into()),
            };
            println!(
                "{:<6} {:<6} {:>8} {:>12.2} {:>10} {:>12}  {}",
                order,
                n,
                vertices,
                vertex_ms / args.trials.max(1) as f64,
                extremes,
                oracle_cell,
                if extreme_count.is_some() {
                    if agree { "yes" } else { "NO" }
                } else {
                    "-"
                }
            );
            if !agree {
                return Err("vertex reduction disagreed with the extreme-point oracle".into());
            }
        }
    }
    Ok(EXIT_HOLDS)
}

/// Small random instance for the benchmark: full radii for matrices, a few
/// free entries for 4th order so the oracle stays within its cap.
fn bench_instance(rng: &mut ChaCha8Rng, order: usize, dim: usize) -> IntervalTensor {
    let len = dim.pow(order as u32);
    let center_entries: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let center = DenseTensor::from_entries(order, dim, center_entries).unwrap();
    let mut radius = DenseTensor::zeros(order, dim).unwrap();
    let free = if order == 2 { len } else { 4.min(len) };
    for _ in 0..free {
        let idx: Vec<usize> = (0..order).map(|_| rng.gen_range(0..dim)).collect();
        radius.set(&idx, rng.gen_range(0.0..0.5));
    }
    IntervalTensor::new(center, radius).unwrap()
}
