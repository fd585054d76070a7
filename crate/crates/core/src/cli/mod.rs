//! Command-line front end. Exit codes: 0 SAT / success, 1 UNSAT / check failed, 2 input error.

pub mod bench;
pub mod check;
pub mod render;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::Value;

use crate::gen::{generate, GenKind};
use crate::model::json::{instance_from_json, instance_to_value, representation_from_json};
use crate::model::{check_representation, GraphClass, Instance, Representation};
use crate::outcome::{outcome_value, solve};

pub use bench::{loglog_slope, run_bench, BenchError, BenchReport, BenchRow, BenchSolver};
pub use check::{oracle_check, CheckLimits, CheckSummary, Counterexample, SolverFn};
pub use render::render_svg;

pub const EXIT_SAT: i32 = 0;
pub const EXIT_UNSAT: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "boundrep", version, about = "Bounded representations of interval and proper interval graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Solve an instance file and print the witness or the reason.
    Solve {
        path: PathBuf,
        /// int | proper-int, overrides the file
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        trace: bool,
    },
    /// Check a representation document against an instance.
    Validate { instance: PathBuf, representation: PathBuf },
    /// Print a generated instance.
    Gen {
        /// random-interval | random-proper | repext | adversarial-bounds
        kind: String,
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        sat_only: bool,
    },
    /// Draw a representation as SVG; solves the instance when no representation is given.
    Render {
        instance: PathBuf,
        representation: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time a solver on growing generated instances.
    Bench {
        #[arg(long, default_value = "int")]
        solver: String,
        /// comma separated, at least 4
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        /// exit 1 when the fitted slope is above this
        #[arg(long)]
        max_slope: Option<f64>,
    },
    /// Compare both solvers with the brute-force oracle on the small corpus.
    OracleCheck {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 100)]
        bound_sets: usize,
        #[arg(long, default_value_t = 500)]
        n5: usize,
        #[arg(long, default_value_t = 0)]
        n6: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

/// Worker pool capped by `BOUNDREP_THREADS`.
pub fn thread_pool() -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(k) = std::env::var("BOUNDREP_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()).filter(|&k| k > 0) {
        b = b.num_threads(k);
    }
    b.build().expect("thread pool")
}

struct Failure(i32, String);

fn input_error(msg: impl std::fmt::Display) -> Failure {
    Failure(EXIT_ERROR, msg.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {}", path.display(), e)))
}

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    instance_from_json(&read(path)?).map_err(|e| input_error(format!("{}: {}", path.display(), e)))
}

fn line(out: &mut dyn Write, v: &Value) {
    let _ = writeln!(out, "{}", serde_json::to_string(v).expect("serializable"));
}

fn cmd_solve(path: &Path, class: Option<&str>, trace: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut inst = read_instance(path)?;
    if let Some(c) = class {
        inst.class = c.parse::<GraphClass>().map_err(input_error)?;
    }
    let (outcome, trace_value) = match inst.class {
        GraphClass::Int => {
            let (o, t) = crate::interval::solve_bounded_interval_traced(&inst);
            (o, t.to_value())
        }
        GraphClass::ProperInt => match crate::proper::solve_bounded_proper_detailed(&inst) {
            Ok(sol) => {
                let t = sol.trace_value();
                (Ok(sol.representation), t)
            }
            Err(u) => (Err(u), Value::Null),
        },
    };
    if let Ok(rep) = &outcome {
        let report = check_representation(&inst, rep);
        if !report.is_valid() {
            return Err(input_error(format!("internal error: witness failed validation: {:?}", report.violations)));
        }
    }
    let mut v = outcome_value(&outcome);
    if trace {
        v["trace"] = trace_value;
    }
    line(out, &v);
    Ok(if outcome.is_ok() { EXIT_SAT } else { EXIT_UNSAT })
}

fn cmd_validate(inst: &Path, rep: &Path, out: &mut dyn Write) -> Result<i32, Failure> {
    let inst = read_instance(inst)?;
    let rep = representation_from_json(&read(rep)?).map_err(input_error)?;
    let Some(rep) = rep else {
        return Err(input_error("representation document is unsat"));
    };
    let report = check_representation(&inst, &rep);
    let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
    line(out, &serde_json::json!({ "valid": report.is_valid(), "violations": violations }));
    Ok(if report.is_valid() { EXIT_SAT } else { EXIT_UNSAT })
}

fn cmd_render(inst: &Path, rep: Option<&Path>, output: Option<&Path>, out: &mut dyn Write) -> Result<i32, Failure> {
    let inst = read_instance(inst)?;
    let rep: Representation = match rep {
        Some(p) => match representation_from_json(&read(p)?).map_err(input_error)? {
            Some(r) => r,
            None => return Err(Failure(EXIT_UNSAT, "no witness to draw: representation is unsat".into())),
        },
        None => solve(&inst).map_err(|u| Failure(EXIT_UNSAT, format!("no witness to draw: {}", u)))?,
    };
    let svg = render_svg(&inst, &rep).map_err(input_error)?;
    match output {
        Some(p) => fs::write(p, svg).map_err(|e| input_error(format!("{}: {}", p.display(), e)))?,
        None => {
            let _ = out.write_all(svg.as_bytes());
        }
    }
    Ok(EXIT_SAT)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match cli.cmd {
        Cmd::Solve { path, class, trace } => cmd_solve(&path, class.as_deref(), trace, out),
        Cmd::Validate { instance, representation } => cmd_validate(&instance, &representation, out),
        Cmd::Gen { kind, n, seed, sat_only } => {
            let kind: GenKind = kind.parse().map_err(input_error)?;
            line(out, &instance_to_value(&generate(kind, n, seed, sat_only).instance));
            Ok(EXIT_SAT)
        }
        Cmd::Render { instance, representation, output } => cmd_render(&instance, representation.as_deref(), output.as_deref(), out),
        Cmd::Bench { solver, sizes, seed, reps, max_slope } => {
            let solver: BenchSolver = solver.parse().map_err(input_error)?;
            let sizes = sizes.unwrap_or_else(|| solver.default_sizes());
            let report = run_bench(solver, &sizes, seed, reps).map_err(input_error)?;
            line(out, &report.to_value());
            Ok(match max_slope {
                Some(m) if report.slope > m => EXIT_UNSAT,
                _ => EXIT_SAT,
            })
        }
        Cmd::OracleCheck { max_n, bound_sets, n5, n6, seed } => {
            if max_n > crate::oracle::DEFAULT_LIMIT {
                return Err(input_error(format!("max-n {} exceeds the oracle limit {}", max_n, crate::oracle::DEFAULT_LIMIT)));
            }
            let limits = CheckLimits { max_n, bound_sets, n5, n6 };
            let s = thread_pool().install(|| {
                oracle_check(&limits, seed, crate::interval::solve_bounded_interval, crate::proper::solve_bounded_proper)
            });
            line(out, &s.to_value());
            let _ = writeln!(out, "{} mismatches", s.mismatches);
            Ok(if s.passed() { EXIT_SAT } else { EXIT_UNSAT })
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = write!(err, "{}", e.render());
            if !e.use_stderr() {
                let _ = write!(out, "{}", e.render());
            }
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {}", msg);
            code
        }
    }
}
