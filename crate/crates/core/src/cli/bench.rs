//! Scaling measurements with a least-squares log-log slope.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde_json::{json, Value};
use thiserror::Error;

use crate::gen::{generate, GenKind};
use crate::model::slots::EndpointTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchSolver {
    Int,
    Proper,
}

impl BenchSolver {
    pub fn as_str(self) -> &'static str {
        match self {
            BenchSolver::Int => "int",
            BenchSolver::Proper => "proper",
        }
    }

    pub fn default_sizes(self) -> Vec<usize> {
        match self {
            BenchSolver::Int => vec![10_000, 20_000, 40_000, 80_000],
            BenchSolver::Proper => vec![500, 1000, 2000, 4000],
        }
    }
}

impl fmt::Display for BenchSolver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BenchSolver {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<BenchSolver, BenchError> {
        match s {
            "int" => Ok(BenchSolver::Int),
            "proper" | "proper-int" => Ok(BenchSolver::Proper),
            other => Err(BenchError::UnknownSolver(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error("need at least 4 sizes, got {0}")]
    TooFewSizes(usize),
    #[error("sizes must be strictly ascending")]
    NotAscending,
    #[error("unknown solver {0:?}")]
    UnknownSolver(String),
    #[error("generated instance with n = {0} was not solved")]
    Unsolved(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub seconds: f64,
    pub sort_seconds: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub solver: BenchSolver,
    pub seed: u64,
    pub rows: Vec<BenchRow>,
    pub slope: f64,
    pub total_seconds: f64,
}

impl BenchReport {
    pub fn to_value(&self) -> Value {
        json!({
            "solver": self.solver.as_str(),
            "seed": self.seed,
            "rows": self.rows.iter().map(|r| json!({
                "n": r.n, "m": r.m, "seconds": r.seconds, "sort_seconds": r.sort_seconds,
            })).collect::<Vec<_>>(),
            "slope": self.slope,
            "total_seconds": self.total_seconds,
        })
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let k = points.len() as f64;
    let lx: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ly: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = lx.iter().sum::<f64>() / k;
    let my = ly.iter().sum::<f64>() / k;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}

/// Best of `reps` runs per size on SAT generator output; INT excludes the endpoint sort.
pub fn run_bench(solver: BenchSolver, sizes: &[usize], seed: u64, reps: usize) -> Result<BenchReport, BenchError> {
    if sizes.len() < 4 {
        return Err(BenchError::TooFewSizes(sizes.len()));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(BenchError::NotAscending);
    }
    let all = Instant::now();
    let mut rows = Vec::with_capacity(sizes.len());
    for (i, &n) in sizes.iter().enumerate() {
        let kind = match solver {
            BenchSolver::Int => GenKind::RandomInterval,
            BenchSolver::Proper => GenKind::RandomProper,
        };
        let inst = generate(kind, n, seed.wrapping_add(i as u64), true).instance;
        let mut best = f64::INFINITY;
        let mut best_sort = f64::INFINITY;
        for _ in 0..reps.max(1) {
            let t = Instant::now();
            let table = EndpointTable::from_instance(&inst);
            let sort = secs(t.elapsed());
            let t = Instant::now();
            let ok = match solver {
                BenchSolver::Int => crate::interval::solve_bounded_interval_presorted(&inst, &table).is_ok(),
                BenchSolver::Proper => crate::proper::solve_bounded_proper(&inst).is_ok(),
            };
            let run = secs(t.elapsed());
            if !ok {
                return Err(BenchError::Unsolved(n));
            }
            best = best.min(run);
            best_sort = best_sort.min(sort);
        }
        rows.push(BenchRow { n, m: inst.graph.m(), seconds: best, sort_seconds: best_sort });
    }
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.seconds.max(1e-9))).collect();
    Ok(BenchReport { solver, seed, slope: loglog_slope(&pts), rows, total_seconds: secs(all.elapsed()) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_laws() {
        let lin: Vec<(f64, f64)> = [1.0, 2.0, 4.0, 8.0].iter().map(|&x| (x, 3.0 * x)).collect();
        assert!((loglog_slope(&lin) - 1.0).abs() < 1e-12);
        let quad: Vec<(f64, f64)> = [10.0, 20.0, 40.0, 80.0].iter().map(|&x| (x, x * x)).collect();
        assert!((loglog_slope(&quad) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn needs_four_sizes() {
        assert_eq!(run_bench(BenchSolver::Int, &[100], 1, 1), Err(BenchError::TooFewSizes(1)));
        assert_eq!(run_bench(BenchSolver::Int, &[4, 3, 2, 1], 1, 1), Err(BenchError::NotAscending));
    }

    #[test]
    fn tiny_run() {
        let r = run_bench(BenchSolver::Proper, &[20, 40, 80, 160], 3, 1).unwrap();
        assert_eq!(r.rows.len(), 4);
        assert!(r.slope.is_finite());
    }
}
