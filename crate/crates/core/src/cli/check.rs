//! Decision equivalence of both solvers against the oracle.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::model::json::instance_to_value;
use crate::model::{check_representation, GraphClass, Instance};
use crate::oracle::{brute_force_solve, enumerate_small_instances, OracleAnswer, SmallCounts};
use crate::outcome::Outcome;

pub type SolverFn = fn(&Instance) -> Outcome;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLimits {
    /// Every labeled graph is listed up to `min(max_n, 4)`; samples at 5 and 6 need `max_n >= 5, 6`.
    pub max_n: usize,
    pub bound_sets: usize,
    pub n5: usize,
    pub n6: usize,
}

impl Default for CheckLimits {
    fn default() -> CheckLimits {
        CheckLimits { max_n: 5, bound_sets: 100, n5: 500, n6: 0 }
    }
}

impl CheckLimits {
    pub fn counts(&self) -> SmallCounts {
        SmallCounts {
            exhaustive: (1..=self.max_n.min(4)).collect(),
            bound_sets: self.bound_sets,
            n5: if self.max_n >= 5 { self.n5 } else { 0 },
            n6: if self.max_n >= 6 { self.n6 } else { 0 },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub instance: Instance,
    pub solver_sat: bool,
    pub oracle_sat: bool,
    pub invalid_witness: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckSummary {
    pub instances: usize,
    pub int_sat: usize,
    pub proper_sat: usize,
    pub mismatches: usize,
    pub invalid: usize,
    pub first: Option<Counterexample>,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.invalid == 0
    }

    pub fn to_value(&self) -> Value {
        let mut v = json!({
            "instances": self.instances,
            "int_sat": self.int_sat,
            "proper_sat": self.proper_sat,
            "mismatches": self.mismatches,
            "invalid_witnesses": self.invalid,
        });
        if let Some(c) = &self.first {
            v["counterexample"] = json!({
                "instance": instance_to_value(&c.instance),
                "solver_sat": c.solver_sat,
                "oracle_sat": c.oracle_sat,
                "invalid_witness": c.invalid_witness,
            });
        }
        v
    }
}

struct Verdict {
    sat: bool,
    mismatch: bool,
    invalid: bool,
}

fn judge(inst: &Instance, solver: SolverFn) -> Verdict {
    let out = solver(inst);
    let oracle = brute_force_solve(inst).expect("corpus stays within the oracle limit");
    let mut invalid = false;
    if let Ok(rep) = &out {
        invalid |= !check_representation(inst, rep).is_valid();
    }
    if let OracleAnswer::Sat(rep) = &oracle {
        invalid |= !check_representation(inst, rep).is_valid();
    }
    Verdict { sat: oracle.is_sat(), mismatch: out.is_ok() != oracle.is_sat(), invalid }
}

/// Runs both classes on the seeded corpus. The first counterexample is the first in corpus order.
pub fn oracle_check(limits: &CheckLimits, seed: u64, int_solver: SolverFn, proper_solver: SolverFn) -> CheckSummary {
    let corpus = enumerate_small_instances(seed, &limits.counts());
    let verdicts: Vec<[(Instance, Verdict); 2]> = corpus
        .par_iter()
        .map(|inst| {
            let a = inst.with_class(GraphClass::Int);
            let b = inst.with_class(GraphClass::ProperInt);
            let va = judge(&a, int_solver);
            let vb = judge(&b, proper_solver);
            [(a, va), (b, vb)]
        })
        .collect();
    let mut s = CheckSummary { instances: corpus.len(), ..CheckSummary::default() };
    for pair in verdicts {
        for (i, (inst, v)) in pair.into_iter().enumerate() {
            if v.sat {
                if i == 0 {
                    s.int_sat += 1;
                } else {
                    s.proper_sat += 1;
                }
            }
            s.mismatches += usize::from(v.mismatch);
            s.invalid += usize::from(v.invalid);
            if (v.mismatch || v.invalid) && s.first.is_none() {
                s.first = Some(Counterexample { instance: inst, solver_sat: v.sat != v.mismatch, oracle_sat: v.sat, invalid_witness: v.invalid });
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outcome::{Unsat, UnsatReason};

    fn always_unsat(_: &Instance) -> Outcome {
        Err(Unsat::new(UnsatReason::Infeasible, "injected"))
    }

    #[test]
    fn small_run_passes() {
        let limits = CheckLimits { max_n: 3, bound_sets: 10, n5: 0, n6: 0 };
        let s = oracle_check(&limits, 4, crate::interval::solve_bounded_interval, crate::proper::solve_bounded_proper);
        assert_eq!(s.instances, 10 * (1 + 2 + 8));
        assert!(s.passed(), "{}", s.to_value());
        assert!(s.first.is_none());
    }

    #[test]
    fn injected_bug_is_caught() {
        let limits = CheckLimits { max_n: 2, bound_sets: 5, n5: 0, n6: 0 };
        let s = oracle_check(&limits, 4, always_unsat, crate::proper::solve_bounded_proper);
        assert!(!s.passed());
        let c = s.first.expect("counterexample");
        assert!(c.oracle_sat && !c.solver_sat);
        assert_eq!(c.instance.class, GraphClass::Int);
    }
}
