use std::fmt;

use serde_json::Value;

use crate::model::json::{sat_value, unsat_value};
use crate::model::{GraphClass, Instance, Representation};

/// Machine-readable UNSAT reasons; the strings are part of the output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnsatReason {
    EmptyBound,
    NotChordal,
    NoConsecutiveOrder,
    EmptyCandidateSet,
    Infeasible,
    PlacementFailed,
    NotProperInterval,
    NoLinearExtension,
    EmptyContractedBound,
    BoundExceeded,
}

impl UnsatReason {
    pub fn as_str(self) -> &'static str {
        match self {
            UnsatReason::EmptyBound => "EmptyBound",
            UnsatReason::NotChordal => "NotChordal",
            UnsatReason::NoConsecutiveOrder => "NoConsecutiveOrder",
            UnsatReason::EmptyCandidateSet => "EmptyCandidateSet",
            UnsatReason::Infeasible => "Infeasible",
            UnsatReason::PlacementFailed => "PlacementFailed",
            UnsatReason::NotProperInterval => "NotProperInterval",
            UnsatReason::NoLinearExtension => "NoLinearExtension",
            UnsatReason::EmptyContractedBound => "EmptyContractedBound",
            UnsatReason::BoundExceeded => "BoundExceeded",
        }
    }
}

impl fmt::Display for UnsatReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unsat {
    pub reason: UnsatReason,
    pub detail: String,
}

impl Unsat {
    pub fn new(reason: UnsatReason, detail: impl Into<String>) -> Unsat {
        Unsat { reason, detail: detail.into() }
    }
}

impl fmt::Display for Unsat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.detail.is_empty() {
            write!(f, "{}", self.reason)
        } else {
            write!(f, "{}: {}", self.reason, self.detail)
        }
    }
}

pub type Outcome = Result<Representation, Unsat>;

/// Runs the solver for the instance's class.
pub fn solve(inst: &Instance) -> Outcome {
    match inst.class {
        GraphClass::Int => crate::interval::solve_bounded_interval(inst),
        GraphClass::ProperInt => crate::proper::solve_bounded_proper(inst),
    }
}

pub fn outcome_value(out: &Outcome) -> Value {
    match out {
        Ok(rep) => sat_value(rep),
        Err(u) => unsat_value(u.reason.as_str(), if u.detail.is_empty() { None } else { Some(&u.detail) }),
    }
}
