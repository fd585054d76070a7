use std::fmt;
use std::str::FromStr;

use crate::model::{Bound, BoundPair, Coord, Graph, ModelError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Int,
    ProperInt,
}

impl GraphClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphClass::Int => "int",
            GraphClass::ProperInt => "proper-int",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphClass {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<GraphClass, ModelError> {
        match s {
            "int" | "INT" => Ok(GraphClass::Int),
            "proper-int" | "PROPER-INT" | "proper_int" | "PROPER_INT" => Ok(GraphClass::ProperInt),
            other => Err(ModelError::UnknownClass(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub bounds: Vec<BoundPair>,
    pub class: GraphClass,
}

impl Instance {
    pub fn new(graph: Graph, bounds: Vec<BoundPair>, class: GraphClass) -> Result<Instance, ModelError> {
        if bounds.len() != graph.n() {
            return Err(ModelError::BoundCount(bounds.len(), graph.n()));
        }
        Ok(Instance { graph, bounds, class })
    }

    /// All bounds `(-inf, +inf)`: plain recognition.
    pub fn unbounded(graph: Graph, class: GraphClass) -> Instance {
        let n = graph.n();
        Instance { graph, bounds: vec![BoundPair::unbounded(); n], class }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn with_class(&self, class: GraphClass) -> Instance {
        Instance { class, ..self.clone() }
    }
}

/// Tightens `ℓ(ℜ_v) := max(ℓ(ℜ_v), ℓ(𝔏_v))` and `r(𝔏_v) := min(r(𝔏_v), r(ℜ_v))`.
pub fn normalize_bounds(inst: &Instance) -> Result<Instance, ModelError> {
    let mut bounds = Vec::with_capacity(inst.n());
    for (v, bp) in inst.bounds.iter().enumerate() {
        let left = Bound { lo: bp.left.lo.clone(), hi: bp.left.hi.clone().min(bp.right.hi.clone()) };
        let right = Bound { lo: bp.right.lo.clone().max(bp.left.lo.clone()), hi: bp.right.hi.clone() };
        if left.is_empty() || right.is_empty() {
            return Err(ModelError::EmptyBound(v));
        }
        bounds.push(BoundPair { left, right });
    }
    Ok(Instance { graph: inst.graph.clone(), bounds, class: inst.class })
}

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Coord,
    pub hi: Coord,
}

impl Interval {
    pub fn new(lo: Coord, hi: Coord) -> Interval {
        assert!(lo <= hi, "interval with lo > hi");
        Interval { lo, hi }
    }

    pub fn ints(lo: i64, hi: i64) -> Interval {
        Interval::new(Coord::int(lo), Coord::int(hi))
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// `self ⊊ other`
    pub fn properly_inside(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi && self != other
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    pub intervals: Vec<Interval>,
}

impl Representation {
    pub fn new(intervals: Vec<Interval>) -> Representation {
        Representation { intervals }
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }
}
