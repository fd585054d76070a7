use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::model::{GraphClass, Instance, Representation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    SizeMismatch { expected: usize, got: usize },
    Inverted { v: usize },
    LeftOutOfBound { v: usize },
    RightOutOfBound { v: usize },
    /// Edge `uv` whose intervals are disjoint.
    MissingIntersection { u: usize, v: usize },
    /// Non-edge `uv` whose intervals meet.
    SpuriousIntersection { u: usize, v: usize },
    ProperContainment { inner: usize, outer: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SizeMismatch { expected, got } => write!(f, "expected {} intervals, got {}", expected, got),
            Violation::Inverted { v } => write!(f, "interval of {} has lo > hi", v),
            Violation::LeftOutOfBound { v } => write!(f, "left endpoint of {} outside its left bound", v),
            Violation::RightOutOfBound { v } => write!(f, "right endpoint of {} outside its right bound", v),
            Violation::MissingIntersection { u, v } => write!(f, "edge {}-{} but intervals are disjoint", u, v),
            Violation::SpuriousIntersection { u, v } => write!(f, "non-edge {}-{} but intervals intersect", u, v),
            Violation::ProperContainment { inner, outer } => {
                write!(f, "interval of {} properly contained in interval of {}", inner, outer)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Lists every way `rep` fails to be a bounded representation of `inst`.
pub fn check_representation(inst: &Instance, rep: &Representation) -> CheckReport {
    let n = inst.n();
    let mut out = Vec::new();
    if rep.n() != n {
        out.push(Violation::SizeMismatch { expected: n, got: rep.n() });
        return CheckReport { violations: out };
    }
    let mut inverted = false;
    for (v, (iv, bp)) in rep.intervals.iter().zip(&inst.bounds).enumerate() {
        if iv.lo > iv.hi {
            out.push(Violation::Inverted { v });
            inverted = true;
        }
        if !bp.left.contains(&iv.lo) {
            out.push(Violation::LeftOutOfBound { v });
        }
        if !bp.right.contains(&iv.hi) {
            out.push(Violation::RightOutOfBound { v });
        }
    }
    if inverted {
        out.sort();
        return CheckReport { violations: out };
    }
    let g = &inst.graph;
    for (u, v) in g.edges() {
        if !rep.intervals[u].intersects(&rep.intervals[v]) {
            out.push(Violation::MissingIntersection { u, v });
        }
    }
    // Sweep by left endpoint; every pair met while active intersects.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| rep.intervals[a].lo.cmp(&rep.intervals[b].lo).then(a.cmp(&b)));
    let mut active: BTreeSet<(&crate::model::Coord, usize)> = BTreeSet::new();
    for &v in &order {
        let iv = &rep.intervals[v];
        while let Some(&(hi, w)) = active.first() {
            if hi < &iv.lo {
                active.remove(&(hi, w));
            } else {
                break;
            }
        }
        for &(_, w) in &active {
            if !g.has_edge(v, w) {
                out.push(Violation::SpuriousIntersection { u: v.min(w), v: v.max(w) });
            }
        }
        active.insert((&iv.hi, v));
    }
    if inst.class == GraphClass::ProperInt {
        out.extend(proper_violations(rep, &order));
    }
    out.sort();
    CheckReport { violations: out }
}

fn proper_violations(rep: &Representation, by_left: &[usize]) -> Vec<Violation> {
    let ivs = &rep.intervals;
    // A representation is proper iff sorting by (lo, hi) leaves hi non-decreasing
    // and equal lo forces equal hi. Fall back to the quadratic listing otherwise.
    let mut sorted = by_left.to_vec();
    sorted.sort_by(|&a, &b| ivs[a].lo.cmp(&ivs[b].lo).then(ivs[a].hi.cmp(&ivs[b].hi)));
    let clean = sorted.windows(2).all(|w| {
        let (a, b) = (&ivs[w[0]], &ivs[w[1]]);
        a.hi <= b.hi && (a.lo != b.lo || a.hi == b.hi)
    });
    if clean {
        return Vec::new();
    }
    let mut out = Vec::new();
    for a in 0..ivs.len() {
        for b in 0..ivs.len() {
            if a != b && ivs[a].properly_inside(&ivs[b]) {
                out.push(Violation::ProperContainment { inner: a, outer: b });
            }
        }
    }
    out
}
