//! Bounded representations of interval graphs.

mod candidates;

pub use candidates::{candidate_sets, CandidateSet, Piece};

use serde_json::{json, Value};

use crate::chordal::{maximal_cliques, CliqueSet};
use crate::cliqueorder::{build_pqtree, CliquePartialOrder, FrontierProblem, Pin, SetItem};
use crate::model::slots::{EndpointTable, Materializer, Pos};
use crate::model::{normalize_bounds, Coord, ExtCoord, Instance, Interval, Representation};
use crate::outcome::{Outcome, Unsat, UnsatReason};
use candidates::SlotCandidates;

/// Clique order with one clique point per clique (indexed by clique).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePlan {
    pub order: Vec<usize>,
    pub points: Vec<Coord>,
}

/// `J_C` per clique, or `EmptyCandidateSet` naming the first empty one.
pub fn compute_candidate_sets(inst: &Instance, cliques: &CliqueSet) -> Result<Vec<CandidateSet>, Unsat> {
    let sets = candidate_sets(inst, cliques);
    if let Some(c) = sets.iter().position(|s| s.is_empty()) {
        return Err(empty_candidate(c, cliques));
    }
    Ok(sets)
}

fn empty_candidate(c: usize, cliques: &CliqueSet) -> Unsat {
    Unsat::new(UnsatReason::EmptyCandidateSet, format!("clique {} {:?}", c, cliques.cliques[c]))
}

/// `C ⋖ C'` iff `r(J_C) <= ℓ(J_C')`.
pub fn clique_partial_order(sets: &[CandidateSet]) -> CliquePartialOrder {
    let ext: Vec<(ExtCoord, ExtCoord)> = sets
        .iter()
        .map(|s| (s.inf().cloned().unwrap_or(ExtCoord::PosInf), s.sup().cloned().unwrap_or(ExtCoord::NegInf)))
        .collect();
    CliquePartialOrder::from_values(&ext)
}

fn fresh_between(f: &Coord, g: &ExtCoord) -> Coord {
    match g {
        ExtCoord::Fin(g) => {
            let half = f.lerp(g, 1, 2);
            let step = f.add_int(1);
            if step < half {
                step
            } else {
                half
            }
        }
        _ => f.add_int(1),
    }
}

/// Least point of `J` strictly above `prev` (or least point of `J`), by the fresh-position rule.
fn least_above(set: &CandidateSet, prev: Option<&Coord>) -> Option<Coord> {
    for p in &set.pieces {
        match prev {
            Some(q) if p.hi <= *q => continue,
            Some(q) if p.lo <= *q => return Some(fresh_between(q, &p.hi)),
            _ => {}
        }
        return Some(match (&p.lo, &p.hi) {
            (ExtCoord::Fin(lo), _) if p.lo_closed => lo.clone(),
            (ExtCoord::Fin(lo), hi) => fresh_between(lo, hi),
            (_, ExtCoord::Fin(hi)) => hi.add_int(-1),
            _ => Coord::zero(),
        });
    }
    None
}

/// Greedy left-to-right placement inside the candidate sets.
pub fn place_clique_points(sets: &[CandidateSet], order: &[usize]) -> Result<CliquePlan, Unsat> {
    let mut points = vec![Coord::zero(); sets.len()];
    let mut prev: Option<Coord> = None;
    for &c in order {
        match least_above(&sets[c], prev.as_ref()) {
            Some(p) => {
                points[c] = p.clone();
                prev = Some(p);
            }
            None => return Err(Unsat::new(UnsatReason::PlacementFailed, format!("clique {}", c))),
        }
    }
    Ok(CliquePlan { order: order.to_vec(), points })
}

/// `ℓ(I_v) = min(r(𝔏_v), cp)`, `r(I_v) = max(ℓ(ℜ_v), cp)` over the cliques of v;
/// infinite bound terms are dropped.
pub fn intervals_from_clique_points(inst: &Instance, cliques: &CliqueSet, plan: &CliquePlan) -> Representation {
    let mut out = Vec::with_capacity(inst.n());
    for v in 0..inst.n() {
        let cps = cliques.incidence[v].iter().map(|&c| &plan.points[c]);
        let mut lo = cps.clone().min().expect("vertex lies in a clique").clone();
        let mut hi = cps.max().expect("vertex lies in a clique").clone();
        let bp = &inst.bounds[v];
        if let ExtCoord::Fin(x) = &bp.left.hi {
            if x < &lo {
                lo = x.clone();
            }
        }
        if let ExtCoord::Fin(x) = &bp.right.lo {
            if x > &hi {
                hi = x.clone();
            }
        }
        out.push(Interval::new(lo, hi));
    }
    Representation::new(out)
}

/// Intermediate results, kept for tracing.
#[derive(Clone, Debug, Default)]
pub struct IntervalTrace {
    pub cliques: Vec<Vec<usize>>,
    pub order: Vec<usize>,
    pub points: Vec<Coord>,
}

impl IntervalTrace {
    pub fn to_value(&self) -> Value {
        json!({
            "cliques": self.cliques,
            "order": self.order,
            "clique_points": self.points.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

pub fn solve_bounded_interval(inst: &Instance) -> Outcome {
    let table = EndpointTable::from_instance(inst);
    solve_bounded_interval_presorted(inst, &table)
}

/// Same as [`solve_bounded_interval`] with the sorted endpoints supplied.
pub fn solve_bounded_interval_presorted(inst: &Instance, table: &EndpointTable) -> Outcome {
    solve_traced(inst, table, &mut IntervalTrace::default())
}

pub fn solve_bounded_interval_traced(inst: &Instance) -> (Outcome, IntervalTrace) {
    let table = EndpointTable::from_instance(inst);
    let mut trace = IntervalTrace::default();
    let out = solve_traced(inst, &table, &mut trace);
    (out, trace)
}

fn solve_traced(inst: &Instance, table: &EndpointTable, trace: &mut IntervalTrace) -> Outcome {
    let norm = normalize_bounds(inst).map_err(|e| Unsat::new(UnsatReason::EmptyBound, e.to_string()))?;
    let inst = &norm;
    let cliques = maximal_cliques(&inst.graph).map_err(|_| Unsat::new(UnsatReason::NotChordal, ""))?;
    trace.cliques = cliques.cliques.clone();
    let tree = build_pqtree(&cliques).map_err(|_| Unsat::new(UnsatReason::NoConsecutiveOrder, ""))?;

    let sc = SlotCandidates::new(inst, table);
    let mut problem = FrontierProblem::new(&tree);
    for (c, clique) in cliques.cliques.iter().enumerate() {
        let (a, b) = sc.extent(clique).ok_or_else(|| empty_candidate(c, &cliques))?;
        problem.leaf_lower[c] = table.sup_key(b);
        problem.leaf_upper[c] = table.inf_key(a);
    }
    let n = inst.n();
    let lkey = |v: usize| (table.key(&inst.bounds[v].left.lo), table.key(&inst.bounds[v].left.hi));
    let rkey = |v: usize| (table.key(&inst.bounds[v].right.lo), table.key(&inst.bounds[v].right.hi));
    for v in 0..n {
        problem.sets.push(SetItem { leaves: cliques.incidence[v].clone(), lower: lkey(v).1, upper: rkey(v).0 });
    }
    for (u, v) in inst.graph.edges() {
        for (a, b) in [(u, v), (v, u)] {
            if lkey(a).1 <= lkey(b).0 {
                problem.pins.push(Pin::FirstNoLater(a, b));
            }
            if rkey(a).1 <= rkey(b).0 {
                problem.pins.push(Pin::LastNoLater(a, b));
            }
        }
    }
    let order = problem.solve(&tree).ok_or_else(|| Unsat::new(UnsatReason::Infeasible, ""))?;
    trace.order = order.clone();

    let pos = place_in_windows(inst, table, &cliques, &order)?;
    let mat = Materializer::new(table, pos.iter().copied());
    let points: Vec<Coord> = pos.iter().map(|&p| mat.coord(p)).collect();
    trace.points = points.clone();
    let plan = CliquePlan { order, points };
    let rep = intervals_from_clique_points(inst, &cliques, &plan);
    debug_assert!(crate::model::check_representation(inst, &rep).is_valid(), "interval solver produced an invalid witness");
    Ok(rep)
}

/// Leftmost clique points along `order`, each inside the window allowed by
/// the vertices alive, finished and not yet started at that clique.
fn place_in_windows(inst: &Instance, table: &EndpointTable, cliques: &CliqueSet, order: &[usize]) -> Result<Vec<Pos>, Unsat> {
    let n = inst.n();
    let q = order.len();
    let mut at = vec![0usize; q];
    for (i, &c) in order.iter().enumerate() {
        at[c] = i;
    }
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0usize; n];
    for v in 0..n {
        for &c in &cliques.incidence[v] {
            first[v] = first[v].min(at[c]);
            last[v] = last[v].max(at[c]);
        }
    }
    let key = |e: &ExtCoord| table.key(e);
    // Smallest r(𝔏_w) over vertices starting at or after position i.
    let mut start_min = vec![i64::MAX; q + 1];
    let mut end_at: Vec<Vec<usize>> = vec![Vec::new(); q];
    for v in 0..n {
        start_min[first[v]] = start_min[first[v]].min(key(&inst.bounds[v].left.hi));
        end_at[last[v]].push(v);
    }
    for i in (0..q).rev() {
        start_min[i] = start_min[i].min(start_min[i + 1]);
    }

    let mut out = vec![Pos::START; q];
    let mut prev: Option<Pos> = None;
    let mut ended_max = i64::MIN;
    for (i, &c) in order.iter().enumerate() {
        let mut lo_key = -1i64;
        let mut hi_key = i64::MAX;
        for &u in &cliques.cliques[c] {
            lo_key = lo_key.max(key(&inst.bounds[u].left.lo));
            hi_key = hi_key.min(key(&inst.bounds[u].right.hi));
        }
        let mut p = table.at_or_above(lo_key).unwrap_or(Pos::START);
        if ended_max > i64::MIN {
            if let Some(a) = table.above(ended_max) {
                p = p.max(a);
            }
        }
        if let Some(pr) = prev {
            p = p.max(pr.fresh_after());
        }
        let below_next = start_min[i + 1];
        if !p.le_key(hi_key) || !p.lt_key(below_next) {
            return Err(Unsat::new(UnsatReason::PlacementFailed, format!("clique {} {:?}", c, cliques.cliques[c])));
        }
        out[c] = p;
        prev = Some(p);
        for &v in &end_at[i] {
            ended_max = ended_max.max(key(&inst.bounds[v].right.lo));
        }
        // Every finished vertex must end before every later one may start.
        if ended_max >= start_min[i + 1] {
            return Err(Unsat::new(UnsatReason::PlacementFailed, format!("after clique {}", c)));
        }
    }
    Ok(out)
}
