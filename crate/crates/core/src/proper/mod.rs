//! Bounded representations of proper interval graphs.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde_json::{json, Value};

use crate::chordal::{lex_bfs, lex_bfs_plus};
use crate::cliqueorder::minimal_extraction;
use crate::model::slots::{EndpointTable, Materializer, Pos};
use crate::model::{normalize_bounds, subset_before, BoundPair, Coord, ExtCoord, Graph, Instance, Interval, Representation};
use crate::outcome::{Outcome, Unsat, UnsatReason};

/// Components with their handles and a linear order extending ◄′.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentOrder {
    pub components: Vec<Vec<usize>>,
    /// `LH(C) = min r(𝔏_v)`
    pub lower: Vec<ExtCoord>,
    /// `UH(C) = max ℓ(ℜ_v)`
    pub upper: Vec<ExtCoord>,
    pub order: Vec<usize>,
}

impl ComponentOrder {
    /// `C ◄′ C'` by the handle test.
    pub fn forced_before(&self, a: usize, b: usize) -> bool {
        a != b && self.lower[a] <= self.upper[b]
    }
}

/// Connected components with their lower and upper handles.
pub fn component_handles(inst: &Instance) -> (Vec<Vec<usize>>, Vec<ExtCoord>, Vec<ExtCoord>) {
    let components = inst.graph.components();
    let lower: Vec<ExtCoord> =
        components.iter().map(|c| c.iter().map(|&v| inst.bounds[v].left.hi.clone()).min().expect("nonempty component")).collect();
    let upper: Vec<ExtCoord> =
        components.iter().map(|c| c.iter().map(|&v| inst.bounds[v].right.lo.clone()).max().expect("nonempty component")).collect();
    (components, lower, upper)
}

/// Orders components by their handles, or `NoLinearExtension`.
pub fn component_order(inst: &Instance) -> Result<ComponentOrder, Unsat> {
    let (components, lower, upper) = component_handles(inst);
    let mut values: Vec<&ExtCoord> = lower.iter().chain(upper.iter()).collect();
    values.sort();
    values.dedup();
    let key = |e: &ExtCoord| values.binary_search(&e).expect("value present") as i64;
    let handles: Vec<(i64, i64)> = lower.iter().zip(&upper).map(|(l, u)| (key(l), key(u))).collect();
    let order = minimal_extraction(&handles).ok_or_else(|| Unsat::new(UnsatReason::NoLinearExtension, ""))?;
    Ok(ComponentOrder { components, lower, upper, order })
}

/// Umbrella order of one component and its indistinguishable groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalOrder {
    pub order: Vec<usize>,
    pub groups: Vec<Vec<usize>>,
}

impl CanonicalOrder {
    pub fn reversed(&self) -> CanonicalOrder {
        let groups: Vec<Vec<usize>> = self.groups.iter().rev().cloned().collect();
        CanonicalOrder { order: groups.iter().flatten().copied().collect(), groups }
    }
}

/// Every closed neighbourhood (within `verts`) is a contiguous block of `order`.
pub fn has_umbrella_property(g: &Graph, order: &[usize]) -> bool {
    let mut pos = HashMap::with_capacity(order.len());
    for (i, &v) in order.iter().enumerate() {
        pos.insert(v, i);
    }
    order.iter().enumerate().all(|(i, &v)| {
        let mut lo = i;
        let mut hi = i;
        let mut cnt = 1;
        for w in g.neighbors(v) {
            if let Some(&p) = pos.get(w) {
                lo = lo.min(p);
                hi = hi.max(p);
                cnt += 1;
            }
        }
        hi - lo + 1 == cnt
    })
}

/// Groups of vertices with equal closed neighbourhoods, listed by smallest member.
fn twin_groups(g: &Graph, verts: &[usize]) -> Vec<Vec<usize>> {
    let mut by_sig: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in verts {
        let sig = g.closed_neighborhood(v);
        let id = *by_sig.entry(sig).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[id].push(v);
    }
    groups
}

/// Canonical order of a connected vertex set, or `NotProperInterval`.
pub fn canonical_order(g: &Graph, component: &[usize]) -> Result<CanonicalOrder, Unsat> {
    let groups = twin_groups(g, component);
    let reps: Vec<usize> = groups.iter().map(|gr| gr[0]).collect();
    let q = g.induced(&reps);
    let s1 = lex_bfs(&q);
    let s2 = lex_bfs_plus(&q, &s1);
    let s3 = lex_bfs_plus(&q, &s2);
    let fail = || Unsat::new(UnsatReason::NotProperInterval, format!("component with vertex {}", component[0]));
    if !has_umbrella_property(&q, &s3) {
        return Err(fail());
    }
    let groups: Vec<Vec<usize>> = s3.iter().map(|&i| groups[i].clone()).collect();
    let order: Vec<usize> = groups.iter().flatten().copied().collect();
    if !has_umbrella_property(g, &order) {
        return Err(fail());
    }
    Ok(CanonicalOrder { order, groups })
}

/// Arcs `u -> v` inside a group and its strongly connected components in topological order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPrecedence {
    pub arcs: Vec<(usize, usize)>,
    pub sccs: Vec<Vec<usize>>,
}

/// Arc `u -> v` iff `𝔏_u ⋖ 𝔏_v` or `ℜ_u ⋖ ℜ_v`.
pub fn group_precedence(group: &[usize], bounds: &[BoundPair]) -> GroupPrecedence {
    let k = group.len();
    let mut arcs = Vec::new();
    let mut dg: DiGraph<(), ()> = DiGraph::with_capacity(k, 0);
    let nodes: Vec<_> = (0..k).map(|_| dg.add_node(())).collect();
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let (u, v) = (group[i], group[j]);
            if subset_before(&bounds[u].left, &bounds[v].left) || subset_before(&bounds[u].right, &bounds[v].right) {
                arcs.push((u, v));
                dg.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    let comps = tarjan_scc(&dg);
    let mut comp_of = vec![0usize; k];
    for (c, members) in comps.iter().enumerate() {
        for m in members {
            comp_of[m.index()] = c;
        }
    }
    // Kahn on the condensation, smallest group position first.
    let nc = comps.len();
    let first: Vec<usize> = comps.iter().map(|m| m.iter().map(|x| x.index()).min().expect("nonempty scc")).collect();
    let mut indeg = vec![0usize; nc];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); nc];
    for e in dg.edge_indices() {
        let (a, b) = dg.edge_endpoints(e).expect("edge");
        let (ca, cb) = (comp_of[a.index()], comp_of[b.index()]);
        if ca != cb {
            succ[ca].push(cb);
            indeg[cb] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..nc).filter(|&c| indeg[c] == 0).map(|c| Reverse((first[c], c))).collect();
    let mut sccs = Vec::with_capacity(nc);
    while let Some(Reverse((_, c))) = heap.pop() {
        let mut members: Vec<usize> = comps[c].iter().map(|x| x.index()).collect();
        members.sort_unstable();
        sccs.push(members.into_iter().map(|i| group[i]).collect());
        for &d in &succ[c] {
            indeg[d] -= 1;
            if indeg[d] == 0 {
                heap.push(Reverse((first[d], d)));
            }
        }
    }
    GroupPrecedence { arcs, sccs }
}

/// Component with every SCC contracted to one vertex, listed in ⊲ order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedComponent {
    pub members: Vec<Vec<usize>>,
    pub bounds: Vec<BoundPair>,
    /// Index of the twin group each reduced vertex came from.
    pub groups: Vec<usize>,
    pub graph: Graph,
}

impl ReducedComponent {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The reduced component as a stand-alone proper-interval instance.
    pub fn to_instance(&self) -> Instance {
        Instance::new(self.graph.clone(), self.bounds.clone(), crate::model::GraphClass::ProperInt).expect("bound count matches")
    }
}

/// Contracts SCCs, intersects their bounds and lays them out in ⊲ order.
pub fn contract_and_order(
    g: &Graph,
    bounds: &[BoundPair],
    canon: &CanonicalOrder,
    precedences: &[GroupPrecedence],
) -> Result<ReducedComponent, Unsat> {
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut out_bounds = Vec::new();
    let mut groups = Vec::new();
    for (gi, prec) in precedences.iter().enumerate() {
        for scc in &prec.sccs {
            let mut bp = bounds[scc[0]].clone();
            for &u in &scc[1..] {
                bp.left = bp.left.intersect(&bounds[u].left);
                bp.right = bp.right.intersect(&bounds[u].right);
            }
            if bp.left.is_empty() || bp.right.is_empty() {
                return Err(Unsat::new(UnsatReason::EmptyContractedBound, format!("vertices {:?}", scc)));
            }
            members.push(scc.clone());
            out_bounds.push(bp);
            groups.push(gi);
        }
    }
    debug_assert_eq!(members.iter().map(|m| m.len()).sum::<usize>(), canon.order.len());
    let reps: Vec<usize> = members.iter().map(|m| m[0]).collect();
    Ok(ReducedComponent { members, bounds: out_bounds, groups, graph: g.induced(&reps) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    Left(usize),
    Right(usize),
}

/// Left endpoints in ⊲ order with each `r_i` just before `ℓ_j`, `j` the first non-neighbour after `i`.
pub fn common_endpoint_order(reduced: &ReducedComponent) -> Vec<Endpoint> {
    let k = reduced.len();
    let mut before: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
    for i in 0..k {
        let reach = reduced.graph.neighbors(i).iter().copied().filter(|&j| j > i).max().unwrap_or(i);
        before[reach + 1].push(i);
    }
    let mut seq = Vec::with_capacity(2 * k);
    for j in 0..=k {
        seq.extend(before[j].iter().map(|&i| Endpoint::Right(i)));
        if j < k {
            seq.push(Endpoint::Left(j));
        }
    }
    seq
}

/// How a placed endpoint got its position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Link {
    /// From its own bound.
    Floor,
    /// Strictly right of the previous endpoint (or of the start).
    Strict,
    /// Equal to the previous left endpoint.
    Weak,
}

struct Greedy {
    seq: Vec<Endpoint>,
    pos: Vec<Pos>,
    link: Vec<Link>,
    /// Index in `seq` of the first endpoint past its bound.
    failed: Option<usize>,
}

impl ReducedComponent {
    fn bound_of(&self, e: Endpoint) -> &crate::model::Bound {
        match e {
            Endpoint::Left(i) => &self.bounds[i].left,
            Endpoint::Right(i) => &self.bounds[i].right,
        }
    }
}

fn greedy(reduced: &ReducedComponent, table: &EndpointTable, start: Option<Pos>) -> Greedy {
    let seq = common_endpoint_order(reduced);
    let mut pos: Vec<Pos> = Vec::with_capacity(seq.len());
    let mut link = Vec::with_capacity(seq.len());
    let mut failed = None;
    for (t, &e) in seq.iter().enumerate() {
        let bound = reduced.bound_of(e);
        let floor = table.at_or_above(table.key(&bound.lo));
        let after = match (t.checked_sub(1).map(|q| (seq[q], pos[q])), e) {
            (Some((Endpoint::Left(_), p)), Endpoint::Right(_)) => Some((p, Link::Weak)),
            (Some((_, p)), _) => Some((p.fresh_after(), Link::Strict)),
            (None, _) => start.map(|s| (s.fresh_after(), Link::Strict)),
        };
        let (p, l) = match (after, floor) {
            (Some((a, l)), Some(f)) if a > f => (a, l),
            (_, Some(f)) => (f, Link::Floor),
            (Some((a, l)), None) => (a, l),
            (None, None) => (Pos::START, Link::Floor),
        };
        pos.push(p);
        link.push(l);
        if !p.le_key(table.key(&bound.hi)) {
            failed = Some(t);
            break;
        }
    }
    Greedy { seq, pos, link, failed }
}

fn exceeded(reduced: &ReducedComponent, e: Endpoint) -> Unsat {
    let (side, i) = match e {
        Endpoint::Left(i) => ("left", i),
        Endpoint::Right(i) => ("right", i),
    };
    Unsat::new(UnsatReason::BoundExceeded, format!("{} endpoint of vertices {:?}", side, reduced.members[i]))
}

fn collect_positions(k: usize, g: &Greedy) -> Vec<(Pos, Pos)> {
    let mut out = vec![(Pos::START, Pos::START); k];
    for (&e, &p) in g.seq.iter().zip(&g.pos) {
        match e {
            Endpoint::Left(i) => out[i].0 = p,
            Endpoint::Right(i) => out[i].1 = p,
        }
    }
    out
}

/// Leftmost placement in symbolic positions with strictly increasing endpoints
/// along ⊲; all of it strictly right of `start`.
pub(crate) fn leftmost_positions(
    reduced: &ReducedComponent,
    table: &EndpointTable,
    start: Option<Pos>,
) -> Result<Vec<(Pos, Pos)>, Unsat> {
    let g = greedy(reduced, table, start);
    match g.failed {
        Some(t) => Err(exceeded(reduced, g.seq[t])),
        None => Ok(collect_positions(reduced.len(), &g)),
    }
}

/// Strict links that must become ties for the failing endpoint to fit.
///
/// Every endpoint on the chain back to the one sitting on the bound's upper
/// end is pushed right by its predecessor only, so in any representation the
/// whole chain shares that one point.
fn forced_ties(reduced: &ReducedComponent, table: &EndpointTable, g: &Greedy, t: usize) -> Option<Vec<usize>> {
    let hi = table.key(&reduced.bound_of(g.seq[t]).hi);
    let mut ties = Vec::new();
    let mut s = t;
    loop {
        match g.link[s] {
            Link::Floor => return None,
            Link::Weak => s -= 1,
            Link::Strict => {
                if s == 0 {
                    return None;
                }
                let (a, b) = match (g.seq[s - 1], g.seq[s]) {
                    (Endpoint::Left(a), Endpoint::Left(b)) | (Endpoint::Right(a), Endpoint::Right(b)) => (a, b),
                    _ => return None,
                };
                if b != a + 1 || reduced.groups[a] != reduced.groups[b] {
                    return None;
                }
                ties.push(a);
                s -= 1;
                if g.pos[s].le_key(hi) {
                    return Some(ties);
                }
            }
        }
    }
}

/// Merges reduced vertex `a` with `a + 1` for every `a` in `ties`.
fn merge_consecutive(reduced: &ReducedComponent, ties: &[usize]) -> Option<ReducedComponent> {
    let k = reduced.len();
    let mut joined = vec![false; k];
    for &a in ties {
        joined[a + 1] = true;
    }
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut bounds: Vec<BoundPair> = Vec::new();
    let mut groups = Vec::new();
    let mut keep = Vec::new();
    for i in 0..k {
        if joined[i] {
            let bp = bounds.last_mut().expect("joined to a predecessor");
            bp.left = bp.left.intersect(&reduced.bounds[i].left);
            bp.right = bp.right.intersect(&reduced.bounds[i].right);
            if bp.left.is_empty() || bp.right.is_empty() {
                return None;
            }
            members.last_mut().expect("joined to a predecessor").extend(reduced.members[i].iter().copied());
        } else {
            members.push(reduced.members[i].clone());
            bounds.push(reduced.bounds[i].clone());
            groups.push(reduced.groups[i]);
            keep.push(i);
        }
    }
    Some(ReducedComponent { members, bounds, groups, graph: reduced.graph.induced(&keep) })
}

/// Leftmost strict placement, merging consecutive twins whenever the bounds
/// force them onto one interval. Returns the merged component and its placement.
pub(crate) fn place_with_ties(
    reduced: ReducedComponent,
    table: &EndpointTable,
    start: Option<Pos>,
) -> Result<(ReducedComponent, Vec<(Pos, Pos)>), Unsat> {
    let mut reduced = reduced;
    loop {
        let g = greedy(&reduced, table, start);
        let Some(t) = g.failed else {
            let pos = collect_positions(reduced.len(), &g);
            return Ok((reduced, pos));
        };
        let err = exceeded(&reduced, g.seq[t]);
        let ties = forced_ties(&reduced, table, &g, t).ok_or_else(|| err.clone())?;
        reduced = merge_consecutive(&reduced, &ties).ok_or(err)?;
    }
}

/// Leftmost representation of a reduced component in exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftmostRep {
    pub intervals: Vec<Interval>,
    pub rightmost: Option<Coord>,
}

/// Leftmost representation strictly right of `start` (`-inf` for none).
pub fn leftmost_representation(reduced: &ReducedComponent, start: &ExtCoord) -> Result<LeftmostRep, Unsat> {
    let extra: Vec<Coord> = start.finite().cloned().into_iter().collect();
    let table = EndpointTable::from_bounds(&reduced.bounds, &extra);
    let start_pos = start.finite().map(|c| EndpointTable::key_pos(table.key(&ExtCoord::Fin(c.clone()))));
    let pos = leftmost_positions(reduced, &table, start_pos)?;
    let mat = Materializer::new(&table, pos.iter().flat_map(|&(a, b)| [a, b]));
    let intervals: Vec<Interval> = pos.iter().map(|&(a, b)| Interval::new(mat.coord(a), mat.coord(b))).collect();
    let rightmost = intervals.iter().map(|iv| iv.hi.clone()).max();
    Ok(LeftmostRep { intervals, rightmost })
}

/// One oriented, reduced component with its symbolic leftmost placement.
#[derive(Clone, Debug)]
pub struct PlacedComponent {
    pub canonical: CanonicalOrder,
    pub precedences: Vec<GroupPrecedence>,
    pub reduced: ReducedComponent,
    pub positions: Vec<(Pos, Pos)>,
    pub reversed: bool,
}

impl PlacedComponent {
    pub fn rightmost(&self) -> Pos {
        self.positions.iter().map(|p| p.1).max().unwrap_or(Pos::START)
    }
}

fn place_oriented(inst: &Instance, table: &EndpointTable, canon: CanonicalOrder, start: Option<Pos>, reversed: bool) -> Result<PlacedComponent, Unsat> {
    let precedences: Vec<GroupPrecedence> = canon.groups.iter().map(|gr| group_precedence(gr, &inst.bounds)).collect();
    let reduced = contract_and_order(&inst.graph, &inst.bounds, &canon, &precedences)?;
    let (reduced, positions) = place_with_ties(reduced, table, start)?;
    Ok(PlacedComponent { canonical: canon, precedences, reduced, positions, reversed })
}

/// Full pipeline result, kept for tracing and inspection.
#[derive(Clone, Debug)]
pub struct ProperSolution {
    pub order: ComponentOrder,
    pub placed: Vec<PlacedComponent>,
    pub representation: Representation,
}

impl ProperSolution {
    pub fn trace_value(&self) -> Value {
        let comps: Vec<Value> = self
            .placed
            .iter()
            .map(|p| {
                json!({
                    "groups": p.canonical.groups,
                    "sccs": p.precedences.iter().map(|g| g.sccs.clone()).collect::<Vec<_>>(),
                    "order": p.reduced.members,
                    "reversed": p.reversed,
                })
            })
            .collect();
        let order: Vec<Vec<usize>> = self.order.order.iter().map(|&c| self.order.components[c].clone()).collect();
        json!({ "component_order": order, "components": comps })
    }
}

pub fn solve_bounded_proper(inst: &Instance) -> Outcome {
    solve_bounded_proper_detailed(inst).map(|s| s.representation)
}

/// Pipeline with all intermediate structures.
pub fn solve_bounded_proper_detailed(inst: &Instance) -> Result<ProperSolution, Unsat> {
    let norm = normalize_bounds(inst).map_err(|e| Unsat::new(UnsatReason::EmptyBound, e.to_string()))?;
    let inst = &norm;
    let table = EndpointTable::from_instance(inst);
    let order = component_order(inst)?;
    let mut placed = Vec::with_capacity(order.components.len());
    let mut start: Option<Pos> = None;
    for &c in &order.order {
        let canon = canonical_order(&inst.graph, &order.components[c])?;
        let rev = canon.reversed();
        let fwd = place_oriented(inst, &table, canon, start, false);
        let bwd = place_oriented(inst, &table, rev, start, true);
        let chosen = match (fwd, bwd) {
            (Ok(f), Ok(b)) => {
                if b.rightmost() < f.rightmost() {
                    b
                } else {
                    f
                }
            }
            (Ok(f), Err(_)) => f,
            (Err(_), Ok(b)) => b,
            (Err(e), Err(_)) => return Err(e),
        };
        start = Some(chosen.rightmost());
        placed.push(chosen);
    }
    let mat = Materializer::new(&table, placed.iter().flat_map(|p| p.positions.iter().flat_map(|&(a, b)| [a, b])));
    let mut intervals: Vec<Option<Interval>> = vec![None; inst.n()];
    for p in &placed {
        for (i, m) in p.reduced.members.iter().enumerate() {
            let (a, b) = p.positions[i];
            let iv = Interval::new(mat.coord(a), mat.coord(b));
            for &v in m {
                intervals[v] = Some(iv.clone());
            }
        }
    }
    let representation = Representation::new(intervals.into_iter().map(|iv| iv.expect("every vertex placed")).collect());
    debug_assert!(crate::model::check_representation(inst, &representation).is_valid(), "proper solver produced an invalid witness");
    Ok(ProperSolution { order, placed, representation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{check_representation, Bound, GraphClass};

    fn bp(l: (i64, i64), r: (i64, i64)) -> BoundPair {
        BoundPair::new(Bound::ints(l.0, l.1), Bound::ints(r.0, r.1))
    }

    fn reduced_plain(g: Graph, bounds: Vec<BoundPair>) -> ReducedComponent {
        ReducedComponent { members: (0..g.n()).map(|v| vec![v]).collect(), bounds, groups: (0..g.n()).collect(), graph: g }
    }

    #[test]
    fn component_order_examples() {
        let inst = Instance::new(Graph::empty(2), vec![bp((0, 1), (2, 3)), bp((10, 11), (12, 13))], GraphClass::ProperInt).unwrap();
        let co = component_order(&inst).unwrap();
        assert_eq!(co.lower, vec![ExtCoord::int(1), ExtCoord::int(11)]);
        assert_eq!(co.upper, vec![ExtCoord::int(2), ExtCoord::int(12)]);
        assert!(co.forced_before(0, 1) && !co.forced_before(1, 0));
        assert_eq!(co.order, vec![0, 1]);

        let inst = Instance::unbounded(Graph::empty(2), GraphClass::ProperInt);
        let co = component_order(&inst).unwrap();
        assert!(!co.forced_before(0, 1) && !co.forced_before(1, 0));
        assert_eq!(component_order(&inst).unwrap().order, co.order);

        // Each must lie left of the other.
        let inst = Instance::new(Graph::empty(2), vec![bp((0, 1), (5, 6)), bp((0, 1), (5, 6))], GraphClass::ProperInt).unwrap();
        assert_eq!(component_order(&inst).unwrap_err().reason, UnsatReason::NoLinearExtension);
    }

    #[test]
    fn canonical_examples() {
        let p3 = Graph::path(3);
        let co = canonical_order(&p3, &[0, 1, 2]).unwrap();
        assert!(co.order == vec![0, 1, 2] || co.order == vec![2, 1, 0]);
        assert_eq!(co.groups.len(), 3);
        let k3 = Graph::complete(3);
        assert_eq!(canonical_order(&k3, &[0, 1, 2]).unwrap().groups, vec![vec![0, 1, 2]]);
        assert_eq!(canonical_order(&Graph::claw(), &[0, 1, 2, 3]).unwrap_err().reason, UnsatReason::NotProperInterval);
    }

    #[test]
    fn claw_has_no_umbrella_order() {
        let g = Graph::claw();
        let perms = crate::cliqueorder::PQTree::from_sets(4, &[]).unwrap().all_frontiers();
        assert_eq!(perms.len(), 24);
        assert!(perms.iter().all(|o| !has_umbrella_property(&g, o)));
    }

    #[test]
    fn precedence_examples() {
        let bounds = vec![bp((0, 1), (0, 10)), bp((2, 3), (1, 11))];
        let gp = group_precedence(&[0, 1], &bounds);
        assert_eq!(gp.arcs, vec![(0, 1)]);
        assert_eq!(gp.sccs, vec![vec![0], vec![1]]);

        let bounds = vec![bp((0, 2), (5, 9)), bp((1, 3), (0, 4))];
        let gp = group_precedence(&[0, 1], &bounds);
        assert_eq!(gp.arcs, vec![(1, 0)]);
        assert_eq!(gp.sccs, vec![vec![1], vec![0]]);

        let bounds = vec![bp((0, 1), (5, 6)), bp((1, 2), (4, 5))];
        let gp = group_precedence(&[0, 1], &bounds);
        assert_eq!(gp.arcs, vec![(0, 1), (1, 0)]);
        assert_eq!(gp.sccs, vec![vec![0, 1]]);

        let bounds = vec![BoundPair::unbounded(); 3];
        let gp = group_precedence(&[2, 0, 1], &bounds);
        assert!(gp.arcs.is_empty());
        assert_eq!(gp.sccs, vec![vec![2], vec![0], vec![1]]);
    }

    #[test]
    fn contraction_examples() {
        let g = Graph::complete(2);
        let canon = CanonicalOrder { order: vec![0, 1], groups: vec![vec![0, 1]] };
        let bounds = vec![bp((0, 1), (5, 6)), bp((1, 2), (4, 5))];
        let gp = group_precedence(&[0, 1], &bounds);
        let red = contract_and_order(&g, &bounds, &canon, &[gp]).unwrap();
        assert_eq!(red.members, vec![vec![0, 1]]);
        assert_eq!(red.bounds[0].left, Bound::ints(1, 1));
        assert_eq!(red.bounds[0].right, Bound::ints(5, 5));

        // 𝔏 disjoint, ℜ closes the cycle.
        let bounds = vec![bp((0, 1), (5, 9)), bp((2, 3), (0, 4))];
        let gp = group_precedence(&[0, 1], &bounds);
        assert_eq!(gp.sccs.len(), 1);
        let err = contract_and_order(&g, &bounds, &canon, &[gp]).unwrap_err();
        assert_eq!(err.reason, UnsatReason::EmptyContractedBound);

        let p3 = Graph::path(3);
        let canon = canonical_order(&p3, &[0, 1, 2]).unwrap();
        let bounds = vec![BoundPair::unbounded(); 3];
        let gps: Vec<GroupPrecedence> = canon.groups.iter().map(|gr| group_precedence(gr, &bounds)).collect();
        let red = contract_and_order(&p3, &bounds, &canon, &gps).unwrap();
        assert_eq!(red.len(), 3);
        assert_eq!(red.graph.m(), 2);
    }

    #[test]
    fn endpoint_order_examples() {
        use Endpoint::*;
        let red = reduced_plain(Graph::path(3), vec![BoundPair::unbounded(); 3]);
        assert_eq!(common_endpoint_order(&red), vec![Left(0), Left(1), Right(0), Left(2), Right(1), Right(2)]);
        let red = reduced_plain(Graph::complete(2), vec![BoundPair::unbounded(); 2]);
        assert_eq!(common_endpoint_order(&red), vec![Left(0), Left(1), Right(0), Right(1)]);
        let red = reduced_plain(Graph::empty(2), vec![BoundPair::unbounded(); 2]);
        assert_eq!(common_endpoint_order(&red), vec![Left(0), Right(0), Left(1), Right(1)]);
    }

    #[test]
    fn leftmost_examples() {
        let red = reduced_plain(Graph::empty(1), vec![bp((0, 2), (1, 3))]);
        let rep = leftmost_representation(&red, &ExtCoord::NegInf).unwrap();
        assert_eq!(rep.intervals, vec![Interval::ints(0, 1)]);
        let err = leftmost_representation(&red, &ExtCoord::int(5)).unwrap_err();
        assert_eq!(err.reason, UnsatReason::BoundExceeded);

        let red = reduced_plain(Graph::complete(2), vec![BoundPair::unbounded(); 2]);
        let rep = leftmost_representation(&red, &ExtCoord::int(0)).unwrap();
        assert_eq!(rep.intervals, vec![Interval::ints(1, 2), Interval::ints(2, 3)]);
        assert_eq!(rep.rightmost, Some(Coord::int(3)));
    }

    #[test]
    fn pinned_twin_forces_identical_intervals() {
        let pinned = bp((4, 4), (4, 4));
        let inst = Instance::new(Graph::complete(2), vec![pinned, BoundPair::unbounded()], GraphClass::ProperInt).unwrap();
        let sol = solve_bounded_proper_detailed(&inst).unwrap();
        assert_eq!(sol.representation.intervals, vec![Interval::ints(4, 4); 2]);
        assert_eq!(sol.placed[0].reduced.members, vec![vec![0, 1]]);
        // The strict placement alone cannot do it.
        let red = reduced_plain(Graph::complete(2), inst.bounds.clone());
        assert!(leftmost_representation(&red, &ExtCoord::NegInf).is_err());
    }

    #[test]
    fn ties_only_within_a_group() {
        // P3 with the middle vertex pinned: ends cannot share its point.
        let b = vec![BoundPair::unbounded(), bp((4, 4), (4, 4)), BoundPair::unbounded()];
        let inst = Instance::new(Graph::path(3), b, GraphClass::ProperInt).unwrap();
        assert_eq!(solve_bounded_proper(&inst).unwrap_err().reason, UnsatReason::BoundExceeded);
    }

    #[test]
    fn solver_examples() {
        let claw = Instance::unbounded(Graph::claw(), GraphClass::ProperInt);
        assert_eq!(solve_bounded_proper(&claw).unwrap_err().reason, UnsatReason::NotProperInterval);
        let pinned_k3 = Instance::new(Graph::complete(3), vec![bp((0, 0), (3, 3)), bp((0, 0), (3, 3)), bp((1, 1), (2, 2))], GraphClass::ProperInt).unwrap();
        assert!(solve_bounded_proper(&pinned_k3).is_err());
        for g in [Graph::path(5), Graph::complete(4), Graph::empty(3)] {
            let inst = Instance::unbounded(g, GraphClass::ProperInt);
            let rep = solve_bounded_proper(&inst).unwrap();
            assert!(check_representation(&inst, &rep).is_valid());
        }
    }
}
