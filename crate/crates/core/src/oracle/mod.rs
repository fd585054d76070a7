//! Exhaustive search over endpoint pre-orders, materialized on a finite grid.

mod corpus;

pub use corpus::{enumerate_small_instances, random_small_bounds, SmallCounts};

use std::ops::ControlFlow;

use thiserror::Error;

use crate::model::slots::EndpointTable;
use crate::model::{Coord, GraphClass, Instance, Interval, Representation};

pub const DEFAULT_LIMIT: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance has {n} vertices, oracle limit is {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Candidate coordinates: every finite bound endpoint plus `2n` fresh points
/// in each gap, below the minimum and above the maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    table: EndpointTable,
    fresh: usize,
    points: Vec<Coord>,
}

impl Grid {
    pub fn for_instance(inst: &Instance) -> Grid {
        Grid::new(EndpointTable::from_instance(inst), 2 * inst.n())
    }

    fn new(table: EndpointTable, fresh: usize) -> Grid {
        let top = table.top_slot();
        let mut points = Vec::new();
        for slot in 0..=top {
            if slot % 2 == 1 {
                points.push(table.values()[slot as usize / 2].clone());
            } else {
                points.extend((0..fresh).map(|j| Grid::gap_point(&table, fresh, slot, j)));
            }
        }
        Grid { table, fresh, points }
    }

    fn gap_point(table: &EndpointTable, fresh: usize, slot: u32, j: usize) -> Coord {
        let v = table.values();
        let i = slot as usize / 2;
        let j = j as i64;
        let f = fresh as i64;
        match (i.checked_sub(1).and_then(|p| v.get(p)), v.get(i)) {
            (None, None) => Coord::int(j),
            (None, Some(b)) => b.add_int(j - f),
            (Some(a), None) => a.add_int(j + 1),
            (Some(a), Some(b)) => a.lerp(b, j as u64 + 1, f as u64 + 1),
        }
    }

    pub fn points(&self) -> &[Coord] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn table(&self) -> &EndpointTable {
        &self.table
    }

    fn coord(&self, slot: u32, rank: usize) -> Coord {
        if slot % 2 == 1 {
            self.table.values()[slot as usize / 2].clone()
        } else {
            Grid::gap_point(&self.table, self.fresh, slot, rank)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleAnswer {
    Sat(Representation),
    Unsat,
}

impl OracleAnswer {
    pub fn is_sat(&self) -> bool {
        matches!(self, OracleAnswer::Sat(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Extra restrictions on the search.
#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Vertices whose left and right endpoints must both be strictly increasing in this order.
    pub strict_order: Option<Vec<usize>>,
    /// `(v, side, slot)`: that endpoint must lie in a slot strictly below `slot`.
    pub cap: Option<(usize, Side, u32)>,
}

pub fn brute_force_solve(inst: &Instance) -> Result<OracleAnswer, OracleError> {
    brute_force_solve_with_limit(inst, DEFAULT_LIMIT)
}

pub fn brute_force_solve_with_limit(inst: &Instance, limit: usize) -> Result<OracleAnswer, OracleError> {
    let mut found = None;
    search(inst, limit, &SearchOptions::default(), |rep| {
        found = Some(rep.clone());
        ControlFlow::Break(())
    })?;
    Ok(found.map_or(OracleAnswer::Unsat, OracleAnswer::Sat))
}

/// Valid representations (one per endpoint pre-order), in search order, at most `max`.
pub fn enumerate_representations(inst: &Instance, opts: &SearchOptions, max: usize) -> Result<Vec<Representation>, OracleError> {
    let mut out = Vec::new();
    if max == 0 {
        return Ok(out);
    }
    search(inst, DEFAULT_LIMIT, opts, |rep| {
        out.push(rep.clone());
        if out.len() >= max {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(out)
}

pub fn exists(inst: &Instance, opts: &SearchOptions) -> Result<bool, OracleError> {
    let mut hit = false;
    search(inst, DEFAULT_LIMIT, opts, |_| {
        hit = true;
        ControlFlow::Break(())
    })?;
    Ok(hit)
}

/// Runs the search, calling `visit` on each valid representation.
pub fn search<F>(inst: &Instance, limit: usize, opts: &SearchOptions, mut visit: F) -> Result<(), OracleError>
where
    F: FnMut(&Representation) -> ControlFlow<()>,
{
    let n = inst.n();
    if n > limit {
        return Err(OracleError::TooLarge { n, limit });
    }
    let grid = Grid::for_instance(inst);
    let mut s = State::new(inst, &grid, opts);
    let _ = s.place(0, &mut visit);
    Ok(())
}

/// Endpoint `x` of the search is `ℓ(v)` for `x = 2v` and `r(v)` for `x = 2v+1`.
struct State<'a> {
    inst: &'a Instance,
    grid: &'a Grid,
    proper: bool,
    ranges: Vec<(u32, u32)>,
    order_pos: Option<Vec<usize>>,
    /// Points in each gap slot, left to right, as point ids.
    gaps: Vec<Vec<usize>>,
    /// Point id -> (slot, rank).
    points: Vec<(u32, u32)>,
    /// Shared point id of an endpoint slot, with its use count.
    fixed: Vec<Option<(usize, usize)>>,
    at: Vec<usize>,
}

impl<'a> State<'a> {
    fn new(inst: &'a Instance, grid: &'a Grid, opts: &SearchOptions) -> State<'a> {
        let table = grid.table();
        let top = table.top_slot() as i64;
        let clamp = |k: i64| k.clamp(0, top) as u32;
        let mut ranges = Vec::with_capacity(2 * inst.n());
        for bp in &inst.bounds {
            for b in [&bp.left, &bp.right] {
                ranges.push((clamp(table.key(&b.lo)), clamp(table.key(&b.hi))));
            }
        }
        if let Some((v, side, cap)) = opts.cap {
            let x = 2 * v + usize::from(side == Side::Right);
            let hi = &mut ranges[x].1;
            *hi = (*hi).min(cap.saturating_sub(1));
            if cap == 0 {
                ranges[x] = (1, 0);
            }
        }
        let order_pos = opts.strict_order.as_ref().map(|o| {
            let mut p = vec![usize::MAX; inst.n()];
            for (i, &v) in o.iter().enumerate() {
                p[v] = i;
            }
            p
        });
        let slots = top as usize + 1;
        State {
            inst,
            grid,
            proper: inst.class == GraphClass::ProperInt,
            ranges,
            order_pos,
            gaps: vec![Vec::new(); slots],
            points: Vec::new(),
            fixed: vec![None; slots],
            at: Vec::with_capacity(2 * inst.n()),
        }
    }

    fn pos(&self, x: usize) -> (u32, u32) {
        self.points[self.at[x]]
    }

    fn place<F>(&mut self, x: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Representation) -> ControlFlow<()>,
    {
        if x == 2 * self.inst.n() {
            let rep = self.materialize();
            return visit(&rep);
        }
        let (lo, hi) = self.ranges[x];
        for slot in lo..=hi {
            if slot % 2 == 1 {
                let id = match self.fixed[slot as usize] {
                    Some((id, c)) => {
                        self.fixed[slot as usize] = Some((id, c + 1));
                        id
                    }
                    None => {
                        self.points.push((slot, 0));
                        let id = self.points.len() - 1;
                        self.fixed[slot as usize] = Some((id, 1));
                        id
                    }
                };
                self.at.push(id);
                let r = if self.consistent(x) { self.place(x + 1, visit) } else { ControlFlow::Continue(()) };
                self.at.pop();
                match self.fixed[slot as usize] {
                    Some((id, 1)) => {
                        self.fixed[slot as usize] = None;
                        debug_assert_eq!(id, self.points.len() - 1);
                        self.points.pop();
                    }
                    Some((id, c)) => self.fixed[slot as usize] = Some((id, c - 1)),
                    None => unreachable!(),
                }
                r?;
            } else {
                let m = self.gaps[slot as usize].len();
                // new point at j, then join point j; ascending along the line
                for j in 0..=m {
                    self.insert(slot, j);
                    self.at.push(self.points.len() - 1);
                    let r = if self.consistent(x) { self.place(x + 1, visit) } else { ControlFlow::Continue(()) };
                    self.at.pop();
                    self.remove(slot, j);
                    r?;
                    if j < m {
                        let id = self.gaps[slot as usize][j];
                        self.at.push(id);
                        let r = if self.consistent(x) { self.place(x + 1, visit) } else { ControlFlow::Continue(()) };
                        self.at.pop();
                        r?;
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn insert(&mut self, slot: u32, j: usize) {
        let id = self.points.len();
        self.points.push((slot, j as u32));
        let gap = &mut self.gaps[slot as usize];
        for &p in &gap[j..] {
            self.points[p].1 += 1;
        }
        gap.insert(j, id);
    }

    fn remove(&mut self, slot: u32, j: usize) {
        let gap = &mut self.gaps[slot as usize];
        gap.remove(j);
        for &p in &gap[j..] {
            self.points[p].1 -= 1;
        }
        self.points.pop();
    }

    /// Checks the newest endpoint against everything placed before it.
    fn consistent(&self, x: usize) -> bool {
        let v = x / 2;
        let right = x % 2 == 1;
        let p = self.pos(x);
        if right && p < self.pos(x - 1) {
            return false;
        }
        for u in 0..v {
            let (lu, ru) = (self.pos(2 * u), self.pos(2 * u + 1));
            let adj = self.inst.graph.has_edge(u, v);
            let before = self.order_pos.as_ref().map(|o| o[u] < o[v]);
            if !right {
                if adj && p > ru {
                    return false;
                }
                if !adj && lu <= p && p <= ru {
                    return false;
                }
                if let Some(b) = before {
                    if (b && lu >= p) || (!b && lu <= p) {
                        return false;
                    }
                }
            } else {
                let lv = self.pos(2 * v);
                let meet = lv <= ru && lu <= p;
                if meet != adj {
                    return false;
                }
                if self.proper && adj {
                    let v_in_u = lu <= lv && p <= ru && (lu, ru) != (lv, p);
                    let u_in_v = lv <= lu && ru <= p && (lu, ru) != (lv, p);
                    if v_in_u || u_in_v {
                        return false;
                    }
                }
                if let Some(b) = before {
                    if (b && ru >= p) || (!b && ru <= p) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn materialize(&self) -> Representation {
        let coord = |x: usize| {
            let (slot, rank) = self.pos(x);
            self.grid.coord(slot, rank as usize)
        };
        Representation::new((0..self.inst.n()).map(|v| Interval::new(coord(2 * v), coord(2 * v + 1))).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{check_representation, Bound, BoundPair, ExtCoord, Graph};

    fn pts(b: (i64, i64)) -> Bound {
        Bound::ints(b.0, b.1)
    }

    #[test]
    fn grid_shape() {
        let inst = Instance::new(Graph::empty(2), vec![BoundPair::new(pts((0, 1)), pts((1, 3))); 2], GraphClass::Int).unwrap();
        let g = Grid::for_instance(&inst);
        // 3 endpoints, 4 gaps of 4 fresh points
        assert_eq!(g.len(), 3 + 4 * 4);
        assert!(g.points().windows(2).all(|w| w[0] < w[1]));
        assert!(g.len() <= 3 * (2 * 2 + 1) + 4 * 2);
        let empty = Grid::for_instance(&Instance::unbounded(Graph::empty(3), GraphClass::Int));
        assert_eq!(empty.len(), 6);
    }

    #[test]
    fn solve_examples() {
        let k2 = Instance::unbounded(Graph::complete(2), GraphClass::Int);
        assert!(brute_force_solve(&k2).unwrap().is_sat());
        let c4 = Instance::unbounded(Graph::cycle(4), GraphClass::Int);
        assert_eq!(brute_force_solve(&c4).unwrap(), OracleAnswer::Unsat);
        let fixed = BoundPair::new(pts((5, 5)), pts((5, 5)));
        let pair = Instance::new(Graph::empty(2), vec![fixed.clone(), fixed], GraphClass::Int).unwrap();
        assert_eq!(brute_force_solve(&pair).unwrap(), OracleAnswer::Unsat);
        let big = Instance::unbounded(Graph::empty(7), GraphClass::Int);
        assert_eq!(brute_force_solve(&big), Err(OracleError::TooLarge { n: 7, limit: 6 }));
    }

    #[test]
    fn class_separation() {
        let outer = BoundPair::new(pts((0, 0)), pts((3, 3)));
        let inner = BoundPair::new(pts((1, 1)), pts((2, 2)));
        let inst = Instance::new(Graph::complete(3), vec![outer.clone(), outer, inner], GraphClass::Int).unwrap();
        let OracleAnswer::Sat(rep) = brute_force_solve(&inst).unwrap() else { panic!("INT should be SAT") };
        assert!(check_representation(&inst, &rep).is_valid());
        assert_eq!(rep.intervals[2], Interval::ints(1, 2));
        assert!(!brute_force_solve(&inst.with_class(GraphClass::ProperInt)).unwrap().is_sat());
        let claw = Instance::unbounded(Graph::claw(), GraphClass::ProperInt);
        assert!(!brute_force_solve(&claw).unwrap().is_sat());
        assert!(brute_force_solve(&claw.with_class(GraphClass::Int)).unwrap().is_sat());
    }

    #[test]
    fn empty_bound_has_no_representation() {
        let bp = BoundPair::new(pts((4, 5)), pts((1, 2)));
        let inst = Instance::new(Graph::empty(1), vec![bp], GraphClass::Int).unwrap();
        assert!(!brute_force_solve(&inst).unwrap().is_sat());
    }

    #[test]
    fn enumeration_counts() {
        // One vertex, no bounds: a point or a proper interval.
        let one = Instance::unbounded(Graph::empty(1), GraphClass::Int);
        assert_eq!(enumerate_representations(&one, &SearchOptions::default(), 100).unwrap().len(), 2);
        // Two disjoint intervals: 2 orders x 2 shapes each.
        let two = Instance::unbounded(Graph::empty(2), GraphClass::Int);
        assert_eq!(enumerate_representations(&two, &SearchOptions::default(), 100).unwrap().len(), 8);
        let opts = SearchOptions { strict_order: Some(vec![1, 0]), cap: None };
        let reps = enumerate_representations(&two, &opts, 100).unwrap();
        assert_eq!(reps.len(), 4);
        assert!(reps.iter().all(|r| r.intervals[1].hi < r.intervals[0].lo));
        assert!(reps.iter().all(|r| check_representation(&two, r).is_valid()));
    }

    #[test]
    fn cap_restricts_slot() {
        let bp = BoundPair::new(pts((0, 2)), Bound::new(ExtCoord::int(0), ExtCoord::PosInf).unwrap());
        let inst = Instance::new(Graph::empty(1), vec![bp], GraphClass::Int).unwrap();
        let table = EndpointTable::from_instance(&inst);
        let key2 = table.key(&ExtCoord::int(2)) as u32;
        let below = SearchOptions { strict_order: None, cap: Some((0, Side::Left, 1)) };
        let reps = enumerate_representations(&inst, &below, 100).unwrap();
        assert!(reps.iter().all(|r| r.intervals[0].lo == Coord::int(0)));
        let none = SearchOptions { strict_order: None, cap: Some((0, Side::Left, 0)) };
        assert!(!exists(&inst, &none).unwrap());
        let all = SearchOptions { strict_order: None, cap: Some((0, Side::Left, key2 + 1)) };
        assert!(exists(&inst, &all).unwrap());
    }

    #[test]
    fn every_witness_is_valid() {
        for g in [Graph::path(4), Graph::complete(4), Graph::claw(), Graph::empty(3)] {
            for class in [GraphClass::Int, GraphClass::ProperInt] {
                let inst = Instance::unbounded(g.clone(), class);
                for rep in enumerate_representations(&inst, &SearchOptions::default(), 300).unwrap() {
                    assert!(check_representation(&inst, &rep).is_valid());
                }
            }
        }
    }
}
