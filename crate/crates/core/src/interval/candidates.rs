//! Candidate clique-point sets `J_C` evaluated on endpoint slots.

use crate::chordal::CliqueSet;
use crate::model::slots::EndpointTable;
use crate::model::{BoundPair, Coord, ExtCoord, Instance};

/// One maximal piece of a candidate set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub lo: ExtCoord,
    pub lo_closed: bool,
    pub hi: ExtCoord,
    pub hi_closed: bool,
}

impl Piece {
    pub fn contains(&self, c: &Coord) -> bool {
        let above = if self.lo_closed { self.lo <= *c } else { self.lo < *c };
        let below = if self.hi_closed { self.hi >= *c } else { self.hi > *c };
        above && below
    }
}

/// `J_C` as sorted disjoint pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSet {
    pub pieces: Vec<Piece>,
}

impl CandidateSet {
    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains(&self, c: &Coord) -> bool {
        self.pieces.iter().any(|p| p.contains(c))
    }

    /// Infimum, `ℓ(J_C)`.
    pub fn inf(&self) -> Option<&ExtCoord> {
        self.pieces.first().map(|p| &p.lo)
    }

    /// Supremum, `r(J_C)`.
    pub fn sup(&self) -> Option<&ExtCoord> {
        self.pieces.last().map(|p| &p.hi)
    }
}

/// Min/max segment tree over per-slot counts.
struct Coverage {
    size: usize,
    min: Vec<u32>,
    max: Vec<u32>,
}

impl Coverage {
    fn new(counts: &[u32]) -> Coverage {
        let size = counts.len().max(1);
        let mut c = Coverage { size, min: vec![0; 4 * size], max: vec![0; 4 * size] };
        c.build(1, 0, size - 1, counts);
        c
    }

    fn build(&mut self, node: usize, l: usize, r: usize, counts: &[u32]) {
        if l == r {
            let v = counts.get(l).copied().unwrap_or(0);
            self.min[node] = v;
            self.max[node] = v;
            return;
        }
        let m = (l + r) / 2;
        self.build(2 * node, l, m, counts);
        self.build(2 * node + 1, m + 1, r, counts);
        self.min[node] = self.min[2 * node].min(self.min[2 * node + 1]);
        self.max[node] = self.max[2 * node].max(self.max[2 * node + 1]);
    }

    /// First slot in `[a, b]` with count `<= c` (`le`) or `> c` (`!le`).
    fn first(&self, a: usize, b: usize, c: u32, le: bool) -> Option<usize> {
        self.first_in(1, 0, self.size - 1, a, b, c, le)
    }

    #[allow(clippy::too_many_arguments)]
    fn first_in(&self, node: usize, l: usize, r: usize, a: usize, b: usize, c: u32, le: bool) -> Option<usize> {
        if r < a || l > b || (le && self.min[node] > c) || (!le && self.max[node] <= c) {
            return None;
        }
        if l == r {
            return Some(l);
        }
        let m = (l + r) / 2;
        self.first_in(2 * node, l, m, a, b, c, le).or_else(|| self.first_in(2 * node + 1, m + 1, r, a, b, c, le))
    }

    /// Last slot in `[a, b]` with count `<= c`.
    fn last_le(&self, a: usize, b: usize, c: u32) -> Option<usize> {
        self.last_in(1, 0, self.size - 1, a, b, c)
    }

    fn last_in(&self, node: usize, l: usize, r: usize, a: usize, b: usize, c: u32) -> Option<usize> {
        if r < a || l > b || self.min[node] > c {
            return None;
        }
        if l == r {
            return Some(l);
        }
        let m = (l + r) / 2;
        self.last_in(2 * node + 1, m + 1, r, a, b, c).or_else(|| self.last_in(2 * node, l, m, a, b, c))
    }
}

/// Slot range of the blocked interval `[r(𝔏_v), ℓ(ℜ_v)]`, if nonempty.
pub(crate) fn blocked_slots(table: &EndpointTable, bp: &BoundPair) -> Option<(u32, u32)> {
    let a = table.key(&bp.left.hi);
    let b = table.key(&bp.right.lo);
    if a <= b {
        Some((a as u32, b as u32))
    } else {
        None
    }
}

/// Per-clique slot evaluation of `J_C`.
pub(crate) struct SlotCandidates<'a> {
    inst: &'a Instance,
    table: &'a EndpointTable,
    cover: Coverage,
    blocked: Vec<Option<(u32, u32)>>,
}

impl<'a> SlotCandidates<'a> {
    pub(crate) fn new(inst: &'a Instance, table: &'a EndpointTable) -> SlotCandidates<'a> {
        let slots = table.top_slot() as usize + 1;
        let blocked: Vec<Option<(u32, u32)>> = inst.bounds.iter().map(|bp| blocked_slots(table, bp)).collect();
        let mut diff = vec![0i64; slots + 1];
        for &(a, b) in blocked.iter().flatten() {
            diff[a as usize] += 1;
            diff[b as usize + 1] -= 1;
        }
        let mut counts = Vec::with_capacity(slots);
        let mut run = 0i64;
        for d in diff.iter().take(slots) {
            run += d;
            counts.push(run as u32);
        }
        SlotCandidates { inst, table, cover: Coverage::new(&counts), blocked }
    }

    /// Slot window `[max ℓ(𝔏_u), min r(ℜ_u)]` over the clique.
    pub(crate) fn window(&self, clique: &[usize]) -> Option<(u32, u32)> {
        let top = self.table.top_slot() as i64;
        let mut lo = 0i64;
        let mut hi = top;
        for &u in clique {
            let bp = &self.inst.bounds[u];
            lo = lo.max(self.table.key(&bp.left.lo));
            hi = hi.min(self.table.key(&bp.right.hi));
        }
        if lo <= hi {
            Some((lo as u32, hi as u32))
        } else {
            None
        }
    }

    /// Window split into runs on which the clique's own blocked count is constant.
    fn segments(&self, clique: &[usize], w: (u32, u32)) -> Vec<(usize, usize, u32)> {
        let (wl, wh) = (w.0 as usize, w.1 as usize);
        let mut events: Vec<(usize, i32)> = Vec::new();
        for &u in clique {
            if let Some((a, b)) = self.blocked[u] {
                let (a, b) = (a as usize, b as usize);
                if b < wl || a > wh {
                    continue;
                }
                events.push((a.max(wl), 1));
                if b < wh {
                    events.push((b + 1, -1));
                }
            }
        }
        events.sort_unstable();
        let mut out = Vec::with_capacity(events.len() + 1);
        let mut pos = wl;
        let mut own = 0i32;
        let mut i = 0;
        while i < events.len() {
            let p = events[i].0;
            if p > pos {
                out.push((pos, p - 1, own as u32));
                pos = p;
            }
            while i < events.len() && events[i].0 == p {
                own += events[i].1;
                i += 1;
            }
        }
        out.push((pos, wh, own as u32));
        out
    }

    /// First and last slot of `J_C`.
    pub(crate) fn extent(&self, clique: &[usize]) -> Option<(u32, u32)> {
        let w = self.window(clique)?;
        let segs = self.segments(clique, w);
        let first = segs.iter().find_map(|&(a, b, c)| self.cover.first(a, b, c, true))?;
        let last = segs.iter().rev().find_map(|&(a, b, c)| self.cover.last_le(a, b, c))?;
        Some((first as u32, last as u32))
    }

    /// All maximal slot runs of `J_C`.
    pub(crate) fn runs(&self, clique: &[usize]) -> Vec<(u32, u32)> {
        let Some(w) = self.window(clique) else { return Vec::new() };
        let mut out: Vec<(u32, u32)> = Vec::new();
        for (a, b, c) in self.segments(clique, w) {
            let mut pos = a;
            while pos <= b {
                let Some(s) = self.cover.first(pos, b, c, true) else { break };
                let e = self.cover.first(s, b, c, false).map(|x| x - 1).unwrap_or(b);
                match out.last_mut() {
                    Some(last) if last.1 as usize + 1 == s => last.1 = e as u32,
                    _ => out.push((s as u32, e as u32)),
                }
                pos = e + 2;
            }
        }
        out
    }

    pub(crate) fn candidate_set(&self, clique: &[usize]) -> CandidateSet {
        let pieces = self
            .runs(clique)
            .into_iter()
            .map(|(a, b)| {
                let (lo, lo_closed) = self.table.slot_lower_value(a);
                let (hi, hi_closed) = self.table.slot_upper_value(b);
                Piece { lo, lo_closed, hi, hi_closed }
            })
            .collect();
        CandidateSet { pieces }
    }
}

/// `J_C` for every clique; bounds are used as given.
pub fn candidate_sets(inst: &Instance, cliques: &CliqueSet) -> Vec<CandidateSet> {
    let table = EndpointTable::from_instance(inst);
    let sc = SlotCandidates::new(inst, &table);
    cliques.cliques.iter().map(|c| sc.candidate_set(c)).collect()
}
