//! Frontier search under handle constraints.
//!
//! An item is a leaf or a consecutive leaf set carrying a lower handle and an
//! upper handle. Two disjoint items p, q force "p entirely before q" when
//! `lower(p) <= upper(q)`. Pins additionally compare the first (or last)
//! leaves of two intersecting sets. All constraints reduce to per-node
//! decisions, so each P-node and Q-node is settled independently.

use std::collections::BTreeSet;

use super::pqtree::{NodeKind, PQTree};

/// A leaf set with its handles; the set must be consecutive in every frontier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetItem {
    pub leaves: Vec<usize>,
    pub lower: i64,
    pub upper: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pin {
    /// `first(sets[a]) <= first(sets[b])`
    FirstNoLater(usize, usize),
    /// `last(sets[a]) <= last(sets[b])`
    LastNoLater(usize, usize),
}

#[derive(Clone, Debug, Default)]
pub struct FrontierProblem {
    pub leaf_lower: Vec<i64>,
    pub leaf_upper: Vec<i64>,
    pub sets: Vec<SetItem>,
    pub pins: Vec<Pin>,
}

const FWD: u8 = 1;
const REV: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    First,
    Last,
}

#[derive(Clone, Copy, Debug)]
struct Loc {
    node: usize,
    lo: usize,
    hi: usize,
}

struct Topo<'a> {
    tree: &'a PQTree,
    depth: Vec<usize>,
    index: Vec<usize>,
    tin: Vec<usize>,
    tout: Vec<usize>,
    up: Vec<Vec<usize>>,
}

impl<'a> Topo<'a> {
    fn new(tree: &'a PQTree) -> Topo<'a> {
        let n = tree.len();
        let mut depth = vec![0usize; n];
        let mut index = vec![0usize; n];
        let mut par = vec![0usize; n];
        // Node ids are in pre-order, so parents precede children.
        for x in 0..n {
            for (i, &c) in tree.node(x).children.iter().enumerate() {
                depth[c] = depth[x] + 1;
                index[c] = i;
                par[c] = x;
            }
        }
        let mut size = vec![1usize; n];
        for x in (0..n).rev() {
            for &c in &tree.node(x).children {
                size[x] += size[c];
            }
        }
        let tin: Vec<usize> = (0..n).collect();
        let tout: Vec<usize> = (0..n).map(|x| x + size[x]).collect();
        let mut up = vec![par];
        let mut k = 1;
        while (1usize << k) < n.max(2) {
            let prev = &up[k - 1];
            let next: Vec<usize> = (0..n).map(|x| prev[prev[x]]).collect();
            up.push(next);
            k += 1;
        }
        Topo { tree, depth, index, tin, tout, up }
    }

    fn is_ancestor(&self, a: usize, x: usize) -> bool {
        self.tin[a] <= self.tin[x] && self.tin[x] < self.tout[a]
    }

    fn ancestor_at(&self, mut x: usize, d: usize) -> usize {
        let mut diff = self.depth[x] - d;
        let mut k = 0;
        while diff > 0 {
            if diff & 1 == 1 {
                x = self.up[k][x];
            }
            diff >>= 1;
            k += 1;
        }
        x
    }

    fn lca(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = if self.depth[a] < self.depth[b] { (b, a) } else { (a, b) };
        a = self.ancestor_at(a, self.depth[b]);
        if a == b {
            return a;
        }
        for k in (0..self.up.len()).rev() {
            if self.up[k][a] != self.up[k][b] {
                a = self.up[k][a];
                b = self.up[k][b];
            }
        }
        self.up[0][a]
    }

    fn parent(&self, x: usize) -> usize {
        self.up[0][x]
    }

    fn arity(&self, x: usize) -> usize {
        self.tree.node(x).children.len()
    }

    fn is_q(&self, x: usize) -> bool {
        self.tree.node(x).kind == NodeKind::Q
    }

    fn locate(&self, leaves: &[usize]) -> Option<Loc> {
        let first = *leaves.first()?;
        let mut node = self.tree.leaf_node(first);
        for &l in &leaves[1..] {
            node = self.lca(node, self.tree.leaf_node(l));
        }
        let s = self.arity(node);
        if !self.is_q(node) {
            return Some(Loc { node, lo: 0, hi: s.saturating_sub(1) });
        }
        let d = self.depth[node] + 1;
        let mut lo = usize::MAX;
        let mut hi = 0;
        for &l in leaves {
            let c = self.ancestor_at(self.tree.leaf_node(l), d);
            lo = lo.min(self.index[c]);
            hi = hi.max(self.index[c]);
        }
        Some(Loc { node, lo, hi })
    }
}

struct State {
    allowed: Vec<u8>,
    first_pin: Vec<usize>,
    last_pin: Vec<usize>,
    done_first: Vec<usize>,
    done_last: Vec<usize>,
    ok: bool,
}

const NONE: usize = usize::MAX;

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

impl State {
    fn force(&mut self, x: usize, mask: u8) {
        self.allowed[x] &= mask;
        if self.allowed[x] == 0 {
            self.ok = false;
        }
    }

    fn pin(&mut self, y: usize, child: usize, side: Side) {
        let slot = match side {
            Side::First => &mut self.first_pin[y],
            Side::Last => &mut self.last_pin[y],
        };
        if *slot == NONE {
            *slot = child;
        } else if *slot != child {
            self.ok = false;
        }
    }
}

/// Range `[lo, hi]` must sit at the side-first end of range `[blo, bhi]`.
fn range_mask(lo: usize, hi: usize, blo: usize, bhi: usize, side: Side) -> u8 {
    let (f, r) = match side {
        Side::First => (lo == blo, hi == bhi),
        Side::Last => (hi == bhi, lo == blo),
    };
    (if f { FWD } else { 0 }) | (if r { REV } else { 0 })
}

impl FrontierProblem {
    pub fn new(tree: &PQTree) -> FrontierProblem {
        let k = tree.leaf_count();
        FrontierProblem { leaf_lower: vec![i64::MAX; k], leaf_upper: vec![i64::MIN; k], sets: Vec::new(), pins: Vec::new() }
    }

    /// A frontier of `tree` meeting all constraints, or `None`.
    pub fn solve(&self, tree: &PQTree) -> Option<Vec<usize>> {
        let root = match tree.root() {
            Some(r) => r,
            None => return Some(Vec::new()),
        };
        let topo = Topo::new(tree);
        let n = tree.len();
        let locs: Vec<Option<Loc>> = self.sets.iter().map(|s| topo.locate(&s.leaves)).collect();

        let mut st = State {
            allowed: vec![FWD | REV; n],
            first_pin: vec![NONE; n],
            last_pin: vec![NONE; n],
            done_first: (0..n).collect(),
            done_last: (0..n).collect(),
            ok: true,
        };
        for &pin in &self.pins {
            let (a, b, side) = match pin {
                Pin::FirstNoLater(a, b) => (a, b, Side::First),
                Pin::LastNoLater(a, b) => (b, a, Side::Last),
            };
            if let (Some(la), Some(lb)) = (locs[a], locs[b]) {
                enforce(&topo, &mut st, la, lb, side);
            }
            if !st.ok {
                return None;
            }
        }

        // Aggregated handles and the range items owned by each Q-node.
        let mut agg_lower = vec![i64::MAX; n];
        let mut agg_upper = vec![i64::MIN; n];
        let mut ranges: Vec<Vec<(usize, usize, i64, i64)>> = vec![Vec::new(); n];
        for l in 0..tree.leaf_count() {
            let x = tree.leaf_node(l);
            agg_lower[x] = agg_lower[x].min(self.leaf_lower[l]);
            agg_upper[x] = agg_upper[x].max(self.leaf_upper[l]);
        }
        for (s, loc) in self.sets.iter().zip(&locs) {
            let Some(loc) = loc else { continue };
            let x = loc.node;
            agg_lower[x] = agg_lower[x].min(s.lower);
            agg_upper[x] = agg_upper[x].max(s.upper);
            if topo.is_q(x) && !(loc.lo == 0 && loc.hi + 1 == topo.arity(x)) {
                ranges[x].push((loc.lo, loc.hi, s.lower, s.upper));
            }
        }
        for x in (0..n).rev() {
            for &c in &tree.node(x).children {
                agg_lower[x] = agg_lower[x].min(agg_lower[c]);
                agg_upper[x] = agg_upper[x].max(agg_upper[c]);
            }
        }

        let mut order: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let kids = &tree.node(x).children;
            match tree.node(x).kind {
                NodeKind::Leaf(_) => {}
                NodeKind::P => {
                    let handles: Vec<(i64, i64)> = kids
                        .iter()
                        .map(|&c| {
                            let lo = if st.first_pin[x] == c { i64::MIN } else { agg_lower[c] };
                            let up = if st.last_pin[x] == c { i64::MAX } else { agg_upper[c] };
                            (lo, up)
                        })
                        .collect();
                    let perm = minimal_extraction(&handles)?;
                    order[x] = perm.into_iter().map(|i| kids[i]).collect();
                }
                NodeKind::Q => {
                    let mut items: Vec<(usize, usize, i64, i64)> =
                        kids.iter().enumerate().map(|(i, &c)| (i, i, agg_lower[c], agg_upper[c])).collect();
                    items.extend_from_slice(&ranges[x]);
                    let mask = st.allowed[x] & q_orientations(kids.len(), &items);
                    if mask & FWD != 0 {
                        order[x] = kids.clone();
                    } else if mask & REV != 0 {
                        order[x] = kids.iter().rev().copied().collect();
                    } else {
                        return None;
                    }
                }
            }
        }

        let mut out = Vec::with_capacity(tree.leaf_count());
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            match tree.node(x).kind {
                NodeKind::Leaf(l) => out.push(l),
                _ => stack.extend(order[x].iter().rev()),
            }
        }
        Some(out)
    }
}

/// Side-frame `first(a) <= first(b)`; in the Last frame the tree is read reversed.
fn enforce(topo: &Topo, st: &mut State, a: Loc, b: Loc, side: Side) {
    let contains = |outer: Loc, inner: Loc| -> bool {
        if outer.node == inner.node {
            return outer.lo <= inner.lo && inner.hi <= outer.hi;
        }
        if !topo.is_ancestor(outer.node, inner.node) {
            return false;
        }
        let c = topo.ancestor_at(inner.node, topo.depth[outer.node] + 1);
        let i = topo.index[c];
        outer.lo <= i && i <= outer.hi
    };
    if contains(a, b) {
        return;
    }
    if contains(b, a) {
        prefix(topo, st, a, b, side);
        return;
    }
    if a.node == b.node && topo.is_q(a.node) && a.lo <= b.hi && b.lo <= a.hi {
        let a_left_fwd = a.lo < b.lo;
        let fwd = a_left_fwd == (side == Side::First);
        st.force(a.node, if fwd { FWD } else { REV });
    }
}

/// `a` strictly inside `b` must start `b` in the side frame.
fn prefix(topo: &Topo, st: &mut State, a: Loc, b: Loc, side: Side) {
    if a.node == b.node {
        st.force(a.node, range_mask(a.lo, a.hi, b.lo, b.hi, side));
        return;
    }
    if topo.is_q(a.node) {
        st.force(a.node, range_mask(a.lo, a.hi, 0, topo.arity(a.node) - 1, side));
    }
    let y = b.node;
    let c = topo.ancestor_at(a.node, topo.depth[y] + 1);
    if topo.is_q(y) {
        let i = topo.index[c];
        st.force(y, range_mask(i, i, b.lo, b.hi, side));
    } else {
        st.pin(y, c, side);
    }
    let mut x = {
        let uf = match side {
            Side::First => &mut st.done_first,
            Side::Last => &mut st.done_last,
        };
        find(uf, a.node)
    };
    while topo.depth[x] > topo.depth[c] {
        let p = topo.parent(x);
        let i = topo.index[x];
        if topo.is_q(p) {
            let s = topo.arity(p);
            st.force(p, range_mask(i, i, 0, s - 1, side));
        } else {
            st.pin(p, x, side);
        }
        let uf = match side {
            Side::First => &mut st.done_first,
            Side::Last => &mut st.done_last,
        };
        let rp = find(uf, p);
        uf[x] = rp;
        x = rp;
    }
}

/// Orientations of a Q-node compatible with its items `(lo, hi, lower, upper)`.
fn q_orientations(s: usize, items: &[(usize, usize, i64, i64)]) -> u8 {
    // Suffix extrema over items whose range starts at or after t.
    let mut suf_lower = vec![i64::MAX; s + 1];
    let mut suf_upper = vec![i64::MIN; s + 1];
    for &(lo, _, lower, upper) in items {
        suf_lower[lo] = suf_lower[lo].min(lower);
        suf_upper[lo] = suf_upper[lo].max(upper);
    }
    for t in (0..s).rev() {
        suf_lower[t] = suf_lower[t].min(suf_lower[t + 1]);
        suf_upper[t] = suf_upper[t].max(suf_upper[t + 1]);
    }
    let mut mask = FWD | REV;
    for &(_, hi, lower, upper) in items {
        // p strictly after q in forward order, yet p must precede q.
        if suf_lower[hi + 1] <= upper {
            mask &= !FWD;
        }
        // q must precede some p that reversal puts before it.
        if lower <= suf_upper[hi + 1] {
            mask &= !REV;
        }
    }
    mask
}

/// Linear order of `(lower, upper)` handles in which `i` precedes `j` whenever
/// `lower_i <= upper_j`, by repeated minimal-element extraction.
pub fn minimal_extraction(h: &[(i64, i64)]) -> Option<Vec<usize>> {
    let mut by_lower: BTreeSet<(i64, usize)> = h.iter().enumerate().map(|(i, &(l, _))| (l, i)).collect();
    let mut by_upper: BTreeSet<(i64, usize)> = h.iter().enumerate().map(|(i, &(_, u))| (u, i)).collect();
    let mut out = Vec::with_capacity(h.len());
    while let Some(&(min_lower, i1)) = by_lower.iter().next() {
        let mut pick = None;
        for &(u, a) in by_upper.iter().take(2) {
            if a != i1 {
                if u < min_lower {
                    pick = Some(a);
                }
                break;
            }
        }
        if pick.is_none() {
            match by_lower.iter().nth(1) {
                None => pick = Some(i1),
                Some(&(second, _)) if h[i1].1 < second => pick = Some(i1),
                _ => return None,
            }
        }
        let a = pick.expect("minimal element chosen");
        by_lower.remove(&(h[a].0, a));
        by_upper.remove(&(h[a].1, a));
        out.push(a);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn span(order: &[usize], set: &[usize]) -> (usize, usize) {
        let pos: Vec<usize> = set.iter().map(|&s| order.iter().position(|&o| o == s).unwrap()).collect();
        (*pos.iter().min().unwrap(), *pos.iter().max().unwrap())
    }

    fn satisfies(p: &FrontierProblem, order: &[usize]) -> bool {
        // Every item as (leaf set, lower, upper).
        let mut items: Vec<(Vec<usize>, i64, i64)> =
            (0..order.len()).map(|l| (vec![l], p.leaf_lower[l], p.leaf_upper[l])).collect();
        items.extend(p.sets.iter().filter(|s| !s.leaves.is_empty()).map(|s| (s.leaves.clone(), s.lower, s.upper)));
        for (i, a) in items.iter().enumerate() {
            for (j, b) in items.iter().enumerate() {
                if i == j || a.0.iter().any(|x| b.0.contains(x)) {
                    continue;
                }
                if a.1 <= b.2 && span(order, &a.0).1 > span(order, &b.0).0 {
                    return false;
                }
            }
        }
        p.pins.iter().all(|&pin| match pin {
            Pin::FirstNoLater(a, b) => span(order, &p.sets[a].leaves).0 <= span(order, &p.sets[b].leaves).0,
            Pin::LastNoLater(a, b) => span(order, &p.sets[a].leaves).1 <= span(order, &p.sets[b].leaves).1,
        })
    }

    #[test]
    fn p_node_respects_handles() {
        let t = PQTree::from_sets(2, &[]).unwrap();
        let mut p = FrontierProblem::new(&t);
        p.leaf_lower = vec![1, 3];
        p.leaf_upper = vec![0, 2];
        assert_eq!(p.solve(&t), Some(vec![0, 1]));
        p.leaf_lower = vec![3, 1];
        p.leaf_upper = vec![2, 0];
        assert_eq!(p.solve(&t), Some(vec![1, 0]));
        p.leaf_lower = vec![1, 1];
        p.leaf_upper = vec![1, 1];
        assert_eq!(p.solve(&t), None);
    }

    #[test]
    fn q_node_reverses() {
        let t = PQTree::from_sets(3, &[vec![0, 1], vec![1, 2]]).unwrap();
        let mut p = FrontierProblem::new(&t);
        p.leaf_lower = vec![i64::MAX, i64::MAX, 0];
        p.leaf_upper = vec![5, i64::MIN, i64::MIN];
        assert_eq!(p.solve(&t), Some(vec![2, 1, 0]));
    }

    #[test]
    fn pins_on_p_node() {
        // Sets {0,1,2} and {1}: pin first({1}) <= first({0,1,2}) puts leaf 1 first.
        let t = PQTree::from_sets(3, &[]).unwrap();
        let mut p = FrontierProblem::new(&t);
        p.sets.push(SetItem { leaves: vec![1], lower: i64::MAX, upper: i64::MIN });
        p.sets.push(SetItem { leaves: vec![0, 1, 2], lower: i64::MAX, upper: i64::MIN });
        p.pins.push(Pin::FirstNoLater(0, 1));
        assert_eq!(p.solve(&t).unwrap()[0], 1);
        p.pins.push(Pin::LastNoLater(0, 1));
        let o = p.solve(&t).unwrap();
        assert_eq!(o.len(), 3);
        p.sets.push(SetItem { leaves: vec![2], lower: i64::MAX, upper: i64::MIN });
        p.pins.push(Pin::FirstNoLater(2, 1));
        assert_eq!(p.solve(&t), None);
    }

    fn arb_problem() -> impl Strategy<Value = (usize, Vec<u8>, Vec<(i8, i8)>, Vec<(u8, i8, i8)>, Vec<(bool, u8, u8)>)> {
        (1usize..=5).prop_flat_map(|k| {
            (
                Just(k),
                proptest::collection::vec(any::<u8>(), 0..5),
                proptest::collection::vec((-4i8..6, -4i8..6), k),
                proptest::collection::vec((any::<u8>(), -4i8..6, -4i8..6), 0..4),
                proptest::collection::vec((any::<bool>(), any::<u8>(), any::<u8>()), 0..4),
            )
        })
    }

    fn handle(v: i8, hi: bool) -> i64 {
        match v {
            -4 => {
                if hi {
                    i64::MIN
                } else {
                    i64::MAX
                }
            }
            v => v as i64,
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(4000))]
        #[test]
        fn matches_brute_force((k, masks, leaf_h, set_h, pins) in arb_problem()) {
            let fam: Vec<Vec<usize>> = masks.iter().map(|m| (0..k).filter(|&i| m >> i & 1 == 1).collect()).collect();
            let Some(tree) = PQTree::from_sets(k, &fam) else { return Ok(()) };
            let mut p = FrontierProblem::new(&tree);
            for (l, &(a, b)) in leaf_h.iter().enumerate() {
                p.leaf_lower[l] = handle(a, false);
                p.leaf_upper[l] = handle(b, true);
            }
            // Set items draw from the consecutive family (plus singletons and the full set).
            let mut pool: Vec<Vec<usize>> = fam.iter().filter(|s| !s.is_empty()).cloned().collect();
            pool.extend((0..k).map(|l| vec![l]));
            pool.push((0..k).collect());
            for &(pick, a, b) in &set_h {
                let s = pool[pick as usize % pool.len()].clone();
                p.sets.push(SetItem { leaves: s, lower: handle(a, false), upper: handle(b, true) });
            }
            if !p.sets.is_empty() {
                for &(first, a, b) in &pins {
                    let a = a as usize % p.sets.len();
                    let b = b as usize % p.sets.len();
                    if !p.sets[a].leaves.iter().any(|x| p.sets[b].leaves.contains(x)) {
                        continue;
                    }
                    p.pins.push(if first { Pin::FirstNoLater(a, b) } else { Pin::LastNoLater(a, b) });
                }
            }
            let brute = tree.all_frontiers().into_iter().any(|o| satisfies(&p, &o));
            match p.solve(&tree) {
                Some(o) => {
                    prop_assert!(tree.all_frontiers().contains(&o));
                    prop_assert!(satisfies(&p, &o), "order {:?} violates", o);
                }
                None => prop_assert!(!brute, "search missed a frontier for {}", tree.to_bracket()),
            }
        }
    }
}
