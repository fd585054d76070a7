//! PQ-trees built by Booth-Lueker template reduction.
//!
//! Children of a Q-node reach their parent through a union-find element that
//! is merged whenever one Q-node is spliced into another, so interior children
//! never need their parent pointer rewritten.

use std::collections::VecDeque;
use std::fmt::Write as _;

const NIL: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf(usize),
    P,
    Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQNode {
    pub kind: NodeKind,
    pub children: Vec<usize>,
    pub parent: Option<usize>,
}

/// Static PQ-tree; children of a Q-node are stored left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQTree {
    nodes: Vec<PQNode>,
    root: Option<usize>,
    leaf_node: Vec<usize>,
}

impl PQTree {
    /// Tree whose frontiers are exactly the orders of `0..leaves` keeping every set consecutive.
    pub fn from_sets(leaves: usize, sets: &[Vec<usize>]) -> Option<PQTree> {
        let mut b = Builder::new(leaves);
        for s in sets {
            if s.len() >= 2 && s.len() < leaves && !b.reduce(s) {
                return None;
            }
        }
        Some(b.finish())
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn node(&self, id: usize) -> &PQNode {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_node.len()
    }

    pub fn leaf_node(&self, leaf: usize) -> usize {
        self.leaf_node[leaf]
    }

    /// Leaves in stored order.
    pub fn frontier(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.leaf_count());
        if let Some(r) = self.root {
            let mut stack = vec![r];
            while let Some(x) = stack.pop() {
                match self.nodes[x].kind {
                    NodeKind::Leaf(l) => out.push(l),
                    _ => stack.extend(self.nodes[x].children.iter().rev()),
                }
            }
        }
        out
    }

    /// Every frontier; exponential, intended for small trees.
    pub fn all_frontiers(&self) -> Vec<Vec<usize>> {
        match self.root {
            None => vec![Vec::new()],
            Some(r) => self.frontiers_of(r),
        }
    }

    fn frontiers_of(&self, x: usize) -> Vec<Vec<usize>> {
        let node = &self.nodes[x];
        match node.kind {
            NodeKind::Leaf(l) => vec![vec![l]],
            NodeKind::P | NodeKind::Q => {
                let parts: Vec<Vec<Vec<usize>>> = node.children.iter().map(|&c| self.frontiers_of(c)).collect();
                let arrangements: Vec<Vec<usize>> = if node.kind == NodeKind::Q {
                    let fwd: Vec<usize> = (0..parts.len()).collect();
                    let rev: Vec<usize> = fwd.iter().rev().copied().collect();
                    vec![fwd, rev]
                } else {
                    permutations(parts.len())
                };
                let mut out = Vec::new();
                for arr in arrangements {
                    let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
                    for &i in &arr {
                        let mut next = Vec::new();
                        for a in &acc {
                            for f in &parts[i] {
                                let mut v = a.clone();
                                v.extend_from_slice(f);
                                next.push(v);
                            }
                        }
                        acc = next;
                    }
                    out.extend(acc);
                }
                out
            }
        }
    }

    /// Bracketed dump, canonical up to tree equivalence: P children sorted by
    /// smallest leaf, Q children oriented so the first child has the smaller leaf.
    pub fn to_bracket(&self) -> String {
        let mut s = String::new();
        if let Some(r) = self.root {
            self.write_bracket(r, &mut s);
        }
        s
    }

    fn min_leaf(&self, x: usize) -> usize {
        match self.nodes[x].kind {
            NodeKind::Leaf(l) => l,
            _ => self.nodes[x].children.iter().map(|&c| self.min_leaf(c)).min().unwrap_or(usize::MAX),
        }
    }

    fn write_bracket(&self, x: usize, s: &mut String) {
        let node = &self.nodes[x];
        match node.kind {
            NodeKind::Leaf(l) => {
                let _ = write!(s, "{}", l);
            }
            NodeKind::P | NodeKind::Q => {
                let mut kids: Vec<(usize, usize)> = node.children.iter().map(|&c| (self.min_leaf(c), c)).collect();
                if node.kind == NodeKind::P {
                    kids.sort_unstable();
                    s.push_str("P[");
                } else {
                    if kids.first().map(|k| k.0) > kids.last().map(|k| k.0) {
                        kids.reverse();
                    }
                    s.push_str("Q[");
                }
                for (i, &(_, c)) in kids.iter().enumerate() {
                    if i > 0 {
                        s.push(' ');
                    }
                    self.write_bracket(c, s);
                }
                s.push(']');
            }
        }
    }
}

pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    Leaf,
    P,
    Q,
    Dead,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Par {
    Root,
    None,
    P(usize),
    Q(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Label {
    Empty,
    Full,
    Partial,
}

#[derive(Clone, Debug)]
struct DNode {
    kind: Kind,
    par: Par,
    // P child: [prev, next]. Q child: the two neighbours, unordered.
    sib: [usize; 2],
    // P: [head, tail]. Q: the two endmost children.
    ends: [usize; 2],
    count: usize,
    elem: usize,
    leaf: usize,
}

struct Builder {
    nodes: Vec<DNode>,
    uf: Vec<usize>,
    owner: Vec<usize>,
    root: usize,
    leaf_node: Vec<usize>,
    stamp: u32,
    mark: Vec<u32>,
    kids_stamp: Vec<u32>,
    vis_kids: Vec<Vec<usize>>,
    lab_stamp: Vec<u32>,
    label: Vec<Label>,
    pert_stamp: Vec<u32>,
    full_kids: Vec<Vec<usize>>,
    partial_kids: Vec<Vec<usize>>,
    pending: Vec<usize>,
    full_end: Vec<usize>,
}

impl Builder {
    fn new(leaves: usize) -> Builder {
        let mut b = Builder {
            nodes: Vec::new(),
            uf: Vec::new(),
            owner: Vec::new(),
            root: NIL,
            leaf_node: Vec::with_capacity(leaves),
            stamp: 0,
            mark: Vec::new(),
            kids_stamp: Vec::new(),
            vis_kids: Vec::new(),
            lab_stamp: Vec::new(),
            label: Vec::new(),
            pert_stamp: Vec::new(),
            full_kids: Vec::new(),
            partial_kids: Vec::new(),
            pending: Vec::new(),
            full_end: Vec::new(),
        };
        for l in 0..leaves {
            let x = b.alloc(Kind::Leaf);
            b.nodes[x].leaf = l;
            b.leaf_node.push(x);
        }
        if leaves == 1 {
            b.root = b.leaf_node[0];
            b.nodes[b.root].par = Par::Root;
        } else if leaves >= 2 {
            let kids = b.leaf_node.clone();
            let r = b.new_p(&kids);
            b.root = r;
            b.nodes[r].par = Par::Root;
        }
        b
    }

    fn alloc(&mut self, kind: Kind) -> usize {
        let id = self.nodes.len();
        self.nodes.push(DNode { kind, par: Par::None, sib: [NIL, NIL], ends: [NIL, NIL], count: 0, elem: NIL, leaf: NIL });
        self.mark.push(0);
        self.kids_stamp.push(0);
        self.vis_kids.push(Vec::new());
        self.lab_stamp.push(0);
        self.label.push(Label::Empty);
        self.pert_stamp.push(0);
        self.full_kids.push(Vec::new());
        self.partial_kids.push(Vec::new());
        self.pending.push(0);
        self.full_end.push(NIL);
        if kind == Kind::Q {
            let e = self.uf.len();
            self.uf.push(e);
            self.owner.push(id);
            self.nodes[id].elem = e;
        }
        id
    }

    fn find(&mut self, mut e: usize) -> usize {
        while self.uf[e] != e {
            self.uf[e] = self.uf[self.uf[e]];
            e = self.uf[e];
        }
        e
    }

    fn parent(&mut self, x: usize) -> Option<usize> {
        match self.nodes[x].par {
            Par::Root | Par::None => None,
            Par::P(p) => Some(p),
            Par::Q(e) => {
                let r = self.find(e);
                Some(self.owner[r])
            }
        }
    }

    fn label_of(&self, x: usize) -> Label {
        if self.lab_stamp[x] == self.stamp {
            self.label[x]
        } else {
            Label::Empty
        }
    }

    fn set_label(&mut self, x: usize, l: Label) {
        self.lab_stamp[x] = self.stamp;
        self.label[x] = l;
    }

    fn new_p(&mut self, kids: &[usize]) -> usize {
        let p = self.alloc(Kind::P);
        for &c in kids {
            self.p_push(p, c);
        }
        p
    }

    fn p_push(&mut self, p: usize, x: usize) {
        let tail = self.nodes[p].ends[1];
        self.nodes[x].sib = [tail, NIL];
        if tail != NIL {
            self.nodes[tail].sib[1] = x;
        } else {
            self.nodes[p].ends[0] = x;
        }
        self.nodes[p].ends[1] = x;
        self.nodes[p].count += 1;
        self.nodes[x].par = Par::P(p);
    }

    fn p_unlink(&mut self, x: usize) {
        let p = match self.nodes[x].par {
            Par::P(p) => p,
            other => panic!("p_unlink on non-P child {:?}", other),
        };
        let [prev, next] = self.nodes[x].sib;
        if prev != NIL {
            self.nodes[prev].sib[1] = next;
        } else {
            self.nodes[p].ends[0] = next;
        }
        if next != NIL {
            self.nodes[next].sib[0] = prev;
        } else {
            self.nodes[p].ends[1] = prev;
        }
        self.nodes[p].count -= 1;
        self.nodes[x].par = Par::None;
        self.nodes[x].sib = [NIL, NIL];
    }

    fn q_init(&mut self, q: usize, kids: &[usize]) {
        let e = self.nodes[q].elem;
        for (i, &c) in kids.iter().enumerate() {
            let prev = if i > 0 { kids[i - 1] } else { NIL };
            let next = if i + 1 < kids.len() { kids[i + 1] } else { NIL };
            self.nodes[c].sib = [prev, next];
            self.nodes[c].par = Par::Q(e);
        }
        self.nodes[q].ends = [kids[0], kids[kids.len() - 1]];
    }

    fn other_sib(&self, x: usize, prev: usize) -> usize {
        let s = self.nodes[x].sib;
        if s[0] == prev {
            s[1]
        } else {
            s[0]
        }
    }

    fn replace_sib(&mut self, x: usize, old: usize, new: usize) {
        let s = &mut self.nodes[x].sib;
        if s[0] == old {
            s[0] = new;
        } else {
            debug_assert_eq!(s[1], old);
            s[1] = new;
        }
    }

    fn set_nil_slot(&mut self, x: usize, v: usize) {
        let s = &mut self.nodes[x].sib;
        if s[0] == NIL {
            s[0] = v;
        } else {
            debug_assert_eq!(s[1], NIL);
            s[1] = v;
        }
    }

    fn other_end(&self, q: usize, e: usize) -> usize {
        let ends = self.nodes[q].ends;
        if ends[0] == e {
            ends[1]
        } else {
            ends[0]
        }
    }

    fn replace_end(&mut self, q: usize, old: usize, new: usize) {
        let ends = &mut self.nodes[q].ends;
        if ends[0] == old {
            ends[0] = new;
        } else {
            debug_assert_eq!(ends[1], old);
            ends[1] = new;
        }
    }

    /// `new` takes the place of `old` under `old`'s parent.
    fn replace(&mut self, old: usize, new: usize) {
        match self.nodes[old].par {
            Par::Root => {
                self.root = new;
                self.nodes[new].par = Par::Root;
            }
            Par::None => panic!("replace on detached node"),
            Par::P(p) => {
                let [prev, next] = self.nodes[old].sib;
                self.nodes[new].sib = [prev, next];
                if prev != NIL {
                    self.nodes[prev].sib[1] = new;
                } else {
                    self.nodes[p].ends[0] = new;
                }
                if next != NIL {
                    self.nodes[next].sib[0] = new;
                } else {
                    self.nodes[p].ends[1] = new;
                }
                self.nodes[new].par = Par::P(p);
            }
            Par::Q(e) => {
                let q = {
                    let r = self.find(e);
                    self.owner[r]
                };
                let s = self.nodes[old].sib;
                self.nodes[new].sib = s;
                for nb in s {
                    if nb != NIL {
                        self.replace_sib(nb, old, new);
                    }
                }
                if self.nodes[q].ends[0] == old {
                    self.nodes[q].ends[0] = new;
                }
                if self.nodes[q].ends[1] == old {
                    self.nodes[q].ends[1] = new;
                }
                self.nodes[new].par = Par::Q(e);
            }
        }
        self.nodes[old].par = Par::None;
        self.nodes[old].sib = [NIL, NIL];
    }

    /// Attaches `x` to `q` beyond its end child `end`.
    fn q_attach_end(&mut self, q: usize, end: usize, x: usize) {
        self.set_nil_slot(end, x);
        self.nodes[x].sib = [end, NIL];
        self.replace_end(q, end, x);
        self.nodes[x].par = Par::Q(self.nodes[q].elem);
    }

    fn union_into(&mut self, from_q: usize, into_q: usize) {
        let a = self.find(self.nodes[from_q].elem);
        let b = self.find(self.nodes[into_q].elem);
        if a != b {
            self.uf[a] = b;
        }
        self.owner[b] = into_q;
        self.nodes[from_q].kind = Kind::Dead;
    }

    /// Replaces partial child `y` of `x` by its children; the full end of `y`
    /// goes next to `full_nb`, the empty end next to `empty_nb` (either may be NIL).
    fn splice(&mut self, x: usize, y: usize, full_nb: usize, empty_nb: usize) {
        let fe = self.full_end[y];
        let ee = self.other_end(y, fe);
        for (nb, e) in [(full_nb, fe), (empty_nb, ee)] {
            if nb != NIL {
                self.replace_sib(nb, y, e);
                self.set_nil_slot(e, nb);
            } else {
                self.replace_end(x, y, e);
            }
        }
        self.union_into(y, x);
    }

    fn kill(&mut self, x: usize) {
        self.nodes[x].kind = Kind::Dead;
    }

    fn group(&mut self, kids: &[usize]) -> usize {
        if kids.len() == 1 {
            kids[0]
        } else {
            self.new_p(kids)
        }
    }

    fn reduce(&mut self, set: &[usize]) -> bool {
        self.stamp += 1;
        let st = self.stamp;
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &l in set {
            let x = self.leaf_node[l];
            if self.mark[x] == st {
                continue;
            }
            self.mark[x] = st;
            queue.push_back(x);
        }
        let leaves: Vec<usize> = queue.iter().copied().collect();
        if leaves.len() <= 1 {
            return true;
        }
        let mut active = leaves.len();
        let mut last_merge = NIL;
        while last_merge == NIL {
            let x = match queue.pop_front() {
                Some(x) => x,
                None => return false,
            };
            let p = match self.parent(x) {
                Some(p) => p,
                None => continue,
            };
            if self.kids_stamp[p] != st {
                self.kids_stamp[p] = st;
                self.vis_kids[p].clear();
            }
            self.vis_kids[p].push(x);
            if self.mark[p] != st {
                self.mark[p] = st;
                queue.push_back(p);
            } else {
                active -= 1;
                if active == 1 {
                    last_merge = p;
                }
            }
        }
        // The marked nodes now form one subtree; its top may lie above the
        // pertinent root, which is the first node below it with two visited children.
        let mut lca = last_merge;
        while let Some(p) = self.parent(lca) {
            if self.mark[p] != st {
                break;
            }
            lca = p;
        }
        while self.kids_stamp[lca] == st && self.vis_kids[lca].len() == 1 {
            lca = self.vis_kids[lca][0];
        }

        let mut work: VecDeque<usize> = leaves.into_iter().collect();
        while let Some(x) = work.pop_front() {
            let y = if self.nodes[x].kind == Kind::Leaf {
                self.set_label(x, Label::Full);
                x
            } else {
                let is_root = x == lca;
                let r = match self.nodes[x].kind {
                    Kind::P => self.template_p(x, is_root),
                    Kind::Q => self.template_q(x, is_root),
                    _ => unreachable!("dead node in pertinent subtree"),
                };
                match r {
                    Some(y) => y,
                    None => return false,
                }
            };
            if x == lca {
                return true;
            }
            let p = self.parent(y).expect("pertinent node below its root has a parent");
            if self.pert_stamp[p] != st {
                self.pert_stamp[p] = st;
                self.full_kids[p].clear();
                self.partial_kids[p].clear();
                self.pending[p] = self.vis_kids[p].len();
            }
            match self.label_of(y) {
                Label::Full => self.full_kids[p].push(y),
                Label::Partial => self.partial_kids[p].push(y),
                Label::Empty => unreachable!("processed node left empty"),
            }
            self.pending[p] -= 1;
            if self.pending[p] == 0 {
                work.push_back(p);
            }
        }
        true
    }

    fn pert_lists(&self, x: usize) -> (Vec<usize>, Vec<usize>) {
        if self.pert_stamp[x] == self.stamp {
            (self.full_kids[x].clone(), self.partial_kids[x].clone())
        } else {
            (Vec::new(), Vec::new())
        }
    }

    fn template_p(&mut self, x: usize, is_root: bool) -> Option<usize> {
        let (full, partial) = self.pert_lists(x);
        if partial.is_empty() && full.len() == self.nodes[x].count {
            self.set_label(x, Label::Full);
            return Some(x);
        }
        if partial.len() > 2 || (!is_root && partial.len() > 1) {
            return None;
        }
        for &f in &full {
            self.p_unlink(f);
        }
        if !is_root {
            if partial.is_empty() {
                let fgrp = self.group(&full);
                let z = self.alloc(Kind::Q);
                self.replace(x, z);
                let egrp = if self.nodes[x].count == 1 {
                    let c = self.nodes[x].ends[0];
                    self.p_unlink(c);
                    self.kill(x);
                    c
                } else {
                    x
                };
                self.q_init(z, &[egrp, fgrp]);
                self.full_end[z] = fgrp;
                self.set_label(z, Label::Partial);
                return Some(z);
            }
            let y = partial[0];
            self.p_unlink(y);
            self.replace(x, y);
            if !full.is_empty() {
                let fgrp = self.group(&full);
                let fe = self.full_end[y];
                self.q_attach_end(y, fe, fgrp);
                self.full_end[y] = fgrp;
            }
            match self.nodes[x].count {
                0 => self.kill(x),
                cnt => {
                    let egrp = if cnt == 1 {
                        let c = self.nodes[x].ends[0];
                        self.p_unlink(c);
                        self.kill(x);
                        c
                    } else {
                        x
                    };
                    let ee = self.other_end(y, self.full_end[y]);
                    self.q_attach_end(y, ee, egrp);
                }
            }
            self.set_label(y, Label::Partial);
            return Some(y);
        }
        match partial.len() {
            0 => {
                let fgrp = self.group(&full);
                self.p_push(x, fgrp);
            }
            1 | 2 => {
                let y = partial[0];
                if !full.is_empty() {
                    let fgrp = self.group(&full);
                    let fe = self.full_end[y];
                    self.q_attach_end(y, fe, fgrp);
                    self.full_end[y] = fgrp;
                }
                if partial.len() == 2 {
                    let y2 = partial[1];
                    self.p_unlink(y2);
                    let e1 = self.full_end[y];
                    let e2 = self.full_end[y2];
                    let far = self.other_end(y2, e2);
                    self.set_nil_slot(e1, e2);
                    self.set_nil_slot(e2, e1);
                    self.replace_end(y, e1, far);
                    self.union_into(y2, y);
                }
                if self.nodes[x].count == 1 {
                    self.p_unlink(y);
                    self.replace(x, y);
                    self.kill(x);
                }
            }
            _ => unreachable!(),
        }
        Some(x)
    }

    fn walk(&self, start: usize, dir: usize) -> (usize, usize, usize) {
        let mut prev = start;
        let mut cur = self.nodes[start].sib[dir];
        let mut cnt = 0;
        while cur != NIL && self.label_of(cur) != Label::Empty {
            cnt += 1;
            let nx = self.other_sib(cur, prev);
            prev = cur;
            cur = nx;
        }
        (prev, cur, cnt)
    }

    fn template_q(&mut self, x: usize, is_root: bool) -> Option<usize> {
        let (full, partial) = self.pert_lists(x);
        if partial.len() > 2 || (!is_root && partial.len() > 1) {
            return None;
        }
        let start = *full.first().or(partial.first())?;
        let (end_a, beyond_a, ca) = self.walk(start, 0);
        let (end_b, beyond_b, cb) = self.walk(start, 1);
        if 1 + ca + cb != full.len() + partial.len() {
            return None;
        }
        if partial.iter().any(|&y| y != end_a && y != end_b) {
            return None;
        }
        let at_a = beyond_a == NIL;
        let at_b = beyond_b == NIL;
        if partial.is_empty() && at_a && at_b {
            self.set_label(x, Label::Full);
            return Some(x);
        }
        if !is_root {
            let full_end_x;
            if let Some(&y) = partial.first() {
                if end_a == end_b {
                    if at_a {
                        self.splice(x, y, NIL, beyond_b);
                    } else if at_b {
                        self.splice(x, y, NIL, beyond_a);
                    } else {
                        return None;
                    }
                    full_end_x = self.full_end[y];
                } else if y == end_b {
                    if !at_a {
                        return None;
                    }
                    let inward = self.other_sib(y, beyond_b);
                    self.splice(x, y, inward, beyond_b);
                    full_end_x = end_a;
                } else {
                    if !at_b {
                        return None;
                    }
                    let inward = self.other_sib(y, beyond_a);
                    self.splice(x, y, inward, beyond_a);
                    full_end_x = end_b;
                }
            } else if at_a {
                full_end_x = end_a;
            } else if at_b {
                full_end_x = end_b;
            } else {
                return None;
            }
            self.full_end[x] = full_end_x;
            self.set_label(x, Label::Partial);
            return Some(x);
        }
        for &y in &partial {
            if end_a == end_b {
                return None;
            }
            let outward = if y == end_a { beyond_a } else { beyond_b };
            let inward = self.other_sib(y, outward);
            self.splice(x, y, inward, outward);
        }
        Some(x)
    }

    fn finish(mut self) -> PQTree {
        let mut nodes: Vec<PQNode> = Vec::new();
        let mut leaf_node = vec![NIL; self.leaf_node.len()];
        let root = if self.root == NIL {
            None
        } else {
            // (dynamic id, static parent)
            let mut stack = vec![(self.root, None::<usize>)];
            while let Some((x, par)) = stack.pop() {
                let kids = self.children_of(x);
                let kind = match self.nodes[x].kind {
                    Kind::Leaf => NodeKind::Leaf(self.nodes[x].leaf),
                    Kind::P => NodeKind::P,
                    Kind::Q if kids.len() <= 2 => NodeKind::P,
                    Kind::Q => NodeKind::Q,
                    Kind::Dead => unreachable!("dead node reachable"),
                };
                let id = nodes.len();
                nodes.push(PQNode { kind, children: Vec::new(), parent: par });
                if let NodeKind::Leaf(l) = kind {
                    leaf_node[l] = id;
                }
                if let Some(p) = par {
                    nodes[p].children.push(id);
                }
                for &c in kids.iter().rev() {
                    stack.push((c, Some(id)));
                }
            }
            Some(0)
        };
        self.nodes.clear();
        PQTree { nodes, root, leaf_node }
    }

    fn children_of(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::new();
        match self.nodes[x].kind {
            Kind::P => {
                let mut c = self.nodes[x].ends[0];
                while c != NIL {
                    out.push(c);
                    c = self.nodes[c].sib[1];
                }
            }
            Kind::Q => {
                let mut prev = NIL;
                let mut cur = self.nodes[x].ends[0];
                while cur != NIL {
                    out.push(cur);
                    let nx = self.other_sib(cur, prev);
                    prev = cur;
                    cur = nx;
                }
            }
            _ => {}
        }
        out
    }
}
