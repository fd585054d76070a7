//! Deterministic corpus of small instances for oracle comparisons.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::model::{Bound, BoundPair, ExtCoord, Graph, GraphClass, Instance};

/// How many instances to emit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallCounts {
    /// Vertex counts for which every labeled graph is emitted.
    pub exhaustive: Vec<usize>,
    /// Bound sets drawn per exhaustively listed graph.
    pub bound_sets: usize,
    pub n5: usize,
    pub n6: usize,
}

impl Default for SmallCounts {
    fn default() -> SmallCounts {
        SmallCounts { exhaustive: vec![4], bound_sets: 100, n5: 500, n6: 0 }
    }
}

const GRID_TOP: i64 = 6;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("simple graph")
}

fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let p: f64 = rng.gen_range(0.2..0.85);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("simple graph")
}

fn any_bound(rng: &mut ChaCha8Rng) -> Bound {
    let lo = if rng.gen_bool(0.2) { ExtCoord::NegInf } else { ExtCoord::int(rng.gen_range(0..=GRID_TOP)) };
    let hi = match &lo {
        ExtCoord::NegInf if rng.gen_bool(0.3) => ExtCoord::PosInf,
        ExtCoord::NegInf => ExtCoord::int(rng.gen_range(0..=GRID_TOP)),
        _ if rng.gen_bool(0.2) => ExtCoord::PosInf,
        ExtCoord::Fin(c) => ExtCoord::Fin(c.add_int(rng.gen_range(0..=3))),
        ExtCoord::PosInf => unreachable!(),
    };
    Bound::new(lo, hi).expect("ordered bound")
}

/// Bound around `c`, sometimes degenerate and sometimes half-infinite.
fn bound_near(c: i64, rng: &mut ChaCha8Rng) -> Bound {
    let lo = if rng.gen_bool(0.15) { ExtCoord::NegInf } else { ExtCoord::int(c - rng.gen_range(0..=2)) };
    let hi = if rng.gen_bool(0.15) { ExtCoord::PosInf } else { ExtCoord::int(c + rng.gen_range(0..=2)) };
    Bound::new(lo, hi).expect("ordered bound")
}

/// One bound pair per vertex on the small integer grid.
pub fn random_small_bounds(n: usize, rng: &mut ChaCha8Rng) -> Vec<BoundPair> {
    (0..n)
        .map(|_| {
            if rng.gen_bool(0.15) {
                return BoundPair::unbounded();
            }
            let a = rng.gen_range(0..=GRID_TOP);
            let b = rng.gen_range(a..=GRID_TOP);
            let left = if rng.gen_bool(0.15) { any_bound(rng) } else { bound_near(a, rng) };
            let right = if rng.gen_bool(0.15) { any_bound(rng) } else { bound_near(b, rng) };
            BoundPair::new(left, right)
        })
        .collect()
}

/// All labeled graphs on the exhaustive sizes with seeded bounds, then seeded samples at n = 5, 6.
/// Every instance has class INT; callers switch class with `with_class`.
pub fn enumerate_small_instances(seed: u64, counts: &SmallCounts) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for &n in &counts.exhaustive {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0..1u64 << pairs {
            let g = graph_from_mask(n, mask);
            for _ in 0..counts.bound_sets {
                let bounds = random_small_bounds(n, &mut rng);
                out.push(Instance::new(g.clone(), bounds, GraphClass::Int).expect("bound count"));
            }
        }
    }
    for (n, count) in [(5, counts.n5), (6, counts.n6)] {
        for _ in 0..count {
            let g = random_graph(n, &mut rng);
            let bounds = random_small_bounds(n, &mut rng);
            out.push(Instance::new(g, bounds, GraphClass::Int).expect("bound count"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn all_graphs_on_four() {
        let c = SmallCounts { exhaustive: vec![4], bound_sets: 1, n5: 0, n6: 0 };
        let v = enumerate_small_instances(3, &c);
        assert_eq!(v.len(), 64);
        let distinct: HashSet<Vec<(usize, usize)>> = v.iter().map(|i| i.graph.edges().collect()).collect();
        assert_eq!(distinct.len(), 64);
    }

    #[test]
    fn deterministic() {
        let c = SmallCounts { exhaustive: vec![3], bound_sets: 4, n5: 10, n6: 2 };
        assert_eq!(enumerate_small_instances(9, &c), enumerate_small_instances(9, &c));
        assert_ne!(enumerate_small_instances(9, &c), enumerate_small_instances(10, &c));
    }

    #[test]
    fn five_vertex_count() {
        let c = SmallCounts { exhaustive: vec![], bound_sets: 0, n5: 500, n6: 0 };
        let v = enumerate_small_instances(1, &c);
        assert_eq!(v.len(), 500);
        assert!(v.iter().all(|i| i.n() == 5));
    }

    #[test]
    fn bounds_cover_special_cases() {
        let c = SmallCounts::default();
        let v = enumerate_small_instances(0, &c);
        assert_eq!(v.len(), 64 * 100 + 500);
        let all: Vec<&Bound> = v.iter().flat_map(|i| i.bounds.iter().flat_map(|b| [&b.left, &b.right])).collect();
        assert!(all.iter().any(|b| b.lo == ExtCoord::NegInf));
        assert!(all.iter().any(|b| b.hi == ExtCoord::PosInf));
        assert!(all.iter().any(|b| b.lo == b.hi));
    }
}
