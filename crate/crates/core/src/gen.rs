//! Seeded instance generators.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::model::{Bound, BoundPair, Coord, ExtCoord, Graph, GraphClass, Instance, Interval, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    RandomInterval,
    RandomProper,
    Repext,
    AdversarialBounds,
}

impl GenKind {
    pub const ALL: [GenKind; 4] = [GenKind::RandomInterval, GenKind::RandomProper, GenKind::Repext, GenKind::AdversarialBounds];

    pub fn as_str(self) -> &'static str {
        match self {
            GenKind::RandomInterval => "random-interval",
            GenKind::RandomProper => "random-proper",
            GenKind::Repext => "repext",
            GenKind::AdversarialBounds => "adversarial-bounds",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown generator kind {0:?}")]
pub struct UnknownKind(pub String);

impl FromStr for GenKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<GenKind, UnknownKind> {
        GenKind::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| UnknownKind(s.to_string()))
    }
}

/// A generated instance with the representation its bounds were drawn around.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub instance: Instance,
    pub witness: Representation,
}

/// Intersection graph of integer intervals, by a sweep over sorted left endpoints.
pub fn intersection_graph(ivs: &[(i64, i64)]) -> Graph {
    let mut idx: Vec<usize> = (0..ivs.len()).collect();
    idx.sort_by_key(|&i| (ivs[i].0, i));
    let mut edges = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    for &v in &idx {
        let l = ivs[v].0;
        active.retain(|&u| ivs[u].1 >= l);
        edges.extend(active.iter().map(|&u| (u.min(v), u.max(v))));
        active.push(v);
    }
    Graph::from_edges(ivs.len(), &edges).expect("sweep emits each pair once")
}

fn random_intervals(n: usize, rng: &mut ChaCha8Rng, span: i64, max_len: i64) -> Vec<(i64, i64)> {
    (0..n)
        .map(|_| {
            let l = rng.gen_range(0..span.max(1));
            (l, l + rng.gen_range(0..=max_len))
        })
        .collect()
}

fn unit_intervals(n: usize, rng: &mut ChaCha8Rng, span: i64, len: i64) -> Vec<(i64, i64)> {
    (0..n)
        .map(|_| {
            let l = rng.gen_range(0..span.max(1));
            (l, l + len)
        })
        .collect()
}

fn around(c: i64, slack: i64, inf_p: f64, rng: &mut ChaCha8Rng) -> Bound {
    let lo = if rng.gen_bool(inf_p) { ExtCoord::NegInf } else { ExtCoord::int(c - rng.gen_range(0..=slack)) };
    let hi = if rng.gen_bool(inf_p) { ExtCoord::PosInf } else { ExtCoord::int(c + rng.gen_range(0..=slack)) };
    Bound::new(lo, hi).expect("ordered bound")
}

/// Moves a finite bound by a random offset; the witness may fall outside.
fn perturb(b: Bound, rng: &mut ChaCha8Rng, amount: i64) -> Bound {
    let d = rng.gen_range(-amount..=amount);
    let shift = |e: &ExtCoord| match e {
        ExtCoord::Fin(c) => ExtCoord::Fin(c.add_int(d)),
        other => other.clone(),
    };
    Bound::new(shift(&b.lo), shift(&b.hi)).unwrap_or(b)
}

fn with_bounds(
    ivs: Vec<(i64, i64)>,
    class: GraphClass,
    rng: &mut ChaCha8Rng,
    sat_only: bool,
    slack: i64,
    inf_p: f64,
) -> Generated {
    let graph = intersection_graph(&ivs);
    let mut bounds = Vec::with_capacity(ivs.len());
    for &(l, r) in &ivs {
        let mut left = around(l, slack, inf_p, rng);
        let mut right = around(r, slack, inf_p, rng);
        if !sat_only {
            if rng.gen_bool(0.1) {
                left = perturb(left, rng, 3);
            }
            if rng.gen_bool(0.1) {
                right = perturb(right, rng, 3);
            }
        }
        bounds.push(BoundPair::new(left, right));
    }
    let witness = Representation::new(ivs.iter().map(|&(l, r)| Interval::ints(l, r)).collect());
    Generated { instance: Instance::new(graph, bounds, class).expect("bound count"), witness }
}

/// Deterministic per `(kind, n, seed, sat_only)`. With `sat_only` the witness satisfies the bounds.
pub fn generate(kind: GenKind, n: usize, seed: u64, sat_only: bool) -> Generated {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = 4 * n as i64;
    match kind {
        GenKind::RandomInterval => {
            let ivs = random_intervals(n, &mut rng, span, 8);
            with_bounds(ivs, GraphClass::Int, &mut rng, sat_only, 3, 0.1)
        }
        GenKind::RandomProper => {
            let ivs = unit_intervals(n, &mut rng, span, 6);
            with_bounds(ivs, GraphClass::ProperInt, &mut rng, sat_only, 3, 0.1)
        }
        GenKind::Repext => {
            let ivs = random_intervals(n, &mut rng, span, 8);
            let graph = intersection_graph(&ivs);
            let forced = rng.gen_range(0..n.max(1));
            let bounds = ivs
                .iter()
                .enumerate()
                .map(|(v, &(l, r))| {
                    if v == forced || rng.gen_bool(0.3) {
                        BoundPair::fixed(Coord::int(l), Coord::int(r))
                    } else {
                        BoundPair::unbounded()
                    }
                })
                .collect();
            let witness = Representation::new(ivs.iter().map(|&(l, r)| Interval::ints(l, r)).collect());
            let mut g = Generated { instance: Instance::new(graph, bounds, GraphClass::Int).expect("bound count"), witness };
            if !sat_only {
                for bp in g.instance.bounds.iter_mut() {
                    if bp.left.lo.is_finite() && rng.gen_bool(0.05) {
                        let d = rng.gen_range(1..=2);
                        let p = |b: &Bound| Bound::point(b.lo.finite().expect("fixed").add_int(d));
                        *bp = BoundPair::new(p(&bp.left), p(&bp.right));
                    }
                }
            }
            g
        }
        GenKind::AdversarialBounds => {
            // Coarse grid: many shared endpoints, tight and degenerate bounds.
            let ivs = random_intervals(n, &mut rng, (n as i64 / 2).max(2), 2);
            with_bounds(ivs, GraphClass::Int, &mut rng, sat_only, 1, 0.02)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::check_representation;

    #[test]
    fn sweep_matches_pairwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let ivs = random_intervals(12, &mut rng, 20, 6);
            let g = intersection_graph(&ivs);
            for u in 0..12 {
                for v in u + 1..12 {
                    let meet = ivs[u].0 <= ivs[v].1 && ivs[v].0 <= ivs[u].1;
                    assert_eq!(g.has_edge(u, v), meet);
                }
            }
        }
    }

    #[test]
    fn witnesses_fit_when_sat_only() {
        for kind in GenKind::ALL {
            for seed in 0..20 {
                let g = generate(kind, 40, seed, true);
                assert!(check_representation(&g.instance, &g.witness).is_valid(), "{kind} seed {seed}");
            }
        }
    }

    #[test]
    fn deterministic_and_named() {
        assert_eq!(generate(GenKind::RandomInterval, 100, 7, false), generate(GenKind::RandomInterval, 100, 7, false));
        assert_eq!("repext".parse::<GenKind>(), Ok(GenKind::Repext));
        assert!("nope".parse::<GenKind>().is_err());
    }

    #[test]
    fn repext_has_singleton_pair() {
        let g = generate(GenKind::Repext, 50, 1, false);
        assert!(g.instance.bounds.iter().any(|bp| bp.left.lo == bp.left.hi && bp.right.lo == bp.right.hi && bp.left.lo.is_finite()));
    }
}
