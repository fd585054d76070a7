//! Clique orders: PQ-trees over maximal cliques and constrained frontiers.

mod frontier;
mod pqtree;

pub use frontier::{minimal_extraction, FrontierProblem, Pin, SetItem};
pub use pqtree::{NodeKind, PQNode, PQTree};

use thiserror::Error;

use crate::chordal::CliqueSet;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CliqueOrderError {
    #[error("no clique order keeps every vertex consecutive")]
    NoConsecutiveOrder,
    #[error("no frontier extends the clique order")]
    Infeasible,
}

/// PQ-tree whose frontiers are the clique orders with every vertex consecutive.
pub fn build_pqtree(cliques: &CliqueSet) -> Result<PQTree, CliqueOrderError> {
    PQTree::from_sets(cliques.len(), &cliques.incidence).ok_or(CliqueOrderError::NoConsecutiveOrder)
}

/// Left-to-right forcing between cliques, through per-clique extents.
///
/// `extents[c] = (left, right)` are order keys of the infimum and supremum of
/// `J_c`; `a` precedes `b` iff `right(a) <= left(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePartialOrder {
    pub extents: Vec<(i64, i64)>,
}

impl CliquePartialOrder {
    pub fn new(extents: Vec<(i64, i64)>) -> CliquePartialOrder {
        CliquePartialOrder { extents }
    }

    /// Builds keys from any totally ordered extent values.
    pub fn from_values<T: Ord + Clone>(extents: &[(T, T)]) -> CliquePartialOrder {
        let mut all: Vec<T> = extents.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
        all.sort();
        all.dedup();
        let key = |v: &T| all.binary_search(v).expect("value present") as i64;
        CliquePartialOrder { extents: extents.iter().map(|(a, b)| (key(a), key(b))).collect() }
    }

    pub fn len(&self) -> usize {
        self.extents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extents.is_empty()
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        a != b && self.extents[a].1 <= self.extents[b].0
    }
}

/// A frontier of `tree` in which `a` comes before `b` whenever `a` precedes `b`.
pub fn constrained_frontier(tree: &PQTree, po: &CliquePartialOrder) -> Result<Vec<usize>, CliqueOrderError> {
    let mut p = FrontierProblem::new(tree);
    for (c, &(left, right)) in po.extents.iter().enumerate() {
        p.leaf_lower[c] = right;
        p.leaf_upper[c] = left;
    }
    p.solve(tree).ok_or(CliqueOrderError::Infeasible)
}
