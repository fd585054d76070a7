use std::collections::BTreeMap;

use crate::model::{Bound, BoundPair, ExtCoord, Graph, GraphClass, Instance, Interval, ModelError};

/// Partial representation extension as a bounded instance: predrawn intervals
/// become singleton bounds, everything else is unbounded.
pub fn reduce_repext(
    graph: &Graph,
    predrawn: &BTreeMap<usize, Interval>,
    class: GraphClass,
) -> Result<Instance, ModelError> {
    let n = graph.n();
    for (&u, iu) in predrawn {
        if u >= n {
            return Err(ModelError::VertexOutOfRange(u, n));
        }
        if iu.lo > iu.hi {
            return Err(ModelError::InvalidPartial(u, u));
        }
        for (&v, iv) in predrawn.range(u + 1..) {
            if graph.has_edge(u, v) != iu.intersects(iv) {
                return Err(ModelError::InvalidPartial(u, v));
            }
            if class == GraphClass::ProperInt && (iu.properly_inside(iv) || iv.properly_inside(iu)) {
                return Err(ModelError::InvalidPartial(u, v));
            }
        }
    }
    let bounds = (0..n)
        .map(|v| match predrawn.get(&v) {
            Some(iv) => BoundPair::fixed(iv.lo.clone(), iv.hi.clone()),
            None => BoundPair::unbounded(),
        })
        .collect();
    Instance::new(graph.clone(), bounds, class)
}

/// `A_v ⊆ I_v ⊆ B_v` as bounds. Missing `A_v` is SubSet, missing `B_v` is SuperSet.
pub fn reduce_inclusion(
    graph: &Graph,
    inner: &[Option<Interval>],
    outer: &[Option<Interval>],
    class: GraphClass,
) -> Result<Instance, ModelError> {
    let n = graph.n();
    if inner.len() != n || outer.len() != n {
        return Err(ModelError::BoundCount(inner.len().min(outer.len()), n));
    }
    let fin = |c: &crate::model::Coord| ExtCoord::Fin(c.clone());
    let mut bounds = Vec::with_capacity(n);
    for v in 0..n {
        let bp = match (&inner[v], &outer[v]) {
            (Some(a), Some(b)) => {
                if !(b.lo <= a.lo && a.hi <= b.hi) {
                    return Err(ModelError::BadNesting(v));
                }
                BoundPair::new(
                    Bound { lo: fin(&b.lo), hi: fin(&a.lo) },
                    Bound { lo: fin(&a.hi), hi: fin(&b.hi) },
                )
            }
            (None, Some(b)) => {
                let bb = Bound { lo: fin(&b.lo), hi: fin(&b.hi) };
                BoundPair::new(bb.clone(), bb)
            }
            (Some(a), None) => BoundPair::new(
                Bound { lo: ExtCoord::NegInf, hi: fin(&a.lo) },
                Bound { lo: fin(&a.hi), hi: ExtCoord::PosInf },
            ),
            (None, None) => BoundPair::unbounded(),
        };
        bounds.push(bp);
    }
    Instance::new(graph.clone(), bounds, class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Coord;

    #[test]
    fn repext_examples() {
        let g = Graph::complete(2);
        let mut pre = BTreeMap::new();
        pre.insert(0, Interval::ints(0, 1));
        let inst = reduce_repext(&g, &pre, GraphClass::Int).unwrap();
        assert_eq!(inst.bounds[0], BoundPair::new(Bound::ints(0, 0), Bound::ints(1, 1)));
        assert_eq!(inst.bounds[1], BoundPair::unbounded());

        let inst = reduce_repext(&g, &BTreeMap::new(), GraphClass::Int).unwrap();
        assert!(inst.bounds.iter().all(|b| *b == BoundPair::unbounded()));
    }

    #[test]
    fn repext_rejects_bad_partial() {
        let g = Graph::path(3);
        let mut pre = BTreeMap::new();
        pre.insert(0, Interval::ints(0, 1));
        pre.insert(2, Interval::new(Coord::new(1, 2), Coord::int(2)));
        assert_eq!(reduce_repext(&g, &pre, GraphClass::Int).unwrap_err(), ModelError::InvalidPartial(0, 2));
    }

    #[test]
    fn inclusion_examples() {
        let g = Graph::empty(1);
        let a = Interval::ints(1, 2);
        let b = Interval::ints(0, 3);
        let both = reduce_inclusion(&g, &[Some(a.clone())], &[Some(b.clone())], GraphClass::Int).unwrap();
        assert_eq!(both.bounds[0], BoundPair::new(Bound::ints(0, 1), Bound::ints(2, 3)));

        let sub = reduce_inclusion(&g, &[None], &[Some(b.clone())], GraphClass::Int).unwrap();
        assert_eq!(sub.bounds[0], BoundPair::new(Bound::ints(0, 3), Bound::ints(0, 3)));

        let sup = reduce_inclusion(&g, &[Some(a.clone())], &[None], GraphClass::Int).unwrap();
        assert_eq!(sup.bounds[0].left, Bound::new(ExtCoord::NegInf, ExtCoord::int(1)).unwrap());
        assert_eq!(sup.bounds[0].right, Bound::new(ExtCoord::int(2), ExtCoord::PosInf).unwrap());

        let bad = reduce_inclusion(&g, &[Some(b)], &[Some(a)], GraphClass::Int);
        assert_eq!(bad.unwrap_err(), ModelError::BadNesting(0));
    }
}
