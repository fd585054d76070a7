use crate::model::{Coord, ExtCoord, ModelError};

/// Closed interval of admissible endpoint positions, possibly unbounded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bound {
    pub lo: ExtCoord,
    pub hi: ExtCoord,
}

impl Bound {
    pub fn new(lo: ExtCoord, hi: ExtCoord) -> Result<Bound, ModelError> {
        if lo > hi {
            return Err(ModelError::InvertedBound(lo.to_string(), hi.to_string()));
        }
        if lo == ExtCoord::PosInf || hi == ExtCoord::NegInf {
            return Err(ModelError::NoFinitePoint(lo.to_string(), hi.to_string()));
        }
        Ok(Bound { lo, hi })
    }

    pub fn unbounded() -> Bound {
        Bound { lo: ExtCoord::NegInf, hi: ExtCoord::PosInf }
    }

    pub fn point(c: Coord) -> Bound {
        Bound { lo: ExtCoord::Fin(c.clone()), hi: ExtCoord::Fin(c) }
    }

    pub fn ints(lo: i64, hi: i64) -> Bound {
        Bound::new(ExtCoord::int(lo), ExtCoord::int(hi)).expect("lo <= hi")
    }

    pub fn contains(&self, c: &Coord) -> bool {
        !(self.lo > *c) && !(self.hi < *c)
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn intersect(&self, other: &Bound) -> Bound {
        Bound {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().min(other.hi.clone()),
        }
    }
}

/// Left bound 𝔏 and right bound ℜ of one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundPair {
    pub left: Bound,
    pub right: Bound,
}

impl BoundPair {
    pub fn unbounded() -> BoundPair {
        BoundPair { left: Bound::unbounded(), right: Bound::unbounded() }
    }

    pub fn new(left: Bound, right: Bound) -> BoundPair {
        BoundPair { left, right }
    }

    pub fn fixed(l: Coord, r: Coord) -> BoundPair {
        BoundPair { left: Bound::point(l), right: Bound::point(r) }
    }
}

/// Anything with a leftmost and rightmost point.
pub trait Span {
    fn left_end(&self) -> ExtCoord;
    fn right_end(&self) -> ExtCoord;
}

impl Span for Bound {
    fn left_end(&self) -> ExtCoord {
        self.lo.clone()
    }
    fn right_end(&self) -> ExtCoord {
        self.hi.clone()
    }
}

impl Span for crate::model::Interval {
    fn left_end(&self) -> ExtCoord {
        ExtCoord::Fin(self.lo.clone())
    }
    fn right_end(&self) -> ExtCoord {
        ExtCoord::Fin(self.hi.clone())
    }
}

/// `a ⋖ b`: `a` lies completely to the left of `b`, touching allowed.
pub fn subset_before<A: Span + ?Sized, B: Span + ?Sized>(a: &A, b: &B) -> bool {
    a.right_end() <= b.left_end()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn subset_order_examples() {
        assert!(subset_before(&Bound::ints(0, 1), &Bound::ints(1, 2)));
        assert!(!subset_before(&Bound::ints(0, 2), &Bound::ints(1, 3)));
        assert!(subset_before(&Bound::ints(5, 5), &Bound::ints(5, 5)));
        assert!(subset_before(&Bound::new(ExtCoord::NegInf, ExtCoord::int(0)).unwrap(), &Bound::ints(0, 0)));
    }

    #[test]
    fn rejects_bad_bounds() {
        assert!(Bound::new(ExtCoord::int(3), ExtCoord::int(2)).is_err());
        assert!(Bound::new(ExtCoord::PosInf, ExtCoord::PosInf).is_err());
        assert!(Bound::new(ExtCoord::NegInf, ExtCoord::NegInf).is_err());
    }

    fn iv() -> impl Strategy<Value = Bound> {
        (-20i64..20, 0i64..10).prop_map(|(a, len)| Bound::ints(a, a + len))
    }

    proptest! {
        #[test]
        fn transitive(a in iv(), b in iv(), c in iv()) {
            if subset_before(&a, &b) && subset_before(&b, &c) {
                prop_assert!(subset_before(&a, &c));
            }
        }

        #[test]
        fn antisymmetric_on_nondegenerate(a in iv(), b in iv()) {
            let nondeg = a.lo < a.hi && b.lo < b.hi;
            if nondeg && a != b && subset_before(&a, &b) {
                prop_assert!(!subset_before(&b, &a));
            }
        }
    }
}
