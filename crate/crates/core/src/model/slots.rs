//! Order-only positions relative to the finite bound endpoints.
//!
//! Sorted distinct endpoints `e_0 < ... < e_{k-1}` cut the line into slots:
//! slot `2i+1` is the point `e_i`, slot `2i` is the open gap below it and
//! slot `2k` is the gap above the last endpoint. A [`Pos`] is a slot plus a
//! rank that orders points sharing one gap. Real coordinates are assigned only
//! at the end by [`Materializer`].

use std::collections::HashMap;

use crate::model::{BoundPair, Coord, ExtCoord, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pos {
    pub slot: u32,
    pub rank: u32,
}

impl Pos {
    pub const START: Pos = Pos { slot: 0, rank: 0 };

    pub fn is_endpoint(self) -> bool {
        self.slot % 2 == 1
    }

    /// Next position strictly to the right with nothing in between.
    pub fn fresh_after(self) -> Pos {
        if self.is_endpoint() {
            Pos { slot: self.slot + 1, rank: 0 }
        } else {
            Pos { slot: self.slot, rank: self.rank + 1 }
        }
    }

    /// Position is `<=` the endpoint with the given key.
    pub fn le_key(self, key: i64) -> bool {
        (self.slot as i64) <= key
    }

    /// Position is `<` the endpoint with the given key.
    pub fn lt_key(self, key: i64) -> bool {
        (self.slot as i64) < key
    }

    /// Position is `>=` the endpoint with the given key.
    pub fn ge_key(self, key: i64) -> bool {
        (self.slot as i64) >= key
    }
}

/// Sorted distinct finite endpoints of an instance's bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointTable {
    values: Vec<Coord>,
}

impl EndpointTable {
    pub fn from_instance(inst: &Instance) -> EndpointTable {
        EndpointTable::with_extra(inst, &[])
    }

    pub fn with_extra(inst: &Instance, extra: &[Coord]) -> EndpointTable {
        EndpointTable::from_bounds(&inst.bounds, extra)
    }

    pub fn from_bounds(bounds: &[BoundPair], extra: &[Coord]) -> EndpointTable {
        let mut values: Vec<Coord> = extra.to_vec();
        for bp in bounds {
            for e in [&bp.left.lo, &bp.left.hi, &bp.right.lo, &bp.right.hi] {
                if let ExtCoord::Fin(c) = e {
                    values.push(c.clone());
                }
            }
        }
        values.sort_unstable();
        values.dedup();
        EndpointTable { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Coord] {
        &self.values
    }

    /// Largest slot index.
    pub fn top_slot(&self) -> u32 {
        2 * self.values.len() as u32
    }

    /// `-inf -> -1`, `e_i -> 2i+1`, `+inf -> 2k+1`. Keys compare like the values.
    pub fn key(&self, e: &ExtCoord) -> i64 {
        match e {
            ExtCoord::NegInf => -1,
            ExtCoord::PosInf => 2 * self.values.len() as i64 + 1,
            ExtCoord::Fin(c) => {
                let i = self.values.binary_search(c).expect("endpoint present in table");
                2 * i as i64 + 1
            }
        }
    }

    pub fn slot_of(&self, c: &Coord) -> Option<u32> {
        self.values.binary_search(c).ok().map(|i| 2 * i as u32 + 1)
    }

    pub fn neg_inf_key(&self) -> i64 {
        -1
    }

    pub fn pos_inf_key(&self) -> i64 {
        2 * self.values.len() as i64 + 1
    }

    /// Position of a finite key.
    pub fn key_pos(key: i64) -> Pos {
        debug_assert!(key >= 0 && key % 2 == 1);
        Pos { slot: key as u32, rank: 0 }
    }

    /// Leftmost position `>= key`; `None` for `-inf`.
    pub fn at_or_above(&self, key: i64) -> Option<Pos> {
        if key < 0 {
            None
        } else {
            Some(Pos { slot: key as u32, rank: 0 })
        }
    }

    /// Leftmost position `> key`; `None` for `-inf`.
    pub fn above(&self, key: i64) -> Option<Pos> {
        if key < 0 {
            None
        } else {
            Some(Pos { slot: key as u32 + 1, rank: 0 })
        }
    }

    /// Real value at the boundary of a slot run, used to report set extents.
    pub fn slot_lower_value(&self, slot: u32) -> (ExtCoord, bool) {
        if slot % 2 == 1 {
            (ExtCoord::Fin(self.values[(slot / 2) as usize].clone()), true)
        } else if slot == 0 {
            (ExtCoord::NegInf, false)
        } else {
            (ExtCoord::Fin(self.values[(slot / 2 - 1) as usize].clone()), false)
        }
    }

    pub fn slot_upper_value(&self, slot: u32) -> (ExtCoord, bool) {
        if slot % 2 == 1 {
            (ExtCoord::Fin(self.values[(slot / 2) as usize].clone()), true)
        } else if slot == self.top_slot() {
            (ExtCoord::PosInf, false)
        } else {
            (ExtCoord::Fin(self.values[(slot / 2) as usize].clone()), false)
        }
    }

    /// Key of the infimum of a run starting at `slot`.
    pub fn inf_key(&self, slot: u32) -> i64 {
        if slot % 2 == 1 {
            slot as i64
        } else {
            slot as i64 - 1
        }
    }

    /// Key of the supremum of a run ending at `slot`.
    pub fn sup_key(&self, slot: u32) -> i64 {
        if slot % 2 == 1 {
            slot as i64
        } else {
            slot as i64 + 1
        }
    }
}

/// Assigns exact coordinates to a finite set of positions, preserving order.
pub struct Materializer<'a> {
    table: &'a EndpointTable,
    ranks: HashMap<u32, Vec<u32>>,
}

impl<'a> Materializer<'a> {
    pub fn new<I: IntoIterator<Item = Pos>>(table: &'a EndpointTable, used: I) -> Materializer<'a> {
        let mut ranks: HashMap<u32, Vec<u32>> = HashMap::new();
        for p in used {
            if !p.is_endpoint() {
                ranks.entry(p.slot).or_default().push(p.rank);
            }
        }
        for v in ranks.values_mut() {
            v.sort_unstable();
            v.dedup();
        }
        Materializer { table, ranks }
    }

    pub fn coord(&self, p: Pos) -> Coord {
        let vals = &self.table.values;
        if p.is_endpoint() {
            return vals[(p.slot / 2) as usize].clone();
        }
        let list = self.ranks.get(&p.slot).expect("position registered");
        let j = list.binary_search(&p.rank).expect("rank registered") as i64;
        let m = list.len() as i64;
        let k = vals.len() as u32;
        if k == 0 {
            return Coord::int(j);
        }
        if p.slot == 0 {
            return vals[0].add_int(j - m);
        }
        if p.slot == 2 * k {
            return vals[k as usize - 1].add_int(j + 1);
        }
        let a = &vals[(p.slot / 2 - 1) as usize];
        let b = &vals[(p.slot / 2) as usize];
        if &a.add_int(m) < b {
            a.add_int(j + 1)
        } else {
            a.lerp(b, (j + 1) as u64, (m + 1) as u64)
        }
    }
}
