use itertools::Itertools;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Hypergraph};

/// The `r`-subsets of `[n]` in colex order, with their lower covers under
/// componentwise dominance. Families are `u128` bitsets over this order.
#[derive(Clone, Debug)]
pub struct GroundSet {
    n: usize,
    r: usize,
    sets: Vec<Vec<u32>>,
    masks: Vec<u64>,
    lower: Vec<u128>,
    index: FxHashMap<u64, usize>,
}

pub const MAX_GROUND: usize = 128;

impl GroundSet {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r == 0 || n < r {
            return Err(Error::InvalidArgument(format!(
                "need n >= r >= 1 (n = {n}, r = {r})"
            )));
        }
        if n > 64 {
            return Err(Error::TooManyVertices { n, max: 64 });
        }
        let mut sets: Vec<Vec<u32>> = (1..=n as u32).combinations(r).collect();
        if sets.len() > MAX_GROUND {
            return Err(Error::SpaceTooLarge(format!(
                "C({n}, {r}) = {} exceeds {MAX_GROUND} ground elements",
                sets.len()
            )));
        }
        sets.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        let masks: Vec<u64> = sets
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &v| m | 1 << (v - 1)))
            .collect();
        let index: FxHashMap<u64, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let lower = sets
            .iter()
            .map(|s| {
                let mut bits = 0u128;
                for k in 0..r {
                    let floor = if k == 0 { 0 } else { s[k - 1] };
                    if s[k] - 1 > floor {
                        let mut t = s.clone();
                        t[k] -= 1;
                        let m = t.iter().fold(0u64, |m, &v| m | 1 << (v - 1));
                        bits |= 1u128 << index[&m];
                    }
                }
                bits
            })
            .collect();
        Ok(GroundSet {
            n,
            r,
            sets,
            masks,
            lower,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn set(&self, i: usize) -> &[u32] {
        &self.sets[i]
    }

    pub fn mask(&self, i: usize) -> u64 {
        self.masks[i]
    }

    /// Bitset of the lower covers of element `i`.
    pub fn lower_covers(&self, i: usize) -> u128 {
        self.lower[i]
    }

    pub fn index_of(&self, vertices: &[u32]) -> Option<usize> {
        let m = vertices.iter().fold(0u64, |m, &v| m | 1 << (v - 1));
        self.index.get(&m).copied()
    }

    pub fn to_hypergraph(&self, bits: u128) -> Hypergraph {
        let mut edges = Vec::with_capacity(bits.count_ones() as usize);
        let mut b = bits;
        while b != 0 {
            let i = b.trailing_zeros() as usize;
            b &= b - 1;
            edges.push(Edge::from_sorted(self.sets[i].clone()));
        }
        Hypergraph::from_edges(self.r, self.n, edges)
    }

    pub fn bits_of(&self, g: &Hypergraph) -> Result<u128> {
        if g.r() != self.r || g.n() != self.n {
            return Err(Error::InvalidArgument(
                "graph does not match the ground set".into(),
            ));
        }
        Ok(g.edges()
            .iter()
            .map(|e| 1u128 << self.index_of(e.vertices()).expect("edge in ground set"))
            .fold(0, |a, b| a | b))
    }

    /// True iff `bits` is closed under taking lower covers.
    pub fn is_down_set(&self, bits: u128) -> bool {
        let mut b = bits;
        while b != 0 {
            let i = b.trailing_zeros() as usize;
            b &= b - 1;
            if self.lower[i] & !bits != 0 {
                return false;
            }
        }
        true
    }

    /// Smallest down-set containing `bits`.
    pub fn down_closure(&self, bits: u128) -> u128 {
        let mut out = bits;
        for i in (0..self.len()).rev() {
            if out >> i & 1 == 1 {
                out |= self.lower[i];
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::is_left_compressed;

    #[test]
    fn colex_order_and_covers() {
        let g = GroundSet::new(5, 3).unwrap();
        assert_eq!(g.len(), 10);
        assert_eq!(g.set(0), &[1, 2, 3]);
        assert_eq!(g.set(1), &[1, 2, 4]);
        assert_eq!(g.set(3), &[2, 3, 4]);
        assert_eq!(g.set(9), &[3, 4, 5]);
        assert_eq!(g.lower_covers(0), 0);
        // 245 covers 235 and 145
        let i = g.index_of(&[2, 4, 5]).unwrap();
        let expect =
            1u128 << g.index_of(&[2, 3, 5]).unwrap() | 1u128 << g.index_of(&[1, 4, 5]).unwrap();
        assert_eq!(g.lower_covers(i), expect);
    }

    #[test]
    fn down_sets_are_left_compressed() {
        let g = GroundSet::new(5, 3).unwrap();
        for bits in 0u128..1 << 10 {
            let h = g.to_hypergraph(bits);
            assert_eq!(g.is_down_set(bits), is_left_compressed(&h), "{h}");
        }
        assert!(g.is_down_set(g.down_closure(1 << 9)));
    }

    #[test]
    fn limits() {
        assert!(GroundSet::new(10, 3).is_ok());
        assert!(GroundSet::new(11, 3).is_err());
        assert!(GroundSet::new(2, 3).is_err());
    }
}
