use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::GroundSet;
use crate::error::{Error, Result};

/// Which families of `r`-sets are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpaceMode {
    /// Down-sets of the dominance order, i.e. left-compressed graphs.
    LeftCompressed,
    /// All edge subsets.
    All,
}

impl FromStr for SpaceMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "left_compressed" | "lc" => Ok(SpaceMode::LeftCompressed),
            "all" => Ok(SpaceMode::All),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for SpaceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceMode::LeftCompressed => "left_compressed",
            SpaceMode::All => "all",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    /// Decisions taken.
    pub nodes: u64,
    /// Complete families reached.
    pub visited: u64,
    /// Inclusions refused by the prune predicate.
    pub pruned: u64,
}

impl Counters {
    pub fn merge(&mut self, other: &Counters) {
        self.nodes += other.nodes;
        self.visited += other.visited;
        self.pruned += other.pruned;
    }
}

/// Serializable position of a [`Walker`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkerState {
    /// One entry per decided ground element: `true` when it was included and
    /// the exclusion branch is still pending.
    pub stack: Vec<bool>,
    pub bits: String,
    pub floor: usize,
    pub started: bool,
    pub done: bool,
    pub counters: Counters,
}

/// Include-first depth-first walk over the ground set in colex order.
/// `prune(ground, bits, i)` is asked before element `i` is added to form
/// `bits`; returning true skips every family containing that partial choice.
pub struct Walker<'a, P> {
    ground: &'a GroundSet,
    mode: SpaceMode,
    prune: P,
    stack: Vec<bool>,
    bits: u128,
    floor: usize,
    limit: usize,
    started: bool,
    done: bool,
    counters: Counters,
}

impl<'a, P: Fn(&GroundSet, u128, usize) -> bool> Walker<'a, P> {
    pub fn new(ground: &'a GroundSet, mode: SpaceMode, prune: P) -> Self {
        Walker {
            ground,
            mode,
            prune,
            stack: Vec::with_capacity(ground.len()),
            bits: 0,
            floor: 0,
            limit: ground.len(),
            started: false,
            done: false,
            counters: Counters::default(),
        }
    }

    /// Walks only the subtree below a fixed decision prefix.
    pub fn below(ground: &'a GroundSet, mode: SpaceMode, prune: P, prefix: &[bool]) -> Self {
        let mut w = Walker::new(ground, mode, prune);
        w.stack = prefix.to_vec();
        w.bits = bits_of(prefix);
        w.floor = prefix.len();
        w
    }

    pub fn restore(
        ground: &'a GroundSet,
        mode: SpaceMode,
        prune: P,
        state: &WalkerState,
    ) -> Result<Self> {
        let bits: u128 = state
            .bits
            .parse()
            .map_err(|_| Error::Checkpoint(format!("bad bitset `{}`", state.bits)))?;
        if state.stack.len() > ground.len()
            || state.floor > state.stack.len()
            || bits != bits_of(&state.stack)
        {
            return Err(Error::Checkpoint(
                "walker state does not fit the ground set".into(),
            ));
        }
        let mut w = Walker::new(ground, mode, prune);
        w.stack = state.stack.clone();
        w.bits = bits;
        w.floor = state.floor;
        w.started = state.started;
        w.done = state.done;
        w.counters = state.counters;
        Ok(w)
    }

    pub fn state(&self) -> WalkerState {
        WalkerState {
            stack: self.stack.clone(),
            bits: self.bits.to_string(),
            floor: self.floor,
            started: self.started,
            done: self.done,
            counters: self.counters,
        }
    }

    pub fn counters(&self) -> Counters {
        self.counters
    }

    fn descend(&mut self) {
        while self.stack.len() < self.limit {
            let i = self.stack.len();
            self.counters.nodes += 1;
            let allowed = match self.mode {
                SpaceMode::All => true,
                SpaceMode::LeftCompressed => self.ground.lower_covers(i) & !self.bits == 0,
            };
            if allowed {
                let next = self.bits | 1u128 << i;
                if (self.prune)(self.ground, next, i) {
                    self.counters.pruned += 1;
                    self.stack.push(false);
                } else {
                    self.bits = next;
                    self.stack.push(true);
                }
            } else {
                self.stack.push(false);
            }
        }
    }

    fn backtrack(&mut self) -> bool {
        while self.stack.len() > self.floor {
            let included = self.stack.pop().expect("nonempty");
            if included {
                let i = self.stack.len();
                self.bits &= !(1u128 << i);
                self.stack.push(false);
                return true;
            }
        }
        false
    }

    /// The next complete family, or `None` when the walk is over.
    pub fn next_family(&mut self) -> Option<u128> {
        if self.done {
            return None;
        }
        if self.started && !self.backtrack() {
            self.done = true;
            return None;
        }
        self.started = true;
        self.descend();
        self.counters.visited += 1;
        Some(self.bits)
    }

    /// Decision prefixes of length `depth` (with their counters), in walk order.
    pub(crate) fn prefixes(mut self, depth: usize) -> (Vec<Vec<bool>>, Counters) {
        self.limit = depth.min(self.ground.len());
        let mut out = Vec::new();
        while self.next_family().is_some() {
            out.push(self.stack.clone());
        }
        let mut c = self.counters;
        c.visited = 0;
        (out, c)
    }
}

fn bits_of(stack: &[bool]) -> u128 {
    stack
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .fold(0, |acc, (i, _)| acc | 1u128 << i)
}

/// Sequential walk calling `visit` on every family.
pub fn walk<P, V>(ground: &GroundSet, mode: SpaceMode, prune: P, mut visit: V) -> Counters
where
    P: Fn(&GroundSet, u128, usize) -> bool,
    V: FnMut(u128),
{
    let mut w = Walker::new(ground, mode, prune);
    while let Some(bits) = w.next_family() {
        visit(bits);
    }
    w.counters()
}

/// Parallel walk: the subtrees below every decision prefix of length
/// `split_depth` are folded independently and the results merged in walk
/// order, so the outcome does not depend on scheduling.
pub fn par_walk<P, A, I, F, M>(
    ground: &GroundSet,
    mode: SpaceMode,
    prune: P,
    split_depth: usize,
    init: I,
    fold: F,
    merge: M,
) -> (A, Counters)
where
    P: Fn(&GroundSet, u128, usize) -> bool + Sync,
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, u128) + Sync,
    M: Fn(A, A) -> A,
{
    let (prefixes, mut counters) = Walker::new(ground, mode, &prune).prefixes(split_depth);
    let parts: Vec<(A, Counters)> = prefixes
        .par_iter()
        .map(|p| {
            let mut w = Walker::below(ground, mode, &prune, p);
            let mut acc = init();
            while let Some(bits) = w.next_family() {
                fold(&mut acc, bits);
            }
            (acc, w.counters())
        })
        .collect();
    let mut total = init();
    for (acc, c) in parts {
        total = merge(total, acc);
        counters.merge(&c);
    }
    (total, counters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(n: usize, mode: SpaceMode) -> Vec<u128> {
        let g = GroundSet::new(n, 3).unwrap();
        let mut out = Vec::new();
        walk(&g, mode, |_, _, _| false, |b| out.push(b));
        out
    }

    #[test]
    fn chain_of_four() {
        assert_eq!(collect(4, SpaceMode::LeftCompressed).len(), 5);
        assert_eq!(collect(4, SpaceMode::All).len(), 16);
    }

    #[test]
    fn matches_brute_force_at_five() {
        let g = GroundSet::new(5, 3).unwrap();
        let mut walked = collect(5, SpaceMode::LeftCompressed);
        walked.sort_unstable();
        let brute: Vec<u128> = (0u128..1 << 10).filter(|&b| g.is_down_set(b)).collect();
        assert_eq!(walked, brute);
    }

    #[test]
    fn prune_on_minimum_element() {
        let g = GroundSet::new(5, 3).unwrap();
        let mut out = Vec::new();
        let c = walk(
            &g,
            SpaceMode::LeftCompressed,
            |_, b, _| b & 1 == 1,
            |b| out.push(b),
        );
        assert_eq!(out, vec![0]);
        assert_eq!(c.visited, 1);
        assert_eq!(c.pruned, 1);
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = GroundSet::new(6, 3).unwrap();
        let prune = |g: &GroundSet, b: u128, _| b.count_ones() > 6 && !g.is_empty();
        let mut seq = Vec::new();
        let c1 = walk(&g, SpaceMode::LeftCompressed, prune, |b| seq.push(b));
        for depth in [0, 3, 7] {
            let (par, c2) = par_walk(
                &g,
                SpaceMode::LeftCompressed,
                prune,
                depth,
                Vec::new,
                |acc: &mut Vec<u128>, b| acc.push(b),
                |mut a, b| {
                    a.extend(b);
                    a
                },
            );
            assert_eq!(par, seq);
            assert_eq!(c1, c2);
        }
    }

    #[test]
    fn resume_from_state() {
        let g = GroundSet::new(5, 3).unwrap();
        let full = collect(5, SpaceMode::LeftCompressed);
        let mut w = Walker::new(&g, SpaceMode::LeftCompressed, |_, _, _| false);
        let mut got: Vec<u128> = (0..7).map(|_| w.next_family().unwrap()).collect();
        let state = w.state();
        let mut w2 =
            Walker::restore(&g, SpaceMode::LeftCompressed, |_, _, _| false, &state).unwrap();
        while let Some(b) = w2.next_family() {
            got.push(b);
        }
        assert_eq!(got, full);
        let mut w = Walker::new(&g, SpaceMode::LeftCompressed, |_, _, _| false);
        while w.next_family().is_some() {}
        assert_eq!(w2.counters(), w.counters());
    }
}
