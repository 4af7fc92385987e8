use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use super::canon::{canonical_form, MAX_CANON_N};
use super::whole::{enumerate_all, WholeOptions};
use super::{ForbiddenSet, GroundSet};
use crate::error::{Error, Result};
use crate::hypergraph::{turan_count, Hypergraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    /// The search space was exhausted.
    Exact,
    /// A resource cap stopped the search; values are lower bounds.
    LowerBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupComparison {
    pub m: usize,
    /// `t_m^r(n)`.
    pub turan_count: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TuranResult {
    pub n: usize,
    pub r: usize,
    pub forbidden: Vec<Hypergraph>,
    pub max_edges: usize,
    /// Canonical forms of all extremal graphs when `n <= 7`, otherwise a
    /// single extremal graph.
    pub witnesses: Vec<Hypergraph>,
    pub status: SearchStatus,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<BlowupComparison>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TuranConfig {
    pub max_nodes: Option<u64>,
    /// Depth of the decision prefixes handed out as parallel work units;
    /// 0 runs a single shard.
    pub split_depth: usize,
    /// Report `t_m^r(n)` next to the result.
    pub compare_m: Option<usize>,
}

impl Default for TuranConfig {
    fn default() -> Self {
        TuranConfig {
            max_nodes: None,
            split_depth: 8,
            compare_m: None,
        }
    }
}

fn uniformity(forbidden: &[Hypergraph]) -> Result<usize> {
    let r = forbidden
        .first()
        .ok_or_else(|| Error::InvalidArgument("no forbidden graphs given".into()))?
        .r();
    if let Some(f) = forbidden.iter().find(|f| f.r() != r) {
        return Err(Error::UniformityMismatch {
            expected: r,
            found: f.r(),
        });
    }
    Ok(r)
}

struct Shared<'a> {
    ground: &'a GroundSet,
    forbidden: &'a ForbiddenSet,
    best: AtomicUsize,
    nodes: AtomicU64,
    cap: u64,
    capped: AtomicBool,
}

#[derive(Default)]
struct Local {
    best: Option<usize>,
    found: FxHashSet<u128>,
}

impl Local {
    fn record(&mut self, bits: u128, count: usize, keep_all: bool) {
        match self.best {
            Some(b) if count < b => return,
            Some(b) if count == b => {}
            _ => {
                self.best = Some(count);
                self.found.clear();
            }
        }
        if keep_all || self.found.is_empty() {
            self.found.insert(bits);
        } else if bits < *self.found.iter().next().expect("nonempty") {
            self.found.clear();
            self.found.insert(bits);
        }
    }

    fn merge(mut self, other: Local) -> Local {
        match (self.best, other.best) {
            (_, None) => self,
            (None, _) => other,
            (Some(a), Some(b)) if b > a => other,
            (Some(a), Some(b)) if a > b => self,
            _ => {
                self.found.extend(other.found);
                self
            }
        }
    }
}

impl Shared<'_> {
    fn prefixes(
        &self,
        i: usize,
        bits: u128,
        depth: usize,
        stack: &mut Vec<bool>,
        out: &mut Vec<(Vec<bool>, u128)>,
    ) -> Result<()> {
        if i == depth.min(self.ground.len()) {
            out.push((stack.clone(), bits));
            return Ok(());
        }
        let next = bits | 1u128 << i;
        if self.forbidden.free_after_adding(self.ground, next, i)? {
            stack.push(true);
            self.prefixes(i + 1, next, depth, stack, out)?;
            stack.pop();
        }
        stack.push(false);
        self.prefixes(i + 1, bits, depth, stack, out)?;
        stack.pop();
        Ok(())
    }

    fn branch(&self, i: usize, bits: u128, local: &mut Local, keep_all: bool) -> Result<()> {
        if self.capped.load(Ordering::Relaxed) {
            return Ok(());
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.cap {
            self.capped.store(true, Ordering::Relaxed);
            return Ok(());
        }
        let len = self.ground.len();
        let count = bits.count_ones() as usize;
        if count + (len - i) < self.best.load(Ordering::Relaxed) {
            return Ok(());
        }
        if i == len {
            local.record(bits, count, keep_all);
            self.best.fetch_max(count, Ordering::Relaxed);
            return Ok(());
        }
        let next = bits | 1u128 << i;
        if self.forbidden.free_after_adding(self.ground, next, i)? {
            self.branch(i + 1, next, local, keep_all)?;
        }
        self.branch(i + 1, bits, local, keep_all)
    }
}

/// `ex(n, forbidden)` by branch and bound over the colex-ordered candidate
/// edges, with freeness re-checked through each newly included edge.
pub fn turan_number(
    n: usize,
    forbidden: &[Hypergraph],
    config: &TuranConfig,
) -> Result<TuranResult> {
    let r = uniformity(forbidden)?;
    let ground = GroundSet::new(n, r)?;
    let set = ForbiddenSet::new(forbidden.to_vec())?;
    let shared = Shared {
        ground: &ground,
        forbidden: &set,
        best: AtomicUsize::new(0),
        nodes: AtomicU64::new(0),
        cap: config.max_nodes.unwrap_or(u64::MAX),
        capped: AtomicBool::new(false),
    };
    let keep_all = n <= MAX_CANON_N;
    let mut prefixes = Vec::new();
    shared.prefixes(0, 0, config.split_depth, &mut Vec::new(), &mut prefixes)?;
    let depth = config.split_depth.min(ground.len());
    let locals: Vec<Result<Local>> = prefixes
        .par_iter()
        .map(|(_, bits)| {
            let mut local = Local::default();
            shared.branch(depth, *bits, &mut local, keep_all)?;
            Ok(local)
        })
        .collect();
    let mut total = Local::default();
    for l in locals {
        total = total.merge(l?);
    }
    let capped = shared.capped.load(Ordering::Relaxed);
    let witnesses = finish_witnesses(&ground, total.found, keep_all)?;
    Ok(TuranResult {
        n,
        r,
        forbidden: forbidden.to_vec(),
        max_edges: total.best.unwrap_or(0),
        witnesses,
        status: if capped {
            SearchStatus::LowerBound
        } else {
            SearchStatus::Exact
        },
        nodes: shared.nodes.load(Ordering::Relaxed).min(shared.cap),
        comparison: config.compare_m.map(|m| BlowupComparison {
            m,
            turan_count: turan_count(m, r, n),
        }),
    })
}

fn finish_witnesses(
    ground: &GroundSet,
    found: FxHashSet<u128>,
    canonical: bool,
) -> Result<Vec<Hypergraph>> {
    if canonical {
        let mut set = BTreeSet::new();
        for bits in found {
            set.insert(
                canonical_form(&ground.to_hypergraph(bits))?
                    .edges()
                    .to_vec(),
            );
        }
        return Ok(set
            .into_iter()
            .map(|edges| Hypergraph::from_edges(ground.r(), ground.n(), edges))
            .collect());
    }
    Ok(found
        .into_iter()
        .min()
        .map(|b| ground.to_hypergraph(b))
        .into_iter()
        .collect())
}

/// `ex(n, forbidden)` by testing every edge subset; an independent check of
/// [`turan_number`] for tiny spaces.
pub fn turan_number_exhaustive(
    n: usize,
    forbidden: &[Hypergraph],
    options: WholeOptions,
) -> Result<TuranResult> {
    let r = uniformity(forbidden)?;
    if n > MAX_CANON_N {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_CANON_N,
        });
    }
    let best = std::cell::Cell::new(0usize);
    let mut found: Vec<Hypergraph> = Vec::new();
    let mut error = None;
    let counters = enumerate_all(
        n,
        r,
        WholeOptions {
            up_to_isomorphism: false,
            ..options
        },
        |g| {
            g.size() >= best.get()
                && forbidden
                    .iter()
                    .all(|f| match crate::freeness::is_free(g, f) {
                        Ok(free) => free,
                        Err(e) => {
                            error.get_or_insert(e);
                            false
                        }
                    })
        },
        |g| {
            if g.size() > best.get() {
                best.set(g.size());
                found.clear();
            }
            found.push(g.clone());
        },
    )?;
    if let Some(e) = error {
        return Err(e);
    }
    let best = best.get();
    let mut set = BTreeSet::new();
    for g in found.iter().filter(|g| g.size() == best) {
        set.insert(canonical_form(g)?.edges().to_vec());
    }
    Ok(TuranResult {
        n,
        r,
        forbidden: forbidden.to_vec(),
        max_edges: best,
        witnesses: set
            .into_iter()
            .map(|e| Hypergraph::from_edges(r, n, e))
            .collect(),
        status: SearchStatus::Exact,
        nodes: counters.nodes,
        comparison: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeness::is_free;
    use crate::hypergraph::{complete, linear_path, named, NamedGraph};

    #[test]
    fn trivial_values() {
        let f5 = named(NamedGraph::F5);
        let res = turan_number(4, std::slice::from_ref(&f5), &TuranConfig::default()).unwrap();
        assert_eq!(res.max_edges, 4);
        assert_eq!(res.status, SearchStatus::Exact);
        assert_eq!(res.witnesses, vec![complete(4, 3).unwrap()]);
        let edge = complete(3, 3).unwrap();
        let res = turan_number(6, &[edge], &TuranConfig::default()).unwrap();
        assert_eq!(res.max_edges, 0);
        assert_eq!(res.witnesses.len(), 1);
    }

    #[test]
    fn two_routes_agree_on_f5() {
        let f5 = named(NamedGraph::F5);
        let bnb = turan_number(5, std::slice::from_ref(&f5), &TuranConfig::default()).unwrap();
        let all =
            turan_number_exhaustive(5, std::slice::from_ref(&f5), WholeOptions::default()).unwrap();
        assert_eq!(bnb.max_edges, all.max_edges);
        assert_eq!(bnb.witnesses, all.witnesses);
        assert!((6..=9).contains(&bnb.max_edges));
        for w in &bnb.witnesses {
            assert!(is_free(w, &f5).unwrap());
            assert_eq!(w.size(), bnb.max_edges);
        }
    }

    #[test]
    fn shard_depth_does_not_matter() {
        let p2 = linear_path(2).unwrap();
        let base = turan_number(
            6,
            std::slice::from_ref(&p2),
            &TuranConfig {
                split_depth: 0,
                ..Default::default()
            },
        )
        .unwrap();
        for d in [3, 8, 20] {
            let res = turan_number(
                6,
                std::slice::from_ref(&p2),
                &TuranConfig {
                    split_depth: d,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(res.max_edges, base.max_edges);
            assert_eq!(res.witnesses, base.witnesses);
        }
    }

    #[test]
    fn node_cap_degrades_status() {
        let p2 = linear_path(2).unwrap();
        let cfg = TuranConfig {
            max_nodes: Some(50),
            compare_m: Some(4),
            ..Default::default()
        };
        let res = turan_number(7, &[p2], &cfg).unwrap();
        assert_eq!(res.status, SearchStatus::LowerBound);
        assert!(res.nodes <= 50);
        assert_eq!(res.comparison.unwrap().turan_count, 20);
    }
}
