use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checkpoint::{SearchCheckpoint, CHECKPOINT_VERSION};
use super::{Counters, ForbiddenSet, GroundSet, SpaceDescriptor, SpaceMode, Walker};
use crate::error::{Error, Result};
use crate::freeness::is_free;
use crate::hypergraph::{complete, induced, linear_path, named, Hypergraph, NamedGraph};
use crate::lagrangian::{maximize, MaximizeOptions};

/// Patterns supported by [`density_evidence`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DensityPattern {
    P2,
    T2,
    P3,
    P4,
}

impl DensityPattern {
    pub fn graph(self) -> Hypergraph {
        match self {
            DensityPattern::P2 => linear_path(2).expect("t >= 1"),
            DensityPattern::P3 => linear_path(3).expect("t >= 1"),
            DensityPattern::P4 => linear_path(4).expect("t >= 1"),
            DensityPattern::T2 => named(NamedGraph::T2),
        }
    }

    /// `|V(F)| - 1`, the order of the comparison clique.
    pub fn clique_order(self) -> usize {
        self.graph().n() - 1
    }
}

impl FromStr for DensityPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().replace('_', "").as_str() {
            "P2" => Ok(DensityPattern::P2),
            "T2" => Ok(DensityPattern::T2),
            "P3" => Ok(DensityPattern::P3),
            "P4" => Ok(DensityPattern::P4),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for DensityPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct DensityConfig {
    /// Optimizer settings used on every survivor.
    pub inner: MaximizeOptions,
    /// Settings used to re-certify the best candidates.
    pub full: MaximizeOptions,
    pub top_k: usize,
    /// Only evaluate survivors whose non-isolated vertices cover pairs.
    pub covering_filter: bool,
    pub split_depth: usize,
    /// Shards run between checkpoints and cap checks.
    pub batch: usize,
}

impl Default for DensityConfig {
    fn default() -> Self {
        DensityConfig {
            inner: MaximizeOptions::fast(),
            full: MaximizeOptions::default(),
            top_k: 32,
            covering_filter: true,
            split_depth: 12,
            batch: 256,
        }
    }
}

/// Resource caps and checkpoint files of one run.
#[derive(Clone, Debug, Default)]
pub struct RunControl {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
    /// Written after every batch and when a cap stops the run.
    pub checkpoint: Option<PathBuf>,
    pub resume_from: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub value: f64,
    pub certified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_value: Option<String>,
    pub graph: Hypergraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityCounts {
    pub nodes: u64,
    /// F-free graphs reached.
    pub free_graphs: u64,
    pub pruned: u64,
    /// Survivors passed to the optimizer.
    pub evaluated: u64,
    /// Survivors skipped by the covering filter.
    pub skipped_uncovered: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Separation {
    pub clique: String,
    pub clique_lambda: f64,
    pub clique_lambda_exact: String,
    /// Best survivor not containing the clique.
    pub clique_free_max_lambda: Option<f64>,
    pub clique_free_argmax: Option<Hypergraph>,
    /// `clique_lambda - clique_free_max_lambda`.
    pub epsilon: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityStatus {
    Complete,
    Partial,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub pattern: DensityPattern,
    pub space: SpaceDescriptor,
    pub counts: DensityCounts,
    pub max_lambda: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_lambda_exact: Option<String>,
    pub max_certified: bool,
    /// Best survivor restricted to its non-isolated vertices.
    pub argmax_graph: Hypergraph,
    /// Original ids of the vertices of `argmax_graph`.
    pub argmax_vertices: Vec<u32>,
    pub separations: Separation,
    pub status: DensityStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relies_on: Option<String>,
    pub seed: u64,
    pub top: Vec<Candidate>,
}

const RELIES_ON: &str = "Only left-compressed graphs are searched. This is complete for the maximum \
Lagrangian when every F-free graph can be turned into a dense, left-compressed F-free graph with no \
smaller Lagrangian by the compression loop, which is established for linear paths of length 3 and 4.";

mod bits_string {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
struct Scored {
    value: f64,
    #[serde(with = "bits_string")]
    bits: u128,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
struct Acc {
    evaluated: u64,
    skipped: u64,
    top: Vec<Scored>,
    top_free: Vec<Scored>,
}

fn keep_top(list: &mut Vec<Scored>, k: usize) {
    list.sort_by(|a, b| b.value.total_cmp(&a.value).then(a.bits.cmp(&b.bits)));
    list.truncate(k);
}

impl Acc {
    fn merge(mut self, other: Acc, k: usize) -> Acc {
        self.evaluated += other.evaluated;
        self.skipped += other.skipped;
        self.top.extend(other.top);
        self.top_free.extend(other.top_free);
        keep_top(&mut self.top, k);
        keep_top(&mut self.top_free, k);
        self
    }

    fn push(&mut self, s: Scored, clique_free: bool, k: usize) {
        self.top.push(s);
        if self.top.len() > 2 * k {
            keep_top(&mut self.top, k);
        }
        if clique_free {
            self.top_free.push(s);
            if self.top_free.len() > 2 * k {
                keep_top(&mut self.top_free, k);
            }
        }
    }
}

struct Evaluator<'a> {
    ground: &'a GroundSet,
    clique: Hypergraph,
    config: &'a DensityConfig,
}

fn non_isolated(ground: &GroundSet, bits: u128) -> u64 {
    let mut b = bits;
    let mut m = 0;
    while b != 0 {
        m |= ground.mask(b.trailing_zeros() as usize);
        b &= b - 1;
    }
    m
}

fn pairs_covered(ground: &GroundSet, bits: u128, active: u64) -> bool {
    let mut reach = vec![0u64; ground.n()];
    let mut b = bits;
    while b != 0 {
        let m = ground.mask(b.trailing_zeros() as usize);
        b &= b - 1;
        let mut v = m;
        while v != 0 {
            reach[v.trailing_zeros() as usize] |= m;
            v &= v - 1;
        }
    }
    let mut v = active;
    while v != 0 {
        let i = v.trailing_zeros() as usize;
        v &= v - 1;
        if reach[i] != active {
            return false;
        }
    }
    true
}

fn vertex_list(mask: u64) -> Vec<u32> {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i as u32 + 1)
        .collect()
}

impl Evaluator<'_> {
    fn core(&self, bits: u128) -> (Hypergraph, Vec<u32>) {
        let g = self.ground.to_hypergraph(bits);
        let vs = vertex_list(non_isolated(self.ground, bits));
        let h = induced(&g, &vs).expect("vertices in range");
        (h, vs)
    }

    fn visit(&self, acc: &mut Acc, bits: u128) {
        let active = non_isolated(self.ground, bits);
        if self.config.covering_filter && !pairs_covered(self.ground, bits, active) {
            acc.skipped += 1;
            return;
        }
        acc.evaluated += 1;
        let (h, _) = self.core(bits);
        let value = if h.has_no_edges() {
            0.0
        } else {
            maximize(&h, &self.config.inner).value
        };
        let clique_free = is_free(&h, &self.clique).unwrap_or(false);
        acc.push(Scored { value, bits }, clique_free, self.config.top_k);
    }

    fn certify(&self, list: &[Scored]) -> Vec<(Scored, Candidate)> {
        let mut out: Vec<(Scored, Candidate)> = list
            .par_iter()
            .map(|s| {
                let (h, _) = self.core(s.bits);
                let cand = if h.has_no_edges() {
                    Candidate {
                        value: 0.0,
                        certified: true,
                        exact_value: Some("0".into()),
                        graph: h,
                    }
                } else {
                    let opt = maximize(&h, &self.config.full);
                    Candidate {
                        value: opt.value.max(s.value),
                        certified: opt.certified,
                        exact_value: opt.exact.as_ref().map(|(_, v)| v.to_string()),
                        graph: h,
                    }
                };
                (
                    Scored {
                        value: cand.value,
                        bits: s.bits,
                    },
                    cand,
                )
            })
            .collect();
        out.sort_by(|a, b| {
            b.0.value
                .total_cmp(&a.0.value)
                .then(a.0.bits.cmp(&b.0.bits))
        });
        out
    }
}

/// Searches the `mode` space of `F`-free 3-graphs on `n` vertices (pruning
/// subtrees once `F` appears), evaluates the Lagrangian of every survivor
/// and reports the maximum together with the gap below `lambda(K_m^3)`,
/// `m = |V(F)| - 1`, among survivors that do not contain `K_m^3`.
pub fn density_evidence(
    pattern: DensityPattern,
    n: usize,
    mode: SpaceMode,
    config: &DensityConfig,
    control: &RunControl,
) -> Result<DensityReport> {
    let ground = GroundSet::new(n, 3)?;
    let forbidden = ForbiddenSet::new(vec![pattern.graph()])?;
    let m = pattern.clique_order();
    let clique = complete(m, 3)?;
    let space = SpaceDescriptor { n, r: 3, mode };
    let task = format!("density:{pattern}:cover={}", config.covering_filter);
    let prune = |g: &GroundSet, bits: u128, i: usize| {
        matches!(forbidden.free_after_adding(g, bits, i), Ok(false))
    };
    let eval = Evaluator {
        ground: &ground,
        clique: clique.clone(),
        config,
    };
    let k = config.top_k.max(1);

    let (prefixes, prefix_counters) =
        Walker::new(&ground, mode, prune).prefixes(config.split_depth);
    let (mut next, mut counters, mut acc) = match &control.resume_from {
        Some(path) => {
            let ck = SearchCheckpoint::load(path)?;
            ck.ensure_matches(&space, &task, config.split_depth)?;
            if ck.next_shard > prefixes.len()
                || prefixes.get(ck.next_shard).is_some_and(|p| *p != ck.stack)
            {
                return Err(Error::Checkpoint(
                    "decision stack does not match the search tree".into(),
                ));
            }
            let acc: Acc =
                serde_json::from_value(ck.state).map_err(|e| Error::Checkpoint(e.to_string()))?;
            (ck.next_shard, ck.counters, acc)
        }
        None => (0, prefix_counters, Acc::default()),
    };

    let start = Instant::now();
    let mut capped = false;
    let save = |next: usize, counters: Counters, acc: &Acc| -> Result<()> {
        if let Some(path) = &control.checkpoint {
            SearchCheckpoint {
                version: CHECKPOINT_VERSION,
                space: space.clone(),
                task: task.clone(),
                split_depth: config.split_depth,
                next_shard: next,
                stack: prefixes.get(next).cloned().unwrap_or_default(),
                counters,
                state: serde_json::to_value(acc)?,
            }
            .save(path)?;
        }
        Ok(())
    };
    while next < prefixes.len() {
        if control.max_nodes.is_some_and(|cap| counters.nodes >= cap)
            || control
                .max_seconds
                .is_some_and(|s| start.elapsed().as_secs_f64() >= s)
        {
            capped = true;
            break;
        }
        let end = (next + config.batch.max(1)).min(prefixes.len());
        let parts: Vec<(Acc, Counters)> = prefixes[next..end]
            .par_iter()
            .map(|p| {
                let mut w = Walker::below(&ground, mode, prune, p);
                let mut a = Acc::default();
                while let Some(bits) = w.next_family() {
                    eval.visit(&mut a, bits);
                }
                (a, w.counters())
            })
            .collect();
        for (a, c) in parts {
            acc = acc.merge(a, k);
            counters.merge(&c);
        }
        next = end;
        save(next, counters, &acc)?;
    }
    if capped {
        save(next, counters, &acc)?;
    }

    let top = eval.certify(&acc.top);
    let top_free = eval.certify(&acc.top_free);
    let (max_lambda, max_exact, max_certified, argmax_graph, argmax_vertices) = match top.first() {
        Some((s, c)) => (
            c.value,
            c.exact_value.clone(),
            c.certified,
            c.graph.clone(),
            eval.core(s.bits).1,
        ),
        None => (
            0.0,
            Some("0".into()),
            true,
            Hypergraph::empty(3, 0),
            Vec::new(),
        ),
    };
    let clique_opt = maximize(&clique, &config.full);
    let clique_free_max = top_free.first().map(|(_, c)| c.value);
    Ok(DensityReport {
        pattern,
        space,
        counts: DensityCounts {
            nodes: counters.nodes,
            free_graphs: counters.visited,
            pruned: counters.pruned,
            evaluated: acc.evaluated,
            skipped_uncovered: acc.skipped,
        },
        max_lambda,
        max_lambda_exact: max_exact,
        max_certified,
        argmax_graph,
        argmax_vertices,
        separations: Separation {
            clique: format!("K{m}^3"),
            clique_lambda: clique_opt.value,
            clique_lambda_exact: clique_opt
                .exact
                .as_ref()
                .map(|(_, v)| v.to_string())
                .unwrap_or_else(|| clique_opt.value.to_string()),
            clique_free_max_lambda: clique_free_max,
            clique_free_argmax: top_free.first().map(|(_, c)| c.graph.clone()),
            epsilon: clique_free_max.map(|v| clique_opt.value - v),
        },
        status: if capped {
            DensityStatus::Partial
        } else {
            DensityStatus::Complete
        },
        relies_on: (mode == SpaceMode::LeftCompressed).then(|| RELIES_ON.to_string()),
        seed: config.inner.seed,
        top: top.into_iter().map(|(_, c)| c).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covering_check() {
        let ground = GroundSet::new(5, 3).unwrap();
        let b = |e: &[u32]| 1u128 << ground.index_of(e).unwrap();
        let bowtie = b(&[1, 2, 3]) | b(&[1, 4, 5]);
        let active = non_isolated(&ground, bowtie);
        assert_eq!(active, 0b11111);
        assert!(!pairs_covered(&ground, bowtie, active));
        let star = b(&[1, 2, 3]) | b(&[1, 2, 4]) | b(&[1, 3, 4]);
        assert!(pairs_covered(&ground, star, non_isolated(&ground, star)));
        assert!(pairs_covered(&ground, 0, 0));
    }

    #[test]
    fn t2_free_small() {
        let r = density_evidence(
            DensityPattern::T2,
            5,
            SpaceMode::All,
            &DensityConfig::default(),
            &RunControl::default(),
        )
        .unwrap();
        assert_eq!(r.status, DensityStatus::Complete);
        assert!((r.max_lambda - 1.0 / 27.0).abs() < 1e-9, "{}", r.max_lambda);
        assert_eq!(r.separations.clique, "K3^3");
        assert!(r.relies_on.is_none());
    }
}
