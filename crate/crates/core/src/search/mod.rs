//! Enumeration of left-compressed and unrestricted 3-graph families, Turán
//! numbers and Lagrangian-density evidence.

mod canon;
mod checkpoint;
mod density;
mod ground;
mod sampling;
mod turan;
mod walker;
mod whole;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freeness::{contains_linear_path_through, contains_through_edge, is_free};
use crate::hypergraph::{linear_path, Hypergraph};

pub use canon::{canonical_form, MAX_CANON_N};
pub use checkpoint::{SearchCheckpoint, CHECKPOINT_VERSION};
pub use density::{
    density_evidence, Candidate, DensityConfig, DensityCounts, DensityPattern, DensityReport,
    DensityStatus, RunControl, Separation,
};
pub use ground::{GroundSet, MAX_GROUND};
pub use sampling::{
    grow_down_set, random_covering_free, sample_dense_left_compressed, DenseSamples,
};
pub use turan::{
    turan_number, turan_number_exhaustive, BlowupComparison, SearchStatus, TuranConfig, TuranResult,
};
pub use walker::{par_walk, walk, Counters, SpaceMode, Walker, WalkerState};
pub use whole::{enumerate_all, WholeOptions, DEFAULT_WHOLE_CAP};

/// Identifies the family space a run walks over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDescriptor {
    pub n: usize,
    pub r: usize,
    pub mode: SpaceMode,
}

/// Visits every left-compressed `r`-graph on `n` vertices (down-sets of the
/// dominance order) that survives `prune`.
pub fn enumerate_left_compressed<P, V>(
    n: usize,
    r: usize,
    prune: P,
    mut visit: V,
) -> Result<Counters>
where
    P: Fn(&GroundSet, u128, usize) -> bool,
    V: FnMut(&Hypergraph),
{
    let ground = GroundSet::new(n, r)?;
    Ok(walk(&ground, SpaceMode::LeftCompressed, prune, |bits| {
        visit(&ground.to_hypergraph(bits))
    }))
}

/// Forbidden graphs with a fast path for linear 3-uniform paths.
pub struct ForbiddenSet {
    graphs: Vec<Hypergraph>,
    path_len: Vec<Option<usize>>,
}

impl ForbiddenSet {
    pub fn new(graphs: Vec<Hypergraph>) -> Result<Self> {
        if let Some(f) = graphs.iter().find(|f| f.r() != graphs[0].r()) {
            return Err(Error::UniformityMismatch {
                expected: graphs[0].r(),
                found: f.r(),
            });
        }
        let path_len = graphs
            .iter()
            .map(|f| {
                let t = f.size();
                (f.r() == 3 && t >= 1 && linear_path(t).ok().as_ref() == Some(f)).then_some(t)
            })
            .collect();
        Ok(ForbiddenSet { graphs, path_len })
    }

    pub fn graphs(&self) -> &[Hypergraph] {
        &self.graphs
    }

    pub fn is_free(&self, g: &Hypergraph) -> Result<bool> {
        for f in &self.graphs {
            if !is_free(g, f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the family `bits` is still free, given that it was free before
    /// element `i` was added.
    pub fn free_after_adding(&self, ground: &GroundSet, bits: u128, i: usize) -> Result<bool> {
        let g = ground.to_hypergraph(bits);
        let edge = ground.set(i);
        for (f, t) in self.graphs.iter().zip(&self.path_len) {
            let hit = match t {
                Some(t) => contains_linear_path_through(&g, *t, edge)?.is_some(),
                None => contains_through_edge(&g, f, edge)?.is_some(),
            };
            if hit {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Runs `f` on a dedicated pool of `threads` workers, or on the global pool.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Error::InvalidArgument(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{complete, is_left_compressed};

    #[test]
    fn left_compressed_examples() {
        let c = enumerate_left_compressed(4, 3, |_, _, _| false, |_| {}).unwrap();
        assert_eq!(c.visited, 5);
        let mut seen = Vec::new();
        enumerate_left_compressed(5, 3, |_, _, _| false, |g| seen.push(g.clone())).unwrap();
        let mut oracle = Vec::new();
        enumerate_all(5, 3, WholeOptions::default(), is_left_compressed, |g| {
            oracle.push(g.clone())
        })
        .unwrap();
        seen.sort_by(|a, b| a.edges().cmp(b.edges()));
        oracle.sort_by(|a, b| a.edges().cmp(b.edges()));
        assert_eq!(seen, oracle);
        let c = enumerate_left_compressed(
            5,
            3,
            |g, bits, _| g.to_hypergraph(bits).contains_edge(&[1, 2, 3]),
            |g| assert!(g.has_no_edges()),
        )
        .unwrap();
        assert_eq!(c.visited, 1);
    }

    #[test]
    fn forbidden_set_paths() {
        let p2 = linear_path(2).unwrap();
        let set = ForbiddenSet::new(vec![p2.clone(), complete(4, 3).unwrap()]).unwrap();
        assert_eq!(set.path_len, vec![Some(2), None]);
        let ground = GroundSet::new(5, 3).unwrap();
        let a = ground.index_of(&[1, 2, 3]).unwrap();
        let b = ground.index_of(&[3, 4, 5]).unwrap();
        let bits = 1u128 << a | 1u128 << b;
        assert!(!set.free_after_adding(&ground, bits, b).unwrap());
        assert!(set.free_after_adding(&ground, 1u128 << a, a).unwrap());
        assert!(!set.is_free(&ground.to_hypergraph(bits)).unwrap());
    }
}
