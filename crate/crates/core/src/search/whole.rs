use rustc_hash::FxHashSet;

use super::canon::{canonical_form, MAX_CANON_N};
use super::{Counters, GroundSet};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Default limit on `C(n, r)` for whole-space enumeration.
pub const DEFAULT_WHOLE_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WholeOptions {
    /// Refuse spaces with more than this many candidate edges.
    pub cap: usize,
    /// Visit one graph per isomorphism class (needs `n <= 7`).
    pub up_to_isomorphism: bool,
}

impl Default for WholeOptions {
    fn default() -> Self {
        WholeOptions {
            cap: DEFAULT_WHOLE_CAP,
            up_to_isomorphism: false,
        }
    }
}

/// Visits every edge subset of `K_n^r` accepted by `filter`, in increasing
/// bitset order over the colex ground set. `nodes` counts subsets examined,
/// `pruned` those rejected by the filter.
pub fn enumerate_all<F, V>(
    n: usize,
    r: usize,
    options: WholeOptions,
    mut filter: F,
    mut visit: V,
) -> Result<Counters>
where
    F: FnMut(&Hypergraph) -> bool,
    V: FnMut(&Hypergraph),
{
    let ground = GroundSet::new(n, r)?;
    if ground.len() > options.cap {
        return Err(Error::SpaceTooLarge(format!(
            "C({n}, {r}) = {} exceeds the whole-space cap {}",
            ground.len(),
            options.cap
        )));
    }
    if options.up_to_isomorphism && n > MAX_CANON_N {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_CANON_N,
        });
    }
    let mut counters = Counters::default();
    let mut seen = FxHashSet::default();
    for bits in 0u128..1 << ground.len() {
        counters.nodes += 1;
        let g = ground.to_hypergraph(bits);
        if options.up_to_isomorphism && !seen.insert(ground.bits_of(&canonical_form(&g)?)?) {
            continue;
        }
        if filter(&g) {
            counters.visited += 1;
            visit(&g);
        } else {
            counters.pruned += 1;
        }
    }
    Ok(counters)
}
