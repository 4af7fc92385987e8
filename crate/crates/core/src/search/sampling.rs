use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ForbiddenSet, GroundSet};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::lagrangian::{is_dense_with, MaximizeOptions};

/// Random down-set growth: starting from the down-closure of `start`, add a
/// uniformly chosen addable element (all lower covers present) while the
/// family stays free, until the size reaches `target` or nothing is addable.
pub fn grow_down_set<R: Rng>(
    ground: &GroundSet,
    start: u128,
    forbidden: &ForbiddenSet,
    target: usize,
    rng: &mut R,
) -> Result<u128> {
    let mut bits = ground.down_closure(start);
    if !forbidden.is_free(&ground.to_hypergraph(bits))? {
        return Err(Error::InvalidArgument(
            "the starting family is not free".into(),
        ));
    }
    let mut blocked = 0u128;
    while (bits.count_ones() as usize) < target {
        let addable: Vec<usize> = (0..ground.len())
            .filter(|&i| (bits | blocked) >> i & 1 == 0 && ground.lower_covers(i) & !bits == 0)
            .collect();
        let Some(&i) = addable.choose(rng) else { break };
        let next = bits | 1u128 << i;
        if forbidden.free_after_adding(ground, next, i)? {
            bits = next;
        } else {
            blocked |= 1u128 << i;
        }
    }
    Ok(bits)
}

/// Accepted samples and the number of attempts it took.
#[derive(Clone, Debug)]
pub struct DenseSamples {
    pub graphs: Vec<Hypergraph>,
    pub attempts: u64,
}

/// Dense, left-compressed, `forbidden`-free 3-graphs on `n` vertices that
/// cover pairs, drawn by down-set growth from `{1, n-1, n}` with a uniform
/// random target size. Stops after `count` acceptances or `max_attempts`.
pub fn sample_dense_left_compressed(
    n: usize,
    forbidden: &ForbiddenSet,
    count: usize,
    seed: u64,
    max_attempts: u64,
    options: &MaximizeOptions,
) -> Result<DenseSamples> {
    let ground = GroundSet::new(n, 3)?;
    let seed_edge = ground
        .index_of(&[1, n as u32 - 1, n as u32])
        .ok_or_else(|| Error::InvalidArgument("need n >= 3".into()))?;
    let start = ground.down_closure(1u128 << seed_edge);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = Vec::with_capacity(count);
    let mut attempts = 0;
    while graphs.len() < count && attempts < max_attempts {
        attempts += 1;
        let target = rng.gen_range(start.count_ones() as usize..=ground.len());
        let bits = grow_down_set(&ground, start, forbidden, target, &mut rng)?;
        let g = ground.to_hypergraph(bits);
        if is_dense_with(&g, options) {
            graphs.push(g);
        }
    }
    Ok(DenseSamples { graphs, attempts })
}

/// A random `forbidden`-free 3-graph on `n` vertices covering pairs. Even
/// draws grow a left-compressed graph from `{1, n-1, n}`; odd draws add
/// random triples to a full star. Both are then randomly relabeled.
pub fn random_covering_free<R: Rng>(
    n: usize,
    forbidden: &ForbiddenSet,
    rng: &mut R,
) -> Result<Hypergraph> {
    let ground = GroundSet::new(n, 3)?;
    let g = if rng.gen_bool(0.5) {
        let seed_edge = ground
            .index_of(&[1, n as u32 - 1, n as u32])
            .ok_or_else(|| Error::InvalidArgument("need n >= 3".into()))?;
        let target = rng.gen_range(n - 1..=ground.len());
        ground.to_hypergraph(grow_down_set(
            &ground,
            1u128 << seed_edge,
            forbidden,
            target,
            rng,
        )?)
    } else {
        let mut bits = (0..ground.len())
            .filter(|&i| ground.set(i)[0] == 1)
            .fold(0u128, |b, i| b | 1u128 << i);
        if !forbidden.is_free(&ground.to_hypergraph(bits))? {
            return Err(Error::InvalidArgument("a full star is not free".into()));
        }
        let mut order: Vec<usize> = (0..ground.len()).filter(|&i| bits >> i & 1 == 0).collect();
        order.shuffle(rng);
        let keep = rng.gen_range(0..=order.len());
        for &i in &order[..keep] {
            let next = bits | 1u128 << i;
            if forbidden.free_after_adding(&ground, next, i)? {
                bits = next;
            }
        }
        ground.to_hypergraph(bits)
    };
    let mut perm: Vec<u32> = (1..=n as u32).collect();
    perm.shuffle(rng);
    g.relabel(&perm, n)
}
