use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::{covers_pairs, uncovered_pairs, Edge, Hypergraph};
use crate::error::{Error, Result};

/// `K_t^r`: all `r`-subsets of `[t]`.
pub fn complete(t: usize, r: usize) -> Result<Hypergraph> {
    if r == 0 || t < r {
        return Err(Error::InvalidArgument(format!(
            "complete graph needs t >= r >= 1 (t = {t}, r = {r})"
        )));
    }
    let edges = (1..=t as u32)
        .combinations(r)
        .map(Edge::from_sorted)
        .collect();
    Ok(Hypergraph::from_edges(r, t, edges))
}

/// `K_t^{r-}`: `K_t^r` without its colex-largest edge `{t-r+1, ..., t}`.
pub fn complete_minus(t: usize, r: usize) -> Result<Hypergraph> {
    let mut g = complete(t, r)?;
    let top: Vec<u32> = ((t - r + 1) as u32..=t as u32).collect();
    g.edges.retain(|e| e.vertices() != top.as_slice());
    Ok(g)
}

/// The 3-uniform linear path `P_t` with edges `{2i-1, 2i, 2i+1}`.
pub fn linear_path(t: usize) -> Result<Hypergraph> {
    if t == 0 {
        return Err(Error::InvalidArgument("linear path needs t >= 1".into()));
    }
    let edges = (1..=t as u32)
        .map(|i| Edge::from_sorted(vec![2 * i - 1, 2 * i, 2 * i + 1]))
        .collect();
    Ok(Hypergraph::from_edges(3, 2 * t + 1, edges))
}

/// `M_t^r`: `t` pairwise disjoint edges on `t * r` vertices.
pub fn matching(t: usize, r: usize) -> Result<Hypergraph> {
    if r == 0 {
        return Err(Error::ZeroUniformity);
    }
    let edges = (0..t as u32)
        .map(|i| Edge::from_sorted((1..=r as u32).map(|k| i * r as u32 + k).collect()))
        .collect();
    Ok(Hypergraph::from_edges(r, t * r, edges))
}

/// Small 3-graphs with fixed labelings.
///
/// | name | edges |
/// |------|-------|
/// | `T2` | 123 124 |
/// | `F5` | 123 124 345 |
/// | `F1` | 123 345 678 8,9,10 (two disjoint `P_2`) |
/// | `F2` | 123 456 678 8,9,10 (`P_1` plus a disjoint `P_3`) |
/// | `F3` | 123 145 267 389 (triangle `a1a2a3` = 123 with pendant pairs 45, 67, 89) |
/// | `HSTAR` | 234 235 245 345 236 246 256 346 356 456 237 247 257 267 347 (vertex 1 isolated) |
/// | `M{t}` | `t` disjoint edges of size `r` |
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    T2,
    F5,
    F1,
    F2,
    F3,
    HStar,
    Matching { t: usize, r: usize },
}

impl FromStr for NamedGraph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T2" | "T_2" => Ok(NamedGraph::T2),
            "F5" | "F_5" => Ok(NamedGraph::F5),
            "F1" | "F_1" => Ok(NamedGraph::F1),
            "F2" | "F_2" => Ok(NamedGraph::F2),
            "F3" | "F_3" => Ok(NamedGraph::F3),
            "HSTAR" | "H*" => Ok(NamedGraph::HStar),
            other => {
                let t = other
                    .strip_prefix("M_")
                    .or_else(|| other.strip_prefix('M'))
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::UnknownName(s.to_string()))?;
                Ok(NamedGraph::Matching { t, r: 3 })
            }
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::T2 => write!(f, "T2"),
            NamedGraph::F5 => write!(f, "F5"),
            NamedGraph::F1 => write!(f, "F1"),
            NamedGraph::F2 => write!(f, "F2"),
            NamedGraph::F3 => write!(f, "F3"),
            NamedGraph::HStar => write!(f, "HSTAR"),
            NamedGraph::Matching { t, r } => write!(f, "M{t}^{r}"),
        }
    }
}

pub fn named(id: NamedGraph) -> Hypergraph {
    let edges: (usize, Vec<[u32; 3]>) = match id {
        NamedGraph::T2 => (4, vec![[1, 2, 3], [1, 2, 4]]),
        NamedGraph::F5 => (5, vec![[1, 2, 3], [1, 2, 4], [3, 4, 5]]),
        NamedGraph::F1 => (10, vec![[1, 2, 3], [3, 4, 5], [6, 7, 8], [8, 9, 10]]),
        NamedGraph::F2 => (10, vec![[1, 2, 3], [4, 5, 6], [6, 7, 8], [8, 9, 10]]),
        NamedGraph::F3 => (9, vec![[1, 2, 3], [1, 4, 5], [2, 6, 7], [3, 8, 9]]),
        NamedGraph::HStar => (
            7,
            vec![
                [2, 3, 4],
                [2, 3, 5],
                [2, 4, 5],
                [3, 4, 5],
                [2, 3, 6],
                [2, 4, 6],
                [2, 5, 6],
                [3, 4, 6],
                [3, 5, 6],
                [4, 5, 6],
                [2, 3, 7],
                [2, 4, 7],
                [2, 5, 7],
                [2, 6, 7],
                [3, 4, 7],
            ],
        ),
        NamedGraph::Matching { t, r } => return matching(t, r).expect("r >= 1"),
    };
    Hypergraph::new(3, edges.0, edges.1).expect("valid named graph")
}

/// Blowup of `pattern`: vertex `i` becomes a block of `sizes[i-1]` consecutive
/// vertices and every pattern edge becomes the product of its blocks.
pub fn blowup(pattern: &Hypergraph, sizes: &[usize]) -> Result<Hypergraph> {
    if sizes.len() != pattern.n() {
        return Err(Error::InvalidArgument(format!(
            "{} block sizes for {} pattern vertices",
            sizes.len(),
            pattern.n()
        )));
    }
    let mut starts = Vec::with_capacity(sizes.len());
    let mut next = 1u32;
    for &s in sizes {
        starts.push(next);
        next += s as u32;
    }
    let n = (next - 1) as usize;
    let mut edges = Vec::new();
    for e in pattern.edges() {
        let blocks: Vec<Vec<u32>> = e
            .vertices()
            .iter()
            .map(|&v| {
                let i = v as usize - 1;
                (starts[i]..starts[i] + sizes[i] as u32).collect()
            })
            .collect();
        for choice in blocks.iter().multi_cartesian_product() {
            let v: Vec<u32> = choice.into_iter().copied().collect();
            edges.push(Edge::new(v)?);
        }
    }
    Ok(Hypergraph::from_edges(pattern.r(), n, edges))
}

/// Balanced part sizes of `n` into `m` parts, smaller parts first.
pub fn turan_parts(m: usize, n: usize) -> Vec<usize> {
    if m == 0 {
        return Vec::new();
    }
    let (q, rem) = (n / m, n % m);
    (0..m)
        .map(|i| if i < m - rem { q } else { q + 1 })
        .collect()
}

/// `T_m^r(n)`, the balanced blowup of `K_m^r` on `n` vertices.
pub fn turan_blowup(m: usize, r: usize, n: usize) -> Result<Hypergraph> {
    if m < r {
        return Err(Error::InvalidArgument(format!(
            "T_m^r(n) needs m >= r ({m} < {r})"
        )));
    }
    blowup(&complete(m, r)?, &turan_parts(m, n))
}

/// `t_m^r(n)`: the elementary symmetric polynomial of degree `r` in the part sizes.
pub fn turan_count(m: usize, r: usize, n: usize) -> u128 {
    let mut e = vec![0u128; r + 1];
    e[0] = 1;
    for s in turan_parts(m, n) {
        for k in (1..=r).rev() {
            e[k] += e[k - 1] * s as u128;
        }
    }
    e[r]
}

/// `H^F`: for each uncovered pair of `F` (lexicographic order) append `r - 2`
/// fresh vertices and the edge through the pair and them.
pub fn extension(f: &Hypergraph) -> Result<Hypergraph> {
    let r = f.r();
    if r < 2 {
        return Err(Error::InvalidArgument("extension needs r >= 2".into()));
    }
    if covers_pairs(f) {
        return Ok(f.clone());
    }
    let mut edges = f.edges().to_vec();
    let mut next = f.n() as u32 + 1;
    for (a, b) in uncovered_pairs(f) {
        let mut v = vec![a, b];
        v.extend(next..next + (r - 2) as u32);
        next += (r - 2) as u32;
        edges.push(Edge::new(v)?);
    }
    Ok(Hypergraph::from_edges(r, (next - 1) as usize, edges))
}
