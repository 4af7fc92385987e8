use super::EmbeddingMap;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

struct PathSearch {
    t: usize,
    incident: Vec<Vec<u64>>,
}

impl PathSearch {
    fn new(g: &Hypergraph, t: usize) -> Result<Self> {
        if g.r() != 3 {
            return Err(Error::UniformityMismatch {
                expected: 3,
                found: g.r(),
            });
        }
        if t == 0 {
            return Err(Error::InvalidArgument("linear path needs t >= 1".into()));
        }
        let masks = g.edge_masks()?;
        let mut incident = vec![Vec::new(); g.n()];
        for &m in &masks {
            let mut b = m;
            while b != 0 {
                incident[b.trailing_zeros() as usize].push(m);
                b &= b - 1;
            }
        }
        Ok(PathSearch { t, incident })
    }

    /// Extends `seq` to `t` edges: the next edge meets the last one in a single
    /// vertex outside the previous edge and avoids everything else used.
    fn extend(&self, seq: &mut Vec<u64>, used: u64) -> bool {
        self.extend_to(seq, used, self.t)
    }

    fn extend_to(&self, seq: &mut Vec<u64>, used: u64, t: usize) -> bool {
        if seq.len() == t {
            return true;
        }
        let last = seq[seq.len() - 1];
        let prev = if seq.len() >= 2 {
            seq[seq.len() - 2]
        } else {
            0
        };
        let mut ends = last & !prev;
        while ends != 0 {
            let v = ends.trailing_zeros();
            ends &= ends - 1;
            for &f in &self.incident[v as usize] {
                if f & used == 1 << v {
                    seq.push(f);
                    if self.extend_to(seq, used | f, t) {
                        return true;
                    }
                    seq.pop();
                }
            }
        }
        false
    }
}

/// Path vertex `2i - 1, 2i` are the private vertices of edge `i` (in host
/// order), `2i + 1` the vertex it shares with edge `i + 1`.
fn to_embedding(seq: &[u64]) -> EmbeddingMap {
    let mut assignment = Vec::with_capacity(2 * seq.len() + 1);
    let mut entry = 0u64;
    for (i, &e) in seq.iter().enumerate() {
        let exit = match seq.get(i + 1) {
            Some(&f) => e & f,
            None => {
                // Last edge: highest remaining vertex plays the final role.
                let rest = e & !entry;
                1 << (63 - rest.leading_zeros())
            }
        };
        let mut private = e & !exit & !entry;
        if i == 0 {
            while private != 0 {
                assignment.push(private.trailing_zeros() + 1);
                private &= private - 1;
            }
        } else {
            assignment.push(private.trailing_zeros() + 1);
        }
        assignment.push(exit.trailing_zeros() + 1);
        entry = exit;
    }
    EmbeddingMap { assignment }
}

/// A copy of the linear path `P_t` in a 3-graph.
pub fn contains_linear_path(g: &Hypergraph, t: usize) -> Result<Option<EmbeddingMap>> {
    let s = PathSearch::new(g, t)?;
    if 2 * t + 1 > g.n() {
        return Ok(None);
    }
    let mut seq = Vec::with_capacity(t);
    for v in 0..g.n() {
        for &e in &s.incident[v] {
            if e.trailing_zeros() as usize != v {
                continue;
            }
            seq.clear();
            seq.push(e);
            if s.extend(&mut seq, e) {
                return Ok(Some(to_embedding(&seq)));
            }
        }
    }
    Ok(None)
}

/// A copy of `P_t` using the edge `edge`, which must belong to `g`.
pub fn contains_linear_path_through(
    g: &Hypergraph,
    t: usize,
    edge: &[u32],
) -> Result<Option<EmbeddingMap>> {
    let s = PathSearch::new(g, t)?;
    if 2 * t + 1 > g.n() {
        return Ok(None);
    }
    let target = edge.iter().fold(0u64, |m, &v| m | 1 << (v - 1));
    // Position `k` of the edge: a path of k + 1 edges ending in `edge`, reversed,
    // is grown from `edge`; the rest is grown from the other end.
    for k in 0..t {
        let mut left = vec![target];
        if let Some(found) = grow_two_sided(&s, &mut left, target, k, t) {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// Grows `k` edges away from `edge`, then `t - 1 - k` edges off the other side.
fn grow_two_sided(
    s: &PathSearch,
    seq: &mut Vec<u64>,
    used: u64,
    k: usize,
    t: usize,
) -> Option<EmbeddingMap> {
    if seq.len() == k + 1 {
        seq.reverse();
        let u = seq.iter().fold(0, |m, &e| m | e);
        let found = s.extend_to(seq, u, t);
        let res = found.then(|| to_embedding(seq));
        seq.truncate(k + 1);
        seq.reverse();
        return res;
    }
    let last = seq[seq.len() - 1];
    let prev = if seq.len() >= 2 {
        seq[seq.len() - 2]
    } else {
        0
    };
    let mut ends = last & !prev;
    while ends != 0 {
        let v = ends.trailing_zeros();
        ends &= ends - 1;
        for &f in &s.incident[v as usize] {
            if f & used == 1 << v {
                seq.push(f);
                if let Some(found) = grow_two_sided(s, seq, used | f, k, t) {
                    return Some(found);
                }
                seq.pop();
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeness::contains;
    use crate::hypergraph::{complete, linear_path};

    #[test]
    fn examples() {
        assert!(contains_linear_path(&complete(8, 3).unwrap(), 4)
            .unwrap()
            .is_none());
        let p4 = linear_path(4).unwrap();
        let w = contains_linear_path(&p4, 4).unwrap().unwrap();
        assert_eq!(w.assignment, (1..=9).collect::<Vec<u32>>());
        let k7 = complete(7, 3).unwrap();
        let w = contains_linear_path(&k7, 3).unwrap().unwrap();
        assert!(w.verify(&k7, &linear_path(3).unwrap()));
        assert!(contains_linear_path(&complete(4, 2).unwrap(), 1).is_err());
    }

    #[test]
    fn agrees_with_generic_search_on_small_cases() {
        let g = Hypergraph::new(
            3,
            9,
            [[1, 2, 3], [3, 4, 5], [4, 5, 6], [5, 7, 8], [2, 8, 9]],
        )
        .unwrap();
        for t in 1..=4 {
            let fast = contains_linear_path(&g, t).unwrap();
            let slow = contains(&g, &linear_path(t).unwrap()).unwrap();
            assert_eq!(fast.is_some(), slow.is_some(), "t = {t}");
            if let Some(w) = fast {
                assert!(w.verify(&g, &linear_path(t).unwrap()));
            }
        }
    }

    #[test]
    fn through_edge_positions() {
        let p3 = linear_path(3).unwrap();
        for e in [[1, 2, 3], [3, 4, 5], [5, 6, 7]] {
            let w = contains_linear_path_through(&p3, 3, &e).unwrap().unwrap();
            assert!(w.verify(&p3, &p3));
        }
        let g = Hypergraph::new(3, 8, [[1, 2, 3], [3, 4, 5], [5, 6, 7], [1, 2, 8]]).unwrap();
        assert!(contains_linear_path_through(&g, 3, &[1, 2, 8])
            .unwrap()
            .is_none());
        assert!(contains_linear_path_through(&g, 3, &[3, 4, 5])
            .unwrap()
            .is_some());
    }
}
