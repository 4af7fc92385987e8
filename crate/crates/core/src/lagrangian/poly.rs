use rustc_hash::FxHashMap;

use crate::hypergraph::{Hypergraph, VertexPartition};

/// Neumaier-compensated accumulator.
#[derive(Clone, Copy, Default)]
pub(crate) struct Sum {
    s: f64,
    c: f64,
}

impl Sum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.s + x;
        if self.s.abs() >= x.abs() {
            self.c += (self.s - t) + x;
        } else {
            self.c += (x - t) + self.s;
        }
        self.s = t;
    }

    pub(crate) fn value(self) -> f64 {
        self.s + self.c
    }
}

/// A homogeneous polynomial `sum_k coef_k * prod_j x[var_kj]` of degree `deg`
/// (variables may repeat within a term).
#[derive(Clone, Debug)]
pub(crate) struct Polynomial {
    pub(crate) dim: usize,
    pub(crate) deg: usize,
    coefs: Vec<f64>,
    vars: Vec<u32>,
}

impl Polynomial {
    pub(crate) fn from_hypergraph(g: &Hypergraph) -> Self {
        let mut vars = Vec::with_capacity(g.size() * g.r());
        for e in g.edges() {
            vars.extend(e.vertices().iter().map(|&v| v - 1));
        }
        Polynomial {
            dim: g.n(),
            deg: g.r(),
            coefs: vec![1.0; g.size()],
            vars,
        }
    }

    /// The Lagrangian restricted to weightings constant on each class, in the
    /// class totals `z_c`: vertex weight is `z_c / |c|`.
    pub(crate) fn reduced(g: &Hypergraph, classes: &VertexPartition) -> Self {
        let mut class_of = vec![0u32; g.n()];
        for (c, members) in classes.classes().iter().enumerate() {
            for &v in members {
                class_of[v as usize - 1] = c as u32;
            }
        }
        let sizes: Vec<f64> = classes.classes().iter().map(|c| c.len() as f64).collect();
        let mut terms: FxHashMap<Vec<u32>, f64> = FxHashMap::default();
        for e in g.edges() {
            let mut key: Vec<u32> = e
                .vertices()
                .iter()
                .map(|&v| class_of[v as usize - 1])
                .collect();
            key.sort_unstable();
            let coef: f64 = key.iter().map(|&c| 1.0 / sizes[c as usize]).product();
            *terms.entry(key).or_insert(0.0) += coef;
        }
        let mut sorted: Vec<(Vec<u32>, f64)> = terms.into_iter().collect();
        sorted.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut coefs = Vec::with_capacity(sorted.len());
        let mut vars = Vec::with_capacity(sorted.len() * g.r());
        for (k, c) in sorted {
            vars.extend(k);
            coefs.push(c);
        }
        Polynomial {
            dim: classes.len(),
            deg: g.r(),
            coefs,
            vars,
        }
    }

    pub(crate) fn terms(&self) -> impl Iterator<Item = (f64, &[u32])> {
        self.coefs
            .iter()
            .copied()
            .zip(self.vars.chunks_exact(self.deg.max(1)))
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coefs.is_empty()
    }

    pub(crate) fn eval(&self, x: &[f64]) -> f64 {
        let mut s = Sum::default();
        for (c, t) in self.terms() {
            s.add(c * t.iter().map(|&v| x[v as usize]).product::<f64>());
        }
        s.value()
    }

    pub(crate) fn grad(&self, x: &[f64], out: &mut [f64]) {
        out.iter_mut().for_each(|g| *g = 0.0);
        for (c, t) in self.terms() {
            for j in 0..t.len() {
                let mut p = c;
                for (l, &v) in t.iter().enumerate() {
                    if l != j {
                        p *= x[v as usize];
                    }
                }
                out[t[j] as usize] += p;
            }
        }
    }

    /// Row-major `dim x dim` Hessian.
    pub(crate) fn hessian(&self, x: &[f64], out: &mut [f64]) {
        let d = self.dim;
        out.iter_mut().for_each(|h| *h = 0.0);
        for (c, t) in self.terms() {
            for j in 0..t.len() {
                for l in 0..t.len() {
                    if l == j {
                        continue;
                    }
                    let mut p = c;
                    for (m, &v) in t.iter().enumerate() {
                        if m != j && m != l {
                            p *= x[v as usize];
                        }
                    }
                    out[t[j] as usize * d + t[l] as usize] += p;
                }
            }
        }
    }

    /// Pairs of variables sharing a term, as a symmetric adjacency bitmask
    /// (only for `dim <= 64`).
    pub(crate) fn shadow(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.dim];
        for (_, t) in self.terms() {
            for &a in t {
                for &b in t {
                    if a != b {
                        adj[a as usize] |= 1 << b;
                    }
                }
            }
        }
        adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{complete, complete_minus, equivalence_classes};

    #[test]
    fn compensated_sum() {
        let mut s = Sum::default();
        for x in [1.0, 1e100, 1.0, -1e100] {
            s.add(x);
        }
        assert_eq!(s.value(), 2.0);
    }

    #[test]
    fn reduced_matches_full_on_symmetric_points() {
        let g = complete_minus(6, 3).unwrap();
        let classes = equivalence_classes(&g);
        let red = Polynomial::reduced(&g, &classes);
        let full = Polynomial::from_hypergraph(&g);
        assert_eq!(red.dim, 2);
        let z = [0.6, 0.4];
        let x = [0.2, 0.2, 0.2, 0.4 / 3.0, 0.4 / 3.0, 0.4 / 3.0];
        assert!((red.eval(&z) - full.eval(&x)).abs() < 1e-15);
    }

    #[test]
    fn hessian_of_k4() {
        let p = Polynomial::from_hypergraph(&complete(4, 3).unwrap());
        let mut h = vec![0.0; 16];
        p.hessian(&[0.25; 4], &mut h);
        // d2/dx1dx2 = x3 + x4
        assert!((h[1] - 0.5).abs() < 1e-15);
        assert_eq!(h[0], 0.0);
    }

    #[test]
    fn repeated_variables() {
        let g = complete(3, 3).unwrap();
        let p = Polynomial::reduced(&g, &equivalence_classes(&g));
        // (z/3)^3
        assert!((p.eval(&[1.0]) - 1.0 / 27.0).abs() < 1e-16);
        let mut gr = [0.0];
        p.grad(&[1.0], &mut gr);
        assert!((gr[0] - 3.0 / 27.0).abs() < 1e-16);
        let mut h = [0.0];
        p.hessian(&[1.0], &mut h);
        assert!((h[0] - 6.0 / 27.0).abs() < 1e-16);
    }
}
