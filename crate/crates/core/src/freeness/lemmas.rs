use serde::Serialize;

use super::{contains, contains_linear_path};
use crate::hypergraph::{complete, covers_pairs, named, Hypergraph, NamedGraph};
use crate::lagrangian::{is_dense_with, maximize, MaximizeOptions};

/// One structural check. `applicable` says whether the hypotheses under which
/// the structure is forbidden (or required) hold for the input; `violated` is
/// only ever set for applicable checks.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub check: String,
    pub applicable: bool,
    pub violated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_embedding: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_edges: Option<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaReport {
    pub lambda: f64,
    /// The Lagrangian is computed numerically; checks depending on it inherit
    /// its tolerance.
    pub lambda_certified: bool,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn violations(&self) -> impl Iterator<Item = &LemmaCheck> {
        self.checks.iter().filter(|c| c.violated)
    }
}

fn pair_with_intersection(g: &Hypergraph, k: usize) -> Option<Vec<Vec<u32>>> {
    let edges = g.edges();
    for (a, e) in edges.iter().enumerate() {
        for f in &edges[a + 1..] {
            let common = e.vertices().iter().filter(|&&v| f.contains(v)).count();
            if common == k {
                return Some(vec![e.vertices().to_vec(), f.vertices().to_vec()]);
            }
        }
    }
    None
}

/// Forbidden-configuration checks for 3-graphs: `F1`, `F2` (forbidden in
/// covers-pairs `P4`-free graphs on at least 9 vertices), `F3` (additionally
/// when `lambda >= lambda(K_8^3) - 0.005`), and edge pairs meeting in one
/// (`n >= 5`) or two (`n >= 4`) vertices, required in dense graphs.
pub fn check_lemma_structures(g: &Hypergraph, options: &MaximizeOptions) -> LemmaReport {
    let opt = maximize(g, options);
    let mut checks = Vec::new();
    if g.r() == 3 {
        let n = g.n();
        let p4_free = contains_linear_path(g, 4)
            .map(|w| w.is_none())
            .unwrap_or(false);
        let base = n >= 9 && covers_pairs(g) && p4_free;
        let k8 = maximize(&complete(8, 3).expect("valid"), options).value;
        let heavy = base && opt.value >= k8 - 0.005;
        for (name, id, applicable) in [
            ("F1-free", NamedGraph::F1, base),
            ("F2-free", NamedGraph::F2, base),
            ("F3-free", NamedGraph::F3, heavy),
        ] {
            let w = contains(g, &named(id)).ok().flatten();
            checks.push(LemmaCheck {
                check: name.into(),
                applicable,
                violated: applicable && w.is_some(),
                witness_embedding: w.map(|w| w.assignment),
                witness_edges: None,
            });
        }
        let dense = n >= 4 && is_dense_with(g, options);
        for (k, min_n) in [(1, 5), (2, 4)] {
            let applicable = dense && n >= min_n;
            let w = pair_with_intersection(g, k);
            checks.push(LemmaCheck {
                check: format!("edge-pair-intersection-{k}"),
                applicable,
                violated: applicable && w.is_none(),
                witness_embedding: None,
                witness_edges: w,
            });
        }
    }
    LemmaReport {
        lambda: opt.value,
        lambda_certified: opt.certified,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(r: &'a LemmaReport, name: &str) -> &'a LemmaCheck {
        r.checks.iter().find(|c| c.check == name).unwrap()
    }

    #[test]
    fn k5_has_two_intersection() {
        let r = check_lemma_structures(&complete(5, 3).unwrap(), &MaximizeOptions::default());
        let c = find(&r, "edge-pair-intersection-2");
        assert!(c.applicable && !c.violated);
        assert!(c.witness_edges.is_some());
        assert_eq!(r.violations().count(), 0);
    }

    #[test]
    fn detects_f1_in_itself() {
        let r = check_lemma_structures(&named(NamedGraph::F1), &MaximizeOptions::default());
        let c = find(&r, "F1-free");
        assert!(c.witness_embedding.is_some());
        assert!(!c.applicable && !c.violated);
        let json = serde_json::to_value(c).unwrap();
        assert_eq!(json["check"], "F1-free");
    }
}
