//! The Lagrangian `lambda(G, x) = sum_e prod_{i in e} x_i` on the simplex.

mod clique;
mod closed_form;
mod dense;
mod optimize;
pub(crate) mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub use clique::{clique_number, motzkin_straus};
pub use closed_form::{chain_bound, closed_form, ClosedForm, ClosedFormName};
pub use dense::{densify, densify_with, is_dense, is_dense_with, Densified};
pub use optimize::{maximize, MaximizeOptions, Mode, OptimumResult};

/// Sum-to-one tolerance for float weights.
pub const FLOAT_SUM_TOL: f64 = 1e-12;

/// A point of the standard simplex.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "weights", rename_all = "lowercase")]
pub enum WeightVector {
    Float(Vec<f64>),
    Exact(Vec<BigRational>),
}

/// A number in the mode of the weights that produced it.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Float(f64),
    Exact(BigRational),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Float(v) => *v,
            Value::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Float(v) => write!(f, "{v}"),
            Value::Exact(q) => write!(f, "{q}"),
        }
    }
}

pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

impl WeightVector {
    pub fn float(w: Vec<f64>) -> Result<Self> {
        if let Some(i) = w.iter().position(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::InvalidArgument(format!(
                "weight {} of vertex {} is not a nonnegative number",
                w[i],
                i + 1
            )));
        }
        let s: f64 = w.iter().sum();
        if (s - 1.0).abs() > FLOAT_SUM_TOL {
            return Err(Error::InvalidArgument(format!("weights sum to {s}, not 1")));
        }
        Ok(WeightVector::Float(w))
    }

    pub fn exact(w: Vec<BigRational>) -> Result<Self> {
        if let Some(i) = w.iter().position(|x| x.is_negative()) {
            return Err(Error::InvalidArgument(format!(
                "weight {} of vertex {} is negative",
                w[i],
                i + 1
            )));
        }
        let s: BigRational = w.iter().sum();
        if !s.is_one() {
            return Err(Error::InvalidArgument(format!("weights sum to {s}, not 1")));
        }
        Ok(WeightVector::Exact(w))
    }

    pub fn uniform(n: usize) -> Self {
        WeightVector::Exact(vec![rational(1, n as i64); n])
    }

    /// Unit weight on `v` (1-based).
    pub fn indicator(n: usize, v: u32) -> Self {
        let mut w = vec![BigRational::zero(); n];
        w[v as usize - 1] = BigRational::one();
        WeightVector::Exact(w)
    }

    pub fn len(&self) -> usize {
        match self {
            WeightVector::Float(w) => w.len(),
            WeightVector::Exact(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            WeightVector::Float(w) => w.clone(),
            WeightVector::Exact(w) => w.iter().map(|q| q.to_f64().unwrap_or(f64::NAN)).collect(),
        }
    }

    /// Vertices with positive weight.
    pub fn support(&self) -> Vec<u32> {
        match self {
            WeightVector::Float(w) => positions(w.iter().map(|x| *x > 0.0)),
            WeightVector::Exact(w) => positions(w.iter().map(|x| x.is_positive())),
        }
    }
}

fn positions(flags: impl Iterator<Item = bool>) -> Vec<u32> {
    flags
        .enumerate()
        .filter(|(_, f)| *f)
        .map(|(i, _)| i as u32 + 1)
        .collect()
}

fn check_dim(g: &Hypergraph, x: &WeightVector) -> Result<()> {
    if x.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "weight vector has {} entries for {} vertices",
            x.len(),
            g.n()
        )));
    }
    Ok(())
}

/// `lambda(G, x)`: exact for rational weights, compensated summation otherwise.
pub fn evaluate(g: &Hypergraph, x: &WeightVector) -> Result<Value> {
    check_dim(g, x)?;
    Ok(match x {
        WeightVector::Float(w) => Value::Float(poly::Polynomial::from_hypergraph(g).eval(w)),
        WeightVector::Exact(w) => Value::Exact(
            g.edges()
                .iter()
                .map(|e| {
                    e.vertices()
                        .iter()
                        .map(|&v| &w[v as usize - 1])
                        .fold(BigRational::one(), |p, q| p * q)
                })
                .sum(),
        ),
    })
}

/// Partial derivatives `sum_{e ni i} prod_{j in e - i} x_j`.
pub fn gradient(g: &Hypergraph, x: &WeightVector) -> Result<Vec<Value>> {
    check_dim(g, x)?;
    Ok(match x {
        WeightVector::Float(w) => {
            let mut out = vec![0.0; g.n()];
            poly::Polynomial::from_hypergraph(g).grad(w, &mut out);
            out.into_iter().map(Value::Float).collect()
        }
        WeightVector::Exact(w) => exact_gradient(g, w).into_iter().map(Value::Exact).collect(),
    })
}

pub(crate) fn exact_gradient(g: &Hypergraph, w: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); g.n()];
    for e in g.edges() {
        for &i in e.vertices() {
            let p = e
                .vertices()
                .iter()
                .filter(|&&j| j != i)
                .fold(BigRational::one(), |p, &j| p * &w[j as usize - 1]);
            out[i as usize - 1] += p;
        }
    }
    out
}

/// `r! * lambda(G)`, a lower bound on the Lagrangian density of any family
/// that `G` avoids.
pub fn lagrangian_density_lower_bound(g: &Hypergraph, options: &MaximizeOptions) -> f64 {
    let fact: f64 = (1..=g.r()).map(|k| k as f64).product();
    fact * maximize(g, options).value
}
