use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::poly::Polynomial;
use super::{exact_gradient, WeightVector};
use crate::hypergraph::{equivalence_classes, Hypergraph, VertexPartition};

/// Knobs for [`maximize`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MaximizeOptions {
    /// Random starts besides the uniform one.
    pub restarts: usize,
    pub seed: u64,
    pub kkt_tol: f64,
    /// Supports are enumerated when the symmetry-reduced dimension is at most this.
    pub exact_support_n: usize,
    /// Independent random starts in the unreduced problem used to certify.
    pub certify_starts: usize,
    /// Collapse interchangeable vertices before optimizing.
    pub symmetry: bool,
    pub max_iters: usize,
    /// Try to snap the optimum to an exact rational KKT point.
    pub rational: bool,
}

impl Default for MaximizeOptions {
    fn default() -> Self {
        MaximizeOptions {
            restarts: 64,
            seed: 0,
            kkt_tol: 1e-8,
            exact_support_n: 8,
            certify_starts: 8,
            symmetry: true,
            max_iters: 5000,
            rational: true,
        }
    }
}

impl MaximizeOptions {
    /// Reduced effort for inner loops of enumerations.
    pub fn fast() -> Self {
        MaximizeOptions {
            restarts: 8,
            exact_support_n: 0,
            certify_starts: 0,
            rational: false,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Float,
    RationalCertified,
}

/// Best value found by [`maximize`] with its first-order certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct OptimumResult {
    pub value: f64,
    pub weights: WeightVector,
    pub support: Vec<u32>,
    /// Max over the support of `|d_i lambda - r * value|`.
    pub kkt_residual: f64,
    pub restarts: usize,
    pub certified: bool,
    pub seed: u64,
    pub mode: Mode,
    /// Exact weights and value when `mode` is `RationalCertified`.
    pub exact: Option<(Vec<BigRational>, BigRational)>,
}

#[derive(Serialize)]
struct OptimumJson<'a> {
    value: f64,
    weights: Vec<f64>,
    support: &'a [u32],
    kkt_residual: f64,
    certified: bool,
    seed: u64,
    restarts: usize,
    mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact_weights: Option<Vec<String>>,
}

impl Serialize for OptimumResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        OptimumJson {
            value: self.value,
            weights: self.weights.to_f64(),
            support: &self.support,
            kkt_residual: self.kkt_residual,
            certified: self.certified,
            seed: self.seed,
            restarts: self.restarts,
            mode: self.mode,
            exact_value: self.exact.as_ref().map(|(_, v)| v.to_string()),
            exact_weights: self
                .exact
                .as_ref()
                .map(|(w, _)| w.iter().map(ToString::to_string).collect()),
        }
        .serialize(s)
    }
}

/// Euclidean projection onto the simplex.
fn project(y: &mut [f64]) {
    let mut u: Vec<f64> = y.to_vec();
    u.sort_unstable_by(|a, b| b.total_cmp(a));
    let mut cum = 0.0;
    let mut theta = 0.0;
    for (k, &v) in u.iter().enumerate() {
        cum += v;
        let t = (cum - 1.0) / (k + 1) as f64;
        if v - t > 0.0 {
            theta = t;
        }
    }
    for v in y.iter_mut() {
        *v = (*v - theta).max(0.0);
    }
}

/// Projected gradient ascent with Armijo backtracking. With `restrict`,
/// coordinates that start at zero stay at zero.
fn ascend(p: &Polynomial, x: &mut Vec<f64>, max_iters: usize, restrict: bool) -> f64 {
    let d = p.dim;
    let mut g = vec![0.0; d];
    let mut y = vec![0.0; d];
    let mut f = p.eval(x);
    let mut step = 1.0;
    let frozen: Vec<bool> = x.iter().map(|&v| restrict && v == 0.0).collect();
    for _ in 0..max_iters {
        p.grad(x, &mut g);
        for i in 0..d {
            if frozen[i] {
                g[i] = f64::NEG_INFINITY;
            }
        }
        let mut t = step;
        let mut accepted = None;
        for _ in 0..60 {
            for i in 0..d {
                y[i] = x[i] + t * g[i];
            }
            project(&mut y);
            let dir: f64 = (0..d)
                .filter(|&i| !frozen[i])
                .map(|i| g[i] * (y[i] - x[i]))
                .sum();
            if dir <= 0.0 {
                break;
            }
            let fy = p.eval(&y);
            if fy >= f + 1e-4 * dir {
                accepted = Some(fy);
                break;
            }
            t *= 0.5;
        }
        let Some(fy) = accepted else { break };
        let moved = (0..d).map(|i| (y[i] - x[i]).abs()).fold(0.0, f64::max);
        std::mem::swap(x, &mut y);
        f = fy;
        step = (t * 2.0).min(1e6);
        if moved < 1e-13 {
            break;
        }
    }
    f
}

/// Spread of the partials over the positive coordinates.
fn stationarity(p: &Polynomial, x: &[f64], g: &mut [f64]) -> f64 {
    p.grad(x, g);
    let (lo, hi) = (0..p.dim)
        .filter(|&i| x[i] > 0.0)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), i| {
            (lo.min(g[i]), hi.max(g[i]))
        });
    hi - lo
}

/// Newton iterations on the KKT system of the current support. A step is kept
/// when it raises the value, or keeps it within rounding while reducing the
/// spread of the partials.
fn polish(p: &Polynomial, x: &mut [f64]) -> f64 {
    let d = p.dim;
    let mut f = p.eval(x);
    let mut g = vec![0.0; d];
    let mut h = vec![0.0; d * d];
    let mut spread = stationarity(p, x, &mut g);
    for _ in 0..30 {
        let s: Vec<usize> = (0..d).filter(|&i| x[i] > 0.0).collect();
        let k = s.len();
        if k < 2 || spread == 0.0 {
            break;
        }
        p.grad(x, &mut g);
        p.hessian(x, &mut h);
        let mut m = DMatrix::<f64>::zeros(k + 1, k + 1);
        let mut rhs = DVector::<f64>::zeros(k + 1);
        for (a, &i) in s.iter().enumerate() {
            for (b, &j) in s.iter().enumerate() {
                m[(a, b)] = h[i * d + j];
            }
            m[(a, k)] = -1.0;
            m[(k, a)] = 1.0;
            rhs[a] = -g[i];
        }
        let Some(sol) = m.lu().solve(&rhs) else { break };
        let mut cand = x.to_vec();
        for (a, &i) in s.iter().enumerate() {
            cand[i] += sol[a];
        }
        if s.iter().any(|&i| cand[i] <= 0.0 || cand[i].is_nan()) {
            break;
        }
        let total: f64 = cand.iter().sum();
        cand.iter_mut().for_each(|v| *v /= total);
        let fc = p.eval(&cand);
        let sc = stationarity(p, &cand, &mut g);
        let better = fc > f || (fc >= f - 4.0 * f64::EPSILON * f.abs() && sc < spread);
        if !better {
            break;
        }
        x.copy_from_slice(&cand);
        f = fc;
        spread = sc;
    }
    f
}

/// Ascent, then drop coordinates that are vanishing and non-binding, then polish.
fn solve_from(
    p: &Polynomial,
    mut x: Vec<f64>,
    max_iters: usize,
    restrict: bool,
) -> (f64, Vec<f64>) {
    let f = ascend(p, &mut x, max_iters, restrict);
    let mut g = vec![0.0; p.dim];
    p.grad(&x, &mut g);
    let top = (0..p.dim)
        .filter(|&i| x[i] > 1e-6)
        .map(|i| g[i])
        .fold(0.0, f64::max);
    let mut trimmed = x.clone();
    for i in 0..p.dim {
        if trimmed[i] > 0.0 && trimmed[i] <= 1e-6 && g[i] < top - 1e-7 {
            trimmed[i] = 0.0;
        }
    }
    let total: f64 = trimmed.iter().sum();
    if total > 0.0 && trimmed != x {
        trimmed.iter_mut().for_each(|v| *v /= total);
        let ft = polish(p, &mut trimmed);
        if ft >= f {
            return (ft, trimmed);
        }
    }
    let fp = polish(p, &mut x);
    (fp.max(f), x)
}

fn dirichlet(rng: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    let mut x: Vec<f64> = (0..d).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
    let s: f64 = x.iter().sum();
    x.iter_mut().for_each(|v| *v /= s);
    x
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// All nonempty cliques of a graph given by adjacency bitmasks.
fn cliques(adj: &[u64]) -> Vec<u64> {
    fn go(adj: &[u64], current: u64, cand: u64, out: &mut Vec<u64>) {
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            let next = current | 1 << v;
            out.push(next);
            go(adj, next, c & adj[v], out);
        }
    }
    let mut out = Vec::new();
    let all = if adj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << adj.len()) - 1
    };
    go(adj, 0, all, &mut out);
    out
}

/// Best point so far; values within rounding of each other are compared by
/// the spread of their partials.
struct Best<'a> {
    p: &'a Polynomial,
    value: f64,
    spread: f64,
    x: Vec<f64>,
}

impl Best<'_> {
    fn offer(&mut self, value: f64, x: Vec<f64>) {
        let tie = 16.0 * f64::EPSILON * value.abs().max(self.value.abs());
        let mut g = vec![0.0; self.p.dim];
        if value > self.value + tie {
            self.spread = stationarity(self.p, &x, &mut g);
            self.value = value;
            self.x = x;
        } else if value >= self.value - tie {
            let spread = stationarity(self.p, &x, &mut g);
            if spread < self.spread {
                self.value = self.value.max(value);
                self.spread = spread;
                self.x = x;
            }
        }
    }
}

fn expand(classes: &VertexPartition, n: usize, z: &[f64]) -> Vec<f64> {
    let mut x = vec![0.0; n];
    for (c, members) in classes.classes().iter().enumerate() {
        for &v in members {
            x[v as usize - 1] = z[c] / members.len() as f64;
        }
    }
    x
}

fn continued_fraction(x: f64, max_den: i64) -> Option<(i64, i64)> {
    let (mut h0, mut h1, mut k0, mut k1) = (0i64, 1i64, 1i64, 0i64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e15 {
            break;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() < 1e-9 {
            return Some((h1, k1));
        }
        let frac = r - a as f64;
        if frac < 1e-15 {
            break;
        }
        r = 1.0 / frac;
    }
    ((x - h1 as f64 / k1 as f64).abs() < 1e-9).then_some((h1, k1))
}

/// Snap to rationals and verify the KKT conditions exactly.
fn rational_certificate(
    g: &Hypergraph,
    x: &[f64],
    value: f64,
) -> Option<(Vec<BigRational>, BigRational)> {
    if g.size() > 20_000 {
        return None;
    }
    let w: Vec<BigRational> = x
        .iter()
        .map(|&v| {
            continued_fraction(v, 100_000)
                .map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
        })
        .collect::<Option<_>>()?;
    if w.iter().any(|q| q.is_negative()) || !w.iter().sum::<BigRational>().is_one() {
        return None;
    }
    let exact = WeightVector::Exact(w.clone());
    let v = match super::evaluate(g, &exact).ok()? {
        super::Value::Exact(v) => v,
        _ => return None,
    };
    if (v.to_f64()? - value).abs() > 1e-12 {
        return None;
    }
    let rv = &v * BigRational::from_integer(BigInt::from(g.r()));
    let grad = exact_gradient(g, &w);
    let ok = w.iter().zip(&grad).all(|(wi, gi)| {
        if wi.is_positive() {
            *gi == rv
        } else {
            *gi <= rv
        }
    });
    ok.then_some((w, v))
}

fn kkt_residual(full: &Polynomial, x: &[f64], value: f64) -> f64 {
    let mut g = vec![0.0; full.dim];
    full.grad(x, &mut g);
    let rv = full.deg as f64 * value;
    (0..full.dim)
        .filter(|&i| x[i] > 0.0)
        .map(|i| (g[i] - rv).abs())
        .fold(0.0, f64::max)
}

/// Approximates `lambda(G)` by several strategies and keeps the best:
/// ascent on the problem with interchangeable vertices collapsed (uniform plus
/// `restarts` seeded random starts), support enumeration when the reduced
/// dimension is small, and a certification pass from fresh random starts.
pub fn maximize(g: &Hypergraph, options: &MaximizeOptions) -> OptimumResult {
    let n = g.n();
    let full = Polynomial::from_hypergraph(g);
    if full.is_zero() || n == 0 {
        let weights = if n == 0 {
            vec![]
        } else {
            vec![1.0 / n as f64; n]
        };
        let support = (1..=n as u32).collect();
        let exact = (n > 0).then(|| (vec![super::rational(1, n as i64); n], BigRational::zero()));
        return OptimumResult {
            value: 0.0,
            weights: WeightVector::Float(weights),
            support,
            kkt_residual: 0.0,
            restarts: 0,
            certified: true,
            seed: options.seed,
            mode: if exact.is_some() {
                Mode::RationalCertified
            } else {
                Mode::Float
            },
            exact,
        };
    }

    let classes = if options.symmetry {
        equivalence_classes(g)
    } else {
        VertexPartition::new(g.vertices().map(|v| vec![v]).collect()).expect("singletons")
    };
    let red = Polynomial::reduced(g, &classes);
    let k = red.dim;
    let mut best = Best {
        p: &red,
        value: f64::NEG_INFINITY,
        spread: f64::INFINITY,
        x: vec![],
    };

    let sizes: Vec<f64> = classes.classes().iter().map(|c| c.len() as f64).collect();
    let uniform: Vec<f64> = sizes.iter().map(|s| s / n as f64).collect();
    let (v, z) = solve_from(&red, uniform, options.max_iters, false);
    best.offer(v, z);
    let mut runs = 1;
    for r in 0..options.restarts {
        let mut rng = rng_for(options.seed, r as u64);
        let (v, z) = solve_from(&red, dirichlet(&mut rng, k), options.max_iters, false);
        best.offer(v, z);
        runs += 1;
    }

    if k <= options.exact_support_n && k <= 64 {
        for s in cliques(&red.shadow()) {
            let total: f64 = (0..k).filter(|&i| s >> i & 1 == 1).map(|i| sizes[i]).sum();
            let start: Vec<f64> = (0..k)
                .map(|i| {
                    if s >> i & 1 == 1 {
                        sizes[i] / total
                    } else {
                        0.0
                    }
                })
                .collect();
            let (v, z) = solve_from(&red, start, options.max_iters, true);
            best.offer(v, z);
        }
    }

    let mut x = expand(&classes, n, &best.x);
    let mut value = full.eval(&x);
    let mut beaten = false;
    for r in 0..options.certify_starts {
        let mut rng = rng_for(options.seed, (1u64 << 32) + r as u64);
        let (v, y) = solve_from(&full, dirichlet(&mut rng, n), options.max_iters, false);
        if v > value + options.kkt_tol {
            beaten = true;
            value = v;
            x = y;
        }
    }

    let kkt = kkt_residual(&full, &x, value);
    let exact = if options.rational && n <= 64 {
        rational_certificate(g, &x, value)
    } else {
        None
    };
    let (x, value, kkt) = match &exact {
        Some((w, v)) => {
            let x: Vec<f64> = w.iter().map(|q| q.to_f64().unwrap_or(0.0)).collect();
            (x, v.to_f64().unwrap_or(value), 0.0)
        }
        None => (x, value, kkt),
    };
    let support = (0..n)
        .filter(|&i| x[i] > 0.0)
        .map(|i| i as u32 + 1)
        .collect();
    OptimumResult {
        value,
        weights: WeightVector::Float(x),
        support,
        kkt_residual: kkt,
        restarts: runs,
        certified: kkt <= options.kkt_tol && !beaten,
        seed: options.seed,
        mode: if exact.is_some() {
            Mode::RationalCertified
        } else {
            Mode::Float
        },
        exact,
    }
}
