//! The verification suite: numerical and combinatorial checks of the
//! Lagrangian and Turán results this library reproduces.

use std::time::Instant;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::freeness::{contains_core, is_free, isomorphic};
use crate::hypergraph::{
    complete, complete_minus, compress, covers_pairs, extension, linear_path, named, turan_blowup,
    turan_count, Hypergraph, NamedGraph,
};
use crate::lagrangian::{
    chain_bound, closed_form, evaluate, gradient, maximize, motzkin_straus, rational,
    ClosedFormName, MaximizeOptions, OptimumResult, WeightVector,
};
use crate::search::{
    density_evidence, enumerate_left_compressed, random_covering_free,
    sample_dense_left_compressed, turan_number, turan_number_exhaustive, DensityConfig,
    DensityPattern, ForbiddenSet, RunControl, SpaceMode, TuranConfig, WholeOptions,
};

/// Criteria that cannot pass as stated; they are reported but do not make
/// [`SuiteReport::acceptable`] false.
pub const KNOWN_UNATTAINABLE: &[&str] = &["8b"];

/// Criterion numbers with the group names accepted by `--only`.
pub const CRITERIA: &[(&str, &str)] = &[
    ("1", "facts"),
    ("2", "facts"),
    ("3", "facts"),
    ("4", "clique"),
    ("5", "facts"),
    ("6", "compression"),
    ("7", "compression"),
    ("8", "density"),
    ("9", "density"),
    ("10", "spot"),
    ("11", "turan"),
    ("12", "structure"),
];

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Group names or criterion ids; empty runs everything.
    pub only: Vec<String>,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: String,
    pub group: String,
    pub title: String,
    pub passed: bool,
    /// Extra evidence that does not count towards the verdict.
    pub informational: bool,
    pub expected_failure: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    /// Every counted criterion passed.
    pub passed: bool,
    /// Every counted criterion passed apart from known unattainable ones.
    pub acceptable: bool,
    pub failures: Vec<String>,
    pub results: Vec<Outcome>,
}

impl Outcome {
    pub fn line(&self) -> String {
        let tag = match (self.passed, self.informational) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (true, true) => "INFO-PASS",
            (false, true) => "INFO-FAIL",
        };
        let note = if self.expected_failure && !self.passed {
            " (known unattainable as stated)"
        } else {
            ""
        };
        format!(
            "{tag} [{}] {}{note}: {} ({:.2}s)",
            self.id, self.title, self.detail, self.seconds
        )
    }
}

struct Ctx<'a> {
    group: &'a str,
    out: Vec<Outcome>,
}

impl Ctx<'_> {
    fn push(&mut self, id: &str, title: &str, passed: bool, detail: String, seconds: f64) {
        self.out.push(Outcome {
            id: id.into(),
            group: self.group.into(),
            title: title.into(),
            passed,
            informational: false,
            expected_failure: KNOWN_UNATTAINABLE.contains(&id),
            detail,
            seconds,
        });
    }

    fn info(&mut self, id: &str, title: &str, passed: bool, detail: String, seconds: f64) {
        self.push(id, title, passed, detail, seconds);
        self.out.last_mut().expect("pushed").informational = true;
    }
}

fn selected(only: &[String], group: &str, id: &str) -> bool {
    only.is_empty()
        || only.iter().any(|o| {
            let o = o.to_ascii_lowercase();
            o == group || o == id
        })
}

pub fn run_suite(options: &SuiteOptions) -> SuiteReport {
    let mut results = Vec::new();
    for (id, group) in CRITERIA {
        if !selected(&options.only, group, id) {
            continue;
        }
        let mut ctx = Ctx {
            group,
            out: Vec::new(),
        };
        match *id {
            "1" => c1(&mut ctx),
            "2" => c2(&mut ctx),
            "3" => c3(&mut ctx),
            "4" => c4(&mut ctx, options.seed),
            "5" => c5(&mut ctx),
            "6" => c6(&mut ctx, options.seed),
            "7" => c7(&mut ctx, options.seed),
            "8" => c8(&mut ctx),
            "9" => c9(&mut ctx, options.seed),
            "10" => c10(&mut ctx),
            "11" => c11(&mut ctx),
            "12" => c12(&mut ctx, options.seed),
            _ => unreachable!("unknown criterion"),
        }
        results.extend(ctx.out);
    }
    let counted = || results.iter().filter(|o| !o.informational && !o.passed);
    let failures: Vec<String> = counted().map(|o| o.id.clone()).collect();
    let acceptable = counted().all(|o| o.expected_failure);
    SuiteReport {
        seed: options.seed,
        passed: failures.is_empty(),
        acceptable,
        failures,
        results,
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64())
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Max over the support of `|d_i lambda - r * lambda|`, recomputed from the weights.
fn kkt_gap(g: &Hypergraph, opt: &OptimumResult) -> f64 {
    let grad = gradient(g, &opt.weights).expect("matching dimension");
    let r = g.r() as f64;
    opt.support
        .iter()
        .map(|&v| (grad[v as usize - 1].to_f64() - r * opt.value).abs())
        .fold(0.0, f64::max)
}

fn criterion_graphs() -> Vec<(String, Hypergraph)> {
    let mut gs: Vec<(String, Hypergraph)> = (3..=9)
        .map(|t| (format!("K{t}^3"), complete(t, 3).expect("t >= 3")))
        .collect();
    for t in [4, 6, 8] {
        gs.push((format!("K{t}^3-"), complete_minus(t, 3).expect("t >= 4")));
    }
    gs
}

fn c1(ctx: &mut Ctx) {
    let opts = MaximizeOptions::default();
    let (worst, secs) = timed(|| {
        (3..=9u64)
            .map(|t| {
                let v = maximize(&complete(t as usize, 3).expect("t >= 3"), &opts).value;
                (v - binomial(t, 3) as f64 / (t * t * t) as f64).abs()
            })
            .fold(0.0, f64::max)
    });
    ctx.push(
        "1",
        "lambda(K_t^3) = C(t,3)/t^3 for t = 3..9",
        worst <= 1e-9 && secs < 1.0,
        format!("max error {worst:.2e} (tol 1e-9), total {secs:.3}s (limit 1s)"),
        secs,
    );
}

fn c2(ctx: &mut Ctx) {
    let (opt, secs) = timed(|| {
        maximize(
            &complete_minus(4, 3).expect("valid"),
            &MaximizeOptions::default(),
        )
    });
    let err = (opt.value - 4.0 / 81.0).abs();
    ctx.push(
        "2",
        "lambda(K_4^3-) = 4/81",
        err <= 1e-9,
        format!(
            "value {:.12} exact {}, error {err:.2e}",
            opt.value,
            opt.exact.map_or("none".into(), |e| e.1.to_string())
        ),
        secs,
    );
}

fn c3(ctx: &mut Ctx) {
    for (id, t, name, limit) in [
        ("3a", 6, ClosedFormName::K6Minus, 0.0887),
        ("3b", 8, ClosedFormName::K8Minus, 0.1077),
    ] {
        let (opt, secs) = timed(|| {
            maximize(
                &complete_minus(t, 3).expect("valid"),
                &MaximizeOptions::default(),
            )
        });
        let cf = closed_form(name).value;
        let err = (opt.value - cf).abs();
        ctx.push(
            id,
            &format!("lambda(K_{t}^3-) matches its closed form and is below {limit}"),
            err <= 1e-7 && opt.value < limit,
            format!(
                "value {:.12}, closed form {cf:.12}, error {err:.2e}",
                opt.value
            ),
            secs,
        );
    }
}

fn c4(ctx: &mut Ctx, seed: u64) {
    let opts = MaximizeOptions::default();
    let ((worst, bad), secs) = timed(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut worst = 0.0f64;
        let mut bad = 0;
        for _ in 0..500 {
            let n = rng.gen_range(2..=10u32);
            let p: f64 = rng.gen();
            let mut edges = Vec::new();
            for a in 1..=n {
                for b in a + 1..=n {
                    if rng.gen_bool(p) {
                        edges.push([a, b]);
                    }
                }
            }
            let g = Hypergraph::new(2, n as usize, edges).expect("valid pairs");
            let (ms, _) = motzkin_straus(&g).expect("2-graph");
            let err = (maximize(&g, &opts).value - ms).abs();
            worst = worst.max(err);
            if err > 1e-7 {
                bad += 1;
            }
        }
        (worst, bad)
    });
    ctx.push(
        "4",
        "500 random 2-graphs match (1 - 1/omega)/2",
        bad == 0 && secs < 30.0,
        format!("{bad} mismatches, max error {worst:.2e}, {secs:.2}s (limit 30s)"),
        secs,
    );
}

fn c5(ctx: &mut Ctx) {
    let opts = MaximizeOptions::default();
    let (rows, secs) = timed(|| {
        criterion_graphs()
            .into_iter()
            .map(|(name, g)| (name, kkt_gap(&g, &maximize(&g, &opts))))
            .collect::<Vec<_>>()
    });
    let worst = rows.iter().map(|r| r.1).fold(0.0, f64::max);
    let bad: Vec<&str> = rows
        .iter()
        .filter(|r| r.1 > 1e-6)
        .map(|r| r.0.as_str())
        .collect();
    ctx.push(
        "5",
        "support partials equal 3*lambda on criteria 1-3 graphs",
        bad.is_empty(),
        format!(
            "{} graphs, max gap {worst:.2e} (tol 1e-6), failing {bad:?}",
            rows.len()
        ),
        secs,
    );
}

fn c6(ctx: &mut Ctx, seed: u64) {
    let ((violations, worst), secs) = timed(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6);
        let mut violations = 0;
        let mut worst = f64::NEG_INFINITY;
        for _ in 0..10_000 {
            let n = rng.gen_range(4..=8u32);
            let p: f64 = rng.gen();
            let mut edges = Vec::new();
            for a in 1..=n {
                for b in a + 1..=n {
                    for c in b + 1..=n {
                        if rng.gen_bool(p) {
                            edges.push([a, b, c]);
                        }
                    }
                }
            }
            let g = Hypergraph::new(3, n as usize, edges).expect("valid triples");
            let raw: Vec<f64> = (0..n).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
            let s: f64 = raw.iter().sum();
            let mut x: Vec<f64> = raw.iter().map(|v| v / s).collect();
            let i = rng.gen_range(1..n);
            let j = rng.gen_range(i + 1..=n);
            let (a, b) = (i as usize - 1, j as usize - 1);
            if x[a] < x[b] {
                x.swap(a, b);
            }
            let w = WeightVector::Float(x);
            let before = evaluate(&g, &w).expect("dims").to_f64();
            let after = evaluate(&compress(&g, i, j).expect("valid pair"), &w)
                .expect("dims")
                .to_f64();
            worst = worst.max(before - after);
            if after < before - 1e-12 {
                violations += 1;
            }
        }
        (violations, worst)
    });
    ctx.push(
        "6",
        "compression never lowers lambda(G, x) when x_i >= x_j (10,000 cases)",
        violations == 0,
        format!("{violations} violations, largest decrease {worst:.2e}"),
        secs,
    );
}

/// Left-compressed, pair-covering, `P_3`-free graphs on `n` vertices and the
/// number of compressions that create a `P_3` or a `K_6^3`.
fn compression_closure(n: usize) -> (usize, usize, usize) {
    let p3 = linear_path(3).expect("t >= 1");
    let k6 = complete(6, 3).expect("valid");
    let mut graphs = 0;
    let mut checked = 0;
    let mut bad = 0;
    enumerate_left_compressed(
        n,
        3,
        |_, _, _| false,
        |g| {
            if !covers_pairs(g) || !is_free(g, &p3).expect("3-graph") {
                return;
            }
            graphs += 1;
            let k6_free = is_free(g, &k6).expect("3-graph");
            for i in 1..=n as u32 {
                for j in 1..=n as u32 {
                    if i == j {
                        continue;
                    }
                    checked += 1;
                    let c = compress(g, i, j).expect("valid pair");
                    if !is_free(&c, &p3).expect("3-graph")
                        || (k6_free && !is_free(&c, &k6).expect("3-graph"))
                    {
                        bad += 1;
                    }
                }
            }
        },
    )
    .expect("n >= 3");
    (graphs, checked, bad)
}

fn c7(ctx: &mut Ctx, seed: u64) {
    let ((graphs, checked, bad), secs) = timed(|| compression_closure(6));
    ctx.push(
        "7",
        "compressions keep covering P_3-free left-compressed graphs on 6 vertices P_3-free",
        bad == 0 && secs < 300.0,
        format!("{graphs} graphs, {checked} compressions, {bad} counterexamples, {secs:.2}s (limit 300s)"),
        secs,
    );
    let (res, secs) = timed(|| {
        let (graphs, checked, mut bad) = compression_closure(7);
        let p3 = linear_path(3).expect("t >= 1");
        let forbidden = ForbiddenSet::new(vec![p3.clone()]).expect("one graph");
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7);
        let mut sampled = 0;
        for k in 0..500 {
            let n = 7 + k % 2;
            let g = random_covering_free(n, &forbidden, &mut rng).expect("star is P_3-free");
            for i in 1..=n as u32 {
                for j in 1..=n as u32 {
                    if i != j {
                        sampled += 1;
                        if !is_free(&compress(&g, i, j).expect("valid"), &p3).expect("3-graph") {
                            bad += 1;
                        }
                    }
                }
            }
        }
        (graphs, checked, sampled, bad)
    });
    let (graphs, checked, sampled, bad) = res;
    ctx.info(
        "7x",
        "same at 7 vertices, plus random covering P_3-free graphs on 7-8 vertices",
        bad == 0,
        format!("{graphs} graphs / {checked} compressions exhaustive, {sampled} sampled compressions, {bad} counterexamples"),
        secs,
    );
}

fn c8(ctx: &mut Ctx) {
    let (report, secs) = timed(|| {
        density_evidence(
            DensityPattern::P3,
            7,
            SpaceMode::LeftCompressed,
            &DensityConfig::default(),
            &RunControl::default(),
        )
    });
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            ctx.push(
                "8a",
                "P_3-free search on 7 vertices",
                false,
                e.to_string(),
                secs,
            );
            return;
        }
    };
    let target = 5.0 / 54.0;
    let k6 = complete(6, 3).expect("valid");
    let attained = isomorphic(&report.argmax_graph, &k6).unwrap_or(false);
    ctx.push(
        "8a",
        "max lambda over left-compressed P_3-free graphs on 7 vertices is 5/54, attained by K_6^3",
        (report.max_lambda - target).abs() <= 1e-7 && attained && secs < 3600.0,
        format!(
            "max {:.12} ({}), argmax on vertices {:?} is K_6^3: {attained}; {} free graphs, {} evaluated",
            report.max_lambda,
            report.max_lambda_exact.as_deref().unwrap_or("-"),
            report.argmax_vertices,
            report.counts.free_graphs,
            report.counts.evaluated
        ),
        secs,
    );
    let free_max = report.separations.clique_free_max_lambda.unwrap_or(0.0);
    let bound = target - 0.0048;
    let witness = report
        .separations
        .clique_free_argmax
        .as_ref()
        .map(|g| g.to_string())
        .unwrap_or_default();
    ctx.push(
        "8b",
        "K_6^3-free survivors have lambda <= 5/54 - 0.0048",
        free_max <= bound,
        format!("max {free_max:.12} vs bound {bound:.12}; witness {witness}"),
        0.0,
    );
    let k6m = closed_form(ClosedFormName::K6Minus).value;
    ctx.info(
        "8c",
        "K_6^3-free survivors have lambda <= lambda(K_6^3-) < 0.0887",
        free_max <= k6m + 1e-9 && free_max < 0.0887,
        format!(
            "max {free_max:.12}, lambda(K_6^3-) {k6m:.12}, gap below 5/54 is {:.6}",
            target - free_max
        ),
        0.0,
    );
}

fn c9(ctx: &mut Ctx, seed: u64) {
    let p4 = linear_path(4).expect("t >= 1");
    let k8 = complete(8, 3).expect("valid");
    let (res, secs) = timed(|| {
        let opt = maximize(&k8, &MaximizeOptions::default());
        (is_free(&k8, &p4).expect("3-graph"), opt)
    });
    let (free, opt) = res;
    let exact_ok = opt
        .exact
        .as_ref()
        .is_some_and(|(_, v)| *v == rational(7, 64));
    let density = 6.0 * opt.value;
    ctx.push(
        "9a",
        "K_8^3 is P_4-free and 6 lambda(K_8^3) = 21/32",
        free && (density - 21.0 / 32.0).abs() <= 1e-9 && exact_ok,
        format!(
            "P_4-free {free}, 6 lambda = {density:.12}, exact lambda {}",
            opt.exact
                .map(|e| e.1.to_string())
                .unwrap_or_else(|| "-".into())
        ),
        secs,
    );

    let chain = chain_bound(&rational(2, 27)).1.to_f64().unwrap_or(f64::NAN);
    let bound = chain.max(1250.0 / 11907.0);
    let (res, secs) = timed(|| {
        let forbidden = ForbiddenSet::new(vec![p4.clone()]).expect("one graph");
        let samples = sample_dense_left_compressed(
            9,
            &forbidden,
            1000,
            seed,
            1_000_000,
            &MaximizeOptions::fast(),
        )
        .expect("valid space");
        let full = MaximizeOptions::default();
        let mut over = 0;
        let mut over_free = 0;
        let mut k8_free = 0;
        let mut max = 0.0f64;
        for g in &samples.graphs {
            let v = maximize(g, &full).value;
            max = max.max(v);
            if v > 7.0 / 64.0 + 1e-9 {
                over += 1;
            }
            if is_free(g, &k8).expect("3-graph") {
                k8_free += 1;
                if v > bound + 1e-7 {
                    over_free += 1;
                }
            }
        }
        (
            samples.graphs.len(),
            samples.attempts,
            k8_free,
            max,
            over,
            over_free,
        )
    });
    let (count, attempts, k8_free, max, over, over_free) = res;
    ctx.push(
        "9b",
        "dense left-compressed P_4-free samples on 9 vertices respect 7/64 and the K_8^3-free bound",
        count == 1000 && over == 0 && over_free == 0,
        format!(
            "{count} samples ({attempts} draws), {k8_free} K_8^3-free, max lambda {max:.9}, \
             bound {bound:.9}, {over} over 7/64, {over_free} over the K_8^3-free bound"
        ),
        secs,
    );

    let (report, secs) = timed(|| {
        density_evidence(
            DensityPattern::P4,
            9,
            SpaceMode::LeftCompressed,
            &DensityConfig::default(),
            &RunControl::default(),
        )
    });
    match report {
        Ok(r) => {
            let free_max = r.separations.clique_free_max_lambda.unwrap_or(0.0);
            ctx.info(
                "9c",
                "full left-compressed P_4-free search on 9 vertices: max 7/64, K_8^3-free gap >= 0.0016",
                (r.max_lambda - 7.0 / 64.0).abs() <= 1e-7 && 7.0 / 64.0 - free_max >= 0.0016,
                format!(
                    "max {:.12}, K_8^3-free max {free_max:.12}, {} free graphs",
                    r.max_lambda, r.counts.free_graphs
                ),
                secs,
            );
        }
        Err(e) => ctx.info(
            "9c",
            "full left-compressed P_4-free search on 9 vertices",
            false,
            e.to_string(),
            secs,
        ),
    }
}

fn c10(ctx: &mut Ctx) {
    let h = named(NamedGraph::HStar);
    let (opt, secs) = timed(|| maximize(&h, &MaximizeOptions::default()));
    let err = (opt.value - 2.0 / 25.0).abs();
    ctx.push(
        "10",
        "the 15-edge H* has lambda = lambda(K_5^3) = 2/25",
        err <= 1e-8 && h.size() == 15,
        format!(
            "value {:.14} ({}), error {err:.2e}",
            opt.value,
            opt.exact
                .map(|e| e.1.to_string())
                .unwrap_or_else(|| "-".into())
        ),
        secs,
    );
}

fn c11(ctx: &mut Ctx) {
    let f5 = named(NamedGraph::F5);
    let (iso, secs) = timed(|| {
        extension(&named(NamedGraph::T2))
            .and_then(|h| isomorphic(&h, &f5))
            .unwrap_or(false)
    });
    ctx.push(
        "11a",
        "extension of T_2 is isomorphic to F_5",
        iso,
        format!("isomorphic {iso}"),
        secs,
    );

    let (res, secs) = timed(|| {
        let bnb = turan_number(5, std::slice::from_ref(&f5), &TuranConfig::default());
        let all = turan_number_exhaustive(5, std::slice::from_ref(&f5), WholeOptions::default());
        (bnb, all)
    });
    match res {
        (Ok(b), Ok(a)) => {
            let same = b.max_edges == a.max_edges && b.witnesses == a.witnesses;
            ctx.push(
                "11b",
                "ex(5, F_5) by branch and bound equals the whole-space count",
                same,
                format!(
                    "branch and bound {} ({} witnesses), whole space {} ({} witnesses)",
                    b.max_edges,
                    b.witnesses.len(),
                    a.max_edges,
                    a.witnesses.len()
                ),
                secs,
            );
        }
        (b, a) => ctx.push(
            "11b",
            "ex(5, F_5) by two routes",
            false,
            format!("{:?} / {:?}", b.err(), a.err()),
            secs,
        ),
    }

    let (bad, secs) = timed(|| {
        let mut bad = Vec::new();
        for m in 3..=6 {
            for n in 0..=15 {
                let edges = turan_blowup(m, 3, n)
                    .map(|g| g.size() as u128)
                    .unwrap_or(u128::MAX);
                if edges != turan_count(m, 3, n) {
                    bad.push((m, n));
                }
            }
        }
        bad
    });
    ctx.push(
        "11c",
        "t_m^3(n) equals the edge count of T_m^3(n) for m = 3..6, n <= 15",
        bad.is_empty(),
        format!("{} mismatches {bad:?}", bad.len()),
        secs,
    );

    let (found, secs) = timed(|| {
        let p3 = linear_path(3).expect("t >= 1");
        (6..=14)
            .filter(|&n| {
                turan_blowup(6, 3, n)
                    .and_then(|g| contains_core(&g, &p3, 7))
                    .unwrap_or(true)
            })
            .collect::<Vec<_>>()
    });
    ctx.push(
        "11d",
        "T_6^3(n) has no covered 7-set spanning a P_3, n <= 14",
        found.is_empty(),
        format!("cores found at n = {found:?}"),
        secs,
    );
}

fn c12(ctx: &mut Ctx, seed: u64) {
    let (res, secs) = timed(|| {
        let forbidden =
            ForbiddenSet::new(vec![linear_path(4).expect("t >= 1")]).expect("one graph");
        let f1 = named(NamedGraph::F1);
        let f2 = named(NamedGraph::F2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC);
        let mut bad = Vec::new();
        let mut edges = 0;
        for k in 0..200 {
            let g =
                random_covering_free(9 + k % 2, &forbidden, &mut rng).expect("star is P_4-free");
            edges += g.size();
            if !is_free(&g, &f1).unwrap_or(false) || !is_free(&g, &f2).unwrap_or(false) {
                bad.push(g.to_string());
            }
        }
        (bad, edges)
    });
    let (bad, edges) = res;
    ctx.push(
        "12",
        "200 covering P_4-free graphs on 9-10 vertices are F_1-free and F_2-free",
        bad.is_empty(),
        format!(
            "{} counterexamples, mean size {:.1} edges {bad:?}",
            bad.len(),
            edges as f64 / 200.0
        ),
        secs,
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection() {
        let only = vec!["8".to_string()];
        assert!(selected(&only, "density", "8"));
        assert!(!selected(&only, "density", "9"));
        assert!(selected(&["density".into()], "density", "9"));
        assert!(selected(&[], "turan", "11"));
    }

    #[test]
    fn facts_subset() {
        let r = run_suite(&SuiteOptions {
            only: vec!["2".into(), "spot".into()],
            seed: 0,
        });
        let ids: Vec<&str> = r.results.iter().map(|o| o.id.as_str()).collect();
        assert_eq!(ids, ["2", "10"]);
        assert!(r.passed, "{:?}", r.results);
    }
}
