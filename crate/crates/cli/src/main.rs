use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hyperlag::freeness::{contains, left_compress_loop};
use hyperlag::hypergraph::{
    complete, complete_minus, compress, extension, io, linear_path, matching, named, turan_blowup,
    NamedGraph,
};
use hyperlag::lagrangian::{maximize, MaximizeOptions, OptimumResult};
use hyperlag::search::{
    density_evidence, turan_number, with_threads, DensityConfig, DensityPattern, DensityReport,
    DensityStatus, RunControl, SearchStatus, SpaceMode, TuranConfig, TuranResult,
};
use hyperlag::suite::{run_suite, SuiteOptions};
use hyperlag::Hypergraph;
use serde_json::json;

const OK: u8 = 0;
const INPUT_ERROR: u8 = 1;
const UNCERTIFIED: u8 = 2;
const CAPPED: u8 = 3;

/// Lagrangians, compressions and extremal searches for uniform hypergraphs.
#[derive(Parser)]
#[command(name = "hyperlag", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "HYPERLAG_SEED", default_value_t = 0)]
    seed: u64,
    /// Random restarts of the optimizer.
    #[arg(long, global = true, env = "HYPERLAG_RESTARTS", default_value_t = 64)]
    restarts: usize,
    /// Tolerance on the first-order conditions.
    #[arg(long, global = true, env = "HYPERLAG_KKT_TOL", default_value_t = 1e-8)]
    kkt_tol: f64,
    /// Worker threads for searches (default: all cores).
    #[arg(long, global = true, env = "HYPERLAG_THREADS")]
    threads: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long, global = true, env = "HYPERLAG_JSON")]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum Lagrangian of a graph file.
    Lambda { input: PathBuf },
    /// Test a graph for copies of forbidden patterns.
    Check {
        input: PathBuf,
        /// Pattern name (P3, K6, K6-, T2, F5, HSTAR, M2, ...) or graph file.
        #[arg(long = "free-of", required = true, num_args = 1..)]
        free_of: Vec<String>,
    },
    /// Apply one compression, or run the compression loop.
    Compress {
        input: PathBuf,
        /// Run the densify-and-compress loop for a P_t-free graph (t = 3 or 4).
        #[arg(long = "loop", value_name = "T", conflicts_with = "pair")]
        loop_t: Option<usize>,
        /// Lower bound on lambda required by the loop.
        #[arg(long, requires = "loop_t")]
        floor: Option<f64>,
        /// Compress vertex J to vertex I.
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        pair: Option<Vec<u32>>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Extension: cover every uncovered pair with an edge of fresh vertices.
    Extend {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a standard graph: `K t r`, `K- t r`, `P t`, `T m r n`, `M t r` or a name.
    Construct {
        kind: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Maximum edges of a graph on n vertices avoiding the patterns.
    Turan {
        n: usize,
        #[arg(required = true, num_args = 1..)]
        patterns: Vec<String>,
        /// Forbid the extensions of the patterns instead of the patterns.
        #[arg(long)]
        extend: bool,
        /// Also report the balanced complete m-partite count.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long, default_value_t = 8)]
        split_depth: usize,
    },
    /// Largest Lagrangian over F-free 3-graphs on n vertices.
    Density {
        /// P2, T2, P3 or P4.
        pattern: String,
        n: usize,
        /// `lc` (left-compressed) or `all`.
        #[arg(long, default_value = "lc")]
        mode: String,
        /// Evaluate every free graph, not only those covering pairs.
        #[arg(long)]
        no_cover_filter: bool,
        #[arg(long, default_value_t = 32)]
        top_k: usize,
        #[arg(long, default_value_t = 12)]
        split_depth: usize,
        /// Shards run between checkpoints and cap checks.
        #[arg(long, default_value_t = 256)]
        batch: usize,
        #[arg(long, env = "HYPERLAG_MAX_NODES")]
        max_nodes: Option<u64>,
        #[arg(long, env = "HYPERLAG_MAX_SECONDS")]
        max_seconds: Option<f64>,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify {
        /// Group names or criterion numbers.
        #[arg(long, num_args = 1..)]
        only: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { OK });
        }
    };
    if let Some(t) = cli.global.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(INPUT_ERROR);
        }
    }
    let threads = cli.global.threads;
    match with_threads(threads, move || run(cli)) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

fn options(g: &Global) -> MaximizeOptions {
    MaximizeOptions {
        seed: g.seed,
        restarts: g.restarts,
        kkt_tol: g.kkt_tol,
        ..MaximizeOptions::default()
    }
}

fn run(cli: Cli) -> Result<u8> {
    let g = &cli.global;
    match cli.command {
        Command::Lambda { input } => cmd_lambda(g, &input),
        Command::Check { input, free_of } => cmd_check(g, &input, &free_of),
        Command::Compress {
            input,
            loop_t,
            floor,
            pair,
            output,
        } => cmd_compress(g, &input, loop_t, floor, pair, output.as_deref()),
        Command::Extend { input, output } => {
            let h = extension(&read(&input)?)?;
            emit_graph(g, &h, output.as_deref())
        }
        Command::Construct {
            kind,
            params,
            output,
        } => emit_graph(g, &construct(&kind, &params)?, output.as_deref()),
        Command::Turan {
            n,
            patterns,
            extend,
            m,
            max_nodes,
            split_depth,
        } => cmd_turan(g, n, &patterns, extend, m, max_nodes, split_depth),
        Command::Density {
            pattern,
            n,
            mode,
            no_cover_filter,
            top_k,
            split_depth,
            batch,
            max_nodes,
            max_seconds,
            checkpoint,
            resume,
        } => {
            let pattern: DensityPattern = pattern.parse()?;
            let mode: SpaceMode = mode.parse()?;
            let mut inner = MaximizeOptions::fast();
            inner.seed = g.seed;
            inner.kkt_tol = g.kkt_tol;
            let config = DensityConfig {
                inner,
                full: options(g),
                top_k,
                covering_filter: !no_cover_filter,
                split_depth,
                batch: batch.max(1),
            };
            if max_nodes == Some(0) || max_seconds.is_some_and(|s| s <= 0.0) {
                bail!("resource caps must be positive");
            }
            let control = RunControl {
                max_nodes,
                max_seconds,
                checkpoint,
                resume_from: resume,
            };
            let report = density_evidence(pattern, n, mode, &config, &control)?;
            print_density(g, &report)?;
            Ok(match report.status {
                DensityStatus::Complete => OK,
                DensityStatus::Partial => CAPPED,
            })
        }
        Command::Verify { only } => {
            let report = run_suite(&SuiteOptions { only, seed: g.seed });
            if g.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("seed: {}", report.seed);
                for r in &report.results {
                    println!("{}", r.line());
                }
                let counted = report.results.iter().filter(|r| !r.informational).count();
                println!(
                    "{} of {counted} criteria passed; failing: {:?}",
                    counted - report.failures.len(),
                    report.failures
                );
            }
            Ok(if report.passed { OK } else { UNCERTIFIED })
        }
    }
}

fn read(path: &Path) -> Result<Hypergraph> {
    io::read_file(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, h: &Hypergraph) -> Result<()> {
    if path.extension().is_some_and(|e| e == "json") {
        std::fs::write(path, io::to_json(h))?;
    } else {
        io::write_file(path, h)?;
    }
    Ok(())
}

fn emit_graph(g: &Global, h: &Hypergraph, output: Option<&Path>) -> Result<u8> {
    match output {
        Some(p) => {
            write(p, h)?;
            if !g.json {
                println!(
                    "wrote {} edges on {} vertices to {}",
                    h.size(),
                    h.n(),
                    p.display()
                );
            }
        }
        None if g.json => println!("{}", io::to_json(h)),
        None => print!("{}", io::to_hg(h)),
    }
    Ok(OK)
}

/// Named pattern or graph file.
fn pattern(spec: &str) -> Result<Hypergraph> {
    let path = Path::new(spec);
    if path.is_file() {
        return read(path);
    }
    let upper = spec.to_ascii_uppercase();
    let num = |s: &str| s.parse::<usize>().ok();
    if let Some(t) = upper.strip_prefix('P').and_then(num) {
        return Ok(linear_path(t)?);
    }
    if let Some(t) = upper
        .strip_prefix('K')
        .and_then(|s| s.strip_suffix('-'))
        .and_then(num)
    {
        return Ok(complete_minus(t, 3)?);
    }
    if let Some(t) = upper.strip_prefix('K').and_then(num) {
        return Ok(complete(t, 3)?);
    }
    let id: NamedGraph = spec
        .parse()
        .map_err(|_| anyhow!("unknown pattern `{spec}` (not a file or known name)"))?;
    Ok(named(id))
}

fn construct(kind: &str, p: &[usize]) -> Result<Hypergraph> {
    let want = |k: usize| -> Result<()> {
        if p.len() != k {
            bail!("`{kind}` takes {k} parameter(s), got {}", p.len());
        }
        Ok(())
    };
    let h = match kind.to_ascii_uppercase().as_str() {
        "K" => {
            want(2)?;
            complete(p[0], p[1])?
        }
        "K-" => {
            want(2)?;
            complete_minus(p[0], p[1])?
        }
        "P" => {
            want(1)?;
            linear_path(p[0])?
        }
        "T" => {
            want(3)?;
            turan_blowup(p[0], p[1], p[2])?
        }
        "M" => {
            want(2)?;
            matching(p[0], p[1])?
        }
        _ => {
            want(0)?;
            pattern(kind)?
        }
    };
    Ok(h)
}

fn exact_or_decimal(r: &OptimumResult) -> String {
    match &r.exact {
        Some((_, v)) => format!("{v} ({:.12})", r.value),
        None => format!("{:.12}", r.value),
    }
}

fn cmd_lambda(g: &Global, input: &Path) -> Result<u8> {
    let h = read(input)?;
    let res = maximize(&h, &options(g));
    if g.json {
        println!("{}", serde_json::to_string_pretty(&res)?);
    } else {
        println!("seed: {}", res.seed);
        println!("lambda: {}", exact_or_decimal(&res));
        println!("certified: {}", res.certified);
        println!("support: {:?}", res.support);
        match &res.exact {
            Some((w, _)) => {
                let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                println!("weights: [{}]", w.join(", "));
            }
            None => println!("weights: {:?}", res.weights.to_f64()),
        }
        println!("kkt residual: {:.3e}", res.kkt_residual);
    }
    Ok(if res.certified { OK } else { UNCERTIFIED })
}

fn cmd_check(g: &Global, input: &Path, free_of: &[String]) -> Result<u8> {
    let h = read(input)?;
    let mut rows = Vec::new();
    for spec in free_of {
        let f = pattern(spec)?;
        let found = contains(&h, &f)?;
        if g.json {
            rows.push(json!({
                "pattern": spec,
                "free": found.is_none(),
                "witness": found.as_ref().map(|w| &w.assignment),
            }));
        } else {
            match found {
                None => println!("{spec}: free"),
                Some(w) => {
                    let map: Vec<String> = w
                        .assignment
                        .iter()
                        .enumerate()
                        .map(|(i, v)| format!("{}->{v}", i + 1))
                        .collect();
                    println!("{spec}: contains (witness {})", map.join(" "));
                }
            }
        }
    }
    if g.json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
    }
    Ok(OK)
}

fn cmd_compress(
    g: &Global,
    input: &Path,
    loop_t: Option<usize>,
    floor: Option<f64>,
    pair: Option<Vec<u32>>,
    output: Option<&Path>,
) -> Result<u8> {
    let h = read(input)?;
    let opts = options(g);
    let (graph, before, after, steps) = match (loop_t, pair) {
        (Some(t), _) => {
            let out = left_compress_loop(&h, t, floor, &opts)?;
            (
                out.graph,
                out.lambda_before,
                out.lambda_after,
                out.compressions,
            )
        }
        (None, Some(p)) => {
            let c = compress(&h, p[0], p[1])?;
            let before = maximize(&h, &opts).value;
            let after = maximize(&c, &opts).value;
            (c, before, after, vec![(p[0], p[1])])
        }
        (None, None) => bail!("give either --loop T or --pair I J"),
    };
    if let Some(p) = output {
        write(p, &graph)?;
    }
    if g.json {
        let mut v = json!({
            "seed": g.seed,
            "lambda_before": before,
            "lambda_after": after,
            "compressions": steps,
        });
        if output.is_none() {
            v["graph"] = serde_json::to_value(&graph)?;
        }
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        println!("seed: {}", g.seed);
        println!("lambda before: {before:.12}");
        println!("lambda after:  {after:.12}");
        println!("compressions: {}", steps.len());
        match output {
            Some(p) => println!("wrote {} edges to {}", graph.size(), p.display()),
            None => print!("{}", io::to_hg(&graph)),
        }
    }
    Ok(OK)
}

fn cmd_turan(
    g: &Global,
    n: usize,
    specs: &[String],
    extend: bool,
    m: Option<usize>,
    max_nodes: Option<u64>,
    split_depth: usize,
) -> Result<u8> {
    if max_nodes == Some(0) {
        bail!("--max-nodes must be positive");
    }
    let mut forbidden = Vec::new();
    for s in specs {
        let f = pattern(s)?;
        forbidden.push(if extend { extension(&f)? } else { f });
    }
    let compare_m = m.or_else(|| {
        (extend && specs.len() == 1).then(|| pattern(&specs[0]).map(|f| f.n() - 1).ok())?
    });
    let config = TuranConfig {
        max_nodes,
        split_depth,
        compare_m,
    };
    let res = turan_number(n, &forbidden, &config)?;
    print_turan(g, &res)?;
    Ok(match res.status {
        SearchStatus::Exact => OK,
        SearchStatus::LowerBound => CAPPED,
    })
}

fn print_turan(g: &Global, res: &TuranResult) -> Result<()> {
    if g.json {
        println!("{}", serde_json::to_string_pretty(res)?);
        return Ok(());
    }
    println!("seed: {}", g.seed);
    let status = match res.status {
        SearchStatus::Exact => "exact",
        SearchStatus::LowerBound => "lower bound (node cap reached)",
    };
    println!("max edges: {} ({status})", res.max_edges);
    println!("nodes: {}", res.nodes);
    if let Some(c) = &res.comparison {
        println!("balanced {}-partite count: {}", c.m, c.turan_count);
    }
    println!("witnesses: {}", res.witnesses.len());
    for w in &res.witnesses {
        println!("  {w}");
    }
    Ok(())
}

fn print_density(g: &Global, rep: &DensityReport) -> Result<()> {
    if g.json {
        println!("{}", serde_json::to_string_pretty(rep)?);
        return Ok(());
    }
    println!("seed: {}", rep.seed);
    println!(
        "pattern {} on {} vertices, {} space",
        rep.pattern, rep.space.n, rep.space.mode
    );
    let c = &rep.counts;
    println!(
        "nodes {} | free {} | pruned {} | evaluated {} | uncovered {}",
        c.nodes, c.free_graphs, c.pruned, c.evaluated, c.skipped_uncovered
    );
    match &rep.max_lambda_exact {
        Some(x) => println!("max lambda: {x} ({:.12})", rep.max_lambda),
        None => println!("max lambda: {:.12}", rep.max_lambda),
    }
    println!("certified: {}", rep.max_certified);
    println!(
        "argmax: {} on vertices {:?}",
        rep.argmax_graph, rep.argmax_vertices
    );
    let s = &rep.separations;
    println!(
        "lambda({}) = {} ({:.12})",
        s.clique, s.clique_lambda_exact, s.clique_lambda
    );
    match (s.clique_free_max_lambda, s.epsilon) {
        (Some(v), Some(e)) => println!("best {}-free: {v:.12}, gap {e:.12}", s.clique),
        _ => println!("no {}-free survivor", s.clique),
    }
    let status = match rep.status {
        DensityStatus::Complete => "complete",
        DensityStatus::Partial => "partial (cap reached)",
    };
    println!("status: {status}");
    if let Some(note) = &rep.relies_on {
        println!("note: {note}");
    }
    Ok(())
}
