//! Command-line front end: generate graphs, construct verified labelings,
//! verify, report bounds, solve exactly, and reproduce the strength table.
//!
//! Exit codes: 0 success (and verification positive), 1 verification
//! negative, 2 usage error, 3 search budget exhausted.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{bound_report, greedy_upper_labeling};
use crate::compose::label_grid;
use crate::cycles::{
    auto_label_cycle, label_cycle_div3, label_cycle_div4, label_cycle_prime_chain,
    label_cycle_small, label_hamiltonian, label_path, minimal_chain_budget,
};
use crate::error::{Error, Result};
use crate::graph::{
    cartesian_product, make_complete, make_complete_multipartite, make_cycle, make_path,
    FamilyTag, Graph,
};
use crate::labeling::{TotalLabeling, CYCLE_OPTIMA};
use crate::solver::{tvps_exact, SearchConfig, TvpsOutcome};

#[derive(Parser)]
#[command(
    name = "tvps",
    version,
    about = "Total vertex product irregularity strength toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph family as JSON (or DOT with --dot).
    Gen {
        /// Family spec: cycle:N, path:N, grid:A,B,..., torus:A,B,...,
        /// complete:N, multipartite:M1,M2,...
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Construct a labeling; it is verified before being written.
    Label {
        /// Family spec (see gen), or use --graph / --grid / --torus.
        spec: Option<String>,
        /// Comma-separated dimensions of a grid (product of paths).
        #[arg(long, value_name = "DIMS", conflicts_with_all = ["spec", "torus"])]
        grid: Option<String>,
        /// Comma-separated dimensions of a toroidal grid (product of cycles).
        #[arg(long, value_name = "DIMS", conflicts_with_all = ["spec", "grid"])]
        torus: Option<String>,
        /// Graph JSON file (for greedy or hamiltonian labeling).
        #[arg(long, conflicts_with = "spec")]
        graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Hamiltonian cycle or path, comma-separated vertices.
        #[arg(long)]
        witness: Option<String>,
        /// Strength budget for the prime-chain method.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a labeling file against a graph file; exit 0 iff irregular.
    Verify {
        graph: PathBuf,
        labeling: PathBuf,
    },
    /// Report all applicable lower and upper bounds.
    Bounds {
        /// Family spec or graph JSON file.
        target: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact strength by branch and bound.
    Solve {
        /// Family spec or graph JSON file.
        target: Option<String>,
        /// Alias for the positional target.
        #[arg(long, value_name = "FILE|SPEC", conflicts_with = "target")]
        graph: Option<String>,
        #[arg(long)]
        max_s: Option<u64>,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        budget_seconds: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the cycle strength table and sweep the constructions.
    Bench {
        #[arg(long, default_value_t = 100)]
        max_n: usize,
        /// Write the sweep as CSV (columns n,lower,div3,div4,chain,best).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Table,
    Div3,
    Div4,
    Chain,
    Greedy,
    Path,
    Hamiltonian,
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return 2;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Gen { spec, out, dot } => cmd_gen(&spec, out.as_deref(), dot),
        Command::Label {
            spec,
            grid,
            torus,
            graph,
            method,
            witness,
            budget,
            out,
        } => cmd_label(
            spec.as_deref(),
            grid.as_deref(),
            torus.as_deref(),
            graph.as_deref(),
            method,
            witness.as_deref(),
            budget,
            out.as_deref(),
        ),
        Command::Verify { graph, labeling } => cmd_verify(&graph, &labeling),
        Command::Bounds { target, out } => cmd_bounds(&target, out.as_deref()),
        Command::Solve {
            target,
            graph,
            max_s,
            budget_nodes,
            budget_seconds,
            out,
        } => {
            let target = target.or(graph).ok_or_else(|| {
                Error::InvalidParameter("solve needs a family spec or graph file".into())
            })?;
            cmd_solve(&target, max_s, budget_nodes, budget_seconds, out.as_deref())
        }
        Command::Bench { max_n, csv } => cmd_bench(max_n, csv.as_deref()),
    }
}

fn parse_dims(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad dimension {p:?}")))
        })
        .collect()
}

fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let (tag, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidParameter(format!("bad family spec {spec:?}")))?;
    let params = parse_dims(rest)?;
    let single = |params: &[usize]| -> Result<usize> {
        if params.len() == 1 {
            Ok(params[0])
        } else {
            Err(Error::InvalidParameter(format!(
                "{tag} takes one parameter, got {params:?}"
            )))
        }
    };
    match tag {
        "cycle" => make_cycle(single(&params)?),
        "path" => make_path(single(&params)?),
        "complete" => make_complete(single(&params)?),
        "multipartite" => make_complete_multipartite(&params),
        "grid" => {
            let factors: Vec<Graph> = params.iter().map(|&n| make_path(n)).collect::<Result<_>>()?;
            Ok(cartesian_product(&factors)?.0)
        }
        "torus" => {
            let factors: Vec<Graph> = params.iter().map(|&n| make_cycle(n)).collect::<Result<_>>()?;
            Ok(cartesian_product(&factors)?.0)
        }
        _ => Err(Error::InvalidParameter(format!("unknown family {tag:?}"))),
    }
}

// Spec strings contain ':'; anything else is read as a graph JSON file.
fn load_target(target: &str) -> Result<Graph> {
    if target.contains(':') {
        parse_graph_spec(target)
    } else {
        Graph::from_json_str(&std::fs::read_to_string(target)?)
    }
}

// Writes atomically via a sibling temp file, or to stdout.
fn write_output(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        None => {
            println!("{content}");
            Ok(())
        }
        Some(path) => {
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, content)?;
            std::fs::rename(&tmp, path)?;
            Ok(())
        }
    }
}

fn cmd_gen(spec: &str, out: Option<&Path>, dot: bool) -> Result<i32> {
    let graph = parse_graph_spec(spec)?;
    let content = if dot { graph.to_dot() } else { graph.to_json_string() };
    write_output(out, &content)?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_label(
    spec: Option<&str>,
    grid: Option<&str>,
    torus: Option<&str>,
    graph_file: Option<&Path>,
    method: Method,
    witness: Option<&str>,
    budget: Option<u64>,
    out: Option<&Path>,
) -> Result<i32> {
    // grid/torus flags are shorthand for the grid pipeline
    if let Some(dims) = grid.or(torus) {
        let dims = parse_dims(dims)?;
        if method != Method::Auto {
            return Err(Error::InvalidParameter(
                "grid labeling has no method overrides".into(),
            ));
        }
        let result = label_grid(&dims, torus.is_some())?;
        let plan = serde_json::to_value(&result.budget)?;
        return emit_labeling(&result.labeling, "grid_composition", Some(plan), out);
    }

    let graph = match (spec, graph_file) {
        (Some(spec), None) => parse_graph_spec(spec)?,
        (None, Some(path)) => Graph::from_json_str(&std::fs::read_to_string(path)?)?,
        _ => {
            return Err(Error::InvalidParameter(
                "label needs a family spec, --graph, --grid or --torus".into(),
            ))
        }
    };
    let n = graph.vertex_count();
    let tag = graph.family().tag;

    let unsupported = || {
        Err(Error::InvalidParameter(format!(
            "method {method:?} does not apply to this graph"
        )))
    };
    match method {
        Method::Auto => match tag {
            FamilyTag::Cycle => emit_labeling(&auto_label_cycle(n)?, "auto", None, out),
            FamilyTag::Path => emit_labeling(&label_path(n)?, "path", None, out),
            FamilyTag::Grid | FamilyTag::ToroidalGrid => {
                let dims = graph.family().params.clone();
                let result = label_grid(&dims, tag == FamilyTag::ToroidalGrid)?;
                let plan = serde_json::to_value(&result.budget)?;
                emit_labeling(&result.labeling, "grid_composition", Some(plan), out)
            }
            _ => emit_labeling(&greedy_upper_labeling(&graph, None)?, "greedy", None, out),
        },
        Method::Table => match tag {
            FamilyTag::Cycle => emit_labeling(&label_cycle_small(n)?, "table", None, out),
            _ => unsupported(),
        },
        Method::Div3 => match tag {
            FamilyTag::Cycle => emit_labeling(&label_cycle_div3(n)?, "div3", None, out),
            _ => unsupported(),
        },
        Method::Div4 => match tag {
            FamilyTag::Cycle => emit_labeling(&label_cycle_div4(n)?, "div4", None, out),
            _ => unsupported(),
        },
        Method::Chain => match tag {
            FamilyTag::Cycle => {
                let budget = match budget {
                    Some(b) => b,
                    None => minimal_chain_budget(n).ok_or(Error::ChainInfeasible(n))?,
                };
                let (labeling, plan) = label_cycle_prime_chain(n, budget)?;
                emit_labeling(&labeling, "prime_chain", Some(serde_json::to_value(&plan)?), out)
            }
            _ => unsupported(),
        },
        Method::Path => match tag {
            FamilyTag::Path => emit_labeling(&label_path(n)?, "path", None, out),
            _ => unsupported(),
        },
        Method::Greedy => emit_labeling(&greedy_upper_labeling(&graph, None)?, "greedy", None, out),
        Method::Hamiltonian => {
            let walk = witness.ok_or_else(|| {
                Error::InvalidParameter("--method hamiltonian needs --witness".into())
            })?;
            let walk = parse_dims(walk)?;
            emit_labeling(&label_hamiltonian(&graph, &walk)?, "hamiltonian", None, out)
        }
    }
}

fn emit_labeling(
    labeling: &TotalLabeling,
    method: &str,
    plan: Option<serde_json::Value>,
    out: Option<&Path>,
) -> Result<i32> {
    // every emitted labeling passed the verifier inside its constructor,
    // but this is the last line of defense before output
    if !labeling.is_product_irregular() {
        return Err(Error::Internal("labeling failed final verification".into()));
    }
    let mut value = labeling.to_json();
    let obj = value.as_object_mut().expect("labeling JSON is an object");
    obj.insert("method".into(), serde_json::Value::String(method.into()));
    obj.insert("strength".into(), serde_json::json!(labeling.strength()));
    obj.insert("plan".into(), plan.unwrap_or(serde_json::Value::Null));
    write_output(out, &serde_json::to_string_pretty(&value)?)?;
    Ok(0)
}

fn cmd_verify(graph_path: &Path, labeling_path: &Path) -> Result<i32> {
    let graph = Graph::from_json_str(&std::fs::read_to_string(graph_path)?)?;
    let labeling =
        TotalLabeling::from_json_str(graph, &std::fs::read_to_string(labeling_path)?)?;
    println!("strength: {}", labeling.strength());
    let pds = labeling.product_degrees().sorted();
    let rendered: Vec<String> = pds.iter().map(|p| p.to_string()).collect();
    println!("pd: [{}]", rendered.join(", "));
    match labeling.irregularity_witness() {
        None => {
            println!("irregular: yes");
            Ok(0)
        }
        Some((u, v)) => {
            println!("irregular: no");
            println!("witness: ({u}, {v})");
            Ok(1)
        }
    }
}

fn cmd_bounds(target: &str, out: Option<&Path>) -> Result<i32> {
    let graph = load_target(target)?;
    let report = bound_report(&graph)?;
    write_output(out, &serde_json::to_string_pretty(&report)?)?;
    Ok(0)
}

fn cmd_solve(
    target: &str,
    max_s: Option<u64>,
    budget_nodes: Option<u64>,
    budget_seconds: Option<u64>,
    out: Option<&Path>,
) -> Result<i32> {
    let graph = load_target(target)?;
    let mut cfg = SearchConfig::default();
    if let Some(m) = max_s {
        cfg.max_strength = m;
    }
    if let Some(b) = budget_nodes {
        cfg.node_budget = b;
    }
    if let Some(t) = budget_seconds {
        cfg.time_budget = std::time::Duration::from_secs(t);
    }
    match tvps_exact(&graph, &cfg)? {
        TvpsOutcome::Exact { value, witness } => {
            let payload = serde_json::json!({
                "tvps": value,
                "witness": witness.to_json(),
            });
            write_output(out, &serde_json::to_string_pretty(&payload)?)?;
            Ok(0)
        }
        TvpsOutcome::Bracket { lower, upper } => {
            let payload = serde_json::json!({ "bracket": [lower, upper] });
            write_output(out, &serde_json::to_string_pretty(&payload)?)?;
            Ok(3)
        }
    }
}

// one sweep row of the reproduction table
struct BenchRow {
    n: usize,
    lower: u64,
    div3: Option<u64>,
    div4: Option<u64>,
    chain: Option<u64>,
    best: Option<u64>,
}

fn bench_row(n: usize) -> Result<BenchRow> {
    let lower = crate::bounds::cycle_cuberoot_lower_bound(n);
    let table = (3..=16).contains(&n).then(|| {
        label_cycle_small(n).map(|l| l.strength())
    });
    let table = match table {
        Some(r) => Some(r?),
        None => None,
    };
    let div3 = if n >= 7 { Some(label_cycle_div3(n)?.strength()) } else { None };
    let div4 = if n >= 13 { Some(label_cycle_div4(n)?.strength()) } else { None };
    let chain = match minimal_chain_budget(n) {
        Some(budget) => Some(label_cycle_prime_chain(n, budget)?.0.strength()),
        None => None,
    };
    let best = [table, div3, div4, chain].into_iter().flatten().min();
    Ok(BenchRow {
        n,
        lower,
        div3,
        div4,
        chain,
        best,
    })
}

fn worker_count() -> usize {
    if let Ok(v) = std::env::var("TVPS_THREADS") {
        if let Ok(k) = v.parse::<usize>() {
            return k.max(1);
        }
    }
    std::thread::available_parallelism()
        .map(|p| p.get().min(8))
        .unwrap_or(1)
}

fn cmd_bench(max_n: usize, csv: Option<&Path>) -> Result<i32> {
    // part 1: the small-cycle table against its known optima
    println!("small cycle optima (n = 3..16):");
    let mut failures = 0;
    for n in 3..=16usize {
        let strength = label_cycle_small(n)?.strength();
        let expected = CYCLE_OPTIMA[n - 3];
        let mark = if strength == expected { "ok" } else { "MISMATCH" };
        if strength != expected {
            failures += 1;
        }
        println!("  n={n:>2}  strength={strength}  expected={expected}  {mark}");
    }

    // part 2: construction sweep
    let max_n = max_n.max(3);
    let ns: Vec<usize> = (3..=max_n).collect();
    let workers = worker_count().min(ns.len().max(1));
    let chunk = ns.len().div_ceil(workers);
    let mut rows: Vec<Result<BenchRow>> = Vec::with_capacity(ns.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = ns
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(|&n| bench_row(n)).collect::<Vec<_>>()))
            .collect();
        for h in handles {
            rows.extend(h.join().expect("bench worker panicked"));
        }
    });

    let fmt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    let mut csv_body = String::from("n,lower,div3,div4,chain,best\n");
    println!("construction sweep (n = 3..{max_n}):");
    println!("  {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}", "n", "lower", "div3", "div4", "chain", "best");
    for row in rows {
        let row = row?;
        println!(
            "  {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}",
            row.n,
            row.lower,
            fmt(row.div3),
            fmt(row.div4),
            fmt(row.chain),
            fmt(row.best),
        );
        csv_body.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.n,
            row.lower,
            fmt(row.div3),
            fmt(row.div4),
            fmt(row.chain),
            fmt(row.best),
        ));
    }
    println!("sweep failures: {failures}");
    if let Some(path) = csv {
        write_output(Some(path), &csv_body)?;
    }
    Ok(if failures == 0 { 0 } else { 1 })
}
