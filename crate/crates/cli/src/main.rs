//! `commgraph`: commuting graphs from the command line.
//!
//! Exit codes: 0 on success, 1 when the answer is negative (an obstruction,
//! no realization, a failed check), 2 on bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use commgraph::construct::{build_group, realize_cycle_centrefree, realize_semigroup, semidirect_product, ActionMap, GroupSpec};
use commgraph::graph::{build_graph, graphs_isomorphic};
use commgraph::obstruction::{centrefree_gate, group_gate, semigroup_gate};
use commgraph::search::{corpus_scan, save_outcome, search_realizations, Dedup, ScanPredicate, SearchSpec};
use commgraph::verify::{run_suite, Suite};
use commgraph::{commuting_graph, CayleyTable, GraphSpec, SimpleGraph};

#[derive(Parser)]
#[command(name = "commgraph", version, about = "Commuting graphs of finite semigroups and groups")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Commuting graph and decomposition of a table file.
    Table { file: PathBuf },
    /// Builds a group table, e.g. `S4`, `SL(2,5)`, `inv(Z3xZ3)`, `@table.txt`.
    Build {
        group: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A semigroup whose commuting graph is the given graph.
    Realize {
        /// A graph file or a graph spec such as `C6` or `2K2+K1`.
        graph: String,
        /// Centrefree realization of a cycle whose length is divisible by 4.
        #[arg(long)]
        cycle: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks necessary conditions for being a commuting graph.
    Gate {
        graph: String,
        #[arg(long, value_enum)]
        target: Target,
    },
    /// Exhaustive search for tables of a given order realizing a graph.
    Search {
        graph: String,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        centrefree: bool,
        #[arg(long, value_enum, default_value = "anti")]
        dedup: DedupArg,
        #[arg(long, default_value_t = 1_000_000_000)]
        budget_nodes: u64,
        #[arg(long, default_value_t = 3600)]
        budget_seconds: u64,
        #[arg(long)]
        workers: Option<usize>,
        /// Directory for the representatives and manifest.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scans a directory of group tables.
    Scan {
        dir: PathBuf,
        /// `connected` or `decomposition=<rendering>`.
        #[arg(long)]
        predicate: String,
    },
    /// Graphviz output for a graph.
    ExportDot {
        graph: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recomputes the known decompositions, realizers and search results.
    #[command(visible_alias = "verify-paper")]
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        suite: SuiteArg,
        /// Directory of group tables for the corpus checks.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Semidirect product N ⋊ H from an action file.
    Semidirect {
        n: String,
        h: String,
        action: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Semigroup,
    Centrefree,
    Group,
}

#[derive(Clone, Copy, ValueEnum)]
enum DedupArg {
    None,
    Iso,
    Anti,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Quick,
    Full,
}

/// What a successful run reports: the text or JSON to print and whether
/// the answer was positive.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: String, json: Value, ok: bool) -> Self {
        Self { text, json, ok }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_table(path: &Path) -> Result<CayleyTable> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    CayleyTable::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

/// An existing file is read as a graph file; anything else is a spec.
fn read_graph(arg: &str) -> Result<SimpleGraph> {
    let spec = if Path::new(arg).is_file() {
        GraphSpec::FromFile(arg.into())
    } else {
        arg.parse::<GraphSpec>()?
    };
    Ok(build_graph(&spec)?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<String> {
    match out {
        Some(p) => {
            fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
            Ok(format!("wrote {}\n", p.display()))
        }
        None => Ok(text.to_string()),
    }
}

fn run(command: &Command) -> Result<Output> {
    match command {
        Command::Table { file } => table(&read_table(file)?),
        Command::Build { group, out } => {
            let spec: GroupSpec = group.parse()?;
            let t = build_group(&spec)?;
            let text = t.to_text();
            let json = json!({ "group": spec.to_string(), "order": t.order(), "table": text });
            Ok(Output::new(emit(out, &text)?, json, true))
        }
        Command::Realize { graph, cycle, out } => realize(&read_graph(graph)?, *cycle, out),
        Command::Gate { graph, target } => {
            let g = read_graph(graph)?;
            let v = match target {
                Target::Semigroup => semigroup_gate(&g),
                Target::Centrefree => centrefree_gate(&g),
                Target::Group => group_gate(&g),
            };
            Ok(Output::new(v.report(), serde_json::to_value(&v)?, v.passed))
        }
        Command::Search {
            graph,
            order,
            centrefree,
            dedup,
            budget_nodes,
            budget_seconds,
            workers,
            out,
        } => {
            let mut spec = SearchSpec::new(read_graph(graph)?, *order);
            spec.centrefree = *centrefree;
            spec.dedup = match dedup {
                DedupArg::None => Dedup::None,
                DedupArg::Iso => Dedup::Iso,
                DedupArg::Anti => Dedup::IsoAndAnti,
            };
            spec.budget.max_nodes = *budget_nodes;
            spec.budget.max_time = Some(Duration::from_secs(*budget_seconds));
            spec.workers = workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            search(&spec, out)
        }
        Command::Scan { dir, predicate } => {
            let p: ScanPredicate = predicate.parse()?;
            let r = corpus_scan(dir, &p)?;
            let mut text = String::new();
            for e in &r.entries {
                let d = e.decomposition.as_deref().unwrap_or("-");
                let mark = if e.matched { "match" } else { "" };
                text.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", e.file, e.order, e.class, d, mark));
            }
            for (order, (scanned, matched)) in &r.by_order {
                text.push_str(&format!("order {order}: {matched} of {scanned} groups match\n"));
            }
            text.push_str(&format!("{} non-groups skipped\n", r.skipped_non_groups));
            Ok(Output::new(text, serde_json::to_value(&r)?, true))
        }
        Command::ExportDot { graph, out } => {
            let dot = read_graph(graph)?.to_dot();
            Ok(Output::new(emit(out, &dot)?, json!({ "dot": dot }), true))
        }
        Command::Verify { suite, corpus } => {
            let suite = match suite {
                SuiteArg::Quick => Suite::Quick,
                SuiteArg::Full => Suite::Full,
            };
            let report = run_suite(suite, corpus.as_deref());
            Ok(Output::new(report.render(), serde_json::to_value(&report)?, report.passed()))
        }
        Command::Semidirect { n, h, action, out } => {
            let n = build_group(&n.parse()?)?;
            let h = build_group(&h.parse()?)?;
            let text = fs::read_to_string(action).with_context(|| format!("reading {}", action.display()))?;
            let a = ActionMap::parse(&text)?;
            let t = semidirect_product(&n, &h, &a)?;
            let text = t.to_text();
            let json = json!({ "order": t.order(), "table": text });
            Ok(Output::new(emit(out, &text)?, json, true))
        }
    }
}

fn table(t: &CayleyTable) -> Result<Output> {
    let class = t.classify();
    let cg = match commuting_graph(t) {
        Ok(cg) => cg,
        Err(e) => {
            let text = format!("class: {class}\n{e}\n");
            return Ok(Output::new(text, json!({ "class": class, "error": e.to_string() }), false));
        }
    };
    let d = cg.graph.decompose();
    let centre: Vec<String> = cg.centre.iter().map(|&z| t.label(z)).collect();
    let text = format!(
        "order: {}\nclass: {class}\ncentre: {}\nvertices: {}\nedges: {}\ndecomposition: {}\n",
        t.order(),
        centre.join(" "),
        cg.graph.order(),
        cg.graph.size(),
        d.rendering
    );
    let json = json!({
        "order": t.order(),
        "class": class,
        "centre": centre,
        "vertices": cg.graph.order(),
        "edges": cg.graph.size(),
        "decomposition": d,
    });
    Ok(Output::new(text, json, true))
}

fn realize(g: &SimpleGraph, cycle: bool, out: &Option<PathBuf>) -> Result<Output> {
    let result = if cycle {
        let n = g.order();
        let is_cycle = n >= 3 && (0..n).all(|v| g.degree(v) == 2) && g.components().len() == 1;
        if !is_cycle {
            bail!("--cycle needs a single cycle, got a graph with {n} vertices and {} edges", g.size());
        }
        // put x_i on the input's vertex so the table realizes `g` itself
        let standard = build_graph(&GraphSpec::Cycle(n))?;
        let map = graphs_isomorphic(&standard, g).expect("both are n-cycles");
        realize_cycle_centrefree(n).map(|t| t.relabel(&map))
    } else {
        realize_semigroup(g)
    };
    match result {
        Ok(t) => {
            let text = t.to_text();
            let json = json!({ "order": t.order(), "table": text });
            Ok(Output::new(emit(out, &text)?, json, true))
        }
        Err(e) => {
            let text = format!("no realization: {e}\n");
            Ok(Output::new(text, json!({ "error": e.to_string() }), false))
        }
    }
}

fn search(spec: &SearchSpec, out: &Option<PathBuf>) -> Result<Output> {
    let outcome = search_realizations(spec)?;
    let mut text = format!(
        "classes: {}\nsolutions: {}\nnodes: {}\nexhausted: {}\n",
        outcome.count_up_to_dedup, outcome.solutions, outcome.nodes_explored, outcome.exhausted
    );
    let tables: Vec<String> = outcome.representatives.iter().map(CayleyTable::to_text).collect();
    match out {
        Some(dir) => {
            let m = save_outcome(dir, spec, &outcome)?;
            text.push_str(&format!("wrote {} tables to {}\n", m.tables.len(), dir.display()));
        }
        None => {
            for (i, t) in tables.iter().enumerate() {
                text.push_str(&format!("# representative {i}\n{t}"));
            }
        }
    }
    let json = json!({
        "classes": outcome.count_up_to_dedup,
        "solutions": outcome.solutions,
        "nodes": outcome.nodes_explored,
        "exhausted": outcome.exhausted,
        "tables": tables,
    });
    Ok(Output::new(text, json, outcome.count_up_to_dedup > 0))
}
