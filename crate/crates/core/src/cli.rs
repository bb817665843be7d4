//! Command-line surface: `invariants`, `complex`, `homology` and `verify`.
//!
//! Output is assembled in memory and written only once the command has
//! succeeded, so a refusal never leaves a partial file behind.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::complex::{
    dominance_complex, dominance_dual, independence_complex_graph, independence_complex_hyper,
    independence_dual, parse_complex, SimplicialComplex,
};
use crate::graph::{parse_edge_list, parse_graph6, Graph};
use crate::homology::reduced_betti;
use crate::hypergraph::{bowtie, parse_hypergraph, Hypergraph};
use crate::verify::{
    generate_corpus, parse_checks, run_corpus, CorpusFamily, CorpusItem, CorpusSpec, ReportLine,
    RunOptions,
};

/// Environment variable read when `--workers` is absent.
pub const WORKERS_ENV: &str = "DOMCX_WORKERS";

/// Orders drawn by random families when neither `--n` nor `--range` is given.
pub const DEFAULT_RANDOM_SIZES: (usize, usize) = (1, 12);

/// Exhaustive minimum-dominating-set search is attempted up to this order.
pub const DOMINATION_MAX_N: usize = 18;

#[derive(Parser, Debug)]
#[command(
    name = "domcx",
    version,
    about = "Dominance complexes, Z2 homology and vertex-cover bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Per-graph n, edge count, α, τ and domination number.
    Invariants(CommonArgs),
    /// Emit a complex in facet text format.
    Complex(ComplexArgs),
    /// Reduced Z2 Betti numbers, conn_Z2 and h-dim_Z2.
    Homology(ComplexArgs),
    /// Run checks and emit a JSON-lines report plus a summary object.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Graph input: graph6 file (one graph per line), edge-list file,
    /// directory of edge-list files, or `-` for stdin.
    #[arg(long, group = "source")]
    pub input: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,

    /// Hypergraph in text format (`n m` then one hyperedge per line).
    #[arg(long, group = "source")]
    pub hypergraph: Option<PathBuf>,

    /// Complex in facet text format (`n k` then one facet per line).
    #[arg(long = "complex", group = "source")]
    pub complex_file: Option<PathBuf>,

    /// Generator family: path, cycle(s), complete, star, trees, chordal,
    /// gnp, all-labeled.
    #[arg(long, group = "source")]
    pub family: Option<String>,

    /// Single graph order for --family.
    #[arg(long)]
    pub n: Option<usize>,

    /// Inclusive order range for --family, e.g. `3..12`. Random families
    /// default to `1..12`.
    #[arg(long, conflicts_with = "n")]
    pub range: Option<String>,

    /// Number of graphs for random families.
    #[arg(long, default_value_t = 1)]
    pub count: usize,

    /// Base seed; random graph `i` uses `seed + i`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Edge probability for gnp.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
}

#[derive(Args, Debug, Clone)]
pub struct CapArgs {
    /// Largest n for which D(G) and related complexes are built.
    #[arg(long, default_value_t = 18)]
    pub max_n: usize,

    /// Largest n for complexes on the 2n vertices of G^⋈.
    #[arg(long, default_value_t = 9)]
    pub max_bowtie_n: usize,
}

#[derive(Args, Debug)]
pub struct CommonArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Write output here instead of stdout; nothing is written on error.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ComplexArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[arg(long, value_enum, default_value_t = Which::Dominance)]
    pub which: Which,

    #[command(flatten)]
    pub caps: CapArgs,

    /// Write output here instead of stdout; nothing is written on error.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Comma-separated checks or `all`: main, not_contractible, alexander,
    /// nagel_reiner, bowtie_chain, free_action, lemma7, known.
    #[arg(long, default_value = "all")]
    pub checks: String,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = WORKERS_ENV)]
    pub workers: Option<usize>,

    /// Include per-check timings (output is then not byte-stable).
    #[arg(long)]
    pub timings: bool,

    #[command(flatten)]
    pub caps: CapArgs,

    /// Write output here instead of stdout; nothing is written on error.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Graph6,
    Edges,
}

/// Which complex to build from the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// D(G).
    #[value(name = "dominance")]
    Dominance,
    /// Alexander dual: D^∨(G), I^∨(H) or K^∨.
    #[value(name = "dual")]
    Dual,
    /// I(G^⋈).
    #[value(name = "bowtie_ind")]
    BowtieInd,
    /// Suspension of the dual.
    #[value(name = "suspension_dual")]
    SuspensionDual,
    /// I(G) or I(H).
    #[value(name = "independence")]
    Independence,
    /// I(B_H) for a hypergraph.
    #[value(name = "bipartite_ind")]
    BipartiteInd,
    /// ΣK for a complex.
    #[value(name = "suspension")]
    Suspension,
    /// K unchanged.
    #[value(name = "identity")]
    Identity,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::Dominance => "dominance",
            Which::Dual => "dual",
            Which::BowtieInd => "bowtie_ind",
            Which::SuspensionDual => "suspension_dual",
            Which::Independence => "independence",
            Which::BipartiteInd => "bipartite_ind",
            Which::Suspension => "suspension",
            Which::Identity => "identity",
        }
    }
}

/// Result of a command: text for the output sink and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let (outcome, out) = match cli.command {
        Command::Invariants(args) => (cmd_invariants(&args.input)?, args.out),
        Command::Complex(args) => (cmd_complex(&args)?, args.out),
        Command::Homology(args) => (cmd_homology(&args)?, args.out),
        Command::Verify(args) => (cmd_verify(&args)?, args.out),
    };
    match out {
        Some(path) => {
            fs::write(&path, &outcome.output)
                .with_context(|| format!("writing {}", path.display()))?;
            Ok(Outcome {
                output: String::new(),
                exit_code: outcome.exit_code,
            })
        }
        None => Ok(outcome),
    }
}

enum Source {
    Graphs(Vec<CorpusItem>),
    Hypergraph(String, Hypergraph),
    Complex(String, SimplicialComplex),
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn file_id(path: &Path) -> String {
    path.file_name().map_or_else(
        || path.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

fn looks_like_edge_list(text: &str) -> bool {
    // graph6 bytes start at 63, so a leading digit can only be a vertex count
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.bytes().all(|b| b.is_ascii_digit()))
}

fn graph6_items(text: &str) -> Vec<CorpusItem> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| CorpusItem {
            id: format!("line{}", i + 1),
            graph: parse_graph6(l.trim_end()).map_err(|e| e.to_string()),
        })
        .collect()
}

fn load_graphs(path: &Path, format: InputFormat) -> Result<Vec<CorpusItem>> {
    if path.is_dir() {
        let mut files: Vec<PathBuf> = fs::read_dir(path)
            .with_context(|| format!("listing {}", path.display()))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file())
            .collect();
        files.sort();
        return files
            .iter()
            .map(|f| {
                let text = read_text(f)?;
                Ok(CorpusItem {
                    id: file_id(f),
                    graph: parse_edge_list(&text).map_err(|e| e.to_string()),
                })
            })
            .collect();
    }
    let text = read_text(path)?;
    let edges = match format {
        InputFormat::Edges => true,
        InputFormat::Graph6 => false,
        InputFormat::Auto => looks_like_edge_list(&text),
    };
    Ok(if edges {
        vec![CorpusItem {
            id: file_id(path),
            graph: parse_edge_list(&text).map_err(|e| e.to_string()),
        }]
    } else {
        graph6_items(&text)
    })
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .with_context(|| format!("range {s:?} must look like A..B"))?;
    let lo = a
        .trim()
        .parse()
        .with_context(|| format!("bad range start {a:?}"))?;
    let hi = b
        .trim()
        .parse()
        .with_context(|| format!("bad range end {b:?}"))?;
    Ok((lo, hi))
}

fn corpus_spec(args: &InputArgs, family: &str) -> Result<CorpusSpec> {
    let family: CorpusFamily = family.parse().map_err(anyhow::Error::msg)?;
    let sizes = match (&args.range, args.n) {
        (Some(r), _) => parse_range(r)?,
        (None, Some(n)) => (n, n),
        (None, None) if family.is_random() => DEFAULT_RANDOM_SIZES,
        (None, None) => bail!("--family needs --n or --range"),
    };
    Ok(CorpusSpec {
        family,
        sizes,
        count: args.count,
        seed: args.seed,
        p: args.p,
    })
}

fn load_source(args: &InputArgs) -> Result<Source> {
    if let Some(path) = &args.input {
        return Ok(Source::Graphs(load_graphs(path, args.format)?));
    }
    if let Some(path) = &args.hypergraph {
        let h = parse_hypergraph(&read_text(path)?)?;
        return Ok(Source::Hypergraph(file_id(path), h));
    }
    if let Some(path) = &args.complex_file {
        let k = parse_complex(&read_text(path)?)?;
        return Ok(Source::Complex(file_id(path), k));
    }
    if let Some(family) = &args.family {
        let spec = corpus_spec(args, family)?;
        return Ok(Source::Graphs(
            generate_corpus(&spec).map_err(anyhow::Error::msg)?,
        ));
    }
    bail!("no input: pass --input, --hypergraph, --complex or --family")
}

fn graphs_only(args: &InputArgs) -> Result<Vec<CorpusItem>> {
    match load_source(args)? {
        Source::Graphs(items) => Ok(items),
        _ => bail!("this command takes graphs (--input or --family)"),
    }
}

fn report_parse_errors(items: &[CorpusItem]) -> usize {
    let mut count = 0;
    for item in items {
        if let Err(e) = &item.graph {
            eprintln!("{}: {e}", item.id);
            count += 1;
        }
    }
    count
}

pub fn cmd_invariants(args: &InputArgs) -> Result<Outcome> {
    let items = graphs_only(args)?;
    let errors = report_parse_errors(&items);
    let mut out = String::from("id\tn\tm\talpha\ttau\tgamma\n");
    for item in &items {
        let Ok(g) = &item.graph else { continue };
        let alpha = g.independence_number();
        let gamma = g
            .min_dominating_set(DOMINATION_MAX_N)
            .map_or_else(|| "-".to_string(), |s| s.len().to_string());
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            item.id,
            g.n(),
            g.edge_count(),
            alpha,
            g.n() - alpha,
            gamma
        ));
    }
    Ok(Outcome {
        output: out,
        exit_code: i32::from(errors > 0),
    })
}

fn refuse(id: &str, n: usize, cap: usize, flag: &str) -> anyhow::Error {
    anyhow::anyhow!(
        "refusing {id}: size {n} exceeds {flag} {cap}; rerun with {flag} {n} to allow it"
    )
}

fn graph_cap(id: &str, g: &Graph, which: Which, caps: &CapArgs) -> Result<()> {
    match which {
        Which::BowtieInd if g.n() > caps.max_bowtie_n => {
            Err(refuse(id, g.n(), caps.max_bowtie_n, "--max-bowtie-n"))
        }
        Which::Dominance | Which::Dual | Which::SuspensionDual | Which::Independence
            if g.n() > caps.max_n =>
        {
            Err(refuse(id, g.n(), caps.max_n, "--max-n"))
        }
        _ => Ok(()),
    }
}

fn graph_complex(g: &Graph, which: Which) -> Result<SimplicialComplex> {
    Ok(match which {
        Which::Dominance => dominance_complex(g),
        Which::Dual => dominance_dual(g),
        Which::BowtieInd => independence_complex_graph(&bowtie(g)),
        Which::SuspensionDual => dominance_dual(g).suspension()?,
        Which::Independence => independence_complex_graph(g),
        other => bail!("--which {} does not apply to graphs", other.name()),
    })
}

fn hypergraph_complex(
    h: &Hypergraph,
    which: Which,
    caps: &CapArgs,
    id: &str,
) -> Result<SimplicialComplex> {
    if which == Which::BipartiteInd {
        let size = h.n() + h.edges().len();
        if size > 2 * caps.max_bowtie_n {
            return Err(refuse(
                id,
                size,
                2 * caps.max_bowtie_n,
                "2 x --max-bowtie-n",
            ));
        }
    } else if h.n() > caps.max_n {
        return Err(refuse(id, h.n(), caps.max_n, "--max-n"));
    }
    Ok(match which {
        Which::Independence => independence_complex_hyper(h),
        Which::Dual => independence_dual(h),
        Which::SuspensionDual => independence_dual(h).suspension()?,
        Which::BipartiteInd => independence_complex_graph(&h.associated_bipartite()),
        other => bail!("--which {} does not apply to hypergraphs", other.name()),
    })
}

fn complex_complex(
    k: &SimplicialComplex,
    which: Which,
    caps: &CapArgs,
    id: &str,
) -> Result<SimplicialComplex> {
    if which != Which::Identity && which != Which::Suspension && k.n() > caps.max_n {
        return Err(refuse(id, k.n(), caps.max_n, "--max-n"));
    }
    Ok(match which {
        Which::Identity => k.clone(),
        Which::Dual => k.alexander_dual()?,
        Which::Suspension => k.suspension()?,
        Which::SuspensionDual => k.alexander_dual()?.suspension()?,
        other => bail!("--which {} does not apply to complexes", other.name()),
    })
}

/// Builds every requested complex, refusing before any construction if a
/// cap is exceeded.
fn build_complexes(args: &ComplexArgs) -> Result<(Vec<(String, SimplicialComplex)>, usize)> {
    match load_source(&args.input)? {
        Source::Graphs(items) => {
            let errors = report_parse_errors(&items);
            for item in &items {
                if let Ok(g) = &item.graph {
                    graph_cap(&item.id, g, args.which, &args.caps)?;
                }
            }
            let built = items
                .iter()
                .filter_map(|item| item.graph.as_ref().ok().map(|g| (item, g)))
                .map(|(item, g)| Ok((item.id.clone(), graph_complex(g, args.which)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok((built, errors))
        }
        Source::Hypergraph(id, h) => {
            let k = hypergraph_complex(&h, args.which, &args.caps, &id)?;
            Ok((vec![(id, k)], 0))
        }
        Source::Complex(id, k) => {
            let k = complex_complex(&k, args.which, &args.caps, &id)?;
            Ok((vec![(id, k)], 0))
        }
    }
}

pub fn cmd_complex(args: &ComplexArgs) -> Result<Outcome> {
    let (built, errors) = build_complexes(args)?;
    let output = built.iter().map(|(_, k)| k.to_text()).collect();
    Ok(Outcome {
        output,
        exit_code: i32::from(errors > 0),
    })
}

pub fn cmd_homology(args: &ComplexArgs) -> Result<Outcome> {
    let (built, errors) = build_complexes(args)?;
    let mut out = String::from("id\twhich\tdim\tbetti\tconn_z2\thdim_z2\n");
    for (id, k) in &built {
        let p = reduced_betti(k);
        let dim = k
            .dim()
            .map_or_else(|| "void".to_string(), |d| d.to_string());
        out.push_str(&format!(
            "{id}\t{}\t{dim}\t{p}\t{}\t{}\n",
            args.which.name(),
            p.conn_z2(),
            p.hdim_z2()
        ));
    }
    Ok(Outcome {
        output: out,
        exit_code: i32::from(errors > 0),
    })
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome> {
    let items = graphs_only(&args.input)?;
    let checks = parse_checks(&args.checks).map_err(anyhow::Error::msg)?;
    let opts = RunOptions {
        checks,
        workers: args.workers.unwrap_or_else(default_workers),
        timings: args.timings,
        max_n: args.caps.max_n,
        max_bowtie_n: args.caps.max_bowtie_n,
    };
    let outcome = run_corpus(&items, &opts)?;
    let mut out = String::new();
    for line in &outcome.lines {
        if let ReportLine::Error { id, error } = line {
            eprintln!("{id}: {error}");
        }
        out.push_str(&serde_json::to_string(line)?);
        out.push('\n');
    }
    out.push_str(&serde_json::to_string(
        &serde_json::json!({ "summary": outcome.summary }),
    )?);
    out.push('\n');
    Ok(Outcome {
        output: out,
        exit_code: i32::from(!outcome.all_passed()),
    })
}
