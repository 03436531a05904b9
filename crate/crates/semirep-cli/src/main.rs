//! Command-line driver: family generation, representability decisions,
//! orientation checking, embedding pipelines, bipartiteness reports, word
//! checks, and the acceptance checklist.
//!
//! Every checking command writes one JSON report to standard output (or
//! `--out`). Exit codes: 0 all checks pass, 1 a mathematical check failed,
//! 2 usage or parse error, 3 budget exhausted.

mod formats;
mod report;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use report::Report;
use semirep::embedding::pipeline::pipeline_with_budget;
use semirep::engine::{decide_with, naive_decide, verify_certificate, SearchConfig, Verdict};
use semirep::error::Error as LibError;
use semirep::families::{Family, FamilySpec, Generated, DEFAULT_VERTEX_BUDGET};
use semirep::graph::{bipartition, BipartitionResult, Graph, Orientation};
use semirep::verify::{run_all, Profile, Status, VerifyConfig};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

#[derive(Parser)]
#[command(name = "semirep", version, about = "word-representability toolkit")]
struct Cli {
    /// Worker threads for the verification scans (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Family name: debruijn, simplified, simplified_m, overlap_perm,
    /// simplified_overlap, increasing, decreasing, wheel, complete, cluster.
    #[arg(long)]
    family: String,
    /// Word length (cycle length for wheels).
    #[arg(short = 'n', long, default_value_t = 0)]
    n: usize,
    /// Alphabet size (order for complete graphs).
    #[arg(short = 'k', long, default_value_t = 0)]
    k: usize,
    /// Adjacent-letter gap.
    #[arg(short = 'm', long, default_value_t = 0)]
    m: usize,
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec> {
        let family: Family = self.family.parse().map_err(|e: LibError| anyhow!("{e}"))?;
        Ok(FamilySpec::new(family, self.n, self.k, self.m))
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    Edgelist,
    Dot,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family graph as an edge list or DOT.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = GenFormat::Edgelist)]
        format: GenFormat,
        /// Output path (standard output when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Vertex budget for eager materialization.
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        vertex_budget: u64,
    },
    /// Decide word-representability of an edge-list graph.
    Decide {
        graph: PathBuf,
        /// Source vertex (label or index); defaults to a maximum-degree
        /// vertex.
        #[arg(long)]
        source: Option<String>,
        /// Search-node budget (SEMIREP_BUDGET also applies).
        #[arg(long)]
        budget: Option<u64>,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        time_limit: Option<u64>,
        /// Also run the exhaustive-enumeration oracle (at most 24 edges).
        #[arg(long)]
        oracle: bool,
        /// Write a YES certificate as an orientation file.
        #[arg(long)]
        cert_out: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify that an orientation file is a semi-transitive orientation of
    /// a graph.
    CheckOrientation {
        graph: PathBuf,
        orientation: PathBuf,
        /// Write the oriented graph as DOT.
        #[arg(long)]
        dot_out: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the orientation construction covering a family member and scan
    /// the lift for shortcuts.
    Embed {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        vertex_budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bipartition an increasing or decreasing word graph.
    Bipartite {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a representing word, or search for a uniform one.
    WordCheck {
        graph: PathBuf,
        /// Comma-separated vertex labels or indices.
        #[arg(long, conflicts_with = "search")]
        word: Option<String>,
        /// Search for a uniform representing word instead.
        #[arg(long)]
        search: bool,
        /// Largest per-vertex multiplicity for --search.
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance checklist.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
        /// Seed for the randomized cross-checks.
        #[arg(long)]
        seed: Option<u64>,
        /// Node budget override for the search-based criteria.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<LibError>() {
                Some(LibError::BudgetExceeded { .. })
                | Some(LibError::SearchBudgetExceeded { .. }) => 3,
                _ => 2,
            }
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Gen {
            family,
            format,
            out,
            vertex_budget,
        } => cmd_gen(&family, format, out.as_deref(), vertex_budget),
        Command::Decide {
            graph,
            source,
            budget,
            time_limit,
            oracle,
            cert_out,
            out,
        } => cmd_decide(
            &graph,
            source.as_deref(),
            budget,
            time_limit,
            oracle,
            cert_out.as_deref(),
            out.as_deref(),
        ),
        Command::CheckOrientation {
            graph,
            orientation,
            dot_out,
            out,
        } => cmd_check_orientation(&graph, &orientation, dot_out.as_deref(), out.as_deref()),
        Command::Embed {
            family,
            vertex_budget,
            out,
        } => cmd_embed(&family, vertex_budget, out.as_deref()),
        Command::Bipartite { family, out } => cmd_bipartite(&family, out.as_deref()),
        Command::WordCheck {
            graph,
            word,
            search,
            kmax,
            out,
        } => cmd_word_check(&graph, word.as_deref(), search, kmax, out.as_deref()),
        Command::VerifyPaper {
            profile,
            seed,
            budget,
            out,
        } => cmd_verify_paper(profile, seed, budget, out.as_deref()),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn emit_report(report: &Report, started: Instant, out: Option<&Path>) -> Result<()> {
    let doc = report.render(started.elapsed());
    emit(&serde_json::to_string_pretty(&doc)?, out)
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    formats::parse_graph(&text).with_context(|| format!("in {}", path.display()))
}

fn env_budget() -> Option<u64> {
    std::env::var("SEMIREP_BUDGET").ok()?.parse().ok()
}

fn family_params(spec: &FamilySpec) -> serde_json::Value {
    json!({
        "family": spec.family.name(),
        "n": spec.n,
        "k": spec.k,
        "m": spec.m,
        "name": spec.describe(),
    })
}

fn cmd_gen(
    args: &FamilyArgs,
    format: GenFormat,
    out: Option<&Path>,
    vertex_budget: u64,
) -> Result<i32> {
    let spec = args.spec()?;
    let generated = spec.build_with_budget(vertex_budget)?;
    let text = match (&generated, format) {
        (Generated::Graph(g), GenFormat::Edgelist) => formats::write_graph(g),
        (Generated::Graph(g), GenFormat::Dot) => formats::graph_to_dot(g, None),
        (Generated::Digraph(d), GenFormat::Edgelist) => formats::write_digraph(d),
        (Generated::Digraph(d), GenFormat::Dot) => formats::digraph_to_dot(d),
    };
    emit(text.trim_end(), out)?;
    Ok(0)
}

fn resolve_vertex(g: &Graph, token: &str) -> Result<usize> {
    if let Some(v) = g.vertex_by_label(token) {
        return Ok(v);
    }
    let v: usize = token
        .parse()
        .map_err(|_| anyhow!("'{token}' is neither a label nor an index"))?;
    if v >= g.vertex_count() {
        bail!("vertex {v} out of range");
    }
    Ok(v)
}

fn cmd_decide(
    graph_path: &Path,
    source: Option<&str>,
    budget: Option<u64>,
    time_limit: Option<u64>,
    oracle: bool,
    cert_out: Option<&Path>,
    out: Option<&Path>,
) -> Result<i32> {
    let started = Instant::now();
    let g = read_graph(graph_path)?;
    let source = source.map(|s| resolve_vertex(&g, s)).transpose()?;
    let config = SearchConfig {
        source,
        max_nodes: budget.or_else(env_budget).unwrap_or(u64::MAX),
        max_time: time_limit.map(Duration::from_secs),
        ..SearchConfig::default()
    };
    let result = decide_with(&g, &config).map_err(|e| anyhow!("{e}"))?;

    let mut report = Report::new(
        "decide",
        json!({
            "graph": graph_path.display().to_string(),
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "source": result.source.map(|s| g.display_vertex(s)),
        }),
        result.verdict.to_string(),
    );
    report.counter("nodes_explored", result.nodes_explored);
    if let Some(cert) = &result.certificate {
        if !verify_certificate(&g, cert).map_err(|e| anyhow!("{e}"))? {
            bail!("internal error: certificate failed re-verification");
        }
        report.witness(report::certificate_witness(&g, cert));
        if let Some(path) = cert_out {
            emit(formats::write_orientation(cert).trim_end(), Some(path))?;
        }
    }
    let mut code = match result.verdict {
        Verdict::Inconclusive => 3,
        _ => 0,
    };
    if oracle {
        match naive_decide(&g) {
            Ok(reference) => {
                let agree = reference.verdict == result.verdict;
                report.field(
                    "oracle",
                    json!({
                        "verdict": reference.verdict.to_string(),
                        "orientations_enumerated": reference.nodes_explored,
                        "agrees": agree,
                    }),
                );
                if !agree && result.verdict != Verdict::Inconclusive {
                    report.set_verdict("DISAGREEMENT");
                    code = 1;
                }
            }
            Err(e) => report.field("oracle", json!({ "skipped": e.to_string() })),
        }
    }
    emit_report(&report, started, out)?;
    Ok(code)
}

fn cmd_check_orientation(
    graph_path: &Path,
    orientation_path: &Path,
    dot_out: Option<&Path>,
    out: Option<&Path>,
) -> Result<i32> {
    let started = Instant::now();
    let g = read_graph(graph_path)?;
    let text = std::fs::read_to_string(orientation_path)
        .with_context(|| format!("cannot read {}", orientation_path.display()))?;
    let arcs = formats::parse_orientation(&text)
        .with_context(|| format!("in {}", orientation_path.display()))?;
    let o = Orientation::from_arcs(&g, &arcs)
        .map_err(|e| anyhow!("{e}").context("orientation does not fit the graph"))?;
    if let Some(path) = dot_out {
        emit(formats::graph_to_dot(&g, Some(&arcs)).trim_end(), Some(path))?;
    }

    let mut report = Report::new(
        "check-orientation",
        json!({
            "graph": graph_path.display().to_string(),
            "orientation": orientation_path.display().to_string(),
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
        }),
        "SEMI_TRANSITIVE",
    );
    let mut code = 0;
    match semirep::graph::find_shortcut(&o) {
        Ok(None) => {}
        Ok(Some(w)) => {
            report.set_verdict("NOT_SEMI_TRANSITIVE");
            report.witness(report::shortcut_witness(&g, &w));
            code = 1;
        }
        Err(LibError::CyclicOrientation(cycle)) => {
            report.set_verdict("CYCLIC");
            report.witness(report::cycle_witness(&g, &cycle, "directed_cycle"));
            code = 1;
        }
        Err(e) => return Err(anyhow!("{e}")),
    }
    emit_report(&report, started, out)?;
    Ok(code)
}

fn cmd_embed(args: &FamilyArgs, vertex_budget: u64, out: Option<&Path>) -> Result<i32> {
    let started = Instant::now();
    let spec = args.spec()?;
    let mut report = Report::new("embed", family_params(&spec), "SEMI_TRANSITIVE");
    let result = match pipeline_with_budget(&spec, vertex_budget) {
        Ok(r) => r,
        Err(LibError::NotCovered(reason)) => {
            report.set_verdict("NOT_COVERED");
            report.field("reason", json!(reason));
            emit_report(&report, started, out)?;
            return Ok(2);
        }
        Err(e) => return Err(anyhow!("{e}")),
    };
    report.field(
        "construction",
        json!(result.construction.name()),
    );
    report.field("template", json!(result.template));
    report.field(
        "template_shortcutting_paths",
        json!(result
            .template_paths
            .iter()
            .map(|(path, shortcut)| json!({
                "path": path,
                "shortcut_in_template": shortcut,
            }))
            .collect::<Vec<_>>()),
    );
    report.field("homomorphism_verified", json!(result.homomorphism_verified));
    report.field("lift_acyclic", json!(result.lift_acyclic));
    report.field("cross_checked", json!(result.cross_checked));
    report.counter("vertices", result.vertex_count as u64);
    report.counter("edges", result.edge_count as u64);
    report.counter("paths_scanned", result.paths_scanned);
    let code = if result.semi_transitive {
        0
    } else {
        report.set_verdict("NOT_SEMI_TRANSITIVE");
        if let Some((path, missing)) = &result.witness_rendered {
            report.witness(json!({
                "type": "shortcut",
                "path": path,
                "missing_edge": [missing.0, missing.1],
            }));
        }
        1
    };
    emit_report(&report, started, out)?;
    Ok(code)
}

fn cmd_bipartite(args: &FamilyArgs, out: Option<&Path>) -> Result<i32> {
    let started = Instant::now();
    let spec = args.spec()?;
    if !matches!(spec.family, Family::Increasing | Family::Decreasing) {
        bail!("bipartite expects the increasing or decreasing family");
    }
    let g = match spec.build()? {
        Generated::Graph(g) => g,
        Generated::Digraph(_) => unreachable!("monotone families are graphs"),
    };
    let mut report = Report::new("bipartite", family_params(&spec), "BIPARTITE");
    report.counter("vertices", g.vertex_count() as u64);
    report.counter("edges", g.edge_count() as u64);
    match bipartition(&g) {
        BipartitionResult::Bipartite { parts } => {
            report.field(
                "parts",
                json!([report::labels_of(&g, &parts[0]), report::labels_of(&g, &parts[1])]),
            );
        }
        BipartitionResult::OddCycle(cycle) => {
            report.set_verdict("ODD_CYCLE");
            report.witness(report::cycle_witness(&g, &cycle, "odd_cycle"));
        }
    }
    emit_report(&report, started, out)?;
    Ok(0)
}

fn cmd_word_check(
    graph_path: &Path,
    word: Option<&str>,
    search: bool,
    kmax: usize,
    out: Option<&Path>,
) -> Result<i32> {
    let started = Instant::now();
    let g = read_graph(graph_path)?;
    let mut report = Report::new(
        "word-check",
        json!({
            "graph": graph_path.display().to_string(),
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
        }),
        "",
    );
    let code;
    match (word, search) {
        (Some(tokens), false) => {
            let symbols = tokens
                .split(',')
                .map(|t| resolve_vertex(&g, t.trim()))
                .collect::<Result<Vec<usize>>>()?;
            let ok = semirep::alternation::represents(&symbols, &g).map_err(|e| anyhow!("{e}"))?;
            report.set_verdict(if ok { "REPRESENTS" } else { "DOES_NOT_REPRESENT" });
            report.field("word", json!(report::labels_of(&g, &symbols)));
            code = if ok { 0 } else { 1 };
        }
        (None, true) => {
            match semirep::alternation::find_uniform_word(&g, kmax).map_err(|e| anyhow!("{e}"))? {
                Some(w) => {
                    report.set_verdict("FOUND");
                    report.field("word", json!(report::labels_of(&g, &w)));
                    report.counter("uniformity", (w.len() / g.vertex_count().max(1)) as u64);
                    code = 0;
                }
                None => {
                    // one-sided: exhausting the uniformity bound proves nothing
                    report.set_verdict("NONE_FOUND");
                    code = 0;
                }
            }
        }
        _ => bail!("word-check needs exactly one of --word or --search"),
    }
    emit_report(&report, started, out)?;
    Ok(code)
}

fn cmd_verify_paper(
    profile: ProfileArg,
    seed: Option<u64>,
    budget: Option<u64>,
    out: Option<&Path>,
) -> Result<i32> {
    let started = Instant::now();
    let profile = match profile {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Full => Profile::Full,
    };
    let config = VerifyConfig {
        profile,
        seed: seed.unwrap_or(semirep::verify::DEFAULT_SEED),
        node_budget: budget.or_else(env_budget),
    };
    let outcomes = run_all(&config);
    for outcome in &outcomes {
        eprintln!("{outcome}");
    }
    let failed = outcomes.iter().filter(|o| o.status == Status::Fail).count();
    let inconclusive = outcomes
        .iter()
        .filter(|o| o.status == Status::Inconclusive)
        .count();

    let mut report = Report::new(
        "verify-paper",
        json!({
            "profile": match profile { Profile::Quick => "quick", Profile::Full => "full" },
            "seed": config.seed,
        }),
        if failed > 0 {
            "FAIL"
        } else if inconclusive > 0 {
            "INCONCLUSIVE"
        } else {
            "PASS"
        },
    );
    report.counter("criteria", outcomes.len() as u64);
    report.counter("failed", failed as u64);
    report.counter("inconclusive", inconclusive as u64);
    report.field(
        "criteria_results",
        json!(outcomes
            .iter()
            .map(|o| json!({
                "id": o.id,
                "name": o.name,
                "status": o.status.to_string(),
                "detail": o.detail,
                "elapsed_ms": o.elapsed.as_millis() as u64,
            }))
            .collect::<Vec<_>>()),
    );
    emit_report(&report, started, out)?;
    Ok(if failed > 0 {
        1
    } else if inconclusive > 0 {
        3
    } else {
        0
    })
}
