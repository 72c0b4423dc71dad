//! `bellgraph` command-line tool.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bellgraph::classify::{classify_pair, oracle_isomorphic};
use bellgraph::graph6::decode;
use bellgraph::reconstruct::full::reconstruct_prime_with_sets;
use bellgraph::reconstruct::lower::reconstruct_from_bk_report;
use bellgraph::reconstruct::{find_fat_partition, reconstruct_upper_auto};
use bellgraph::unlabeled::UnlabeledGraph;
use bellgraph::verify::{conjecture_search, run_suite, Suite};
use bellgraph::{build_bell, Graph, Variant};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "bellgraph",
    version,
    about = "Bell colouring graphs and host reconstruction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a Bell graph and print it as JSON or DOT.
    Build {
        /// Host graph: graph6 string or file.
        graph: String,
        #[arg(long, value_enum, default_value_t = Kind::Full)]
        variant: Kind,
        /// Part bound for `at-most` and `at-least`.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Relabel vertices with this seed (DOT and JSON lose partition labels).
        #[arg(long)]
        scramble: Option<u64>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Reconstruct a host from an unlabeled Bell graph.
    Reconstruct {
        /// Bell graph: graph6 string, graph6 file, or JSON from `build`.
        /// Omit when using --host.
        input: Option<String>,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Build the Bell graph from this host instead (graph6 or file).
        #[arg(long, conflicts_with = "input")]
        host: Option<String>,
        /// Part bound when building from --host (ignored for `full`).
        #[arg(long)]
        k: Option<usize>,
        /// Scramble seed when building from --host.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Decide whether two upper Bell graphs are isomorphic.
    Classify {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        g2: String,
        #[arg(long)]
        k2: usize,
        /// Skip building both Bell graphs for the oracle answer.
        #[arg(long)]
        no_oracle: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Find a partition into chromatic-number many parts of size at least 4.
    FindPartition {
        graph: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exits non-zero on any failure.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 2)]
        seeds: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Compare lower Bell isomorphism with the conjectured rule; exits
    /// non-zero if any counterexample is found.
    Conjecture {
        #[arg(long)]
        nmax: usize,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Full,
    AtMost,
    AtLeast,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Full,
    UpperAuto,
    Lower,
}

fn variant(kind: Kind, k: Option<usize>) -> Result<Variant> {
    Ok(match (kind, k) {
        (Kind::Full, _) => Variant::Full,
        (Kind::AtMost, Some(k)) => Variant::AtMostK(k),
        (Kind::AtLeast, Some(k)) => Variant::AtLeastK(k),
        _ => bail!("--k is required for this variant"),
    })
}

/// The argument itself, or the contents of the file it names.
fn text_of(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        fs::read_to_string(path).with_context(|| format!("reading {arg}"))
    } else {
        Ok(arg.to_string())
    }
}

fn first_line(text: &str) -> Result<&str> {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .context("no graph found")
}

fn read_graph(arg: &str) -> Result<Graph> {
    let text = text_of(arg)?;
    let line = first_line(&text)?;
    decode(line).with_context(|| format!("decoding graph6 `{line}`"))
}

/// graph6, or a JSON object with `edges` and either `order` or `vertices`.
fn read_bell(arg: &str) -> Result<UnlabeledGraph> {
    let text = text_of(arg)?;
    let trimmed = text.trim_start();
    if !trimmed.starts_with('{') {
        let line = first_line(&text)?;
        return Ok(UnlabeledGraph::from(
            &decode(line).with_context(|| format!("decoding graph6 `{line}`"))?,
        ));
    }
    let v: Value = serde_json::from_str(&text).context("parsing JSON")?;
    let order = match (&v["order"], &v["vertices"]) {
        (Value::Number(m), _) => m.as_u64().context("order must be a count")? as usize,
        (_, Value::Array(list)) => list.len(),
        _ => bail!("JSON needs `order` or `vertices`"),
    };
    let edges = v["edges"]
        .as_array()
        .context("JSON needs `edges`")?
        .iter()
        .map(|e| match e.as_array().map(|p| p.as_slice()) {
            Some([a, b]) => Ok((
                a.as_u64().context("bad vertex")? as usize,
                b.as_u64().context("bad vertex")? as usize,
            )),
            _ => bail!("edges must be pairs"),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UnlabeledGraph::from_edges(order, &edges)?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => match writeln!(std::io::stdout(), "{}", text.trim_end()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
            _ => Ok(()),
        },
    }
}

fn emit_json(out: &Option<PathBuf>, value: Value) -> Result<()> {
    emit(out, &serde_json::to_string_pretty(&value)?)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Build {
            graph,
            variant: kind,
            k,
            format,
            scramble,
            out,
        } => {
            let g = read_graph(&graph)?;
            let b = build_bell(&g, variant(kind, k)?)?;
            let text = match (format, scramble) {
                (Format::Json, None) => serde_json::to_string_pretty(&b.to_json())?,
                (Format::Dot, None) => b.to_dot(),
                (Format::Json, Some(s)) => {
                    let u = b.scramble(s);
                    serde_json::to_string_pretty(
                        &json!({ "order": u.order(), "edges": u.edges().map(|(a, c)| [a, c]).collect::<Vec<_>>() }),
                    )?
                }
                (Format::Dot, Some(s)) => b.scramble(s).to_dot(),
            };
            emit(&out, &text)?;
        }
        Command::Reconstruct {
            input,
            mode,
            host,
            k,
            seed,
            out,
        } => {
            let b = match (input, host) {
                (Some(input), None) => read_bell(&input)?,
                (None, Some(host)) => {
                    let g = read_graph(&host)?;
                    let v = match mode {
                        Mode::Full => Variant::Full,
                        Mode::UpperAuto => variant(Kind::AtLeast, k)?,
                        Mode::Lower => variant(Kind::AtMost, k)?,
                    };
                    build_bell(&g, v)?.scramble(seed)
                }
                _ => bail!("give either a Bell graph or --host"),
            };
            let report = match mode {
                Mode::Full => {
                    let (g, pivot, sets) = reconstruct_prime_with_sets(&b)?;
                    json!({ "mode": "full", "result": g, "pivot": pivot, "candidate_sets": sets })
                }
                Mode::UpperAuto => {
                    let mut r = serde_json::to_value(reconstruct_upper_auto(&b)?)?;
                    r["mode"] = json!("upper-auto");
                    r
                }
                Mode::Lower => {
                    let mut r = serde_json::to_value(reconstruct_from_bk_report(&b)?)?;
                    r["mode"] = json!("lower");
                    r
                }
            };
            emit_json(&out, report)?;
        }
        Command::Classify {
            g1,
            k1,
            g2,
            k2,
            no_oracle,
            out,
        } => {
            let (g1, g2) = (read_graph(&g1)?, read_graph(&g2)?);
            let c = classify_pair(&g1, k1, &g2, k2)?;
            let oracle = if no_oracle {
                None
            } else {
                Some(oracle_isomorphic(&g1, k1, &g2, k2)?)
            };
            emit_json(
                &out,
                json!({ "equivalent": c.equivalent, "conditions": c.conditions, "oracle": oracle }),
            )?;
            return Ok(oracle.is_none_or(|o| o == c.equivalent));
        }
        Command::FindPartition { graph, out } => {
            let g = read_graph(&graph)?;
            let f = find_fat_partition(&g)?;
            emit_json(
                &out,
                json!({ "partition": f.partition, "sizes": f.partition.block_sizes(), "trace": f.trace }),
            )?;
        }
        Command::Verify {
            suite,
            nmax,
            seeds,
            out,
        } => {
            let suite: Suite = suite.parse()?;
            let r = run_suite(suite, nmax, seeds)?;
            emit_json(&out, serde_json::to_value(&r)?)?;
            eprintln!(
                "{}: {} hosts, {} passed, {} checks, {} failures",
                suite,
                r.hosts,
                r.hosts_passed,
                r.checks,
                r.failures.len()
            );
            return Ok(r.passed());
        }
        Command::Conjecture { nmax, out } => {
            let r = conjecture_search(nmax)?;
            emit_json(&out, serde_json::to_value(&r)?)?;
            eprintln!(
                "{} items, {} pairs, {} counterexamples",
                r.items, r.pairs, r.counterexample_count
            );
            return Ok(r.counterexample_count == 0);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
