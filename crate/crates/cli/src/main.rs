//! `chorded`: command-line front door for the chorded-cycle toolkit.
//!
//! Streaming protocol: graph-consuming subcommands read graph6 lines from a
//! file or standard input and emit one result line per input line, so
//! external enumerators pipe straight in. Identical argv and stdin produce
//! byte-identical stdout.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use chorded_cycles::chorded::{find_chorded_cycle, ChordedCycle};
use chorded_cycles::generators::{extremal_g1, extremal_g2, random_delta2_graph};
use chorded_cycles::graph::{delta_m, Graph};
use chorded_cycles::graph6::{parse_graph6, serialize_graph6};
use chorded_cycles::harness::{oracle, sweep, SweepMode};
use chorded_cycles::packing::{exact_min_system, pack_chorded_cycles, Caps, PackOutcome};
use chorded_cycles::structure::block_decomposition;

#[derive(Parser)]
#[command(name = "chorded", version, about = "Chorded-cycle detection, packing, and verification")]
struct Cli {
    /// Emit JSON instead of plain text where both are available.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Minimum neighborhood-union size over nonadjacent pairs, per graph.
    Delta2 { file: Option<PathBuf> },
    /// Block decomposition (blocks, cut vertices, leaf blocks) as JSON.
    Blocks { file: Option<PathBuf> },
    /// Minimum-length chorded cycle with its chords, or "none".
    FindChorded { file: Option<PathBuf> },
    /// Minimal r-system of vertex-disjoint chorded cycles, or "none".
    MinSystem {
        #[arg(long)]
        r: usize,
        file: Option<PathBuf>,
    },
    /// Pack s vertex-disjoint chorded cycles.
    Pack {
        #[arg(long)]
        s: usize,
        /// Node budget for the enumeration stages.
        #[arg(long)]
        budget: Option<u64>,
        file: Option<PathBuf>,
    },
    /// Exhaustive existence oracle for s vertex-disjoint chorded cycles.
    Oracle {
        #[arg(long)]
        s: usize,
        file: Option<PathBuf>,
    },
    /// Verify a graph6 stream against the packing theorem, or hunt the
    /// boundary one below its bound. Emits one JSON report.
    Verify {
        #[arg(long)]
        s: usize,
        /// "verify" or "hunt-boundary".
        #[arg(long, default_value = "verify")]
        mode: String,
        /// Parallel line processing; output order is by input line.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include wall-clock timing in the report (breaks byte-for-byte
        /// reproducibility of stdout).
        #[arg(long)]
        timing: bool,
        file: Option<PathBuf>,
    },
    /// Emit an extremal family member as graph6.
    Gen {
        /// "g1" (packs only s-1) or "g2" (packs s).
        #[arg(long)]
        family: String,
        #[arg(long)]
        s: usize,
    },
    /// Seeded random graph with delta_2 >= t, as graph6.
    Rand {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // Usage errors exit 1; --help/--version exit 0.
            if e.use_stderr() {
                eprintln!("{e}");
                std::process::exit(1);
            }
            print!("{e}");
            std::process::exit(0);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn caps_from_env() -> Result<Caps> {
    let mut caps = Caps::default();
    if let Ok(raw) = std::env::var("CHORDED_PACK_CAPS") {
        for part in raw.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, value) = part
                .split_once('=')
                .with_context(|| format!("bad CHORDED_PACK_CAPS entry '{part}'"))?;
            let value: u64 = value.trim().parse().with_context(|| format!("bad value in '{part}'"))?;
            if value == 0 {
                bail!("CHORDED_PACK_CAPS values must be positive");
            }
            match key.trim() {
                "exact_n" => caps.exact_n = value as usize,
                "oracle_n" => caps.oracle_n = value as usize,
                "budget" => caps.budget = value,
                other => bail!("unknown CHORDED_PACK_CAPS key '{other}'"),
            }
        }
    }
    Ok(caps)
}

fn run(cli: Cli) -> Result<i32> {
    let caps = caps_from_env()?;
    let json = cli.json;
    match cli.cmd {
        Cmd::Delta2 { file } => each_graph(&file, |g, out| {
            let d = delta_m(g, 2)?;
            if json {
                writeln!(out, "{}", serde_json::json!({ "delta2": d }))?;
            } else {
                writeln!(out, "{d}")?;
            }
            Ok(())
        }),
        Cmd::Blocks { file } => each_graph(&file, |g, out| {
            let d = block_decomposition(g)?;
            let blocks: Vec<Vec<usize>> = d.blocks.iter().map(|b| b.iter().collect()).collect();
            let cuts: Vec<usize> = d.cut_vertices.iter().collect();
            writeln!(
                out,
                "{}",
                serde_json::json!({
                    "blocks": blocks,
                    "cut_vertices": cuts,
                    "leaf_blocks": d.leaf_blocks,
                })
            )?;
            Ok(())
        }),
        Cmd::FindChorded { file } => each_graph(&file, |g, out| {
            match find_chorded_cycle(g, &g.full_set(), None)? {
                Some(w) => {
                    verify_witness(g, std::slice::from_ref(&w))?;
                    if json {
                        writeln!(out, "{}", witness_json(std::slice::from_ref(&w)))?;
                    } else {
                        writeln!(out, "{}", format_cycles(std::slice::from_ref(&w)))?;
                    }
                }
                None => {
                    if json {
                        writeln!(out, "null")?;
                    } else {
                        writeln!(out, "none")?;
                    }
                }
            }
            Ok(())
        }),
        Cmd::MinSystem { r, file } => each_graph(&file, |g, out| {
            match exact_min_system(g, r)? {
                Some(sys) => {
                    verify_witness(g, sys.cycles())?;
                    if json {
                        writeln!(out, "{}", witness_json(sys.cycles()))?;
                    } else {
                        writeln!(out, "{}", format_cycles(sys.cycles()))?;
                    }
                }
                None => {
                    if json {
                        writeln!(out, "null")?;
                    } else {
                        writeln!(out, "none")?;
                    }
                }
            }
            Ok(())
        }),
        Cmd::Pack { s, budget, file } => {
            let mut caps = caps;
            if let Some(b) = budget {
                caps.budget = b;
            }
            each_graph(&file, |g, out| {
                match pack_chorded_cycles(g, s, &caps)? {
                    PackOutcome::Witness(sys) => {
                        verify_witness(g, sys.cycles())?;
                        if json {
                            writeln!(
                                out,
                                "{}",
                                serde_json::json!({
                                    "outcome": "witness",
                                    "cycles": witness_value(sys.cycles()),
                                })
                            )?;
                        } else {
                            writeln!(out, "witness {}", format_cycles(sys.cycles()))?;
                        }
                    }
                    PackOutcome::NotFoundProven => {
                        if json {
                            writeln!(out, "{}", serde_json::json!({ "outcome": "not-found-proven" }))?;
                        } else {
                            writeln!(out, "not-found-proven")?;
                        }
                    }
                    PackOutcome::BudgetExhausted => {
                        if json {
                            writeln!(out, "{}", serde_json::json!({ "outcome": "budget-exhausted" }))?;
                        } else {
                            writeln!(out, "budget-exhausted")?;
                        }
                    }
                }
                Ok(())
            })
        }
        Cmd::Oracle { s, file } => each_graph(&file, |g, out| {
            let (exists, wit) = oracle::oracle_pack_exists(g, s, caps.oracle_n)?;
            match (exists, wit) {
                (true, Some(sys)) => {
                    verify_witness(g, sys.cycles())?;
                    if json {
                        writeln!(
                            out,
                            "{}",
                            serde_json::json!({ "exists": true, "cycles": witness_value(sys.cycles()) })
                        )?;
                    } else {
                        writeln!(out, "true {}", format_cycles(sys.cycles()))?;
                    }
                }
                _ => {
                    if json {
                        writeln!(out, "{}", serde_json::json!({ "exists": false }))?;
                    } else {
                        writeln!(out, "false")?;
                    }
                }
            }
            Ok(())
        }),
        Cmd::Verify { s, mode, jobs, timing, file } => {
            let mode = match mode.as_str() {
                "verify" => SweepMode::Verify,
                "hunt-boundary" => SweepMode::HuntBoundary,
                other => bail!("unknown mode '{other}' (expected 'verify' or 'hunt-boundary')"),
            };
            let reader = open_input(&file)?;
            let summary = sweep(reader.lines(), s, mode, &caps, jobs, timing);
            println!("{}", serde_json::to_string(&summary)?);
            Ok(if summary.clean() { 0 } else { 2 })
        }
        Cmd::Gen { family, s } => {
            let g = match family.as_str() {
                "g1" => extremal_g1(s)?,
                "g2" => extremal_g2(s)?,
                other => bail!("unknown family '{other}' (expected 'g1' or 'g2')"),
            };
            println!("{}", serialize_graph6(&g));
            Ok(0)
        }
        Cmd::Rand { n, t, seed } => {
            let g = random_delta2_graph(n, t, seed)?;
            println!("{}", serialize_graph6(&g));
            Ok(0)
        }
    }
}

fn open_input(file: &Option<PathBuf>) -> Result<Box<dyn BufRead>> {
    Ok(match file {
        Some(path) => {
            Box::new(BufReader::new(File::open(path).with_context(|| format!("open {path:?}"))?))
        }
        None => Box::new(BufReader::new(io::stdin())),
    })
}

/// Streams graphs line by line; any parse or processing error is fatal for
/// single-graph commands (exit 1).
fn each_graph(
    file: &Option<PathBuf>,
    mut f: impl FnMut(&Graph, &mut dyn Write) -> Result<()>,
) -> Result<i32> {
    let reader = open_input(file)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for (no, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let g = parse_graph6(text).with_context(|| format!("line {}", no + 1))?;
        f(&g, &mut out).with_context(|| format!("line {}", no + 1))?;
    }
    Ok(0)
}

fn format_cycles(cycles: &[ChordedCycle]) -> String {
    cycles
        .iter()
        .map(|c| {
            let verts =
                c.cycle().vertices().iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            let chords =
                c.chords().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ");
            format!("cycle {verts} chords {chords}")
        })
        .collect::<Vec<_>>()
        .join(" ; ")
}

fn witness_value(cycles: &[ChordedCycle]) -> serde_json::Value {
    serde_json::Value::Array(
        cycles
            .iter()
            .map(|c| {
                serde_json::json!({
                    "cycle": c.cycle().vertices(),
                    "chords": c.chords(),
                })
            })
            .collect(),
    )
}

fn witness_json(cycles: &[ChordedCycle]) -> String {
    witness_value(cycles).to_string()
}

/// Independent witness checker invoked before anything is printed: uses only
/// the adjacency relation, not the library's own validators.
fn verify_witness(g: &Graph, cycles: &[ChordedCycle]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for c in cycles {
        let vs = c.cycle().vertices();
        if vs.len() < 4 {
            bail!("witness cycle shorter than 4");
        }
        for &v in vs {
            if v >= g.n() {
                bail!("witness vertex {v} out of range");
            }
            if seen[v] {
                bail!("witness cycles are not vertex-disjoint at {v}");
            }
            seen[v] = true;
        }
        for i in 0..vs.len() {
            let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
            if !g.has_edge(a, b) {
                bail!("witness cycle edge ({a},{b}) missing");
            }
        }
        if c.chords().is_empty() {
            bail!("witness cycle has no chord");
        }
        for &(a, b) in c.chords() {
            if !g.has_edge(a, b) {
                bail!("witness chord ({a},{b}) missing");
            }
            let pa = vs.iter().position(|&v| v == a);
            let pb = vs.iter().position(|&v| v == b);
            let (Some(pa), Some(pb)) = (pa, pb) else {
                bail!("witness chord ({a},{b}) not on its cycle");
            };
            let d = pa.abs_diff(pb);
            if d == 1 || d == vs.len() - 1 {
                bail!("witness chord ({a},{b}) is a cycle edge");
            }
        }
    }
    Ok(())
}
