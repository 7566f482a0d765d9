//! The `probe-block` command line.
//!
//! Exit codes: 0 for a positive answer, 1 for a negative one, 2 for usage
//! and input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use probe_block_core::gen::{self, GenSpec};
use probe_block_core::graph::Graph;
use probe_block_core::oracle::{self, brute_kprobe, forbidden_witness, Family};
use probe_block_core::probe::{
    enhanced_graph, recognize_2probe_block, recognize_2probe_block_with, recognize_2probe_complete,
    recognize_probe_block, verify_partitioned, EnhanceMode, ProbePartition, RecognitionOutcome,
    Stage, Target,
};
use probe_block_core::structure::{complete_split, is_block_graph};
use serde_json::json;

use crate::io::{read_graphs, serialize, Format};
use crate::partition::{read_partition, PartitionFile};
use crate::report::CliReport;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "probe-block",
    version,
    about = "Recognize probe block graphs, with certificates"
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckClass {
    Block,
    CompleteSplit,
    #[value(name = "2probe-complete")]
    TwoProbeComplete,
    ProbeBlock,
    #[value(name = "2probe-block")]
    TwoProbeBlock,
}

impl CheckClass {
    fn name(self) -> &'static str {
        match self {
            CheckClass::Block => "block",
            CheckClass::CompleteSplit => "complete-split",
            CheckClass::TwoProbeComplete => "2probe-complete",
            CheckClass::ProbeBlock => "probe-block",
            CheckClass::TwoProbeBlock => "2probe-block",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleClass {
    ProbeBlock,
    #[value(name = "2probe-block")]
    TwoProbeBlock,
    ProbeComplete,
    #[value(name = "2probe-complete")]
    TwoProbeComplete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Diamond,
    DiamondC4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Block,
    Plant1,
    Plant2,
    Gnp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    El,
    G6,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::El => Format::EdgeList,
            FormatArg::G6 => Format::Graph6,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide class membership; certificates on yes, refutations on no.
    Check {
        #[arg(long, value_enum)]
        class: CheckClass,
        /// Verify this partition instead of searching for one.
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Edge-list (`.el`) or graph6 (`.g6`) files.
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
    },
    /// Search for a forbidden induced subgraph of a family.
    Witness {
        /// probe-block, 2probe-block-blocks, 2probe-block-gluing, dh,
        /// ptolemaic or 2probe-complete.
        #[arg(long)]
        family: String,
        graph: PathBuf,
    },
    /// Build the enhanced graph for a given partition.
    Enhance {
        #[arg(long, value_enum, default_value = "diamond-c4")]
        mode: ModeArg,
        #[arg(long)]
        partition: PathBuf,
        graph: PathBuf,
        /// Write the enhanced graph here as an edge list.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a reproducible instance.
    Generate {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for `gnp`.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long)]
        min_clique: Option<usize>,
        #[arg(long)]
        max_clique: Option<usize>,
        #[arg(long)]
        cut_reuse: Option<f64>,
        #[arg(long)]
        draft: Option<f64>,
        #[arg(long, value_enum, default_value = "el")]
        format: FormatArg,
        /// Write the graph here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the planted partition here (plant kinds). Without it the
        /// partition goes into a leading `#` comment of the edge list.
        #[arg(long)]
        partition_out: Option<PathBuf>,
    },
    /// Exhaustive-search verdict (small graphs only).
    Oracle {
        #[arg(long, value_enum)]
        class: OracleClass,
        graph: PathBuf,
    },
    /// Time the 2-probe recognizer on planted instances; CSV output.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Runs per size; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        repeat: usize,
    },
    /// Print a catalog pattern.
    Pattern {
        name: String,
        #[arg(long, value_enum, default_value = "el")]
        format: FormatArg,
    },
}

/// An input or usage problem; always exit code 2.
#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn millis(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Check {
            class,
            partition,
            graphs,
        } => {
            let partition = partition.as_deref().map(read_partition).transpose()?;
            let mut all_yes = true;
            for path in graphs {
                for g in read_graphs(path)? {
                    let report = check(&g, *class, partition.as_ref())?;
                    all_yes &= report.is_yes();
                    emit(out, cli.json, &report.to_json(), &report.to_string())?;
                }
            }
            Ok(if all_yes { EXIT_YES } else { EXIT_NO })
        }
        Command::Witness { family, graph } => {
            let fam = Family::from_name(family)
                .ok_or_else(|| Failure(format!("unknown family `{family}`")))?;
            let g = single(graph)?;
            let found = forbidden_witness(&g, fam)?;
            let (j, text) = match &found {
                Some((name, phi)) => (
                    json!({"family": family, "found": true, "pattern": name, "vertices": phi}),
                    format!("family: {family}\nwitness: {name} at {}\n", join(phi)),
                ),
                None => (
                    json!({"family": family, "found": false}),
                    format!("family: {family}\nwitness: none\n"),
                ),
            };
            emit(out, cli.json, &j.to_string(), &text)?;
            Ok(if found.is_some() { EXIT_YES } else { EXIT_NO })
        }
        Command::Enhance {
            mode,
            partition,
            graph,
            out: dest,
        } => {
            let g = single(graph)?;
            let p = read_partition(partition)?;
            let mode = match mode {
                ModeArg::Diamond => EnhanceMode::Diamond,
                ModeArg::DiamondC4 => EnhanceMode::DiamondC4,
            };
            let e = enhanced_graph(&g, &p.n1, &p.n2, mode)?;
            let verdict = is_block_graph(&e.result);
            if let Some(dest) = dest {
                fs::write(dest, serialize(&e.result, Format::EdgeList)?)?;
            }
            let j = json!({
                "added_edges": e.added,
                "block_graph": verdict.is_ok(),
                "non_clique_pair": verdict.err(),
            });
            let pairs: Vec<_> = e.added.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            let text = format!(
                "added edges ({}): {}\nblock graph: {}\n",
                pairs.len(),
                pairs.join(" "),
                if verdict.is_ok() { "yes" } else { "no" }
            );
            emit(out, cli.json, &j.to_string(), &text)?;
            Ok(if verdict.is_ok() { EXIT_YES } else { EXIT_NO })
        }
        Command::Generate {
            kind,
            n,
            seed,
            p,
            min_clique,
            max_clique,
            cut_reuse,
            draft,
            format,
            out: dest,
            partition_out,
        } => {
            let mut spec = GenSpec::new(*n, *seed);
            spec.min_clique = min_clique.unwrap_or(spec.min_clique);
            spec.max_clique = max_clique.unwrap_or(spec.max_clique);
            spec.cut_reuse = cut_reuse.unwrap_or(spec.cut_reuse);
            spec.draft = draft.unwrap_or(spec.draft);
            let (g, planted) = match kind {
                GenKind::Block => (gen::random_block_graph(&spec), None),
                GenKind::Plant1 => {
                    let (g, part) = gen::plant(1, &spec);
                    (g, Some(part))
                }
                GenKind::Plant2 => {
                    let (g, part) = gen::plant(2, &spec);
                    (g, Some(part))
                }
                GenKind::Gnp => (gen::random_graph(*n, *p, *seed), None),
            };
            let format = Format::from(*format);
            let mut text = String::new();
            if let Some(part) = &planted {
                let pj = PartitionFile::from_partition(part).to_json();
                match (partition_out, format) {
                    (Some(path), _) => fs::write(path, pj + "\n")?,
                    (None, Format::EdgeList) => text.push_str(&format!("# partition {pj}\n")),
                    (None, Format::Graph6) => {
                        return Err(Failure(
                            "graph6 output of a planted instance needs --partition-out".into(),
                        ))
                    }
                }
            }
            text.push_str(&serialize(&g, format)?);
            match dest {
                Some(path) => fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_YES)
        }
        Command::Oracle { class, graph } => {
            let g = single(graph)?;
            let (k, target, name) = match class {
                OracleClass::ProbeBlock => (1, Target::Block, "probe-block"),
                OracleClass::TwoProbeBlock => (2, Target::Block, "2probe-block"),
                OracleClass::ProbeComplete => (1, Target::Complete, "probe-complete"),
                OracleClass::TwoProbeComplete => (2, Target::Complete, "2probe-complete"),
            };
            let t = Instant::now();
            let outcome = brute_kprobe(&g, k, target)?;
            let mut report = CliReport::from_outcome(name, &outcome);
            report.timing.insert("exhaustive".into(), millis(t));
            emit(out, cli.json, &report.to_json(), &report.to_string())?;
            Ok(if report.is_yes() { EXIT_YES } else { EXIT_NO })
        }
        Command::Bench {
            sizes,
            seed,
            repeat,
        } => {
            writeln!(out, "n,m,millis,verdict")?;
            for &n in sizes {
                let (g, _) = gen::plant(2, &GenSpec::new(n, *seed));
                let (ms, yes) = time_recognition(&g, (*repeat).max(1));
                writeln!(
                    out,
                    "{n},{},{ms:.3},{}",
                    g.size(),
                    if yes { "yes" } else { "no" }
                )?;
            }
            Ok(EXIT_YES)
        }
        Command::Pattern { name, format } => {
            let g = oracle::pattern(name)?;
            out.write_all(serialize(&g, Format::from(*format))?.as_bytes())?;
            Ok(EXIT_YES)
        }
    }
}

/// Fastest of `repeat` runs of the 2-probe recognizer, in milliseconds.
pub fn time_recognition(g: &Graph, repeat: usize) -> (f64, bool) {
    let mut best = f64::INFINITY;
    let mut yes = false;
    for _ in 0..repeat {
        let t = Instant::now();
        let outcome = recognize_2probe_block(g);
        best = best.min(millis(t));
        yes = outcome.is_yes();
    }
    (best, yes)
}

fn emit(out: &mut dyn Write, as_json: bool, j: &str, text: &str) -> std::io::Result<()> {
    if as_json {
        writeln!(out, "{j}")
    } else {
        write!(out, "{text}")
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn single(path: &Path) -> Result<Graph, Failure> {
    let mut gs = read_graphs(path)?;
    match gs.len() {
        1 => Ok(gs.pop().unwrap()),
        k => Err(Failure(format!(
            "{}: expected one graph, found {k}",
            path.display()
        ))),
    }
}

fn check(
    g: &Graph,
    class: CheckClass,
    partition: Option<&PartitionFile>,
) -> Result<CliReport, Failure> {
    let name = class.name();
    let t = Instant::now();
    if let Some(p) = partition {
        let target = match class {
            CheckClass::TwoProbeBlock => Target::Block,
            CheckClass::ProbeBlock if p.n2.is_empty() => Target::Block,
            CheckClass::ProbeBlock => {
                return Err(Failure(
                    "a probe-block partition must have an empty N2".into(),
                ))
            }
            CheckClass::TwoProbeComplete => Target::Complete,
            CheckClass::Block | CheckClass::CompleteSplit => {
                return Err(Failure(format!(
                    "--partition does not apply to class {name}"
                )))
            }
        };
        let outcome = verify_partitioned(g, &p.n1, &p.n2, target)?;
        let mut report = CliReport::from_outcome(name, &outcome);
        report.timing.insert("verification".into(), millis(t));
        return Ok(report);
    }
    let mut report = match class {
        CheckClass::Block => match is_block_graph(g) {
            Ok(()) => CliReport::yes(name, vec![], vec![], vec![]),
            Err(pair) => CliReport::no(name, "block-clique", json!(pair)),
        },
        CheckClass::CompleteSplit => match complete_split(g) {
            Ok(_) => CliReport::yes(name, vec![], vec![], vec![]),
            Err(pair) => CliReport::no(name, "complete-split", json!(pair)),
        },
        CheckClass::TwoProbeComplete => {
            CliReport::from_outcome(name, &recognize_2probe_complete(g))
        }
        CheckClass::ProbeBlock => CliReport::from_outcome(name, &recognize_probe_block(g)),
        CheckClass::TwoProbeBlock => {
            let mut stages: Vec<(Stage, Instant)> = Vec::new();
            let outcome = recognize_2probe_block_with(g, |s| stages.push((s, Instant::now())));
            let end = Instant::now();
            let mut report = CliReport::from_outcome(name, &outcome);
            for (i, (s, start)) in stages.iter().enumerate() {
                let stop = stages.get(i + 1).map_or(end, |x| x.1);
                report
                    .timing
                    .insert(s.name().into(), (stop - *start).as_secs_f64() * 1e3);
            }
            return Ok(report);
        }
    };
    report.timing.insert("total".into(), millis(t));
    Ok(report)
}

/// Re-verifies a report's certificate; used to check round trips.
pub fn reverify(g: &Graph, report: &CliReport, target: Target) -> Option<bool> {
    let p = ProbePartition::new(report.n1.clone()?, report.n2.clone()?);
    let outcome = verify_partitioned(g, p.n1(), p.n2(), target).ok()?;
    Some(
        matches!(outcome, RecognitionOutcome::Yes(c) if Some(&c.embedding.added) == report.added_edges.as_ref()),
    )
}
