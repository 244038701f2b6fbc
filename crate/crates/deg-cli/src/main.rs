//! `deg` — command-line surface for the dual-equivalence-graph library.
//!
//! Subcommands: `rsk`, `graph build|dot|check`, `llt expand|graph|check-deg`,
//! `mac expand`, `campaign run`, `schur extract`. Structured results render
//! as text by default and as JSON with `--out json`; JSON is the machine
//! interface and the text renderings are never meant to be parsed.
//!
//! Exit codes: 0 on success, 1 when a computation fails or a check reports
//! failures, 2 on usage errors. All configuration is via flags; the binary
//! reads no environment variables and uses no randomness.

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use deg::axioms::{check_all, detect_f_family};
use deg::campaigns::{default_size, replay, run_campaign, CampaignSpec, Witness};
use deg::graph::{skew_graph, standard_graph, SignedColoredGraph};
use deg::llt::{build_llt_graph, llt_f_expansion, llt_schur_expansion, SkewTuple};
use deg::macdonald::{macdonald_f_expansion, macdonald_schur_expansion, MacMode};
use deg::qsym::{extract_schur, FExpansion};
use deg::tableaux::{Partition, SkewShape};
use deg::words::{rsk, Word};

#[derive(Parser)]
#[command(
    name = "deg",
    version,
    about = "Dual equivalence graphs, LLT and Macdonald Schur expansions",
    propagate_version = true
)]
struct Cli {
    /// Output format for structured results.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    out: OutFormat,

    /// Assert fully deterministic operation. The binary never uses
    /// randomness, so this flag changes nothing; it exists so scripts can
    /// state the requirement explicitly.
    #[arg(long, global = true)]
    seedless: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Insert a word; print the insertion and recording tableaux.
    Rsk {
        /// The word, as digits ("15342") or comma-separated ("10,5,3").
        word: String,
    },
    /// Standard and skew dual equivalence graphs.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Tuples of skew shapes and their graphs and Schur expansions.
    #[command(subcommand)]
    Llt(LltCmd),
    /// Two-variable series of straight shapes.
    #[command(subcommand)]
    Mac(MacCmd),
    /// Batch verification campaigns.
    #[command(subcommand)]
    Campaign(CampaignCmd),
    /// Operations on graded quasisymmetric expansions.
    #[command(subcommand)]
    Schur(SchurCmd),
}

#[derive(Args)]
struct ShapeArgs {
    /// Outer partition, comma-separated ("3,2") or a JSON array ("[3,2]").
    #[arg(long, value_parser = parse_partition)]
    partition: Partition,
    /// Inner partition to skew by, same formats; empty if omitted.
    #[arg(long, value_parser = parse_partition)]
    inner: Option<Partition>,
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Build the graph on the standard fillings of a shape and summarize it.
    Build {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Emit Graphviz DOT instead of the summary.
        #[arg(long)]
        dot: bool,
    },
    /// Emit the graph as Graphviz DOT.
    Dot {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Check the axioms on the graph; exit 1 if any fails.
    Check {
        #[command(flatten)]
        shape: ShapeArgs,
    },
}

#[derive(Args)]
struct TupleArg {
    /// The tuple as a JSON array of [outer, inner] partition pairs, e.g.
    /// '[[[2],[]],[[1],[]],[[1],[]]]'.
    #[arg(long, value_parser = parse_tuple)]
    tuple: SkewTuple,
}

#[derive(Subcommand)]
enum LltCmd {
    /// Expand the tuple's polynomial into Schur terms (window diameter at
    /// most 3 required).
    Expand {
        #[command(flatten)]
        tuple: TupleArg,
        /// Emit the graded fundamental expansion instead of Schur terms;
        /// its JSON form feeds `schur extract`.
        #[arg(long)]
        graded: bool,
    },
    /// Build the graph on the tuple's fillings and summarize it.
    Graph {
        #[command(flatten)]
        tuple: TupleArg,
        /// Emit Graphviz DOT instead of the summary.
        #[arg(long)]
        dot: bool,
    },
    /// Check every component of the tuple's graph against the axioms; exit
    /// 1 if any component fails.
    CheckDeg {
        #[command(flatten)]
        tuple: TupleArg,
    },
}

#[derive(Subcommand)]
enum MacCmd {
    /// Expand the two-variable series of a shape into Schur terms.
    Expand {
        /// Outer partition, comma-separated ("3,2") or a JSON array ("[3,2]").
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        /// Inner partition to skew by, same formats; empty if omitted.
        #[arg(long, value_parser = parse_partition)]
        inner: Option<Partition>,
        /// Expand through the conjugate shape and exchange the variables.
        #[arg(long)]
        conjugate: bool,
        /// Emit the graded fundamental expansion instead of Schur terms;
        /// its JSON form feeds `schur extract`.
        #[arg(long)]
        graded: bool,
    },
}

#[derive(Subcommand)]
enum CampaignCmd {
    /// Run a verification campaign and report every check.
    Run {
        /// Campaign name: axioms-std, theorem-4plus, llt-n5, llt-n6,
        /// gap-tau, llt-expansion, mac-expansion, or sharpness.
        #[arg(long, required_unless_present = "replay", conflicts_with = "replay")]
        name: Option<String>,
        /// Size bound; each campaign has a default.
        #[arg(long, conflicts_with = "replay")]
        n: Option<usize>,
        /// Worker threads; 0 means the process default.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Permit n > 8 despite the factorial growth.
        #[arg(long, conflicts_with = "replay")]
        force: bool,
        /// Re-run the single instance recorded in this witness file, as
        /// emitted in a failing report's "witness" field.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SchurCmd {
    /// Read a graded fundamental expansion (JSON) and extract its Schur
    /// terms; fails if the input is not symmetric or not Schur-positive
    /// over the integers.
    Extract {
        /// Path to the expansion JSON, or "-" for stdin.
        #[arg(long)]
        input: String,
    },
}

fn main() -> ExitCode {
    // Rust ignores SIGPIPE, so printing into a closed pipe (`deg … | head`)
    // would otherwise panic on EPIPE; restore the default so the process
    // just exits like other line-oriented tools.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Rsk { word } => cmd_rsk(cli.out, word),
        Command::Graph(cmd) => match cmd {
            GraphCmd::Build { shape, dot } => cmd_graph_build(cli.out, shape, *dot),
            GraphCmd::Dot { shape } => cmd_graph_build(cli.out, shape, true),
            GraphCmd::Check { shape } => cmd_graph_check(cli.out, shape),
        },
        Command::Llt(cmd) => match cmd {
            LltCmd::Expand { tuple, graded } => {
                cmd_llt_expand(cli.out, &tuple.tuple, *graded)
            }
            LltCmd::Graph { tuple, dot } => cmd_llt_graph(cli.out, &tuple.tuple, *dot),
            LltCmd::CheckDeg { tuple } => cmd_llt_check_deg(cli.out, &tuple.tuple),
        },
        Command::Mac(MacCmd::Expand {
            shape,
            inner,
            conjugate,
            graded,
        }) => cmd_mac_expand(cli.out, shape, inner.as_ref(), *conjugate, *graded),
        Command::Campaign(CampaignCmd::Run {
            name,
            n,
            jobs,
            output,
            force,
            replay,
        }) => cmd_campaign_run(
            cli.out,
            name.as_deref(),
            *n,
            *jobs,
            output.as_deref(),
            *force,
            replay.as_deref(),
        ),
        Command::Schur(SchurCmd::Extract { input }) => cmd_schur_extract(cli.out, input),
    }
}

// ---------------------------------------------------------------------------
// Argument parsing helpers
// ---------------------------------------------------------------------------

/// Parses "3,2", "[3,2]", or "" into partition parts.
fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "[]" {
        return Ok(Vec::new());
    }
    if s.starts_with('[') {
        return serde_json::from_str(s).with_context(|| format!("bad partition {s:?}"));
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .with_context(|| format!("bad partition part {part:?} in {s:?}"))
        })
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition> {
    Ok(Partition::new(parse_parts(s)?)?)
}

fn parse_shape(outer: &Partition, inner: Option<&Partition>) -> Result<SkewShape> {
    let inner = inner.cloned().unwrap_or_else(Partition::empty);
    Ok(SkewShape::new(outer.clone(), inner)?)
}

fn parse_tuple(s: &str) -> Result<SkewTuple> {
    let pairs: Vec<(Vec<usize>, Vec<usize>)> = serde_json::from_str(s.trim())
        .with_context(|| format!("bad tuple {s:?}; expected [[outer, inner], ...]"))?;
    if pairs.is_empty() {
        bail!("a tuple needs at least one shape");
    }
    let shapes = pairs
        .into_iter()
        .map(|(outer, inner)| {
            Ok(SkewShape::new(
                Partition::new(outer)?,
                Partition::new(inner)?,
            )?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SkewTuple::new(shapes)?)
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

fn cmd_rsk(out: OutFormat, word: &str) -> Result<ExitCode> {
    let word: Word = word.parse()?;
    let (p, q) = rsk(&word)?;
    match out {
        OutFormat::Json => print_json(&json!({
            "word": word,
            "shape": p.shape().outer(),
            "p": p,
            "q": q,
        }))?,
        OutFormat::Text => {
            println!("word  {word}");
            println!("shape {}", p.shape().outer());
            println!("P:\n{p}");
            println!("Q:\n{q}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn build_shape_graph(args: &ShapeArgs) -> Result<SignedColoredGraph> {
    let shape = parse_shape(&args.partition, args.inner.as_ref())?;
    Ok(if shape.is_straight() {
        standard_graph(shape.outer())?
    } else {
        skew_graph(&shape)?
    })
}

fn graph_summary(out: OutFormat, label: &str, g: &SignedColoredGraph) -> Result<()> {
    let components = g.components().len();
    match out {
        OutFormat::Json => print_json(&json!({
            "graph": label,
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "components": components,
            "colors": { "lo": *g.colors().start(), "hi": *g.colors().end() },
        }))?,
        OutFormat::Text => {
            println!(
                "graph of {label}: {} vertices, {} edges, {} component(s), colors {}..={}",
                g.vertex_count(),
                g.edge_count(),
                components,
                g.colors().start(),
                g.colors().end()
            );
        }
    }
    Ok(())
}

fn cmd_graph_build(out: OutFormat, args: &ShapeArgs, dot: bool) -> Result<ExitCode> {
    let shape = parse_shape(&args.partition, args.inner.as_ref())?;
    let g = build_shape_graph(args)?;
    if dot {
        print!("{}", g.to_dot());
    } else {
        graph_summary(out, &shape.to_string(), &g)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn axiom_report_lines(g: &SignedColoredGraph) -> (bool, Vec<String>) {
    let report = check_all(g);
    let witnesses = detect_f_family(g);
    let slots = [
        ("axiom 1", &report.axiom1),
        ("axiom 2", &report.axiom2),
        ("axiom 3", &report.axiom3),
        ("axiom 4", &report.axiom4),
        ("axiom 4+", &report.axiom4_plus),
        ("axiom 5", &report.axiom5),
        ("axiom 6", &report.axiom6),
    ];
    let mut lines = Vec::new();
    for (name, slot) in slots {
        match slot {
            None => lines.push(format!("PASS {name}")),
            Some(why) => lines.push(format!("FAIL {name}: {why}")),
        }
    }
    match witnesses.len() {
        0 => lines.push("PASS looping-family scan: no witnesses".to_string()),
        k => lines.push(format!("FAIL looping-family scan: {k} witness(es)")),
    }
    let ok = report.satisfies_standard_route()
        && report.satisfies_plus_route()
        && witnesses.is_empty();
    (ok, lines)
}

fn cmd_graph_check(out: OutFormat, args: &ShapeArgs) -> Result<ExitCode> {
    let shape = parse_shape(&args.partition, args.inner.as_ref())?;
    let g = build_shape_graph(args)?;
    let report = check_all(&g);
    let witnesses = detect_f_family(&g);
    let (ok, lines) = axiom_report_lines(&g);
    match out {
        OutFormat::Json => print_json(&json!({
            "graph": shape.to_string(),
            "vertices": g.vertex_count(),
            "axioms": report,
            "looping_family_witnesses": witnesses,
            "is_deg": ok,
        }))?,
        OutFormat::Text => {
            println!("graph of {shape}: {} vertices", g.vertex_count());
            for line in lines {
                println!("{line}");
            }
            println!(
                "{}",
                if ok {
                    "dual equivalence graph"
                } else {
                    "NOT a dual equivalence graph"
                }
            );
        }
    }
    Ok(exit_for(ok))
}

fn cmd_llt_expand(out: OutFormat, tuple: &SkewTuple, graded: bool) -> Result<ExitCode> {
    if graded {
        return print_graded(out, llt_f_expansion(tuple)?);
    }
    let expansion = llt_schur_expansion(tuple)?;
    match out {
        OutFormat::Json => print_json(&json!({
            "tuple": tuple.to_string(),
            "schur": expansion,
        }))?,
        OutFormat::Text => {
            println!("tuple {tuple}");
            println!("{expansion}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Prints a graded fundamental expansion; the JSON form is exactly what
/// `schur extract` reads back.
fn print_graded(out: OutFormat, expansion: FExpansion) -> Result<ExitCode> {
    match out {
        OutFormat::Json => println!("{}", serde_json::to_string_pretty(&expansion)?),
        OutFormat::Text => println!("{expansion}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_llt_graph(out: OutFormat, tuple: &SkewTuple, dot: bool) -> Result<ExitCode> {
    let g = build_llt_graph(tuple)?;
    if dot {
        print!("{}", g.to_dot());
    } else {
        graph_summary(out, &tuple.to_string(), &g)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_llt_check_deg(out: OutFormat, tuple: &SkewTuple) -> Result<ExitCode> {
    let g = build_llt_graph(tuple)?;
    let comps = g.components();
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for comp in &comps {
        let sub = g.subgraph(comp);
        let report = check_all(&sub);
        let ok = report.satisfies_standard_route() && report.satisfies_plus_route();
        let rep = comp
            .iter()
            .min()
            .map(|&v| g.payload(v).to_string())
            .expect("nonempty component");
        if !ok {
            failures.push(rep.clone());
        }
        rows.push(json!({
            "component": rep,
            "vertices": sub.vertex_count(),
            "is_deg": ok,
        }));
    }
    let ok = failures.is_empty();
    match out {
        OutFormat::Json => print_json(&json!({
            "tuple": tuple.to_string(),
            "components": rows,
            "all_deg": ok,
        }))?,
        OutFormat::Text => {
            println!("tuple {tuple}: {} component(s)", comps.len());
            for row in &rows {
                println!(
                    "{} component at {} ({} vertices)",
                    if row["is_deg"].as_bool().expect("bool") {
                        "PASS"
                    } else {
                        "FAIL"
                    },
                    row["component"].as_str().expect("string"),
                    row["vertices"]
                );
            }
        }
    }
    Ok(exit_for(ok))
}

fn cmd_mac_expand(
    out: OutFormat,
    shape: &Partition,
    inner: Option<&Partition>,
    conjugate: bool,
    graded: bool,
) -> Result<ExitCode> {
    let shape = parse_shape(shape, inner)?;
    if graded {
        return print_graded(out, macdonald_f_expansion(&shape)?);
    }
    let mode = if conjugate {
        MacMode::Conjugate
    } else {
        MacMode::Direct
    };
    let expansion = macdonald_schur_expansion(&shape, mode)?;
    match out {
        OutFormat::Json => print_json(&json!({
            "shape": shape.to_string(),
            "mode": if conjugate { "conjugate" } else { "direct" },
            "schur": expansion,
        }))?,
        OutFormat::Text => {
            println!("shape {shape}");
            println!("{expansion}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_campaign_run(
    out: OutFormat,
    name: Option<&str>,
    n: Option<usize>,
    jobs: usize,
    output: Option<&std::path::Path>,
    force: bool,
    replay_path: Option<&std::path::Path>,
) -> Result<ExitCode> {
    let started = std::time::Instant::now();
    let report = match replay_path {
        Some(path) => {
            let data = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read witness file {}", path.display()))?;
            let witness: Witness = serde_json::from_str(&data)
                .with_context(|| format!("bad witness file {}", path.display()))?;
            replay(&witness)?
        }
        None => {
            let name = name.expect("clap requires --name without --replay");
            let spec = CampaignSpec {
                name: name.to_string(),
                n: match n {
                    Some(n) => n,
                    None => default_size(name)?,
                },
                jobs,
                output: output.map(|p| p.to_path_buf()),
                force,
            };
            run_campaign(&spec)?
        }
    };
    // Timing goes to stderr so reports stay byte-identical across runs.
    eprintln!(
        "campaign {} finished in {:.1}s: {} passed, {} failed",
        report.campaign,
        started.elapsed().as_secs_f64(),
        report.passed,
        report.failed
    );
    let rendered = match out {
        OutFormat::Json => report.to_json(),
        OutFormat::Text => report.render_text(),
    };
    match output {
        Some(path) => {
            std::fs::write(path, rendered)
                .with_context(|| format!("cannot write report to {}", path.display()))?;
            eprintln!("report written to {}", path.display());
        }
        None => print!("{rendered}"),
    }
    Ok(exit_for(report.all_passed()))
}

fn cmd_schur_extract(out: OutFormat, input: &str) -> Result<ExitCode> {
    let data = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("cannot read stdin")?;
        buf
    } else {
        std::fs::read_to_string(input)
            .with_context(|| format!("cannot read expansion file {input}"))?
    };
    let expansion: FExpansion =
        serde_json::from_str(&data).context("bad expansion JSON")?;
    let schur = extract_schur(&expansion)?;
    match out {
        OutFormat::Json => print_json(&json!({ "schur": schur }))?,
        OutFormat::Text => println!("{schur}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn print_json(value: &serde_json::Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
