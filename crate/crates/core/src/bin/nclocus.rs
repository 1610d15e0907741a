use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use nclocus::descent::{self, DescentDiagram};
use nclocus::graph::DecoratedGraph;
use nclocus::report::{self, RunReport, Sections};
use nclocus::toric::{self, Fan};
use nclocus::{examples, Error};

#[derive(Parser)]
#[command(name = "nclocus", version, about = "Invariants of normal-crossings surfaces with graph-like singular locus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph, fan or descent diagram for violated invariants.
    Validate(Input),
    /// Toric fans.
    #[command(subcommand)]
    Toric(ToricCommand),
    /// Run analyses on a graph or descent diagram (all of them if no flag is given).
    Analyze(AnalyzeArgs),
}

#[derive(Subcommand)]
enum ToricCommand {
    /// Boundary graph, wall table and divisor classes of a fan.
    Extract(Input),
    /// Print the fan of the tetrahedral quartic mirror.
    QuarticMirror {
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Input {
    /// JSON file, or `-` for standard input.
    path: Option<String>,
    /// Built-in fixture: theta, p3, conifold, quartic-mirror.
    #[arg(long, conflicts_with = "path")]
    example: Option<String>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: Input,
    /// Assembled descent diagram.
    #[arg(long)]
    descent: bool,
    /// Degrees and cycle holonomies of the twisting line bundle.
    #[arg(long)]
    pic: bool,
    /// Whether the diagram is globally 2-periodic.
    #[arg(long)]
    two_periodic: bool,
    /// Dual surface: genus, boundary circles, orientability, w1.
    #[arg(long)]
    surface: bool,
    /// First homology of the graph manifold.
    #[arg(long)]
    h1: bool,
    /// Nodal curve from pencil localization.
    #[arg(long)]
    pencil: bool,
    /// Dehn twists of the global twist.
    #[arg(long)]
    dehn: bool,
    /// Every section (the default).
    #[arg(long)]
    all: bool,
}

/// Exit 2: unreadable or unparseable input.
struct InputError(String);

enum Loaded {
    Graph(DecoratedGraph),
    Fan(Fan),
    Diagram(DescentDiagram),
}

fn read_input(input: &Input) -> Result<(Vec<u8>, Loaded), InputError> {
    if let Some(name) = &input.example {
        if let Some(f) = examples::fan(name) {
            return Ok((f.to_json().into_bytes(), Loaded::Fan(f)));
        }
        return examples::graph(name)
            .map(|g| (g.to_json().into_bytes(), Loaded::Graph(g)))
            .ok_or_else(|| InputError(format!("unknown example {name:?}; known: {}", examples::NAMES.join(", "))));
    }
    let bytes = match input.path.as_deref() {
        None | Some("-") => {
            let mut buf = Vec::new();
            io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| InputError(format!("reading stdin: {e}")))?;
            buf
        }
        Some(p) => fs::read(p).map_err(|e| InputError(format!("reading {p}: {e}")))?,
    };
    let loaded = parse(&bytes)?;
    Ok((bytes, loaded))
}

fn parse(bytes: &[u8]) -> Result<Loaded, InputError> {
    let value: Value = serde_json::from_slice(bytes).map_err(|e| InputError(format!("malformed JSON: {e}")))?;
    let perr = |e: serde_json::Error| InputError(format!("parse error: {e}"));
    // a report from `toric extract` carries its graph
    let value = match value.pointer("/result/graph") {
        Some(g) => g.clone(),
        None => value,
    };
    if value.get("rays").is_some() {
        serde_json::from_value(value).map(Loaded::Fan).map_err(perr)
    } else if value.get("transitions").is_some() {
        serde_json::from_value(value).map(Loaded::Diagram).map_err(perr)
    } else if value.get("vertices").is_some() {
        serde_json::from_value(value).map(Loaded::Graph).map_err(perr)
    } else {
        Err(InputError("input is neither a graph, a fan nor a descent diagram".into()))
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), InputError> {
    match output {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| InputError(format!("writing {}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            writeln!(out, "{text}").map_err(|e| InputError(format!("writing stdout: {e}")))
        }
    }
}

fn validate(input: &Input) -> Result<RunReport, InputError> {
    let (bytes, loaded) = read_input(input)?;
    let (kind, violations): (&str, Vec<String>) = match &loaded {
        Loaded::Graph(g) => ("graph", g.validate().iter().map(ToString::to_string).collect()),
        Loaded::Fan(f) => ("fan", f.validate().iter().map(ToString::to_string).collect()),
        Loaded::Diagram(d) => {
            let charts = d.charts.iter().map(|c| c.trivialization.clone()).collect();
            let v = match descent::assemble_with(&d.graph, charts, d.transitions.clone()) {
                Ok(_) => vec![],
                Err(Error::InvalidGraph(vs)) => vs.iter().map(ToString::to_string).collect(),
                Err(e) => vec![e.to_string()],
            };
            ("descentDiagram", v)
        }
    };
    let result = json!({"kind": kind, "valid": violations.is_empty(), "violations": violations});
    Ok(RunReport::new(&bytes, "validate", result, violations))
}

fn toric_extract(input: &Input) -> Result<RunReport, InputError> {
    let (bytes, loaded) = read_input(input)?;
    let Loaded::Fan(fan) = loaded else {
        return Err(InputError("toric extract expects a fan".into()));
    };
    let run = || -> nclocus::Result<Value> {
        let graph = toric::boundary_graph(&fan)?;
        let walls = toric::wall_reports(&fan)?;
        let divisors = toric::divisor_classification(&fan)?;
        let mut histogram: BTreeMap<String, usize> = BTreeMap::new();
        for d in walls.iter().filter_map(|w| w.defect) {
            *histogram.entry(d.to_string()).or_default() += 1;
        }
        let classes: Vec<Value> = toric::divisor_class_counts(&divisors)
            .into_iter()
            .map(|((complete, cycle), count)| json!({"complete": complete, "cycle": cycle, "count": count}))
            .collect();
        let mismatches = walls
            .iter()
            .filter(|w| w.defect.is_some() && w.defect != w.anticanonical_degree)
            .count();
        Ok(json!({
            "graph": graph,
            "walls": walls,
            "divisors": divisors,
            "summary": {
                "rays": fan.rays.len(),
                "cones": fan.cones.len(),
                "walls": walls.len(),
                "interiorWalls": walls.iter().filter(|w| w.defect.is_some()).count(),
                "defectHistogram": histogram,
                "defectDegreeMismatches": mismatches,
                "divisorClasses": classes,
            }
        }))
    };
    Ok(match run() {
        Ok(result) => RunReport::new(&bytes, "toric extract", result, vec![]),
        Err(e) => RunReport::new(&bytes, "toric extract", Value::Null, vec![e.to_string()]),
    })
}

fn analyze(args: &AnalyzeArgs) -> Result<RunReport, InputError> {
    let (bytes, loaded) = read_input(&args.input)?;
    let (graph, diagram) = match loaded {
        Loaded::Graph(g) => (g, None),
        Loaded::Diagram(d) => (d.graph.clone(), Some(d)),
        Loaded::Fan(f) => match toric::boundary_graph(&f) {
            Ok(g) => (g, None),
            Err(e) => return Ok(RunReport::new(&bytes, "analyze", Value::Null, vec![e.to_string()])),
        },
    };
    let mut sections = Sections {
        descent: args.descent,
        pic: args.pic,
        two_periodic: args.two_periodic,
        surface: args.surface,
        h1: args.h1,
        pencil: args.pencil,
        dehn: args.dehn,
    };
    if args.all || sections.is_empty() {
        sections = Sections::all();
    }
    let (result, diagnostics) = report::analyze(&graph, diagram.as_ref(), sections);
    Ok(RunReport::new(&bytes, "analyze", result, diagnostics))
}

fn finish(report: Result<RunReport, InputError>, output: Option<&PathBuf>) -> ExitCode {
    let report = match report {
        Ok(r) => r,
        Err(InputError(msg)) => {
            eprintln!("nclocus: {msg}");
            return ExitCode::from(2);
        }
    };
    for d in &report.diagnostics {
        eprintln!("nclocus: {d}");
    }
    if let Err(InputError(msg)) = emit(&report.to_json_pretty(), output) {
        eprintln!("nclocus: {msg}");
        return ExitCode::from(2);
    }
    if report.diagnostics.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Validate(input) => finish(validate(&input), input.output.as_ref()),
        Command::Toric(ToricCommand::Extract(input)) => finish(toric_extract(&input), input.output.as_ref()),
        Command::Toric(ToricCommand::QuarticMirror { output }) => {
            match emit(&toric::quartic_mirror_fan().to_json(), output.as_ref()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(InputError(msg)) => {
                    eprintln!("nclocus: {msg}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Analyze(args) => finish(analyze(&args), args.input.output.as_ref()),
    }
}
