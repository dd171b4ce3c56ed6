//! Command-line surface: dataset validation, the chromatic-Ramsey pipeline,
//! and one-shot wrappers around the library operations.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chromatic_ramsey::constructions::{tutte_graph, turan2_number, zhu_family, zhu_graph, Hypergraph, ZhuSpec};
use chromatic_ramsey::dataset::{validate_directory, RamseyLists};
use chromatic_ramsey::fractional::fractional_chromatic_number;
use chromatic_ramsey::homo::minimal_hom_images;
use chromatic_ramsey::invariants::{chromatic_number, girth};
use chromatic_ramsey::ramsey::{
    chromatic_ramsey_from_lists, chromatic_ramsey_small, enumerate_ramsey_graphs, RamseyReport,
    ScanMode,
};
use chromatic_ramsey::{canon, graph6, Error as LibError};

use input::GraphInput;

const DATA_ENV: &str = "CHROMATIC_RAMSEY_DATA";

#[derive(Parser, Debug)]
#[command(name = "chromatic-ramsey", version, about = "Chromatic Ramsey numbers of small graphs")]
struct Cli {
    /// Worker threads for the parallel scans (defaults to all cores)
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Output::Human)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Canonical,
    Fast,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic Ramsey number of a graph, with the derived Turan density
    Rchi(RchiArgs),
    /// Validate Ramsey(4,4) list files and cache their checksums
    ValidateLists(ValidateArgs),
    /// One-shot wrappers around the library operations
    #[command(subcommand)]
    Tools(Tool),
}

#[derive(Args, Debug)]
struct RchiArgs {
    #[command(flatten)]
    input: GraphInput,

    /// Directory of Ramsey(4,4) catalogs (files r44_<n>.g6 for n = 10..17);
    /// falls back to $CHROMATIC_RAMSEY_DATA
    #[arg(long, value_name = "DIR")]
    data: Option<PathBuf>,

    /// Canonical scans whole levels for the smallest witness; fast stops at
    /// the first miss
    #[arg(long, value_enum, default_value_t = Mode::Canonical)]
    mode: Mode,

    /// Largest clique order tried by the exhaustive small pipeline
    #[arg(long = "cap-n", value_name = "N", default_value_t = 8)]
    cap_n: usize,

    /// Skip per-level entry validation when the sidecar cache matches
    #[arg(long)]
    trusted: bool,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    /// Directory of Ramsey(4,4) catalogs; falls back to $CHROMATIC_RAMSEY_DATA
    #[arg(long, value_name = "DIR")]
    data: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Tool {
    /// Minimal homomorphic images, as canonical graph6
    HomPrime {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Exact fractional chromatic number
    ChiF {
        #[command(flatten)]
        input: GraphInput,
    },
    /// The iterated tensor product over graphs with fractional chromatic
    /// number above level - 1 on a bounded vertex universe
    Zhu {
        /// target chromatic level
        #[arg(short = 'l', long)]
        level: usize,
        /// vertex-universe size
        #[arg(short = 'n', long)]
        universe: usize,
        /// materialize the full labeled family instead of the reduced one
        #[arg(long)]
        unreduced: bool,
    },
    /// The iterated matching construction from a sequence of hypergraph files
    Tutte {
        /// hypergraph files, one per level starting at level 2
        #[arg(long = "hypergraph", value_name = "FILE", required = true)]
        hypergraphs: Vec<PathBuf>,
    },
    /// Most edges on n vertices splitting into two forbidden-free classes
    Turan2 {
        /// host vertex count
        #[arg(short = 'n', long)]
        vertices: usize,
        /// forbidden graph: named id or graph6
        #[arg(long, value_name = "GRAPH")]
        forbid: String,
    },
    /// All Ramsey(s,t,n)-graphs up to isomorphism
    RamseyEnum {
        #[arg(short = 's', long)]
        s: usize,
        #[arg(short = 't', long)]
        t: usize,
        #[arg(short = 'n', long)]
        vertices: usize,
        /// per-level class budget for the extension search
        #[arg(long, default_value_t = 5_000_000)]
        budget: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Budget(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::Budget(m) => m,
        }
    }
}

impl From<LibError> for CliError {
    fn from(err: LibError) -> Self {
        match err {
            LibError::BudgetExceeded { .. }
            | LibError::CapExceeded { .. }
            | LibError::CapacityExceeded { .. } => CliError::Budget(err.to_string()),
            LibError::Io(_)
            | LibError::Graph6(_)
            | LibError::MissingLevel { .. }
            | LibError::InvalidListEntry { .. }
            | LibError::Dataset(_)
            | LibError::Hypergraph(_) => CliError::Data(err.to_string()),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help and version are not errors
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    if let Some(workers) = cli.workers {
        if workers == 0 {
            eprintln!("error: --workers must be at least 1");
            return ExitCode::from(1);
        }
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    match run(cli.command, cli.output) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command, output: Output) -> Result<(), CliError> {
    match command {
        Command::Rchi(args) => cmd_rchi(args, output),
        Command::ValidateLists(args) => cmd_validate_lists(args, output),
        Command::Tools(tool) => cmd_tools(tool, output),
    }
}

fn data_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os(DATA_ENV).map(PathBuf::from))
}

fn cmd_rchi(args: RchiArgs, output: Output) -> Result<(), CliError> {
    let g = args.input.resolve()?;
    let chi = chromatic_number(&g)?;
    let report = match chi {
        0 | 1 => {
            return Err(CliError::Usage(
                "chromatic Ramsey numbers need a graph with at least one edge".into(),
            ))
        }
        2 | 3 => chromatic_ramsey_small(&g, args.cap_n)?,
        4 => {
            let dir = data_dir(args.data).ok_or_else(|| {
                CliError::Data(format!(
                    "a 4-chromatic input needs the Ramsey(4,4) catalogs: pass --data or set ${DATA_ENV} (fetch instructions in the README)"
                ))
            })?;
            let lists = RamseyLists::load(&dir, 4, args.trusted)?;
            let hom_prime = minimal_hom_images(&g)?;
            let mode = match args.mode {
                Mode::Canonical => ScanMode::Canonical,
                Mode::Fast => ScanMode::Fast,
            };
            chromatic_ramsey_from_lists(&g, &hom_prime, &lists, mode)?
        }
        k => {
            return Err(CliError::Usage(format!(
                "chromatic number {k} is out of scope: no catalogs beyond 4-chromatic inputs"
            )))
        }
    };
    match output {
        Output::Json => println!("{}", report.to_json()),
        Output::Human => print_report(&report, chi),
    }
    Ok(())
}

fn print_report(report: &RamseyReport, chi: usize) {
    println!("input (canonical graph6): {}", report.input_graph6);
    println!("chromatic number: {chi}");
    println!(
        "minimal homomorphic images: {}",
        report.hom_prime.join(" ")
    );
    println!("chromatic Ramsey number: {}", report.value);
    println!("2-color Turan density: {}", report.turan_density_2);
    match &report.witness {
        Some(w) => println!(
            "witness at level {}: {}{}",
            w.level,
            w.graph6,
            if w.canonical { "" } else { " (first miss, fast mode)" }
        ),
        None => println!("witness: none (the lower bound is attained)"),
    }
    for p in &report.dataset_provenance {
        println!(
            "level {:>2}: {} graphs from {} (sha256 {})",
            p.level, p.count, p.path, p.checksum
        );
    }
    for e in &report.elapsed {
        if e.tested > 0 {
            println!("level {:>2}: tested {} graphs in {} ms", e.level, e.tested, e.millis);
        } else {
            println!("elapsed: {} ms", e.millis);
        }
    }
}

fn cmd_validate_lists(args: ValidateArgs, output: Output) -> Result<(), CliError> {
    let dir = data_dir(args.data).ok_or_else(|| {
        CliError::Usage(format!("pass --data or set ${DATA_ENV}"))
    })?;
    let summaries = validate_directory(&dir, 4)?;
    match output {
        Output::Json => println!(
            "{}",
            serde_json::to_string_pretty(&summaries).expect("summaries serialize")
        ),
        Output::Human => {
            for s in &summaries {
                println!(
                    "level {:>2}: {:>9} graphs  {}  {}  {}",
                    s.level,
                    s.count,
                    if s.valid { "ok " } else { "BAD" },
                    s.detail,
                    s.path
                );
            }
        }
    }
    if summaries.iter().any(|s| !s.valid) {
        return Err(CliError::Data("one or more levels failed validation".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct HomPrimeOut {
    input_graph6: String,
    members: Vec<String>,
}

#[derive(Serialize)]
struct ChiFOut {
    input_graph6: String,
    chi_f: String,
}

#[derive(Serialize)]
struct ZhuOut {
    level: usize,
    universe: usize,
    reduced: bool,
    family: Vec<String>,
    product_graph6: String,
    product_vertices: usize,
    product_chromatic_number: Option<usize>,
}

#[derive(Serialize)]
struct TutteOut {
    level: usize,
    graph6: String,
    vertices: usize,
    edges: usize,
    chromatic_number: Option<usize>,
    girth: String,
}

#[derive(Serialize)]
struct Turan2Out {
    vertices: usize,
    forbid_graph6: String,
    value: usize,
    host_graph6: String,
    red_graph6: String,
    blue_graph6: String,
}

#[derive(Serialize)]
struct RamseyEnumOut {
    s: usize,
    t: usize,
    vertices: usize,
    count: usize,
    members: Vec<String>,
}

fn cmd_tools(tool: Tool, output: Output) -> Result<(), CliError> {
    match tool {
        Tool::HomPrime { input } => {
            let g = input.resolve()?;
            let fam = minimal_hom_images(&g)?;
            let out = HomPrimeOut {
                input_graph6: graph6::encode_string(&canon::canonical_form(&g)?),
                members: fam.graph6_strings(),
            };
            match output {
                Output::Json => print_json(&out),
                Output::Human => {
                    for m in &out.members {
                        println!("{m}");
                    }
                }
            }
        }
        Tool::ChiF { input } => {
            let g = input.resolve()?;
            let out = ChiFOut {
                input_graph6: graph6::encode_string(&canon::canonical_form(&g)?),
                chi_f: fractional_chromatic_number(&g)?.to_string(),
            };
            match output {
                Output::Json => print_json(&out),
                Output::Human => println!("{}", out.chi_f),
            }
        }
        Tool::Zhu {
            level,
            universe,
            unreduced,
        } => {
            let spec = ZhuSpec::new(level, universe, !unreduced)?;
            let family = zhu_family(&spec)?;
            let product = zhu_graph(&spec)?;
            let out = ZhuOut {
                level,
                universe,
                reduced: !unreduced,
                family: family.graph6_strings(),
                product_graph6: graph6::encode_string(&product),
                product_vertices: product.n(),
                product_chromatic_number: if product.n() <= 30 {
                    Some(chromatic_number(&product)?)
                } else {
                    None
                },
            };
            match output {
                Output::Json => print_json(&out),
                Output::Human => {
                    println!("family ({} members): {}", out.family.len(), out.family.join(" "));
                    println!("product: {} ({} vertices)", out.product_graph6, out.product_vertices);
                    if let Some(chi) = out.product_chromatic_number {
                        println!("chromatic number: {chi}");
                    }
                }
            }
        }
        Tool::Tutte { hypergraphs } => {
            let mut parsed = Vec::with_capacity(hypergraphs.len());
            for path in &hypergraphs {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
                parsed.push(
                    Hypergraph::parse(&text)
                        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?,
                );
            }
            let t = tutte_graph(&parsed)?;
            let out = TutteOut {
                level: parsed.len() + 1,
                graph6: graph6::encode_string(&t),
                vertices: t.n(),
                edges: t.edge_count(),
                chromatic_number: if t.n() <= 30 {
                    Some(chromatic_number(&t)?)
                } else {
                    None
                },
                girth: girth(&t).to_string(),
            };
            match output {
                Output::Json => print_json(&out),
                Output::Human => {
                    println!(
                        "level {}: {} ({} vertices, {} edges)",
                        out.level, out.graph6, out.vertices, out.edges
                    );
                    if let Some(chi) = out.chromatic_number {
                        println!("chromatic number: {chi}");
                    }
                    println!("girth: {}", out.girth);
                }
            }
        }
        Tool::Turan2 { vertices, forbid } => {
            let forbidden = input::graph_by_name_or_graph6(&forbid)?;
            let cert = turan2_number(vertices, &forbidden)?;
            let out = Turan2Out {
                vertices,
                forbid_graph6: graph6::encode_string(&forbidden),
                value: cert.edge_count,
                host_graph6: graph6::encode_string(&cert.host),
                red_graph6: graph6::encode_string(&cert.red),
                blue_graph6: graph6::encode_string(&cert.blue()),
            };
            match output {
                Output::Json => print_json(&out),
                Output::Human => {
                    println!("{}", out.value);
                    println!("host: {}", out.host_graph6);
                    println!("red:  {}", out.red_graph6);
                    println!("blue: {}", out.blue_graph6);
                }
            }
        }
        Tool::RamseyEnum {
            s,
            t,
            vertices,
            budget,
        } => {
            let fam = enumerate_ramsey_graphs(s, t, vertices, budget)?;
            let out = RamseyEnumOut {
                s,
                t,
                vertices,
                count: fam.len(),
                members: fam.graph6_strings(),
            };
            match output {
                Output::Json => print_json(&out),
                Output::Human => {
                    println!("{} graphs", out.count);
                    for m in &out.members {
                        println!("{m}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("output serializes")
    );
}
