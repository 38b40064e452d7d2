//! The `k5list` command-line tool.
//!
//! Exit status: 0 success, 1 unreadable or malformed input, 2 invalid
//! instance (or a coloring that fails `verify`), 3 internal contradiction
//! (or a failing self-test), 4 size guard exceeded.

pub mod document;
mod selftest;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use k5list::generate::{apollonian, random_instance, BoundaryMode};
use k5list::minor::DEFAULT_ORACLE_LIMIT;
use k5list::{
    color_with, extract_rooted_k3, verify_coloring, Color, ColorOptions, Coloring, Error, Graph,
    Instance, ListAssignment, MinorOracle, Vertex, VertexSet,
};

use document::{format_coloring_lines, parse_coloring, ColoringDocument, InstanceDocument};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_CONTRADICTION: u8 = 3;
pub const EXIT_SIZE_GUARD: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "k5list",
    version,
    about = "List coloring of K5-minor-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Color an instance from its lists.
    Color {
        file: PathBuf,
        /// Check K5-minor-freeness and the boundary by exhaustive search.
        #[arg(long)]
        deep_validate: bool,
        /// Print `{"coloring": {...}}` instead of `vertex:color` lines.
        #[arg(long)]
        json: bool,
        /// Size guard for the exhaustive minor search.
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        max_order: usize,
    },
    /// Check a coloring against an instance's graph and lists.
    Verify { file: PathBuf, coloring: PathBuf },
    /// Decide whether the instance graph has a K5 minor.
    Minor {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        max_order: usize,
    },
    /// Decide whether the graph has a K3 minor rooted at three vertices.
    RootedK3 {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        roots: Vec<Vertex>,
        /// Also print the three branch sets.
        #[arg(long)]
        witness: bool,
    },
    /// Generate instance documents.
    #[command(subcommand)]
    Gen(Gen),
    /// Run the built-in property checks.
    Selftest {
        /// Largest order for the exhaustive checks.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Instances per randomized check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum Gen {
    /// Apollonian network with random 5-lists.
    Apollonian {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        palette: Color,
    },
    /// Instance on an Apollonian network, optionally with a nonempty boundary.
    Instance {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        palette: Color,
        #[arg(long, value_enum, default_value_t = Mode::Neighborhood)]
        mode: Mode,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    /// A = B = ∅, 5-lists everywhere.
    Empty,
    /// Delete a vertex and use its neighborhood as B, with 3-lists there.
    Neighborhood,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OracleScaleExceeded { .. } => EXIT_SIZE_GUARD,
            Error::InternalContradiction(_) => EXIT_CONTRADICTION,
            _ => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

/// Runs one command line and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::Color {
            file,
            deep_validate,
            json,
            max_order,
        } => {
            let inst = read_instance(&file)?;
            let opts = ColorOptions {
                deep_validate,
                oracle: MinorOracle::new(max_order),
            };
            let (col, _) = color_with(&inst, &opts)?;
            if json {
                emit(
                    out,
                    &format!("{}\n", ColoringDocument { coloring: col }.to_json()),
                )?;
            } else {
                emit(out, &format_coloring_lines(&col))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { file, coloring } => {
            let inst = read_instance(&file)?;
            let text = read(&coloring)?;
            let col = parse_coloring(&text).map_err(|e| parse_failure(&coloring, e))?;
            if verify_coloring(&inst.graph, &inst.lists, &col) {
                emit(out, "ok\n")?;
                Ok(EXIT_OK)
            } else {
                let why = explain(&inst.graph, &inst.lists, &col);
                emit(out, &format!("invalid: {why}\n"))?;
                Ok(EXIT_INVALID)
            }
        }
        Command::Minor { file, max_order } => {
            let g = read_document(&file)?
                .graph()
                .map_err(|e| parse_failure(&file, e))?;
            let yes = MinorOracle::new(max_order).has_k5_minor(&g)?;
            emit(
                out,
                &format!("k5-minor: {}\n", if yes { "yes" } else { "no" }),
            )?;
            Ok(EXIT_OK)
        }
        Command::RootedK3 {
            file,
            roots,
            witness,
        } => {
            let g = read_document(&file)?
                .graph()
                .map_err(|e| parse_failure(&file, e))?;
            let roots: [Vertex; 3] = roots.try_into().map_err(|r: Vec<Vertex>| {
                Failure::new(
                    EXIT_PARSE,
                    format!("--roots needs exactly three ids, got {}", r.len()),
                )
            })?;
            let found = extract_rooted_k3(&g, roots)?;
            emit(
                out,
                &format!(
                    "rooted-k3: {}\n",
                    if found.is_some() { "yes" } else { "no" }
                ),
            )?;
            if let (true, Some(w)) = (witness, found) {
                for (r, set) in w.roots.iter().zip(&w.sets) {
                    emit(out, &format!("{r}: {}\n", join(set)))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Gen(Gen::Apollonian { n, seed, palette }) => {
            let g = apollonian(n, seed)?;
            let inst = random_instance(&g, BoundaryMode::Empty, palette, seed)?;
            emit(
                out,
                &format!("{}\n", InstanceDocument::from_instance(&inst).to_json()),
            )?;
            Ok(EXIT_OK)
        }
        Command::Gen(Gen::Instance {
            n,
            seed,
            palette,
            mode,
        }) => {
            let mode = match mode {
                Mode::Empty => BoundaryMode::Empty,
                Mode::Neighborhood => BoundaryMode::VertexNeighborhood,
            };
            let g = apollonian(n, seed)?;
            let inst = random_instance(&g, mode, palette, seed)?;
            emit(
                out,
                &format!("{}\n", InstanceDocument::from_instance(&inst).to_json()),
            )?;
            Ok(EXIT_OK)
        }
        Command::Selftest {
            max_n,
            samples,
            seed,
        } => {
            let mut ok = true;
            for r in selftest::run(max_n, samples, seed) {
                emit(out, &format!("{r}\n"))?;
                ok &= r.failed == 0;
            }
            Ok(if ok { EXIT_OK } else { EXIT_CONTRADICTION })
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot write output: {e}")))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn parse_failure(path: &Path, e: document::ParseError) -> Failure {
    Failure::new(EXIT_PARSE, format!("{}:{e}", path.display()))
}

fn read_document(path: &Path) -> Result<InstanceDocument, Failure> {
    InstanceDocument::parse(&read(path)?).map_err(|e| parse_failure(path, e))
}

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    read_document(path)?
        .instance()
        .map_err(|e| parse_failure(path, e))
}

fn join(set: &VertexSet) -> String {
    set.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn explain(g: &Graph, lists: &ListAssignment, col: &Coloring) -> String {
    for v in g.vertices() {
        match col.get(&v) {
            None => return format!("vertex {v} is uncolored"),
            Some(c) if !lists.get(&v).is_some_and(|l| l.contains(c)) => {
                return format!("vertex {v} has color {c}, not in its list")
            }
            _ => {}
        }
    }
    match g.edges().find(|(u, v)| col[u] == col[v]) {
        Some((u, v)) => format!("edge {u}-{v} is monochromatic"),
        None => "coloring is improper".into(),
    }
}
