//! Command-line front end.
//!
//! Exit codes are a stable contract for scripts:
//! 0 success or solvable, 1 theorem failure, 2 usage or parse error,
//! 3 unsolvable.

use std::ffi::OsString;
use std::io::Write;
use std::net::SocketAddr;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::document::{read_bit_string, Family, PuzzleDocument, Template, TemplateParams};
use crate::generators::SelfAffect;
use crate::gf2::BitVec;
use crate::solver::{self, ClickSet, Puzzle, Target, DEFAULT_NULLITY_BUDGET};
use crate::theorem::{self, RngSpec};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_THEOREM_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSOLVABLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lightsout",
    version,
    about = "Lights Out on graphs with optional self-loops"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a puzzle document with every lamp off
    Gen(GenArgs),
    /// Decide whether a target is reachable and print a click set
    Solve(SolveArgs),
    /// Apply a click set to a puzzle document
    Apply(ApplyArgs),
    /// Sweep random symmetric matrices and check the diagonal is always reachable
    VerifyTheorem(VerifyArgs),
    /// Run the HTTP puzzle-session service
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// grid, torus, triangular or hexagonal
    pub family: String,
    /// Grid extents, comma separated (e.g. 5,5 or 3,3,3)
    #[arg(long, value_delimiter = ',')]
    pub dims: Option<Vec<usize>>,
    /// none, both/all, or one 0/1 flag per axis (e.g. 1,0)
    #[arg(long)]
    pub wrap: Option<String>,
    /// Use the Moore neighborhood (diagonal neighbors too)
    #[arg(long)]
    pub diagonal: bool,
    /// Default self-loop policy: all or none
    #[arg(long = "self", default_value = "all")]
    pub self_affect: String,
    /// Triangular lattice rows
    #[arg(long)]
    pub rows: Option<usize>,
    /// Hexagonal lattice radius
    #[arg(long)]
    pub radius: Option<usize>,
    /// Keep only these vertices (numbering of the unmasked family)
    #[arg(long, value_delimiter = ',')]
    pub mask: Option<Vec<usize>>,
    /// Green (self-affecting) lamps after masking; replaces --self
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub green: Option<Vec<usize>>,
    /// Output path; the document goes to stdout when omitted
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub puzzle: PathBuf,
    /// all-off, all-on, corollary, or an explicit 0/1 string
    #[arg(long, default_value = "all-off")]
    pub target: String,
    /// Search the solution coset for a minimum-weight click set
    #[arg(long)]
    pub minimal: bool,
    /// Largest nullity searched exhaustively by --minimal
    #[arg(long, default_value_t = DEFAULT_NULLITY_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Args)]
pub struct ApplyArgs {
    pub puzzle: PathBuf,
    /// Click set as a 0/1 string
    #[arg(
        long,
        conflicts_with = "clicks_file",
        required_unless_present = "clicks_file"
    )]
    pub clicks: Option<String>,
    /// File holding a bare 0/1 click string
    #[arg(long)]
    pub clicks_file: Option<PathBuf>,
    /// Output path; the document goes to stdout when omitted
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 12)]
    pub n_max: usize,
    /// Trials per size (per density cell when sweeping the density grid)
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cross-check solve against exhaustive search up to this size
    #[arg(long)]
    pub oracle_max: Option<usize>,
    /// Single off-diagonal density instead of the density grid
    #[arg(long, requires = "diag_density")]
    pub density: Option<f64>,
    #[arg(long, requires = "density")]
    pub diag_density: Option<f64>,
    /// Also print one record line per trial
    #[arg(long)]
    pub records: bool,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    pub port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    pub host: std::net::IpAddr,
    /// Persist session snapshots here
    #[arg(long)]
    pub state_dir: Option<PathBuf>,
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
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(&a, out, err),
        Command::Solve(a) => cmd_solve(&a, out),
        Command::Apply(a) => cmd_apply(&a, out, err),
        Command::VerifyTheorem(a) => cmd_verify_theorem(&a, out),
        Command::Serve(a) => cmd_serve(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Internal(_) => EXIT_THEOREM_FAILURE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn parse_wrap(spec: &str) -> Result<Option<Vec<bool>>> {
    match spec {
        "none" => Ok(None),
        "both" | "all" => Ok(Some(Vec::new())),
        flags => flags
            .split(',')
            .map(|f| match f.trim() {
                "1" | "true" => Ok(true),
                "0" | "false" => Ok(false),
                other => Err(Error::Parse(format!("bad wrap flag {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Some),
    }
}

pub fn template_from_args(a: &GenArgs) -> Result<Template> {
    let mut family: Family = a.family.parse()?;
    let wrap = match a.wrap.as_deref().map(parse_wrap).transpose()?.flatten() {
        // "both"/"all" wraps every axis, which is the torus family
        Some(w) if w.is_empty() => {
            if family == Family::Grid {
                family = Family::Torus;
            }
            None
        }
        other => other,
    };
    Ok(Template {
        family,
        params: TemplateParams {
            dims: a.dims.clone(),
            wrap,
            diagonal: a.diagonal,
            self_affect: a.self_affect.parse::<SelfAffect>()?,
            rows: a.rows,
            radius: a.radius,
            mask: a.mask.clone(),
            green: a.green.clone(),
        },
    })
}

fn emit_document(doc: &PuzzleDocument, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => doc.write(p),
        None => Ok(out.write_all(doc.to_json().as_bytes())?),
    }
}

pub fn cmd_gen(a: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let graph = template_from_args(a)?.build()?;
    let summary = format!(
        "vertices: {}\nedges: {}\nself_loops: {}\n",
        graph.n_vertices(),
        graph.edges().len(),
        graph.self_loops().len()
    );
    let doc = PuzzleDocument::from_puzzle(&Puzzle::all_off(graph));
    emit_document(&doc, a.out.as_ref(), out)?;
    // keep stdout a clean document when no output file was given
    let info: &mut dyn Write = if a.out.is_some() { out } else { err };
    info.write_all(summary.as_bytes())?;
    Ok(EXIT_OK)
}

pub fn cmd_solve(a: &SolveArgs, out: &mut dyn Write) -> Result<i32> {
    let puzzle = PuzzleDocument::read(&a.puzzle)?.to_puzzle()?;
    let target = a.target.parse::<Target>()?.resolve(puzzle.graph())?;
    let found = if a.minimal {
        solver::minimal_clicks(&puzzle, &target, a.budget)?
            .map(|m| (m.clicks, m.minimal, m.nullity))
    } else {
        let nullity = solver::analyze(puzzle.graph()).nullity;
        solver::solve_to_target(&puzzle, &target)?.map(|c| (c, nullity == 0, nullity))
    };
    match found {
        Some((clicks, minimal, nullity)) => {
            writeln!(out, "SOLVABLE")?;
            writeln!(out, "clicks: {clicks}")?;
            writeln!(out, "weight: {}", clicks.weight())?;
            writeln!(out, "nullity: {nullity}")?;
            writeln!(out, "minimal: {minimal}")?;
            Ok(EXIT_OK)
        }
        None => {
            writeln!(out, "UNSOLVABLE")?;
            writeln!(out, "nullity: {}", solver::analyze(puzzle.graph()).nullity)?;
            Ok(EXIT_UNSOLVABLE)
        }
    }
}

pub fn cmd_apply(a: &ApplyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let puzzle = PuzzleDocument::read(&a.puzzle)?.to_puzzle()?;
    let bits: BitVec = match (&a.clicks, &a.clicks_file) {
        (Some(s), _) => s.parse()?,
        (None, Some(path)) => read_bit_string(path)?,
        (None, None) => {
            return Err(Error::invalid(
                "either --clicks or --clicks-file is required",
            ))
        }
    };
    let after = solver::apply_clicks(&puzzle, &ClickSet(bits))?;
    let summary = format!(
        "before: {} on\nafter: {} on\n",
        puzzle.state().weight(),
        after.state().weight()
    );
    emit_document(&PuzzleDocument::from_puzzle(&after), a.out.as_ref(), out)?;
    let info: &mut dyn Write = if a.out.is_some() { out } else { err };
    info.write_all(summary.as_bytes())?;
    Ok(EXIT_OK)
}

pub fn cmd_verify_theorem(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let report = match (a.density, a.diag_density) {
        (Some(d), Some(dd)) => theorem::sweep(
            a.n_max,
            a.trials,
            &RngSpec::new(a.seed, d, dd)?,
            a.oracle_max,
        )?,
        _ => theorem::sweep_density_grid(a.n_max, a.trials, a.seed, a.oracle_max)?,
    };
    if a.records {
        out.write_all(report.record_lines().as_bytes())?;
    }
    out.write_all(report.summary_table().as_bytes())?;
    let failed = report.failures > 0 || report.oracle_disagreements > 0;
    Ok(if failed {
        EXIT_THEOREM_FAILURE
    } else {
        EXIT_OK
    })
}

fn cmd_serve(a: &ServeArgs) -> Result<i32> {
    let _ = tracing_subscriber::fmt().with_target(false).try_init();
    let rt = tokio::runtime::Runtime::new()?;
    let addr = SocketAddr::new(a.host, a.port);
    rt.block_on(crate::service::serve(addr, a.state_dir.clone()))?;
    Ok(EXIT_OK)
}
