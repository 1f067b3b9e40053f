//! Command-line front end.

pub mod bench;
pub mod config;
pub mod eval;
pub mod format;
pub mod generators;
pub mod parser;
pub mod tables;

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::AlgebraError;
use crate::multivector::Multivector;
use crate::product::ProductAlgorithm;
use crate::special::{omultable, FanoTripleSet};
use crate::structure::{all_sigs, clidata, matKrepr, ClassificationData, SpinorMatrix};

use bench::{run_bench, BenchError, Scenario};
use config::{AlgoName, BasisMode, ConfigError, ConfigFile, FormSpec, OutputFormat, Session, SessionConfig};
use eval::Evaluator;
use tables::{render_table, table, TableKind, MAX_TABLE_DIM};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_EVAL: i32 = 2;
pub const EXIT_BENCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qcliff", version, about = "Exact Clifford algebra calculator over arbitrary bilinear forms")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct GlobalOpts {
    /// Dimension of the generating space (1..9).
    #[arg(long, global = true)]
    dim: Option<usize>,
    /// Default form: a name such as B, `signature p,q[,r]`, `split:g,F`, or a JSON file.
    #[arg(long, global = true)]
    form: Option<FormSpec>,
    /// Clifford product algorithm: num or rs.
    #[arg(long, global = true, value_parser = parse_algo)]
    algo: Option<ProductAlgorithm>,
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    basis: Option<BasisMode>,
    /// Print blades as `e123` instead of `e1we2we3`.
    #[arg(long, global = true)]
    alias: bool,
    /// Allow tables above dimension 4.
    #[arg(long, global = true)]
    force: bool,
    /// JSON file with session defaults; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

fn parse_algo(s: &str) -> Result<ProductAlgorithm, String> {
    s.parse()
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate expressions given as arguments, or one per line from stdin.
    Eval { exprs: Vec<String> },
    /// Multiplication table over the canonical basis.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
    },
    /// Classify the real Clifford algebra of signature (p,q).
    Classify {
        p: Option<usize>,
        q: Option<usize>,
        /// List the simple and semisimple signatures with p+q = N.
        #[arg(long, value_name = "N", conflicts_with_all = ["p", "q"])]
        all: Option<usize>,
    },
    /// Spinor matrix images of the generators for signature (p,q).
    Repr { p: usize, q: usize },
    /// Re-express an element in the dotted or undotted basis.
    Convert {
        expr: String,
        #[arg(long, value_enum)]
        to: BasisMode,
    },
    /// Octonion multiplication table.
    Omultable {
        /// Seven triples, e.g. "1,2,3;1,4,5;1,7,6;2,4,6;2,5,7;3,4,7;3,6,5".
        #[arg(long)]
        fano: Option<String>,
    },
    /// Time both product algorithms on random blade pairs.
    Bench {
        #[arg(long, value_enum, value_delimiter = ',')]
        scenario: Vec<Scenario>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5,6")]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Write per-cell timings as CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Print the effective session configuration.
    Env,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Eval(String),
    Bench(String),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::Eval(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Merged configuration, plus the dimension if one was set explicitly.
fn session_config(g: &GlobalOpts) -> Result<(SessionConfig, Option<usize>), Failure> {
    let file = match &g.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let d = SessionConfig::default();
    let dim = g.dim.or(file.dim);
    let cfg = SessionConfig {
        dim: dim.unwrap_or(d.dim),
        form: g.form.clone().or(file.form).unwrap_or(d.form),
        algo: g.algo.map(AlgoName).or(file.algo).unwrap_or(d.algo),
        format: g.format.or(file.format).unwrap_or(d.format),
        basis: g.basis.or(file.basis).unwrap_or(d.basis),
        seed: g.seed.or(file.seed).unwrap_or(d.seed),
        alias: g.alias || file.alias.unwrap_or(d.alias),
    };
    Ok((cfg, dim))
}

fn build_session(g: &GlobalOpts) -> Result<Session, Failure> {
    let (cfg, dim) = session_config(g)?;
    Ok(Session::new(cfg, dim)?)
}

/// Parses and evaluates one source line. Dotted blades such as `e1We2`
/// are accepted when `dotted` is set.
pub fn eval_line(src: &str, session: &Session, dotted: bool) -> Result<Multivector, String> {
    let expr = parser::parse(src, session.dim(), dotted).map_err(|e| format!("parse error at {e}"))?;
    Evaluator::new(session).eval(&expr).map_err(|e| e.to_string())
}

fn classify_json(c: &ClassificationData) -> serde_json::Value {
    let strs = |v: &[Multivector]| v.iter().map(|m| m.to_string()).collect::<Vec<_>>();
    json!({
        "p": c.p,
        "q": c.q,
        "field_type": c.field_type.name(),
        "matrix_dim": c.matrix_dim,
        "simplicity": c.simplicity.to_string(),
        "idempotent": c.idempotent.to_string(),
        "ideal_real_basis": strs(&c.ideal_real_basis),
        "division_ring_basis": strs(&c.division_ring_basis),
        "module_basis": strs(&c.module_basis),
    })
}

fn matrix_json(m: &SpinorMatrix) -> serde_json::Value {
    let cells = |c: &crate::structure::CliffordMatrix| c.rows_text(|x| x.to_string());
    match m {
        SpinorMatrix::Single(a) => json!(cells(a)),
        SpinorMatrix::Double(d) => json!([cells(&d.first), cells(&d.second)]),
    }
}

fn execute(cli: Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), Failure> {
    let g = &cli.global;
    match cli.command {
        Command::Eval { exprs } => {
            let session = build_session(g)?;
            let lines: Vec<String> = if exprs.is_empty() {
                let mut buf = String::new();
                stdin.read_to_string(&mut buf)?;
                buf.lines().map(str::to_string).collect()
            } else {
                exprs
            };
            for line in lines {
                let body = line.split('#').next().unwrap_or("").trim();
                if body.is_empty() {
                    continue;
                }
                let dotted = session.cfg.basis == BasisMode::Dotted;
                let value = eval_line(body, &session, dotted).map_err(Failure::Eval)?;
                writeln!(out, "{}", format::render(&value, &session)?)?;
            }
        }
        Command::Table { kind } => {
            let session = build_session(g)?;
            if session.dim() > MAX_TABLE_DIM && !g.force {
                return Err(Failure::Usage(format!(
                    "table at dimension {} has {} entries; pass --force to render it",
                    session.dim(),
                    1usize << (2 * session.dim())
                )));
            }
            let rows = table(kind, &session.form, session.cfg.algorithm())?;
            writeln!(out, "{}", render_table(&rows, &session)?)?;
        }
        Command::Classify { p, q, all } => {
            let format = session_config(g)?.0.format;
            if let Some(n) = all {
                let (simple, semi) = all_sigs(n)?;
                match format {
                    OutputFormat::Json => writeln!(out, "{}", json!({ "simple": simple, "semisimple": semi }))?,
                    _ => {
                        writeln!(out, "simple: {simple:?}")?;
                        writeln!(out, "semisimple: {semi:?}")?;
                    }
                }
                return Ok(());
            }
            let (Some(p), Some(q)) = (p, q) else {
                return Err(Failure::Usage("classify needs P and Q, or --all N".into()));
            };
            let c = clidata(p, q)?;
            match format {
                OutputFormat::Json => writeln!(out, "{}", classify_json(&c))?,
                _ => writeln!(out, "{c}")?,
            }
        }
        Command::Repr { p, q } => {
            let format = session_config(g)?.0.format;
            let reps = matKrepr(p, q)?;
            match format {
                OutputFormat::Json => {
                    let items: Vec<_> = reps
                        .iter()
                        .map(|(gen, m)| json!({ "generator": gen.to_string(), "matrix": matrix_json(m) }))
                        .collect();
                    writeln!(out, "{}", json!(items))?;
                }
                _ => {
                    for (gen, m) in &reps {
                        writeln!(out, "{gen} -> {m}")?;
                    }
                }
            }
        }
        Command::Convert { expr, to } => {
            let mut session = build_session(g)?;
            let value = eval_line(&expr, &session, true).map_err(Failure::Eval)?;
            session.cfg.basis = to;
            writeln!(out, "{}", format::render(&value, &session)?)?;
        }
        Command::Omultable { fano } => {
            let triples = match fano {
                Some(s) => FanoTripleSet::parse(&s).map_err(|e| Failure::Usage(e.to_string()))?,
                None => FanoTripleSet::default(),
            };
            let t = omultable(&triples);
            let cells: Vec<Vec<String>> = t.iter().map(|r| r.iter().map(|u| u.to_string()).collect()).collect();
            match session_config(g)?.0.format {
                OutputFormat::Json => writeln!(out, "{}", json!(cells))?,
                _ => {
                    for r in &cells {
                        let padded: Vec<String> = r.iter().map(|c| format!("{c:>3}")).collect();
                        writeln!(out, "{}", padded.join(" "))?;
                    }
                }
            }
        }
        Command::Bench {
            scenario,
            dims,
            trials,
            csv,
        } => {
            let (cfg, _) = session_config(g)?;
            let scenarios = if scenario.is_empty() {
                vec![Scenario::SparseNumeric, Scenario::DenseNumeric, Scenario::Symbolic]
            } else {
                scenario
            };
            let report = match run_bench(&scenarios, &dims, trials, cfg.seed) {
                Ok(r) => r,
                Err(BenchError::Mismatch(m)) => return Err(Failure::Bench(m.to_string())),
                Err(BenchError::Algebra(e)) => return Err(Failure::Usage(e.to_string())),
            };
            let table = report.to_csv().map_err(|e| Failure::Usage(e.to_string()))?;
            if let Some(path) = csv {
                std::fs::write(&path, &table)?;
            }
            writeln!(out, "{}", report.summary())?;
        }
        Command::Env => {
            let session = build_session(g)?;
            let cfg = &session.cfg;
            match cfg.format {
                OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(cfg).expect("serializable"))?,
                _ => {
                    writeln!(out, "dim = {}", cfg.dim)?;
                    writeln!(out, "form = {}", cfg.form)?;
                    writeln!(out, "algo = {}", cfg.algorithm())?;
                    writeln!(out, "format = {:?}", cfg.format)?;
                    writeln!(out, "basis = {:?}", cfg.basis)?;
                    writeln!(out, "seed = {}", cfg.seed)?;
                    writeln!(out, "alias = {}", cfg.alias)?;
                }
            }
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run_with<I, S>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli, stdin, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Eval(m) => (EXIT_EVAL, m),
                Failure::Bench(m) => (EXIT_BENCH, m),
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

pub fn run() -> i32 {
    let stdin = std::io::stdin();
    let mut lock = stdin.lock();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut lock, &mut stdout.lock(), &mut stderr.lock())
}
