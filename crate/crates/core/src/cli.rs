//! Command-line front end. [`run`] is the whole program minus process exit,
//! so it can be driven from tests.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::combinat::{generate_conway_combination, write_combination};
use crate::error::Error;
use crate::fixture::load_fixture_table;
use crate::gauss::{Direction, GaussDiagram};
use crate::pairing::{conway_coefficient, pairing_polynomial, CombinationStore};
use crate::poly::IntPolynomial;
use crate::skein::conway_skein;
use crate::statesum::nabla_state;

#[derive(Parser, Debug)]
#[command(name = "pv-conway", version, about = "Conway polynomials of Gauss diagrams")]
struct Cli {
    /// Print polynomials as space-separated coefficient lists
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a Gauss code and print its canonical form
    Validate { code: String },
    /// Conway polynomial from arrow-diagram pairings
    Pairing {
        #[arg(long)]
        code: String,
        /// Highest degree to compute (defaults to the chord count)
        #[arg(long)]
        max_degree: Option<usize>,
        /// Directory for cached Conway combinations
        #[arg(long)]
        combo_cache: Option<PathBuf>,
    },
    /// Conway polynomial from the ascending (or descending) state sum
    Statesum {
        #[arg(long)]
        code: String,
        #[arg(long, value_enum, default_value_t = Dir::Asc)]
        direction: Dir,
    },
    /// Conway polynomial from the skein recursion
    Skein {
        #[arg(long)]
        code: String,
    },
    /// A single Conway coefficient from pairings
    Coeff {
        #[arg(long)]
        code: String,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        combo_cache: Option<PathBuf>,
    },
    /// Generate a Conway combination and list its diagrams
    Combo {
        #[arg(long)]
        size: usize,
        /// Also write the combination as a cache file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every row of a fixture table against one method
    TableVerify {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        combo_cache: Option<PathBuf>,
    },
    /// Linking number of a two-circle diagram
    Lk {
        #[arg(long)]
        code: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Dir {
    Asc,
    Des,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Pairing,
    Statesum,
    Skein,
}

/// Conway polynomial of `g` by one of the three methods.
pub fn conway_by(method: Method, g: &GaussDiagram, store: &CombinationStore) -> crate::Result<IntPolynomial> {
    match method {
        Method::Pairing => pairing_polynomial(g, g.chord_count(), store),
        Method::Statesum => Ok(nabla_state(g, Direction::Ascending)),
        Method::Skein => conway_skein(g),
    }
}

enum Failure {
    Usage(String),
    Verification,
    /// Reader went away (e.g. piped into `head`); not worth reporting.
    BrokenPipe,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::BrokenPipe;
        }
        Failure::Usage(e.to_string())
    }
}

fn store_for(cache: &Option<PathBuf>) -> CombinationStore {
    match cache {
        Some(dir) => CombinationStore::with_cache_dir(dir),
        None => CombinationStore::new(),
    }
}

fn parse_code(code: &str) -> Result<GaussDiagram, Failure> {
    code.parse().map_err(|e: Error| Failure::Usage(format!("invalid Gauss code: {e}")))
}

/// Runs the CLI. Returns the exit status: 0 on success, 1 when a
/// verification fails, 2 on usage or input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) | Err(Failure::BrokenPipe) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let show = |p: &IntPolynomial| if cli.machine { p.to_machine_string() } else { p.to_string() };
    match &cli.command {
        Command::Validate { code } => {
            writeln!(out, "{}", parse_code(code)?)?;
        }
        Command::Pairing { code, max_degree, combo_cache } => {
            let g = parse_code(code)?;
            let store = store_for(combo_cache);
            let p = pairing_polynomial(&g, max_degree.unwrap_or(g.chord_count()), &store)?;
            writeln!(out, "{}", show(&p))?;
        }
        Command::Statesum { code, direction } => {
            let g = parse_code(code)?;
            let dir = match direction {
                Dir::Asc => Direction::Ascending,
                Dir::Des => Direction::Descending,
            };
            writeln!(out, "{}", show(&nabla_state(&g, dir)))?;
        }
        Command::Skein { code } => {
            let g = parse_code(code)?;
            writeln!(out, "{}", show(&conway_skein(&g)?))?;
        }
        Command::Coeff { code, degree, combo_cache } => {
            let g = parse_code(code)?;
            writeln!(out, "{}", conway_coefficient(&g, *degree, &store_for(combo_cache))?)?;
        }
        Command::Combo { size, out: path } => {
            if *size == 0 {
                return Err(Failure::Usage("--size must be at least 1".into()));
            }
            let c = generate_conway_combination(*size);
            if let Some(path) = path {
                write_combination(path, *size, &c)?;
            }
            writeln!(out, "count={}", c.len())?;
            for k in c.keys() {
                writeln!(out, "{k}")?;
            }
        }
        Command::TableVerify { file, method, combo_cache } => {
            let store = store_for(combo_cache);
            let fixtures = load_fixture_table(file)?;
            let mut failed = 0;
            for f in &fixtures {
                let got = conway_by(*method, &f.diagram, &store)?;
                if got == f.expected {
                    writeln!(out, "PASS {}: {}", f.name, show(&got))?;
                } else {
                    failed += 1;
                    writeln!(out, "FAIL {}: expected {}, got {}", f.name, show(&f.expected), show(&got))?;
                }
            }
            writeln!(out, "{} passed, {} failed", fixtures.len() - failed, failed)?;
            if failed > 0 {
                return Err(Failure::Verification);
            }
        }
        Command::Lk { code } => {
            let g = parse_code(code)?;
            if g.circle_count() != 2 {
                return Err(Failure::Usage("linking number needs a two-circle diagram".into()));
            }
            writeln!(out, "{}", conway_coefficient(&g, 1, CombinationStore::global())?)?;
        }
    }
    Ok(())
}
