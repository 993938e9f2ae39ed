//! The `relcat` command line.
//!
//! Exit codes: 0 success or the property holds, 1 the property fails or a
//! witness was found, 2 usage errors (including unknown theorem ids and
//! bad parameters), 3 malformed or invalid input, 4 capacity exceeded.
//! Every failure prints a single line starting with `error:` on the error
//! stream.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::chains::{chain_trace, closure, default_cutoff};
use crate::cocart::{cocartesian_image, join};
use crate::enumerate::enumerate;
use crate::error::Error;
use crate::harness::{
    self, find_counterexample, gen_random, parse_instance, run_check, CheckSpec, GenKind, GenParams, Mode,
    Outcome, Params, Search, Verdict,
};
use crate::maps::FiniteMap;
use crate::relation::{compose, set_max_carrier, Kind, OrderKind, Relation};
use crate::text::{parse_map, parse_relation};
use crate::ualg::{congruence_lattice, modularity_check, parse_algebra, shifting_principle_check, shifting_scan, FiniteAlgebra};

/// Environment variable holding the carrier bound.
pub const MAX_CARRIER_VAR: &str = "RELCAT_MAX_CARRIER";

#[derive(Debug, Parser)]
#[command(name = "relcat", version, about = "Finite relation calculus and statement checker")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print A∘B (apply B first).
    Compose { a: PathBuf, b: PathBuf },
    /// Least preorder or equivalence containing T.
    Closure {
        #[arg(long, default_value = "preorder")]
        kind: OrderKind,
        t: PathBuf,
    },
    /// Trace the alternating chain of R and S.
    Chain {
        r: PathBuf,
        s: PathBuf,
        /// Last index to compute; defaults to 2n²+3.
        #[arg(long)]
        max: Option<usize>,
        /// Print every term as a relation block.
        #[arg(long)]
        blocks: bool,
    },
    /// Join of two preorders or equivalences.
    Join {
        #[arg(long, default_value = "preorder")]
        kind: OrderKind,
        r: PathBuf,
        s: PathBuf,
    },
    /// Cocartesian image of T along the surjection f.
    Cocart {
        f: PathBuf,
        t: PathBuf,
        #[arg(long, default_value = "preorder")]
        kind: OrderKind,
    },
    /// Check a catalog statement by enumeration or sampling.
    Check(CheckArgs),
    /// Search for a witness, smallest carriers first.
    Falsify {
        id: String,
        #[arg(long, default_value_t = harness::DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// The `n` of parametrized statements.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Re-evaluate an instance file against a statement.
    Replay { id: String, instance: PathBuf },
    /// List catalog statements.
    List,
    /// Print a random relation, surjection or algebra.
    Gen {
        /// relation, reflexive, reflexive-symmetric, preorder, equivalence,
        /// surjection or algebra.
        #[arg(long)]
        kind: GenKind,
        #[arg(long)]
        size: usize,
        /// Codomain size for surjections.
        #[arg(long, default_value_t = 1)]
        codomain: usize,
        #[arg(long, default_value_t = harness::gen::DEFAULT_DENSITY)]
        density: f64,
        /// Operation arities for algebras, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        arities: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Congruence computations on finite algebras.
    #[command(subcommand)]
    Alg(AlgCommand),
    /// Enumerate relations of a kind.
    Enum {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Debug, Args)]
struct CheckArgs {
    id: String,
    #[arg(long, default_value_t = harness::DEFAULT_SAMPLES)]
    samples: usize,
    /// Largest carrier; the statement's default when absent.
    #[arg(long)]
    size: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, conflicts_with = "sampled")]
    exhaustive: bool,
    #[arg(long)]
    sampled: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 3)]
    max_index: usize,
}

#[derive(Debug, Subcommand)]
enum AlgCommand {
    /// List all congruences.
    Congruences { a: PathBuf },
    /// Check the modular law on the congruence lattice.
    Modular { a: PathBuf },
    /// Check the shifting property for one triple, or for all admissible
    /// triples when none is given.
    Shifting {
        a: PathBuf,
        #[arg(requires_all = ["s", "r"])]
        t: Option<PathBuf>,
        s: Option<PathBuf>,
        r: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_capacity() {
            4
        } else if e.is_input() {
            3
        } else {
            2
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 1,
            message: format!("write failed: {e}"),
        }
    }
}

type Run = std::result::Result<i32, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 3,
        message: format!("{}: {e}", path.display()),
    })
}

fn in_file<T>(path: &Path, parse: fn(&str) -> crate::Result<T>) -> std::result::Result<T, Failure> {
    let text = read(path)?;
    parse(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn rel(path: &Path) -> std::result::Result<Relation, Failure> {
    in_file(path, parse_relation)
}

fn map(path: &Path) -> std::result::Result<FiniteMap, Failure> {
    in_file(path, parse_map)
}

fn alg(path: &Path) -> std::result::Result<FiniteAlgebra, Failure> {
    in_file(path, parse_algebra)
}

fn apply_env() -> std::result::Result<(), Failure> {
    match std::env::var(MAX_CARRIER_VAR) {
        Ok(v) => {
            let limit = v.trim().parse::<usize>().map_err(|_| Failure {
                code: 2,
                message: format!("{MAX_CARRIER_VAR} must be a non-negative integer, got `{v}`"),
            })?;
            set_max_carrier(limit);
            Ok(())
        }
        Err(_) => Ok(()),
    }
}

/// Parse `args` (program name first), run the command and return the exit
/// code.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("usage error");
            let _ = writeln!(err, "error: {}", first.trim_start_matches("error: "));
            return 2;
        }
    };
    let result = apply_env().and_then(|()| run(cli.command, out));
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn run(command: Command, out: &mut dyn Write) -> Run {
    match command {
        Command::Compose { a, b } => {
            let (a, b) = (rel(&a)?, rel(&b)?);
            write!(out, "{}", compose(&a, &b)?)?;
            Ok(0)
        }
        Command::Closure { kind, t } => {
            write!(out, "{}", closure(kind, &rel(&t)?))?;
            Ok(0)
        }
        Command::Chain { r, s, max, blocks } => {
            let (r, s) = (rel(&r)?, rel(&s)?);
            let cutoff = max.unwrap_or_else(|| default_cutoff(r.size()));
            let trace = chain_trace(&r, &s, cutoff)?;
            if blocks {
                for (k, t) in trace.terms.iter().enumerate() {
                    writeln!(out, "# {k}")?;
                    write!(out, "{t}")?;
                }
            } else {
                write!(out, "{trace}")?;
            }
            if let Some(limit) = trace.limit() {
                writeln!(out, "# limit")?;
                write!(out, "{limit}")?;
            }
            Ok(0)
        }
        Command::Join { kind, r, s } => {
            let (r, s) = (rel(&r)?, rel(&s)?);
            write!(out, "{}", join(kind, &r, &s)?)?;
            Ok(0)
        }
        Command::Cocart { f, t, kind } => {
            let (f, t) = (map(&f)?, rel(&t)?);
            write!(out, "{}", cocartesian_image(kind, &f, &t)?)?;
            Ok(0)
        }
        Command::Check(args) => check(args, out),
        Command::Falsify { id, budget, seed, n } => {
            let params = Params { n, ..Params::default() };
            let report = find_counterexample(&id, budget, seed, &params)?;
            write!(out, "{report}")?;
            Ok(if report.witness.is_some() { 1 } else { 0 })
        }
        Command::Replay { id, instance } => {
            harness::lookup(&id)?;
            let inst = in_file(&instance, parse_instance)?;
            match harness::replay(&id, &inst)? {
                Outcome::Skip => {
                    writeln!(out, "skip")?;
                    Ok(0)
                }
                Outcome::Holds => {
                    writeln!(out, "holds")?;
                    Ok(0)
                }
                Outcome::Violated(reason) => {
                    writeln!(out, "violated: {reason}")?;
                    Ok(1)
                }
            }
        }
        Command::List => {
            for t in harness::catalog() {
                writeln!(out, "{} [{}] {}", t.id, t.mode.name(), t.statement)?;
            }
            Ok(0)
        }
        Command::Gen {
            kind,
            size,
            codomain,
            density,
            arities,
            seed,
        } => {
            let params = GenParams {
                n: size,
                m: codomain,
                density,
                arities,
            };
            match gen_random(kind, &params, seed)? {
                harness::Value::Rel(r) => write!(out, "{r}")?,
                harness::Value::Map(f) => write!(out, "{f}")?,
                harness::Value::Alg(a) => write!(out, "{a}")?,
                harness::Value::Int(k) => writeln!(out, "{k}")?,
            }
            Ok(0)
        }
        Command::Alg(cmd) => algebra(cmd, out),
        Command::Enum { kind, size, count_only } => {
            let list = enumerate(kind, size)?;
            if count_only {
                writeln!(out, "{}", list.len())?;
            } else {
                for r in &list {
                    write!(out, "{r}")?;
                }
            }
            Ok(0)
        }
    }
}

fn check(args: CheckArgs, out: &mut dyn Write) -> Run {
    let spec = CheckSpec {
        theorem_id: args.id,
        size: args.size,
        samples: args.samples,
        seed: args.seed,
        search: if args.exhaustive {
            Search::Exhaustive
        } else if args.sampled {
            Search::Sampled
        } else {
            Search::Auto
        },
        params: Params {
            n: args.n,
            max_index: args.max_index,
        },
    };
    let report = run_check(&spec)?;
    write!(out, "{report}")?;
    Ok(match (report.verdict, report.mode) {
        (Verdict::Pass, _) => 0,
        (Verdict::Counterexample, _) => 1,
        (Verdict::Inconclusive, Mode::Verify) => 1,
        (Verdict::Inconclusive, _) => 0,
    })
}

fn algebra(cmd: AlgCommand, out: &mut dyn Write) -> Run {
    match cmd {
        AlgCommand::Congruences { a } => {
            let lat = congruence_lattice(&alg(&a)?)?;
            writeln!(out, "congruences: {}", lat.len())?;
            for (i, c) in lat.elements.iter().enumerate() {
                writeln!(out, "# {i}")?;
                write!(out, "{c}")?;
            }
            Ok(0)
        }
        AlgCommand::Modular { a } => match modularity_check(&alg(&a)?)? {
            None => {
                writeln!(out, "modular")?;
                Ok(0)
            }
            Some(w) => {
                writeln!(out, "not modular")?;
                for (name, r) in [("R", &w.r), ("S", &w.s), ("T", &w.t), ("(R ∨ S) ∧ T", &w.left), ("R ∨ (S ∧ T)", &w.right)] {
                    writeln!(out, "# {name}")?;
                    write!(out, "{r}")?;
                }
                Ok(1)
            }
        },
        AlgCommand::Shifting { a, t, s, r } => {
            let a = alg(&a)?;
            match (t, s, r) {
                (Some(t), Some(s), Some(r)) => {
                    let (t, s, r) = (rel(&t)?, rel(&s)?, rel(&r)?);
                    match shifting_principle_check(&a, &t, &s, &r)? {
                        None => {
                            writeln!(out, "holds")?;
                            Ok(0)
                        }
                        Some(q) => {
                            writeln!(out, "fails at {} {} {} {}", q[0], q[1], q[2], q[3])?;
                            Ok(1)
                        }
                    }
                }
                _ => {
                    let scan = shifting_scan(&a)?;
                    match scan.witness {
                        None => {
                            writeln!(out, "holds on {} admissible triples", scan.triples)?;
                            Ok(0)
                        }
                        Some((t, s, r, q)) => {
                            writeln!(out, "fails at {} {} {} {}", q[0], q[1], q[2], q[3])?;
                            for (name, x) in [("T", &t), ("S", &s), ("R", &r)] {
                                writeln!(out, "# {name}")?;
                                write!(out, "{x}")?;
                            }
                            Ok(1)
                        }
                    }
                }
            }
        }
    }
}
