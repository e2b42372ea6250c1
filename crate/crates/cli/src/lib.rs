//! Command-line front end: build, check, classify and verify algebras.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use malcev_core::classify::{classify_with, TypeVerdict};
use malcev_core::constructor::{atilde, free_anticommutative, zoo};
use malcev_core::format::{read_algebra, write_algebra, write_subspace};
use malcev_core::identity::{check_identity_with, lookup, parse_identity, CheckOptions, CheckReport};
use malcev_core::lab::{is_nilpotent, lie_kernel, power_chain, subalgebra_generate};
use malcev_core::suite::{self, run_suite, SuiteOptions};
use malcev_core::{Algebra, Error};

#[derive(Parser, Debug)]
#[command(name = "malcev", version, about = "Exact identity checking for anticommutative algebras")]
pub struct Cli {
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for tuple enumeration; 0 uses every core.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    #[value(alias = "machine-readable")]
    Machine,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an algebra: `paper-example`, `free N C` or `zoo NAME`.
    Build {
        #[arg(required = true, num_args = 1..=3)]
        descriptor: Vec<String>,
        /// Write the algebra here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a catalog identity or a DSL identity `name : vars | lhs = rhs`.
    Check { file: PathBuf, identity: String },
    /// Print which identity classes the algebra belongs to.
    Classify { file: PathBuf },
    /// Run the full verification suite on freshly built algebras.
    VerifyPaper {
        /// Change psi([x1,x2],[x3,x4]) from 2 to 3 before building.
        #[arg(long)]
        corrupt_psi: bool,
    },
    /// Print a basis of the Lie kernel.
    Kernel { file: PathBuf },
    /// Print the dimensions of the powers and the nilpotency class.
    Powers {
        file: PathBuf,
        /// Highest power to print.
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Generate a subalgebra from elements such as `x1` or `2*[x1,x2] - v`.
    Generate {
        file: PathBuf,
        #[arg(required = true)]
        elements: Vec<String>,
        /// Write the generated subalgebra here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(PathBuf, io::Error),
    Output(io::Error),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Output(e) => write!(f, "writing output: {e}"),
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// writes its output to `out` and diagnostics to `err`. Returns the exit
/// status: 0 when every check passed, 1 when one failed, 2 on usage or
/// parse errors.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match run(&cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn load(path: &Path) -> Result<Algebra, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    read_algebra(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn save(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn build(descriptor: &[String]) -> Result<Algebra, CliError> {
    let words: Vec<&str> = descriptor.iter().map(String::as_str).collect();
    match words[..] {
        ["paper-example"] | ["atilde"] => Ok(atilde().algebra),
        ["free", n, c] => {
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("expected a number, got `{s}`")))
            };
            Ok(free_anticommutative(parse(n)?, parse(c)?)?.algebra)
        }
        ["zoo", name] => zoo::get(name).map(|e| e.algebra).ok_or_else(|| {
            CliError::Usage(format!("unknown zoo entry `{name}`; known: {}", zoo::names().join(", ")))
        }),
        _ => Err(CliError::Usage(format!(
            "unknown descriptor `{}`; use `paper-example`, `free N C` or `zoo NAME`",
            words.join(" ")
        ))),
    }
}

fn report_check(alg: &Algebra, r: &CheckReport, format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            write!(out, "{}: {}", r.name, r.status).unwrap();
            if r.linearized {
                out.push_str(" (linearized)");
            }
            match &r.counterexample {
                Some(c) => writeln!(out, " at {}", c.describe(alg)).unwrap(),
                None => writeln!(out, " on all {} tuples", r.tuples_checked).unwrap(),
            }
        }
        OutputFormat::Machine => {
            writeln!(out, "identity:{}", r.name).unwrap();
            writeln!(out, "status:{}", r.status).unwrap();
            writeln!(out, "linearized:{}", r.linearized).unwrap();
            writeln!(out, "tuples_checked:{}", r.tuples_checked).unwrap();
            if let Some(c) = &r.counterexample {
                for (v, &i) in c.variables.iter().zip(&c.tuple) {
                    writeln!(out, "witness.{v}:{}", alg.label(i)).unwrap();
                }
                writeln!(out, "residual:{}", alg.format_sparse(&c.residual)).unwrap();
            }
        }
    }
    out
}

fn report_verdict(alg: &Algebra, v: &TypeVerdict, format: OutputFormat) -> String {
    let rows = [
        ("anticommutative", v.anticommutative),
        ("lie", v.lie),
        ("malcev", v.malcev),
        ("second_type", v.second_type),
        ("first_type", v.first_type),
    ];
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            writeln!(out, "dim {}: {}", alg.dim(), v.summary()).unwrap();
            for (name, ok) in rows {
                writeln!(out, "  {name:<16} {}", if ok { "yes" } else { "no" }).unwrap();
            }
            for (name, c) in &v.witnesses {
                writeln!(out, "  {name} fails at {}", c.describe(alg)).unwrap();
            }
        }
        OutputFormat::Machine => {
            writeln!(out, "dim:{}", alg.dim()).unwrap();
            writeln!(out, "type:{}", v.summary()).unwrap();
            for (name, ok) in rows {
                writeln!(out, "{name}:{ok}").unwrap();
            }
            for (name, c) in &v.witnesses {
                writeln!(out, "witness.{name}:{}", c.describe(alg)).unwrap();
            }
        }
    }
    out
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    macro_rules! say {
        ($($t:tt)*) => {
            writeln!(out, $($t)*).map_err(CliError::Output)?
        };
    }
    macro_rules! emit {
        ($($t:tt)*) => {
            write!(out, $($t)*).map_err(CliError::Output)?
        };
    }
    let opts = CheckOptions::with_jobs(cli.jobs);
    let machine = cli.format == OutputFormat::Machine;
    match &cli.command {
        Command::Build { descriptor, output } => {
            let alg = build(descriptor)?;
            let text = write_algebra(&alg);
            match output {
                Some(path) => {
                    save(path, &text)?;
                    if machine {
                        say!("dim:{}", alg.dim());
                        say!("labels:{}", alg.labels().join(" "));
                    } else {
                        say!("wrote {} (dim {})", path.display(), alg.dim());
                        say!("basis: {}", alg.labels().join(" "));
                    }
                }
                None => emit!("{text}"),
            }
            Ok(true)
        }
        Command::Check { file, identity } => {
            let alg = load(file)?;
            let id = if identity.contains('|') {
                parse_identity(identity).map_err(|e| CliError::Usage(format!("{identity}\n{e}")))?
            } else {
                lookup(identity).ok_or_else(|| CliError::Core(Error::UnknownIdentity(identity.clone())))?
            };
            let r = check_identity_with(&alg, &id, &opts);
            emit!("{}", report_check(&alg, &r, cli.format));
            Ok(r.holds())
        }
        Command::Classify { file } => {
            let alg = load(file)?;
            let v = classify_with(&alg, &opts);
            emit!("{}", report_verdict(&alg, &v, cli.format));
            Ok(true)
        }
        Command::VerifyPaper { corrupt_psi } => {
            let report = run_suite(SuiteOptions {
                seed: cli.seed,
                jobs: cli.jobs,
                corrupt_psi: *corrupt_psi,
            });
            let format = if machine { suite::Format::Machine } else { suite::Format::Text };
            emit!("{}", report.render(format));
            Ok(report.passed())
        }
        Command::Kernel { file } => {
            let alg = load(file)?;
            let n = lie_kernel(&alg);
            if machine {
                say!("dim:{}", n.dim());
                for (i, row) in n.rows().iter().enumerate() {
                    say!("row.{i}:{}", alg.format_sparse(row));
                }
            } else {
                say!("Lie kernel: dim {} of {}", n.dim(), alg.dim());
                emit!("{}", write_subspace(&n));
            }
            Ok(true)
        }
        Command::Powers { file, max } => {
            let alg = load(file)?;
            if *max == 0 {
                return Err(CliError::Usage("--max must be at least 1".into()));
            }
            let chain = power_chain(&alg, *max)?;
            let nil = is_nilpotent(&alg);
            for (k, p) in chain.iter().enumerate() {
                if machine {
                    say!("power.{}:{}", k + 1, p.dim());
                } else {
                    say!("dim A^{} = {}", k + 1, p.dim());
                }
            }
            match (machine, nil.class) {
                (true, c) => say!("nilpotent:{}\nclass:{}", nil.nilpotent, c.map_or("none".into(), |c| c.to_string())),
                (false, Some(c)) => say!("nilpotent of class {c} (A^{c} = 0)"),
                (false, None) => say!("not nilpotent"),
            }
            Ok(true)
        }
        Command::Generate { file, elements, output } => {
            let alg = load(file)?;
            let gens = elements
                .iter()
                .map(|s| alg.parse_element(s).map_err(|e| CliError::Usage(format!("`{s}`: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let sub = subalgebra_generate(&alg, &gens)?;
            if machine {
                say!("dim:{}", sub.subspace.dim());
                for (i, row) in sub.subspace.rows().iter().enumerate() {
                    say!("row.{i}:{}", alg.format_sparse(row));
                }
            } else {
                say!("generated subalgebra: dim {}", sub.subspace.dim());
                for row in sub.subspace.rows() {
                    say!("  {}", alg.format_sparse(row));
                }
            }
            if let Some(path) = output {
                save(path, &write_algebra(&sub.algebra))?;
            }
            Ok(true)
        }
    }
}
