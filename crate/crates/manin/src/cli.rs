//! `manin w|b|d|check|info|orbits|render FILE...`
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 malformed input file,
//! 3 invalid presentation.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use manin_core::products::{black, koszul_dual, white};
use manin_core::{IntVector, OperadPresentation};

use crate::fixtures;
use crate::format::{parse_validated, write_amx, write_operad, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "manin",
    version,
    about = "Manin products and Koszul duals of binary quadratic operads"
)]
#[command(after_help = "A FILE that does not exist but names a bundled fixture \
(as, com, comm, lie, perm, prelie, leib, zinb) loads that fixture.")]
struct Cli {
    /// Output prefix: results go to PREFIX and PREFIX.amx
    #[arg(
        short,
        long,
        global = true,
        value_name = "PREFIX",
        default_value = "result"
    )]
    output: PathBuf,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// White product of two operads
    #[command(name = "w", visible_alias = "white")]
    White { file1: PathBuf, file2: PathBuf },
    /// Black product of two operads
    #[command(name = "b", visible_alias = "black")]
    Black { file1: PathBuf, file2: PathBuf },
    /// Koszul dual operad
    #[command(name = "d", visible_alias = "dual")]
    Dual { file: PathBuf },
    /// Validate a presentation and report whether S3-closure added relations
    Check { file: PathBuf },
    /// Print n, dim R and dim P(3)
    Info { file: PathBuf },
    /// Print relations whose S3-orbits span all relations
    Orbits { file: PathBuf },
    /// Print all relations as identities in the operations
    Render { file: PathBuf },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: String) -> Self {
        Failure { code, message }
    }
}

struct Loaded {
    presentation: OperadPresentation,
    input_dim: usize,
}

impl Loaded {
    fn closure_grew(&self) -> bool {
        self.presentation.relations().dim() > self.input_dim
    }
}

fn label_of(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    let label = label_of(path);
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => match path.to_str().and_then(fixtures::source) {
            Some(text) if e.kind() == std::io::ErrorKind::NotFound => text.to_string(),
            _ => return Err(Failure::new(EXIT_USAGE, format!("{}: {e}", path.display()))),
        },
    };
    let validated = parse_validated(&text, &label).map_err(|e| parse_failure(path, &e))?;
    Ok(Loaded {
        input_dim: validated.input_dim,
        presentation: validated.presentation,
    })
}

fn parse_failure(path: &Path, e: &FormatError) -> Failure {
    let code = if e.is_invalid_presentation() {
        EXIT_INVALID
    } else {
        EXIT_PARSE
    };
    let message = match e.line() {
        Some(line) => format!("{}:{line}: {}", path.display(), strip_line(&e.to_string())),
        None => format!("{}: {e}", path.display()),
    };
    Failure::new(code, message)
}

fn strip_line(message: &str) -> &str {
    match message.split_once(": ") {
        Some((prefix, rest)) if prefix.starts_with("line ") => rest,
        _ => message,
    }
}

fn symbols(n: usize) -> Vec<String> {
    if n == 1 {
        vec!["*".to_string()]
    } else {
        (1..=n).map(|i| format!("*{i}")).collect()
    }
}

fn render_rows(
    p: &OperadPresentation,
    rows: &[IntVector],
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let syms = symbols(p.n());
    for row in rows {
        writeln!(
            out,
            "{}",
            p.monomial_render(row, &syms).expect("row has length 3n²")
        )?;
    }
    Ok(())
}

fn warn_closure(path: &Path, loaded: &Loaded, err: &mut dyn Write) {
    if loaded.closure_grew() {
        let _ = writeln!(
            err,
            "manin: warning: {}: relations are not S3-closed; closing {} to {}",
            path.display(),
            loaded.input_dim,
            loaded.presentation.relations().dim()
        );
    }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s: OsString = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn write_result(prefix: &Path, p: &OperadPresentation, out: &mut dyn Write) -> Result<(), Failure> {
    let text = write_operad(p, p.label()).map_err(|e| Failure::new(EXIT_INVALID, e.to_string()))?;
    let amx_path = with_suffix(prefix, ".amx");
    std::fs::write(prefix, text)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", prefix.display())))?;
    std::fs::write(&amx_path, write_amx(p))
        .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", amx_path.display())))?;
    let _ = writeln!(
        out,
        "{}: n = {}, dim R = {}, dim P(3) = {}; written to {} and {}",
        p.label(),
        p.n(),
        p.relations().dim(),
        p.dim_space3(),
        prefix.display(),
        amx_path.display()
    );
    Ok(())
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::new(EXIT_USAGE, e.to_string());
    let invalid = |e: manin_core::Error| Failure::new(EXIT_INVALID, e.to_string());
    match cli.verb {
        Verb::White { file1, file2 } => {
            let (a, b) = (load(&file1)?, load(&file2)?);
            warn_closure(&file1, &a, err);
            warn_closure(&file2, &b, err);
            let p = white(&a.presentation, &b.presentation).map_err(invalid)?;
            write_result(&cli.output, &p, out)
        }
        Verb::Black { file1, file2 } => {
            let (a, b) = (load(&file1)?, load(&file2)?);
            warn_closure(&file1, &a, err);
            warn_closure(&file2, &b, err);
            let p = black(&a.presentation, &b.presentation).map_err(invalid)?;
            write_result(&cli.output, &p, out)
        }
        Verb::Dual { file } => {
            let a = load(&file)?;
            warn_closure(&file, &a, err);
            write_result(&cli.output, &koszul_dual(&a.presentation), out)
        }
        Verb::Check { file } => {
            let a = load(&file)?;
            let p = &a.presentation;
            if a.closure_grew() {
                writeln!(
                    out,
                    "{}: valid; S3-closure grew the relations from dimension {} to {}",
                    file.display(),
                    a.input_dim,
                    p.relations().dim()
                )
                .map_err(io)
            } else {
                writeln!(
                    out,
                    "{}: valid; relations are S3-closed (dim R = {})",
                    file.display(),
                    p.relations().dim()
                )
                .map_err(io)
            }
        }
        Verb::Info { file } => {
            let a = load(&file)?;
            warn_closure(&file, &a, err);
            let p = &a.presentation;
            writeln!(
                out,
                "n = {}\ndim R = {}\ndim P(3) = {}",
                p.n(),
                p.relations().dim(),
                p.dim_space3()
            )
            .map_err(io)
        }
        Verb::Orbits { file } => {
            let a = load(&file)?;
            warn_closure(&file, &a, err);
            let p = &a.presentation;
            let gens = p.orbit_generators();
            writeln!(
                out,
                "{} orbit generators for {} relations",
                gens.len(),
                p.relations().dim()
            )
            .map_err(io)?;
            render_rows(p, &gens, out).map_err(io)
        }
        Verb::Render { file } => {
            let a = load(&file)?;
            warn_closure(&file, &a, err);
            let p = &a.presentation;
            render_rows(p, p.relations().rows(), out).map_err(io)
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
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
    match execute(cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "manin: {}", f.message);
            f.code
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        args,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
