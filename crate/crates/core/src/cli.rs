//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code:
//! 0 success, 1 usage or validation error, 2 budget abort, 3 unreachable element.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::diameter::{word_length, BfsReport, Budget, Convention, DiameterEngine};
use crate::error::{DiameterError, GenSetError};
use crate::gensets::{builtin, builtin_names, load_genset, save_genset, GenSet, BUILTIN_PATTERNS};
use crate::hall::hall_check;
use crate::power::PowerElement;
use crate::verify::{run_suite, SuiteOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_UNREACHABLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "altdiam",
    version,
    about = "Generating sets and exact Cayley-graph diameters of A_n^k"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact diameter of a Cayley graph by breadth-first search.
    Diam(DiamArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// List or write builtin generating sets.
    Gensets {
        #[command(subcommand)]
        action: GensetsAction,
    },
    /// Word length of one element.
    Wordlen(WordlenArgs),
    /// Check generation of `A_n^k` column by column.
    Hall(SelectorArgs),
}

#[derive(Debug, Subcommand)]
pub enum GensetsAction {
    /// Print every builtin name.
    List,
    /// Write a builtin as JSON, to PATH or standard output.
    Emit { name: String, path: Option<PathBuf> },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SelectorArgs {
    /// Builtin selector, e.g. `a5-power:3` or `canonical:a5-power:1:2`.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Generating-set JSON file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

impl SelectorArgs {
    fn resolve(&self) -> Result<GenSet, GenSetError> {
        match (&self.builtin, &self.file) {
            (Some(name), _) => builtin(name),
            (None, Some(path)) => load_genset(path),
            (None, None) => unreachable!("clap requires one selector"),
        }
    }
}

#[derive(Debug, Args)]
pub struct EngineArgs {
    /// Worker threads for frontier expansion.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    /// Memory budget in bytes; accepts K, M, G suffixes (powers of 1024).
    #[arg(long, env = "ALTDIAM_MAX_MEMORY", value_parser = parse_size)]
    pub max_memory: Option<u64>,
    /// Time budget; plain seconds or a number with s, m or h.
    #[arg(long, env = "ALTDIAM_MAX_TIME", value_parser = parse_duration)]
    pub max_time: Option<Duration>,
}

impl EngineArgs {
    pub fn engine(&self) -> DiameterEngine {
        let mut budget = Budget::default();
        if let Some(m) = self.max_memory {
            budget.max_memory_bytes = m;
        }
        if let Some(t) = self.max_time {
            budget.max_time = t;
        }
        let mut engine = DiameterEngine::new().with_budget(budget);
        if let Some(w) = self.workers {
            engine = engine.with_workers(w as usize);
        }
        engine
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Directed,
    Undirected,
    Both,
}

impl ConventionArg {
    fn conventions(self) -> Vec<Convention> {
        match self {
            ConventionArg::Directed => vec![Convention::Directed],
            ConventionArg::Undirected => vec![Convention::Undirected],
            ConventionArg::Both => vec![Convention::Directed, Convention::Undirected],
        }
    }
}

#[derive(Debug, Args)]
pub struct DiamArgs {
    #[command(flatten)]
    pub selector: SelectorArgs,
    #[arg(long, value_enum, default_value_t = ConventionArg::Directed)]
    pub convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Also write the level profile (`d,count` rows) to this file.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Skip the `A_5^4` and `A_7^2` searches.
    #[arg(long)]
    pub quick: bool,
    /// Also search `A_5^5` exhaustively (minutes, about 3 GB).
    #[arg(long)]
    pub stretch: bool,
    /// Write the rows as JSON to this file.
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Corrupt one golden generating set to exercise the failure path.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Debug, Args)]
pub struct WordlenArgs {
    #[command(flatten)]
    pub selector: SelectorArgs,
    /// JSON array of cycle strings, one per coordinate, e.g. `["(1 2 3)","()"]`.
    pub element: String,
}

/// `123`, `64K`, `100M`, `2G` (binary multiples).
pub fn parse_size(text: &str) -> Result<u64, String> {
    let t = text.trim();
    let (digits, shift) = match t.chars().last().map(|c| c.to_ascii_uppercase()) {
        Some('K') => (&t[..t.len() - 1], 10),
        Some('M') => (&t[..t.len() - 1], 20),
        Some('G') => (&t[..t.len() - 1], 30),
        Some('T') => (&t[..t.len() - 1], 40),
        _ => (t, 0),
    };
    let n: u64 = digits
        .parse()
        .map_err(|_| format!("invalid size `{text}`"))?;
    let bytes = n
        .checked_mul(1u64 << shift)
        .ok_or_else(|| format!("size `{text}` overflows"))?;
    if bytes == 0 {
        return Err("size must be positive".into());
    }
    Ok(bytes)
}

/// `90`, `90s`, `5m`, `1.5h`.
pub fn parse_duration(text: &str) -> Result<Duration, String> {
    let t = text.trim();
    let (num, scale) = match t.chars().last() {
        Some('s') => (&t[..t.len() - 1], 1.0),
        Some('m') => (&t[..t.len() - 1], 60.0),
        Some('h') => (&t[..t.len() - 1], 3600.0),
        _ => (t, 1.0),
    };
    let secs: f64 = num
        .parse()
        .map_err(|_| format!("invalid duration `{text}`"))?;
    if !(secs > 0.0 && secs.is_finite()) {
        return Err("duration must be positive".into());
    }
    Ok(Duration::from_secs_f64(secs * scale))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Diam(a) => cmd_diam(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Gensets { action } => cmd_gensets(&action, out),
        Command::Wordlen(a) => cmd_wordlen(&a, out),
        Command::Hall(a) => cmd_hall(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

/// Convenience wrapper over [`run`] for the binary.
pub fn main_with_args() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl From<GenSetError> for Failure {
    fn from(e: GenSetError) -> Failure {
        Failure::usage(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::usage(e)
    }
}

impl From<DiameterError> for Failure {
    fn from(e: DiameterError) -> Failure {
        let code = match &e {
            DiameterError::Budget { .. } => EXIT_BUDGET,
            DiameterError::Unreachable => EXIT_UNREACHABLE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn report_table(r: &BfsReport) -> String {
    let levels: Vec<String> = r.level_sizes.iter().map(u64::to_string).collect();
    format!(
        "genset       {}\nconvention   {}\ndiameter     {}\nreached      {}\nstate space  {}\ngenerates    {}\npeak bytes   {}\nelapsed      {:.3}s\nlevels       {}\n",
        r.genset,
        r.convention,
        r.diameter,
        r.reached,
        r.state_space,
        r.generates,
        r.peak_visited_bytes,
        r.elapsed_secs,
        levels.join(" "),
    )
}

fn cmd_diam(a: &DiamArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let conventions = a.convention.conventions();
    if conventions.len() > 1 && (a.format == Format::Csv || a.csv.is_some()) {
        return Err(Failure::usage(
            "level-profile CSV needs a single --convention",
        ));
    }
    let genset = a.selector.resolve()?;
    let engine = a.engine.engine();
    let mut reports = Vec::new();
    for c in conventions {
        match engine.run(&genset, c) {
            Ok(r) => reports.push(r),
            Err(DiameterError::Budget { kind, partial }) => {
                let _ = writeln!(
                    err,
                    "{kind} budget exhausted after {} levels, {} states reached",
                    partial.level_sizes.len(),
                    partial.reached
                );
                let _ = write!(err, "{}", partial.level_profile_csv());
                return Err(DiameterError::Budget { kind, partial }.into());
            }
            Err(e) => return Err(e.into()),
        }
    }
    if let Some(path) = &a.csv {
        crate::diameter::level_profile_csv(&reports[0], path)?;
    }
    match a.format {
        Format::Json if reports.len() == 1 => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&reports[0]).expect("serializes")
        )?,
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&reports).expect("serializes")
        )?,
        Format::Csv => write!(out, "{}", reports[0].level_profile_csv())?,
        Format::Table => {
            let tables: Vec<String> = reports.iter().map(report_table).collect();
            write!(out, "{}", tables.join("\n"))?
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let opts = SuiteOptions {
        quick: a.quick,
        stretch: a.stretch,
        inject_fault: a.inject_fault,
    };
    let report = run_suite(&a.engine.engine(), &opts);
    if let Some(path) = &a.json {
        fs::write(path, report.to_json() + "\n")
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    match a.format {
        Format::Json => writeln!(out, "{}", report.to_json())?,
        _ => write!(out, "{}", report.to_table())?,
    }
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_USAGE
    })
}

fn cmd_gensets(action: &GensetsAction, out: &mut dyn Write) -> Result<i32, Failure> {
    match action {
        GensetsAction::List => {
            for name in builtin_names() {
                writeln!(out, "{name}")?;
            }
            writeln!(out, "# also: {}", BUILTIN_PATTERNS.join(", "))?;
        }
        GensetsAction::Emit { name, path } => {
            let g = builtin(name)?;
            match path {
                Some(p) => save_genset(&g, p)?,
                None => writeln!(out, "{}", g.to_json())?,
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_wordlen(a: &WordlenArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let genset = a.selector.resolve()?;
    let parts: Vec<String> = serde_json::from_str(&a.element).map_err(|e| {
        Failure::usage(format!(
            "element must be a JSON array of cycle strings: {e}"
        ))
    })?;
    let x = PowerElement::from_cycle_strings(&parts, genset.degree())
        .map_err(|e| Failure::usage(format!("invalid element: {e}")))?;
    let len = word_length(&x, &genset)?;
    writeln!(out, "{len}")?;
    Ok(EXIT_OK)
}

fn cmd_hall(a: &SelectorArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let genset = a.resolve()?;
    let report = hall_check(&genset).map_err(Failure::usage)?;
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&report).expect("serializes")
    )?;
    Ok(EXIT_OK)
}
