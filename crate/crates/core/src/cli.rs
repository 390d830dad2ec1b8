//! Command-line front end. `run` is the whole program minus process exit, so
//! tests can drive it with in-memory streams.
//!
//! Exit status: 0 on pass, 1 when a check ran and failed, 2 on usage, input or
//! configuration errors.

use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bits::format_zstring;
use crate::code::OcwsCode;
use crate::codefile::{parse_code_file, write_code_file};
use crate::error::Error;
use crate::graph::Graph;
use crate::induce::{enumerate_paulis, gauge_reduce, induce, induced_error_set};
use crate::oracle::{oqec_check, DEFAULT_TOL};
use crate::pauli::PauliOperator;
use crate::search::{search_code, SearchConfig, SearchMode};
use crate::verify::{certify_distance_with_witness, detects_up_to_weight};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Witness lines printed by `verify` before the rest are summarised.
const MAX_WITNESSES: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "ocws",
    version,
    about = "Build, verify and search operator codeword-stabilized codes"
)]
struct Cli {
    /// `text` adds human-readable context; `lines` prints only prefixed result lines.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Lines,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certify the distance of a code, optionally against a target.
    Verify {
        codefile: PathBuf,
        /// Required distance; defaults to the one stated in the file.
        #[arg(long)]
        distance: Option<usize>,
    },
    /// List raw and gauge-reduced induced errors.
    Induce {
        codefile: PathBuf,
        #[arg(long, default_value_t = 1)]
        weight: usize,
    },
    /// Search for a word set of maximum size.
    Search(SearchArgs),
    /// Check the correction condition on dense state vectors.
    OracleCheck {
        codefile: PathBuf,
        #[arg(long, default_value_t = 1)]
        weight: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// `ring` or `file:<path>` (a code file whose graph is reused).
    #[arg(long, default_value = "ring")]
    graph: String,
    /// Qubit count for `--graph ring`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    distance: usize,
    /// Fail unless at least this many words are found.
    #[arg(long = "K")]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    /// Time budget in seconds.
    #[arg(long)]
    budget: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the code file here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Greedy,
}

struct Failure {
    status: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            status: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::TargetNotMet { .. } | Error::Unverified { .. } => EXIT_FAIL,
            _ => EXIT_USAGE,
        };
        Self {
            status,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self::usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn load(path: &PathBuf) -> std::result::Result<OcwsCode, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_code_file(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn verify(out: &mut dyn Write, format: Format, path: &PathBuf, distance: Option<usize>) -> Outcome {
    let code = load(path)?;
    let target = distance.or(code.claimed_distance());
    let (certified, _) = certify_distance_with_witness(&code);
    let pass = target.is_none_or(|d| certified >= d);
    if format == Format::Text {
        writeln!(
            out,
            "code {}: n={} K={} r={} graph={}",
            path.display(),
            code.n(),
            code.dimension(),
            code.r(),
            if code.graph().is_ring() {
                "ring"
            } else {
                "adjacency"
            }
        )?;
    }
    let target_field = target.map_or(String::new(), |d| format!(" target={d}"));
    writeln!(
        out,
        "VERDICT {} n={} K={} r={} d={}{}",
        verdict(pass),
        code.n(),
        code.dimension(),
        code.r(),
        certified,
        target_field
    )?;
    if let Some(d) = target.filter(|_| !pass) {
        let report = detects_up_to_weight(&code, d - 1);
        for failure in report.failures.iter().take(MAX_WITNESSES) {
            writeln!(out, "WITNESS {failure}")?;
        }
        if format == Format::Text {
            writeln!(
                out,
                "{} of {} errors of weight <= {} undetected",
                report.failures.len(),
                report.checked,
                d - 1
            )?;
        }
    }
    Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
}

fn induce_cmd(out: &mut dyn Write, format: Format, path: &PathBuf, weight: usize) -> Outcome {
    let code = load(path)?;
    let n = code.n();
    for e in enumerate_paulis(n, weight, false) {
        let raw = induce(code.graph(), &e)?;
        writeln!(
            out,
            "CLASS {e} -> {} -> {}",
            format_zstring(raw, n),
            format_zstring(gauge_reduce(&code, raw), n)
        )?;
    }
    if format == Format::Text {
        writeln!(
            out,
            "{} distinct reduced classes over weight <= {weight}",
            induced_error_set(&code, weight).len()
        )?;
    }
    Ok(EXIT_PASS)
}

fn search(out: &mut dyn Write, format: Format, args: &SearchArgs) -> Outcome {
    let graph = if args.graph == "ring" {
        let n = args
            .n
            .ok_or_else(|| Failure::usage("--graph ring requires --n"))?;
        Graph::ring(n)?
    } else if let Some(path) = args.graph.strip_prefix("file:") {
        let graph = load(&PathBuf::from(path))?.graph().clone();
        if let Some(n) = args.n.filter(|&n| n != graph.n()) {
            return Err(Failure::usage(format!(
                "--n {n} disagrees with the {}-qubit graph in {path}",
                graph.n()
            )));
        }
        graph
    } else {
        return Err(Failure::usage(format!(
            "--graph: expected `ring` or `file:<path>`, got {:?}",
            args.graph
        )));
    };
    let budget = match args.budget {
        Some(b) if !(b.is_finite() && b >= 0.0) => {
            return Err(Failure::usage("--budget must be a non-negative number"))
        }
        b => b.map(Duration::from_secs_f64),
    };
    let config = SearchConfig {
        graph,
        r: args.r,
        target_distance: args.distance,
        target_k: args.k,
        mode: match args.mode {
            ModeArg::Exact => SearchMode::Exact,
            ModeArg::Greedy => SearchMode::Greedy,
        },
        time_budget: budget,
        seed: args.seed,
    };
    let outcome = search_code(&config)?;
    let code = &outcome.code;
    let summary = format!(
        "CODE n={} K={} r={} d={} complete={}",
        code.n(),
        code.dimension(),
        code.r(),
        outcome.certified_distance,
        outcome.complete
    );
    let file = format!("# {summary}\n{}", write_code_file(code));
    match &args.out {
        Some(path) => {
            std::fs::write(path, &file)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            writeln!(out, "{summary}")?;
            if format == Format::Text {
                writeln!(out, "wrote {}", path.display())?;
            }
        }
        None => out.write_all(file.as_bytes())?,
    }
    Ok(EXIT_PASS)
}

fn oracle_check(
    out: &mut dyn Write,
    format: Format,
    path: &PathBuf,
    weight: usize,
    tol: f64,
) -> Outcome {
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Failure::usage("--tol must be a non-negative number"));
    }
    let code = load(path)?;
    let errors: Vec<PauliOperator> = enumerate_paulis(code.n(), weight, true).collect();
    let report = oqec_check(&code, &errors, tol)?;
    if format == Format::Text {
        writeln!(
            out,
            "code {}: {} errors of weight <= {weight}, {} ordered pairs",
            path.display(),
            errors.len(),
            errors.len() * errors.len()
        )?;
    }
    writeln!(
        out,
        "VERDICT {} max_off_block={:.3e} max_block_deviation={:.3e} tol={:.1e}",
        verdict(report.pass),
        report.max_off_block,
        report.max_block_deviation,
        tol
    )?;
    if let Some((a, b)) = report.worst_pair {
        writeln!(out, "WITNESS {a} {b}")?;
    }
    Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Verify { codefile, distance } => verify(out, cli.format, codefile, *distance),
        Command::Induce { codefile, weight } => induce_cmd(out, cli.format, codefile, *weight),
        Command::Search(args) => search(out, cli.format, args),
        Command::OracleCheck {
            codefile,
            weight,
            tol,
        } => oracle_check(out, cli.format, codefile, *weight, *tol),
    }
}

/// Runs the program on `argv` (including the program name).
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_PASS
            };
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            let _ = writeln!(stderr, "error: --threads must be at least 1");
            return EXIT_USAGE;
        }
        builder = builder.num_threads(threads);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    // Output is buffered so the worker pool never touches the caller's streams.
    let mut buffer = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut buffer));
    if stdout
        .write_all(&buffer)
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return EXIT_USAGE;
    }
    match result {
        Ok(status) => status,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.status
        }
    }
}
