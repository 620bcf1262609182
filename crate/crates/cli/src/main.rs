//! `fejer` — kernel tabulation, multiplier-bound verification,
//! convergence studies, and parameter sweeps, with CSV/JSON output for
//! plotting.
//!
//! Exit codes: 0 all checks pass, 1 a mathematical check failed,
//! 2 configuration or usage error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fejer::bounds::check_uniform_bound;
use fejer::experiments::{
    bandlimited_corpus, convergence_study, derive_seed, run_sweep, sweep_csv, SweepConfig,
    SweepRow,
};
use fejer::kernel::{eval_kernel_closed, eval_kernel_sum, fejer_hat};
use fejer::{LacunarySequence, Signal, SpectralGrid};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_CONFIG: u8 = 2;

#[derive(Parser)]
#[command(name = "fejer", version, about = "Fejér kernel and lacunary block-difference toolkit")]
struct Cli {
    /// Master seed for every randomized experiment.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output path; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format where a command supports both.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate K_n on a grid together with its computed Fourier
    /// coefficients against the tent profile.
    Kernel {
        /// Kernel order n.
        #[arg(long)]
        order: u64,
        /// Grid size M (power of two, 2^4 ..= 2^22).
        #[arg(long = "grid-size")]
        grid_size: usize,
    },
    /// Verify the uniform block-symbol bound for a generated sequence;
    /// writes the report as JSON.
    Bound {
        /// First sequence term.
        #[arg(long, default_value_t = 1)]
        n1: u64,
        /// Target ratio for sequence generation (must exceed 1).
        #[arg(long)]
        alpha: f64,
        /// Number of difference blocks N.
        #[arg(long)]
        blocks: usize,
    },
    /// Sample random sign patterns and measure every tail of the block
    /// series on a band-limited corpus.
    Converge {
        #[arg(long, default_value_t = 1)]
        n1: u64,
        #[arg(long)]
        alpha: f64,
        /// Number of sequence terms (blocks + 1).
        #[arg(long)]
        terms: usize,
        #[arg(long = "grid-size")]
        grid_size: usize,
        /// Band limit of the probe corpus.
        #[arg(long)]
        band: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Run a (α, N) parameter sweep from a JSON config
    /// {"alphas":[...],"Ns":[...],"M":...,"trials":...,"seed":...}.
    Sweep {
        /// Path to the JSON sweep configuration.
        #[arg(long)]
        config: PathBuf,
    },
}

fn main() -> ExitCode {
    match configure_threads() {
        Ok(()) => {}
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_CONFIG);
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILED)
            }
        }
        Err(CliError::Config(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_CONFIG)
        }
    }
}

/// FEJER_THREADS caps rayon parallelism; 0 or unset means automatic.
fn configure_threads() -> Result<(), String> {
    match std::env::var("FEJER_THREADS") {
        Err(_) => Ok(()),
        Ok(raw) => {
            let n: usize = raw
                .trim()
                .parse()
                .map_err(|_| format!("FEJER_THREADS must be an integer, got {raw:?}"))?;
            if n == 0 {
                return Ok(());
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| format!("could not configure thread pool: {e}"))
        }
    }
}

enum CliError {
    Config(String),
}

impl From<fejer::Error> for CliError {
    fn from(e: fejer::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Config(format!("i/o error: {e}"))
    }
}

type CliResult<T> = Result<T, CliError>;

fn write_output(out: &Option<PathBuf>, contents: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, contents)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(contents.as_bytes())?;
        }
    }
    Ok(())
}

fn require_power_of_two_grid(m: usize) -> CliResult<()> {
    let in_range = (1 << 4..=1 << 22).contains(&m);
    if !in_range || !m.is_power_of_two() {
        return Err(CliError::Config(format!(
            "grid size must be a power of two between 2^4 and 2^22, got {m}"
        )));
    }
    Ok(())
}

/// Returns whether every mathematical check passed.
fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Kernel { order, grid_size } => {
            if cli.format == Format::Json {
                return Err(CliError::Config(
                    "kernel emits csv only; drop --format json".into(),
                ));
            }
            cmd_kernel(order, grid_size, &cli.out)
        }
        // The report is JSON regardless of --format.
        Command::Bound { n1, alpha, blocks } => cmd_bound(n1, alpha, blocks, &cli.out),
        Command::Converge {
            n1,
            alpha,
            terms,
            grid_size,
            band,
            trials,
        } => cmd_converge(
            n1, alpha, terms, grid_size, band, trials, cli.seed, cli.format, &cli.out,
        ),
        Command::Sweep { config } => cmd_sweep(&config, &cli.out),
    }
}

/// CSV columns: index,x,K_sum,K_closed,j,coef,tent — the space table
/// and the frequency table share the row index (both have M rows).
fn cmd_kernel(order: u64, grid_size: usize, out: &Option<PathBuf>) -> CliResult<bool> {
    require_power_of_two_grid(grid_size)?;
    let grid = SpectralGrid::new(grid_size)?;
    if order > grid.max_frequency() {
        return Err(CliError::Config(format!(
            "aliasing risk: order {order} exceeds grid maximum {}",
            grid.max_frequency()
        )));
    }
    let space_sum: Vec<f64> = grid.points().map(|x| eval_kernel_sum(order, x)).collect();
    let space_closed: Vec<f64> = grid.points().map(|x| eval_kernel_closed(order, x)).collect();
    let sampled = Signal::from_real_samples(grid, &space_sum)?;

    let mut ok = true;
    let mut rows = String::from("index,x,K_sum,K_closed,j,coef,tent\n");
    for (i, (j, coefficient)) in sampled.coefficients_by_frequency().enumerate() {
        ok &= coefficient.im.abs() <= 1e-9;
        let tent = fejer_hat(order, j as f64);
        ok &= (coefficient.re - tent).abs() <= 1e-9;
        rows.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            i,
            grid.point(i),
            space_sum[i],
            space_closed[i],
            j,
            coefficient.re,
            tent
        ));
    }
    write_output(out, &rows)?;
    Ok(ok)
}

fn cmd_bound(n1: u64, alpha: f64, blocks: usize, out: &Option<PathBuf>) -> CliResult<bool> {
    if blocks == 0 {
        return Err(CliError::Config("need at least one block".into()));
    }
    let seq = LacunarySequence::generate(n1, alpha, blocks + 1)?;
    let report = check_uniform_bound(&seq, blocks)?;
    write_output(out, &(report.to_json() + "\n"))?;
    Ok(report.all_pass())
}

#[allow(clippy::too_many_arguments)]
fn cmd_converge(
    n1: u64,
    alpha: f64,
    terms: usize,
    grid_size: usize,
    band: u64,
    trials: usize,
    seed: u64,
    format: Format,
    out: &Option<PathBuf>,
) -> CliResult<bool> {
    require_power_of_two_grid(grid_size)?;
    if terms < 2 {
        return Err(CliError::Config("need at least two sequence terms".into()));
    }
    if trials == 0 {
        return Err(CliError::Config("need at least one trial".into()));
    }
    let grid = SpectralGrid::new(grid_size)?;
    if band > grid.max_frequency() {
        return Err(CliError::Config(format!(
            "aliasing risk: band {band} exceeds grid maximum {}",
            grid.max_frequency()
        )));
    }
    let seq = LacunarySequence::generate(n1, alpha, terms)?;
    let corpus = bandlimited_corpus(grid, band, derive_seed(seed, 0xC09A05))?;

    let mut ok = true;
    let mut csv = String::from("signal,start_block,end_block,trials,sup,analytic_bound,pass\n");
    let mut json_entries = Vec::new();
    for (i, (name, signal)) in corpus.iter().enumerate() {
        let reports = convergence_study(signal, &seq, trials, derive_seed(seed, 0x7A11 + i as u64))?;
        for r in &reports {
            ok &= r.pass;
            csv.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                name, r.start_block, r.end_block, trials, r.sup, r.analytic_bound, r.pass
            ));
        }
        json_entries.push(serde_json::json!({ "signal": name, "reports": reports }));
    }
    match format {
        Format::Csv => write_output(out, &csv)?,
        Format::Json => {
            let body = serde_json::to_string_pretty(&json_entries)
                .expect("report serialization cannot fail");
            write_output(out, &(body + "\n"))?;
        }
    }
    Ok(ok)
}

fn cmd_sweep(config_path: &PathBuf, out: &Option<PathBuf>) -> CliResult<bool> {
    let raw = fs::read_to_string(config_path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", config_path.display())))?;
    let config: SweepConfig = serde_json::from_str(&raw)
        .map_err(|e| CliError::Config(format!("malformed sweep config: {e}")))?;
    require_power_of_two_grid(config.grid_size)?;
    for &alpha in &config.alphas {
        #[allow(clippy::neg_cmp_op_on_partial_ord)] // NaN must be rejected too
        if !(alpha > 1.0) {
            return Err(CliError::Config(format!("alpha must exceed 1, got {alpha}")));
        }
    }
    if config.trials == 0 {
        return Err(CliError::Config("need at least one trial".into()));
    }
    let rows = run_sweep(&config)?;
    write_output(out, &sweep_csv(&rows))?;

    let errored: Vec<&SweepRow> = rows.iter().filter(|r| r.error.is_some()).collect();
    let violated = rows.iter().any(|r| r.flagged && r.error.is_none());
    if violated {
        return Ok(false);
    }
    if !errored.is_empty() {
        let first = errored[0];
        return Err(CliError::Config(format!(
            "{} sweep cell(s) not computable, first: alpha={} N={}: {}",
            errored.len(),
            first.alpha,
            first.n_blocks,
            first.error.as_deref().unwrap_or("unknown")
        )));
    }
    Ok(true)
}
