use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lll_census::cli::{self, Command as RunCommand, OutputFormat, RunConfig};

/// Average (delta, eta)-LLL basis counts: exact log-domain evaluation,
/// analytic bounds, approximations and verification.
#[derive(Parser)]
#[command(name = "lll-census", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Args)]
struct CommonArgs {
    /// Reduction parameter eta (size condition)
    #[arg(long, default_value_t = 0.51)]
    eta: f64,

    /// Reduction parameter delta (Lovasz condition)
    #[arg(long, default_value_t = 0.99)]
    delta: f64,

    /// Output format
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,

    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,

    /// Accept parameters outside the standard domain
    /// (1/2 < delta < 1, 1/2 < eta < delta)
    #[arg(long)]
    allow_relaxed_domain: bool,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Exact ln-count in both forms at one dimension
    Compute {
        /// Lattice dimension
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Lower/exact/upper bound reports at one dimension
    Bounds {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Rough and tight approximations and their ratio to the exact value
    Approx {
        #[arg(long)]
        n: u32,
        /// Weight of the n ln n correction in the tight approximation,
        /// in [1/2, 4]
        #[arg(long, default_value_t = 2.0)]
        c: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the full property suite; exit 2 if any item fails
    Verify {
        /// Largest dimension for the dimension-dependent checks
        #[arg(long = "n-max")]
        n_max: u32,
        /// ln-tolerance for the count-form consistency item
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact ln-count over an ascending range of dimensions
    Sweep {
        #[arg(long = "n-min")]
        n_min: u32,
        #[arg(long = "n-max")]
        n_max: u32,
        /// Parallel evaluation threads (0 = rayon default)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Recompute the published bound constants and report deviations
    Audit {
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn to_run_config(cmd: &CliCommand) -> (RunConfig, Option<PathBuf>) {
    fn apply_common(cfg: &mut RunConfig, common: &CommonArgs) -> Option<PathBuf> {
        cfg.eta = common.eta;
        cfg.delta = common.delta;
        cfg.format = match common.format {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Plain => OutputFormat::Plain,
        };
        cfg.allow_relaxed_domain = common.allow_relaxed_domain;
        common.out.clone()
    }

    match cmd {
        CliCommand::Compute { n, common } => {
            let mut cfg = RunConfig::new(RunCommand::Compute);
            cfg.n = Some(*n);
            let out = apply_common(&mut cfg, common);
            (cfg, out)
        }
        CliCommand::Bounds { n, common } => {
            let mut cfg = RunConfig::new(RunCommand::Bounds);
            cfg.n = Some(*n);
            let out = apply_common(&mut cfg, common);
            (cfg, out)
        }
        CliCommand::Approx { n, c, common } => {
            let mut cfg = RunConfig::new(RunCommand::Approx);
            cfg.n = Some(*n);
            cfg.c = *c;
            let out = apply_common(&mut cfg, common);
            (cfg, out)
        }
        CliCommand::Verify { n_max, tol, common } => {
            let mut cfg = RunConfig::new(RunCommand::Verify);
            cfg.n_max = Some(*n_max);
            cfg.tol = *tol;
            let out = apply_common(&mut cfg, common);
            (cfg, out)
        }
        CliCommand::Sweep {
            n_min,
            n_max,
            jobs,
            common,
        } => {
            let mut cfg = RunConfig::new(RunCommand::Sweep);
            cfg.n_min = Some(*n_min);
            cfg.n_max = Some(*n_max);
            cfg.jobs = Some(*jobs);
            let out = apply_common(&mut cfg, common);
            (cfg, out)
        }
        CliCommand::Audit { format, out } => {
            let mut cfg = RunConfig::new(RunCommand::Audit);
            cfg.format = match format {
                Format::Json => OutputFormat::Json,
                Format::Csv => OutputFormat::Csv,
                Format::Plain => OutputFormat::Plain,
            };
            (cfg, out.clone())
        }
    }
}

fn main() -> ExitCode {
    let parsed = match Cli::try_parse() {
        Ok(p) => p,
        Err(e) => {
            // exit 1 with a one-line diagnostic; help/version go to stdout
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            eprintln!("{first}");
            return ExitCode::from(1);
        }
    };

    let (cfg, out_path) = to_run_config(&parsed.command);
    match cli::run(&cfg) {
        Ok(outcome) => {
            if let Some(path) = out_path {
                if let Err(e) = std::fs::write(&path, &outcome.rendered) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                let mut stdout = std::io::stdout().lock();
                if stdout.write_all(outcome.rendered.as_bytes()).is_err() {
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}
