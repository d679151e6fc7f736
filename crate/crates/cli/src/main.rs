#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod record;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sharp_hardy::acceptance::Level;

use commands::{AlphaInput, CliError, Method, SweepInput};
use record::{Format, OutputRecord, Status};

/// Sharp constants of the Hardy inequality on finite intervals and of the
/// finite discrete Hardy inequality.
#[derive(Debug, Parser)]
#[command(name = "sharp-hardy", version)]
struct Cli {
    /// Record encoding on stdout.
    #[arg(long, value_enum, default_value_t = FormatArg::Json, global = true)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sharp constant d(a, b) on the interval (a, b).
    Continuous {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        /// Check equality at the extremal function by quadrature.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 1e-10)]
        quad_tol: f64,
    },
    /// Discrete constant d_n and its bounds.
    Discrete {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Root of the characteristic equation for a log-length.
    Alpha {
        /// Log-length L directly.
        #[arg(long)]
        l: Option<f64>,
        #[arg(long, allow_negative_numbers = true, requires = "b")]
        a: Option<f64>,
        #[arg(long, allow_negative_numbers = true, requires = "a")]
        b: Option<f64>,
        /// Uses L = ln(n + 1).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Smallest zero of the dual Hahn polynomial of degree n.
    Hahn {
        #[arg(long)]
        n: usize,
        /// Also evaluate the polynomial at t = x².
        #[arg(long)]
        t: Option<f64>,
    },
    /// Large-n asymptotics and the gamma-function argument.
    Asym {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_negative_numbers = true)]
        x: Option<f64>,
    },
    /// Table of d_n and its bounds over a range of n, as CSV.
    Sweep {
        #[arg(long)]
        n_start: usize,
        #[arg(long)]
        n_end: usize,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long)]
        log_spaced: bool,
        /// CSV destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance criteria.
    VerifyAll {
        #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
        level: LevelArg,
        #[arg(long, hide = true, default_value_t = 0.0, allow_negative_numbers = true)]
        tamper_constant: f64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Continuous { .. } => "continuous",
            Command::Discrete { .. } => "discrete",
            Command::Alpha { .. } => "alpha",
            Command::Hahn { .. } => "hahn",
            Command::Asym { .. } => "asym",
            Command::Sweep { .. } => "sweep",
            Command::VerifyAll { .. } => "verify-all",
        }
    }
}

fn dispatch(rec: &mut OutputRecord, command: Command) -> Result<(), CliError> {
    match command {
        Command::Continuous { a, b, verify, quad_tol } => commands::continuous(rec, a, b, verify, quad_tol),
        Command::Discrete { n, method } => commands::discrete(rec, n, method),
        Command::Alpha { l, a, b, n } => commands::alpha(rec, AlphaInput { l, a, b, n }),
        Command::Hahn { n, t } => commands::hahn(rec, n, t),
        Command::Asym { n, x } => commands::asym(rec, n, x),
        Command::Sweep { n_start, n_end, points, log_spaced, out } => {
            commands::sweep(rec, SweepInput { n_start, n_end, points, log_spaced, out })
        }
        Command::VerifyAll { level, tamper_constant } => {
            let level = match level {
                LevelArg::Fast => Level::Fast,
                LevelArg::Full => Level::Full,
            };
            commands::verify_all(rec, level, tamper_constant)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let mut rec = OutputRecord::new(cli.command.name());
    let sweep_to_stdout = matches!(cli.command, Command::Sweep { out: None, .. });
    match dispatch(&mut rec, cli.command) {
        Ok(()) => {}
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
        Err(CliError::Numerical(msg)) => {
            eprintln!("error: {msg}");
            rec.status = Status::NoConvergence;
        }
    }
    let text = rec.render(format);
    let text = if format == Format::Json { text + "\n" } else { text };
    // A sweep without --out already used stdout for its table.
    if sweep_to_stdout {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    ExitCode::from(match rec.status {
        Status::Ok => 0,
        Status::NoConvergence => 2,
        Status::BoundViolation => 3,
    })
}
