use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use taft_depth_cli::{init_threads, run, CliError, Command, Format, RunConfig};

#[derive(Parser)]
#[command(name = "taft-depth", version, about = "Exact depth computations for Taft algebras in their Drinfeld doubles")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Order n of the root of unity (at least 2). Always required.
    #[arg(long, global = true)]
    n: Option<u32>,

    #[arg(long, global = true, value_enum, default_value = "json")]
    format: FormatArg,

    /// Explicit-matrix crosschecks. Defaults to on for n <= 5.
    #[arg(long, global = true, value_enum)]
    oracle: Option<Switch>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// The Gauss polynomial C(k, j) at q = ζ_n.
    Qbinom {
        #[arg(allow_hyphen_values = true)]
        k: i64,
        #[arg(allow_hyphen_values = true)]
        j: i64,
    },
    /// Decomposition of M(l,r) ⊗ M(l',r') from the tensor rules.
    GreenTensor { left: String, right: String },
    /// Krull-Schmidt decomposition of a saved module file.
    Decompose { file: PathBuf },
    /// The module file of Q.
    BuildQ,
    /// The full theorem suite.
    Verify,
    /// The depth certificate.
    DepthReport,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Switch {
    On,
    Off,
}

fn config(cli: Cli) -> Result<RunConfig, CliError> {
    let n = cli
        .n
        .ok_or_else(|| CliError::Usage("--n is required".into()))?;
    let command = match cli.command {
        Cmd::Qbinom { k, j } => Command::QBinom { k, j },
        Cmd::GreenTensor { left, right } => Command::GreenTensor { left, right },
        Cmd::Decompose { file } => Command::Decompose { path: file },
        Cmd::BuildQ => Command::BuildQ,
        Cmd::Verify => Command::Verify,
        Cmd::DepthReport => Command::DepthReport,
    };
    Ok(RunConfig {
        n,
        command,
        output_path: cli.out,
        format: match cli.format {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        },
        oracle: cli.oracle.map(|s| matches!(s, Switch::On)),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = init_threads().and_then(|()| config(cli)).and_then(|cfg| {
        let outcome = run(&cfg)?;
        if cfg.output_path.is_none() {
            std::io::stdout().write_all(outcome.report.as_bytes())?;
        }
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            for name in &outcome.failures {
                eprintln!("check failed: {name}");
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("taft-depth: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
