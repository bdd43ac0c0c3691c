use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fanocert::certify::{check_fan, run_suite, Config, Suite};

#[derive(Parser)]
#[command(name = "certify", version, about = "Run exact-arithmetic certificate suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a suite: schubert, toric, veronese, hodge, numerology or all.
    Run {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long = "degree-bound", default_value_t = 6)]
        degree_bound: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fan files.
    Fan {
        #[command(subcommand)]
        command: FanCommand,
    },
}

#[derive(Subcommand)]
enum FanCommand {
    /// Report simpliciality, smoothness, completeness and a P1 fibration.
    Check { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: fanocert::certify::CertifyError| e.to_string())
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run { suite, format, seed, trials, degree_bound, out } => {
            let config = Config { seed, trials, degree_bound, ..Config::default() };
            let report = run_suite(suite, &config);
            let rendered = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &rendered) {
                        eprintln!("certify: cannot write {}: {e}", path.display());
                        return ExitCode::FAILURE;
                    }
                }
                None => print!("{rendered}"),
            }
            if report.success() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Command::Fan { command: FanCommand::Check { file } } => match check_fan(&file) {
            Ok(rep) => {
                print!("{rep}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("certify: {e}");
                ExitCode::FAILURE
            }
        },
    }
}
