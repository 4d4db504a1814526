use apstrip::harness::{list_experiments, parse_config, run_experiment, write_outputs, OutputFormat};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "apstrip", version, about = "Run almost-periodicity experiments from config files")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the experiment described by a config file.
    Run {
        config: PathBuf,
        /// Output directory (overrides `out` in the config; default `results`).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Both)]
        format: Format,
    },
    /// List experiments with their parameters and defaults.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Both,
}

const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    if let Ok(v) = std::env::var("APSTRIP_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: APSTRIP_THREADS must be a positive integer, got '{v}'");
                return ExitCode::from(USAGE);
            }
        }
    }
    match cli.command {
        Command::List => {
            print!("{}", list_experiments());
            ExitCode::SUCCESS
        }
        Command::Run { config, out, format } => {
            let text = match std::fs::read_to_string(&config) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", config.display());
                    return ExitCode::from(USAGE);
                }
            };
            let cfg = match parse_config(&text) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {}: {e}", config.display());
                    return ExitCode::from(USAGE);
                }
            };
            let table = match run_experiment(&cfg) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {}: {e}", cfg.experiment);
                    return ExitCode::from(1);
                }
            };
            let dir = out.or(cfg.out.clone()).unwrap_or_else(|| PathBuf::from("results"));
            let format = match format {
                Format::Csv => OutputFormat::Csv,
                Format::Json => OutputFormat::Json,
                Format::Both => OutputFormat::Both,
            };
            match write_outputs(&table, &dir, format) {
                Ok(paths) => {
                    for p in paths {
                        println!("wrote {}", p.display());
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(USAGE);
                }
            }
            for c in &table.checks {
                println!("{c}");
            }
            match table.first_failure() {
                None => {
                    println!("{}: pass ({:.2} s)", cfg.experiment, table.metadata.wall_time_s);
                    ExitCode::SUCCESS
                }
                Some(c) => {
                    eprintln!("{}: fail, first violated bound: {}", cfg.experiment, c.name);
                    ExitCode::from(1)
                }
            }
        }
    }
}
