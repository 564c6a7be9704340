use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use eulerclass::report::{self, CliError};
use eulerclass::{catalog, DEFAULT_CAP};

#[derive(Parser)]
#[command(name = "eulerclass", version, about = "Euler classes of split crystallographic groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the group described by a JSON group file.
    Analyze {
        file: PathBuf,
        /// Field characteristic: 0 or a prime.
        #[arg(long = "char")]
        characteristic: u64,
        #[arg(long)]
        json: bool,
        /// Largest point group the closure may build.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// List the built-in wallpaper groups, or check one of them.
    Catalog {
        name: Option<String>,
        #[arg(long = "char")]
        characteristic: Option<u64>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Run the catalog regression and the charpoly identity sample.
    Selftest {
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let output = match cli.command {
        Command::Analyze { file, characteristic, json, cap } => {
            let r = report::analyze_path(&file, characteristic, cap)?;
            if json {
                r.to_json_string()
            } else {
                r.render_text()
            }
        }
        Command::Catalog { name: Some(name), characteristic: Some(p), json, cap } => {
            let r = report::catalog_check(&name, p, cap)?;
            if json {
                r.to_json_string()
            } else {
                r.render_text()
            }
        }
        Command::Catalog { name: Some(name), characteristic: None, json, .. } => {
            let entry = catalog::lookup(&name)?;
            if json {
                entry.group_file().to_json_string()
            } else {
                report::catalog_entry_text(&entry)
            }
        }
        Command::Catalog { name: None, characteristic, json, cap } => {
            let r = report::catalog_listing(characteristic, cap)?;
            if json {
                r.to_json_string()
            } else {
                r.render_text()
            }
        }
        Command::Selftest { json } => {
            let r = report::selftest(DEFAULT_CAP);
            emit(&if json { r.to_json_string() } else { r.render_text() });
            return Ok(if r.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    };
    emit(&output);
    Ok(ExitCode::SUCCESS)
}

/// Writes a report to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    if !text.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
