mod config;
mod error;
mod export;
mod render;
mod rows;
mod verify;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use zkgenus_core::surface::Projection;
use zkgenus_core::{FaceComplex, DEFAULT_AMBIENT_CAP, DEFAULT_BRUTE_CAP};

use config::{parse_checks, Check, Format, RunConfig};
use error::CliError;
use rows::{GenusRow, NecklaceRow, QuotientRow};

/// Genus of real moment-angle complexes over polygons and of their cyclic
/// quotients, computed from the cells and checked against closed forms.
#[derive(Debug, Parser)]
#[command(name = "zkgenus", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Genus table: cell counts, χ, genus and quotient genus per n.
    Table(Common),
    /// Run verification checks and write a JSON (or text) report.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated subset of surface,orient,embed,quotient,rh,necklace,recurrence.
        #[arg(long)]
        checks: Option<String>,
        /// Check a face complex read from this JSON file instead of the polygon family.
        #[arg(long, conflicts_with_all = ["n", "n_min", "n_max"])]
        input: Option<PathBuf>,
    },
    /// Orbit counts, branch points and genus of the cyclic quotient.
    Quotient(Common),
    /// Necklace counts by formula and, below the brute-force cap, by enumeration.
    Necklace {
        #[command(flatten)]
        common: Common,
        /// Alphabet size.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Write cell-complex JSON, edge list and triangulated OFF mesh per n.
    Export {
        #[command(flatten)]
        common: Common,
        /// Also export the quotient complex.
        #[arg(long)]
        quotient: bool,
        /// JSON file `{"rows": [[..], [..], [..]]}` with the 3×n projection for OFF vertices.
        #[arg(long)]
        projection: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct Common {
    /// Single value of n (overrides the range).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Output file; for `export`, the output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest n for exhaustive necklace enumeration.
    #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
    brute_cap: usize,
    /// Largest ambient dimension the complex builder will accept.
    #[arg(long, default_value_t = DEFAULT_AMBIENT_CAP)]
    ambient_cap: usize,
}

impl Common {
    fn config(&self, checks: Vec<Check>) -> Result<RunConfig, CliError> {
        let (n_min, n_max) = RunConfig::range(self.n, self.n_min, self.n_max);
        let cfg = RunConfig {
            n_min,
            n_max,
            checks,
            format: self.format,
            out: self.out.clone(),
            brute_cap: self.brute_cap,
            ambient_cap: self.ambient_cap,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Returns whether every computed verdict passed.
fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Table(common) => {
            let cfg = common.config(Check::ALL.to_vec())?;
            let rows = rows::collect(&cfg, |n| GenusRow::compute(n, cfg.ambient_cap))?;
            emit(cfg.out.as_deref(), &render::render(&rows, cfg.format)?)?;
            Ok(rows.iter().all(|r| r.all_agree))
        }
        Command::Verify {
            common,
            checks,
            input,
        } => {
            let checks = match &checks {
                Some(list) => parse_checks(list)?,
                None if input.is_some() => vec![Check::Surface, Check::Orient],
                None => Check::ALL.to_vec(),
            };
            let report = match input {
                Some(path) => {
                    if let Some(c) = checks.iter().find(|c| !c.applies_to_input()) {
                        return Err(CliError::Usage(format!(
                            "check `{c}` needs the polygon family, not --input"
                        )));
                    }
                    let f = FaceComplex::from_json(&read(&path)?)?;
                    let name = path.file_name().map_or_else(
                        || path.display().to_string(),
                        |s| s.to_string_lossy().into_owned(),
                    );
                    verify::run_input(name, &f, &checks)
                }
                None => verify::run_range(&common.config(checks)?)?,
            };
            let text = match common.format {
                Format::Text => report.to_text(),
                Format::Json => render::json(&report)?,
                Format::Csv => {
                    return Err(CliError::Usage("verify reports are text or json".into()));
                }
            };
            emit(common.out.as_deref(), &text)?;
            Ok(report.pass)
        }
        Command::Quotient(common) => {
            let cfg = common.config(Check::ALL.to_vec())?;
            let rows = rows::collect(&cfg, |n| QuotientRow::compute(n, cfg.ambient_cap))?;
            emit(cfg.out.as_deref(), &render::render(&rows, cfg.format)?)?;
            Ok(rows.iter().all(QuotientRow::passes))
        }
        Command::Necklace { common, k } => {
            let cfg = common.config(Check::ALL.to_vec())?;
            let rows = rows::collect(&cfg, |n| NecklaceRow::compute(n, k, cfg.brute_cap))?;
            emit(cfg.out.as_deref(), &render::render(&rows, cfg.format)?)?;
            Ok(rows.iter().all(|r| r.agree))
        }
        Command::Export {
            common,
            quotient,
            projection,
        } => {
            let cfg = common.config(Check::ALL.to_vec())?;
            let projection = match projection {
                Some(path) => Some(
                    serde_json::from_str::<Projection>(&read(&path)?)
                        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
                ),
                None => None,
            };
            let dir = cfg.out.clone().unwrap_or_else(|| PathBuf::from("."));
            let written = export::run(&cfg, &dir, quotient, projection.as_ref())?;
            let text = match cfg.format {
                Format::Json => render::json(&written)?,
                _ => written
                    .iter()
                    .map(|w| format!("{} {}\n", w.path.display(), w.bytes))
                    .collect(),
            };
            emit(None, &text)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("zkgenus: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
