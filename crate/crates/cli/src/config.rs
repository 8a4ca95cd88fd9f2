use std::path::PathBuf;

use algver_core::FieldDesc;
use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Composition,
    Cubic,
    Jordan,
    Tori,
    Clifford,
    Theta,
    Similitude,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [Suite::Composition, Suite::Cubic, Suite::Jordan, Suite::Tori, Suite::Clifford, Suite::Theta, Suite::Similitude];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Composition => "composition",
            Suite::Cubic => "cubic",
            Suite::Jordan => "jordan",
            Suite::Tori => "tori",
            Suite::Clifford => "clifford",
            Suite::Theta => "theta",
            Suite::Similitude => "similitude",
            Suite::All => "all",
        }
    }

    /// The suites this selection expands to, in report order.
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::EACH.to_vec(),
            s => vec![s],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "algver", version, about = "Exact-arithmetic verification suites")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite and emit a report.
    Verify(VerifyArgs),
}

#[derive(Clone, Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Field descriptor such as `gf(7)`, `Q` or `gf(3^2;u^2+1)`; replaces the fixture fields.
    #[arg(long)]
    pub field: Option<String>,
    /// Samples per identity; replaces the fixture defaults.
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Directory whose `<suite>.json` files replace the built-in fixtures.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Print per-suite wall-clock durations to standard error.
    #[arg(long)]
    pub timings: bool,
}

/// Validated run configuration.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub field: Option<FieldDesc>,
    pub trials: Option<u64>,
    pub seed: u64,
    pub fixtures: Option<PathBuf>,
}

impl SuiteConfig {
    pub fn from_args(args: &VerifyArgs) -> CliResult<Self> {
        let field = args.field.as_deref().map(|s| s.parse::<FieldDesc>().map_err(|e| CliError::Config(format!("--field {s}: {e}")))).transpose()?;
        if args.trials == Some(0) {
            return Err(CliError::Config("--trials must be at least 1".into()));
        }
        if let Some(dir) = &args.fixtures {
            if !dir.is_dir() {
                return Err(CliError::Config(format!("--fixtures {}: not a directory", dir.display())));
            }
        }
        Ok(SuiteConfig { suite: args.suite, field, trials: args.trials, seed: args.seed, fixtures: args.fixtures.clone() })
    }

    /// Explicit trial count or the suite default.
    pub fn trials_or(&self, default: u64) -> u64 {
        self.trials.unwrap_or(default)
    }
}
