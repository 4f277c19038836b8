use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use serde::Serialize;
use zkgenus_core::necklace::MAX_BRUTE;
use zkgenus_core::{DEFAULT_AMBIENT_CAP, DEFAULT_BRUTE_CAP};

use crate::error::CliError;

pub const DEFAULT_N_MIN: usize = 3;
pub const DEFAULT_N_MAX: usize = 10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Surface,
    Orient,
    Embed,
    Quotient,
    Rh,
    Necklace,
    Recurrence,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Surface,
        Check::Orient,
        Check::Embed,
        Check::Quotient,
        Check::Rh,
        Check::Necklace,
        Check::Recurrence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Surface => "surface",
            Check::Orient => "orient",
            Check::Embed => "embed",
            Check::Quotient => "quotient",
            Check::Rh => "rh",
            Check::Necklace => "necklace",
            Check::Recurrence => "recurrence",
        }
    }

    /// Checks that make sense on an arbitrary face complex read from disk.
    pub fn applies_to_input(self) -> bool {
        matches!(self, Check::Surface | Check::Orient)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                format!("unknown check `{s}` (expected one of {})", known.join(", "))
            })
    }
}

/// Validated settings shared by every subcommand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub checks: Vec<Check>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub brute_cap: usize,
    pub ambient_cap: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n_min: DEFAULT_N_MIN,
            n_max: DEFAULT_N_MAX,
            checks: Check::ALL.to_vec(),
            format: Format::Text,
            out: None,
            brute_cap: DEFAULT_BRUTE_CAP,
            ambient_cap: DEFAULT_AMBIENT_CAP,
        }
    }
}

impl RunConfig {
    /// `--n` pins a single value; otherwise a missing bound defaults to the
    /// standard range, widened so that a lone `--n-min` above it still works.
    pub fn range(n: Option<usize>, n_min: Option<usize>, n_max: Option<usize>) -> (usize, usize) {
        match (n, n_min, n_max) {
            (Some(n), _, _) => (n, n),
            (None, lo, hi) => {
                let lo = lo.unwrap_or(DEFAULT_N_MIN);
                (lo, hi.unwrap_or(DEFAULT_N_MAX.max(lo)))
            }
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.n_min < 3 {
            return Err(CliError::Usage(format!(
                "n must be at least 3, got {}",
                self.n_min
            )));
        }
        if self.n_min > self.n_max {
            return Err(CliError::Usage(format!(
                "empty range: n-min {} exceeds n-max {}",
                self.n_min, self.n_max
            )));
        }
        if self.n_max > self.ambient_cap {
            return Err(CliError::Usage(format!(
                "n-max {} exceeds the ambient cap {}",
                self.n_max, self.ambient_cap
            )));
        }
        if self.ambient_cap > zkgenus_core::complex::MAX_AMBIENT {
            return Err(CliError::Usage(format!(
                "ambient cap {} exceeds the hard limit {}",
                self.ambient_cap,
                zkgenus_core::complex::MAX_AMBIENT
            )));
        }
        if self.brute_cap > MAX_BRUTE {
            return Err(CliError::Usage(format!(
                "brute-force cap {} exceeds the hard limit {MAX_BRUTE}",
                self.brute_cap
            )));
        }
        Ok(())
    }

    pub fn ns(&self) -> std::ops::RangeInclusive<usize> {
        self.n_min..=self.n_max
    }
}

/// Parse a comma-separated check list, keeping the canonical order and
/// dropping duplicates.
pub fn parse_checks(list: &str) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        checks.push(part.parse::<Check>().map_err(CliError::Usage)?);
    }
    if checks.is_empty() {
        return Err(CliError::Usage("no checks selected".into()));
    }
    checks.sort();
    checks.dedup();
    Ok(checks)
}
