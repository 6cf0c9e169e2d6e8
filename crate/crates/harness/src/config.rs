//! Sweep bounds, read from a flat `key = value` file and overridden by flags.

use std::fmt;
use std::ops::RangeInclusive;
use std::path::Path;
use std::str::FromStr;

use mhs_core::exactnum::QPoint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: {field}: {message}")]
    Invalid {
        line: usize,
        field: String,
        message: String,
    },
    #[error("{field}: {message}")]
    Bound { field: String, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Inclusive prime window, written `lo..hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeRange {
    pub lo: u64,
    pub hi: u64,
}

impl PrimeRange {
    pub fn primes(&self) -> Vec<u64> {
        RangeInclusive::new(self.lo, self.hi)
            .filter(|&p| mhs_core::exactnum::is_prime(p))
            .collect()
    }
}

impl FromStr for PrimeRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
        Ok(PrimeRange {
            lo: parse(lo)?,
            hi: parse(hi)?,
        })
    }
}

impl fmt::Display for PrimeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Index weight bound; for finite MZVs, the weight `k` of every statement.
    pub max_weight: u32,
    pub max_e: u32,
    pub max_n: u64,
    /// Truncation order `E` of connected-sum series.
    pub series_order: usize,
    pub q_points: Vec<QPoint>,
    pub prime_range: PrimeRange,
    /// Identity IDs or group names to run; empty runs everything.
    pub only: Vec<String>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_weight: 5,
            max_e: 3,
            max_n: 6,
            series_order: 4,
            q_points: vec![
                QPoint::parse("1/2").expect("valid"),
                QPoint::parse("2/3").expect("valid"),
            ],
            prime_range: PrimeRange { lo: 5, hi: 97 },
            only: Vec::new(),
        }
    }
}

pub fn parse_q_points(s: &str) -> Result<Vec<QPoint>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| QPoint::parse(t).map_err(|e| format!("{t:?}: {e}")))
        .collect()
}

pub fn parse_list(s: &str) -> Vec<String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(String::from)
        .collect()
}

impl SweepConfig {
    /// Parses the flat config format on top of the defaults. Blank lines and
    /// `#` comments are ignored; keys mirror the CLI flags
    /// (`max_weight`, `max_e`, `max_N`, `order`, `q`, `primes`, `only`).
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = SweepConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| ConfigError::Invalid {
                line,
                field: content.to_string(),
                message: "expected key = value".into(),
            })?;
            let (key, value) = (key.trim(), value.trim());
            let invalid = |message: String| ConfigError::Invalid {
                line,
                field: key.to_string(),
                message,
            };
            match key {
                "max_weight" => cfg.max_weight = value.parse().map_err(|e| invalid(format!("{e}")))?,
                "max_e" => cfg.max_e = value.parse().map_err(|e| invalid(format!("{e}")))?,
                "max_N" | "max_n" => cfg.max_n = value.parse().map_err(|e| invalid(format!("{e}")))?,
                "order" | "series_order" => cfg.series_order = value.parse().map_err(|e| invalid(format!("{e}")))?,
                "q" | "q_points" => cfg.q_points = parse_q_points(value).map_err(invalid)?,
                "primes" | "prime_range" => cfg.prime_range = value.parse().map_err(invalid)?,
                "only" => cfg.only = parse_list(value),
                _ => return Err(invalid("unknown key".into())),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bound = |field: &str, message: &str| ConfigError::Bound {
            field: field.into(),
            message: message.into(),
        };
        if self.max_weight < 1 {
            return Err(bound("max_weight", "must be >= 1"));
        }
        if self.max_n < 1 {
            return Err(bound("max_N", "must be >= 1"));
        }
        if self.q_points.is_empty() {
            return Err(bound("q", "needs at least one point"));
        }
        if self.prime_range.lo > self.prime_range.hi {
            return Err(bound("primes", "empty range"));
        }
        if self.prime_range.hi > 1 << 21 {
            return Err(bound("primes", "upper end too large"));
        }
        Ok(())
    }

    /// Whether `id` (in group `group`) passes the `only` filter.
    pub fn enabled(&self, group: &str, id: &str) -> bool {
        self.only.is_empty() || self.only.iter().any(|o| o == id || o == group)
    }
}
