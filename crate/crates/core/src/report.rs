//! Verification records shared by every verifier.

use std::fmt;
use std::time::{Duration, Instant};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// One checked statement: its identity ID, parameters, outcome and both sides.
///
/// FAIL reports always carry both witnesses; SKIPPED reports carry a
/// machine-readable `reason`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub params: IndexMap<String, String>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub reason: Option<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            params: IndexMap::new(),
            status: Status::Pass,
            lhs: String::new(),
            rhs: String::new(),
            reason: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// PASS iff `equal`, recording both witnesses either way.
    pub fn compared(mut self, equal: bool, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        self.status = if equal { Status::Pass } else { Status::Fail };
        self.lhs = lhs.into();
        self.rhs = rhs.into();
        self
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.reason = Some(reason.into());
        self
    }

    /// Marks a failure with an explanation in `reason`.
    pub fn failed(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.reason = Some(reason.into());
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{} {} [{}]", self.status, self.identity, params.join(" "))?;
        match self.status {
            Status::Skipped => write!(f, " reason={}", self.reason.as_deref().unwrap_or("")),
            _ => write!(f, " lhs={} rhs={}", self.lhs, self.rhs),
        }
    }
}
