use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SCHEMA: &str = "dirac-disquant/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Suite {
    #[serde(rename = "all")]
    All,
    #[serde(rename = "algebra")]
    Algebra,
    #[serde(rename = "appendixA")]
    AppendixA,
    #[serde(rename = "appendixB")]
    AppendixB,
    #[serde(rename = "appendixC")]
    AppendixC,
    #[serde(rename = "particle")]
    Particle,
    #[serde(rename = "rotator")]
    Rotator,
    #[serde(rename = "consistency")]
    Consistency,
}

impl Suite {
    pub const COMPONENTS: [Suite; 7] = [
        Suite::Algebra,
        Suite::AppendixA,
        Suite::AppendixB,
        Suite::AppendixC,
        Suite::Particle,
        Suite::Rotator,
        Suite::Consistency,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Algebra => "algebra",
            Suite::AppendixA => "appendixA",
            Suite::AppendixB => "appendixB",
            Suite::AppendixC => "appendixC",
            Suite::Particle => "particle",
            Suite::Rotator => "rotator",
            Suite::Consistency => "consistency",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::COMPONENTS)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::domain("suite", format!("unknown suite '{s}'")))
    }
}

/// Seed, tolerances and physical constants for a verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    /// Multiplies every tolerance.
    pub tol_scale: f64,
    /// Per-check tolerance overrides, keyed by check id.
    pub tolerances: BTreeMap<String, f64>,
    pub m: f64,
    pub m0: f64,
    pub hbar: f64,
    pub c: f64,
    pub e: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 42,
            tol_scale: 1.0,
            tolerances: BTreeMap::new(),
            m: 1.0,
            m0: 1.0,
            hbar: 1.0,
            c: 1.0,
            e: 1.0,
        }
    }
}

impl RunConfig {
    pub fn tolerance(&self, id: &str, default: f64) -> f64 {
        self.tolerances.get(id).copied().unwrap_or(default) * self.tol_scale
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    /// What the check establishes.
    pub reference: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub suite: Suite,
    pub seed: u64,
    pub records: Vec<CheckRecord>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn new(suite: Suite, seed: u64, records: Vec<CheckRecord>) -> Self {
        let passed = records.iter().filter(|r| r.passed).count();
        VerificationReport {
            schema: SCHEMA.to_string(),
            suite,
            seed,
            failed: records.len() - passed,
            passed,
            records,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    pub fn record(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id)
    }
}

/// Collects check records for one suite.
pub(crate) struct Recorder<'a> {
    pub cfg: &'a RunConfig,
    pub records: Vec<CheckRecord>,
}

impl<'a> Recorder<'a> {
    pub fn new(cfg: &'a RunConfig) -> Self {
        Recorder {
            cfg,
            records: Vec::new(),
        }
    }

    /// Records `residual <= tolerance`; NaN and errors count as failures.
    pub fn check(&mut self, id: &str, reference: &str, residual: f64, tolerance: f64) {
        let tolerance = self.cfg.tolerance(id, tolerance);
        self.records.push(CheckRecord {
            id: id.to_string(),
            reference: reference.to_string(),
            residual,
            tolerance,
            passed: residual <= tolerance,
            seed: self.cfg.seed,
        });
    }
}
