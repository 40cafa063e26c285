//! The verification suite: seeded, exact checks of every structural claim the crate makes,
//! grouped into numbered criteria with deterministic reports.

mod identities;
mod orbit_checks;
mod real_forms;
mod rep_checks;
mod sweep;

use serde::Serialize;

use crate::error::{Error, Result};

pub use sweep::{sweep_cells, SweepCell, SWEEP_T};

/// Criterion numbers and titles, in report order.
pub const CRITERIA: [(u8, &str); 9] = [
    (1, "annihilator sweep"),
    (2, "trace identities"),
    (3, "generating-function identities"),
    (4, "Cayley-Hamilton identity"),
    (5, "root-set coherence"),
    (6, "finite-dimensional representations"),
    (7, "projectors and Connes index"),
    (8, "real forms"),
    (9, "lemmas"),
];

/// One exact check with an optional witness of failure.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(label: impl Into<String>, passed: bool) -> Self {
        Check { label: label.into(), passed, witness: None }
    }

    pub fn witnessed(label: impl Into<String>, passed: bool, witness: impl FnOnce() -> String) -> Self {
        Check { label: label.into(), passed, witness: (!passed).then(witness) }
    }

    /// Passes when `a == b`; the witness prints both sides.
    pub fn equal<T: PartialEq + std::fmt::Debug>(label: impl Into<String>, a: &T, b: &T) -> Self {
        Self::witnessed(label, a == b, || format!("{a:?} != {b:?}"))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CriterionReport {
    pub criterion: u8,
    pub title: String,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl CriterionReport {
    fn new(criterion: u8, checks: Vec<Check>) -> Self {
        let title = CRITERIA.iter().find(|(id, _)| *id == criterion).map_or("", |(_, t)| t).to_string();
        let failed = checks.iter().filter(|c| !c.passed).count();
        CriterionReport { criterion, title, passed: failed == 0 && !checks.is_empty(), total: checks.len(), failed, checks }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 2024 }
    }
}

pub fn run_criterion(criterion: u8, cfg: &SuiteConfig) -> Result<CriterionReport> {
    let seed = cfg.seed;
    let checks = match criterion {
        1 => orbit_checks::annihilator_sweep(seed)?,
        2 => orbit_checks::trace_identities(seed)?,
        3 => identities::run(seed)?,
        4 => orbit_checks::cayley_hamilton_checks(seed)?,
        5 => orbit_checks::root_coherence(seed)?,
        6 => rep_checks::representations()?,
        7 => rep_checks::projectors_and_connes()?,
        8 => real_forms::run(seed)?,
        9 => orbit_checks::lemmas(seed)?,
        _ => return Err(Error::OutOfRange(format!("criterion {criterion} (expected 1..=9)"))),
    };
    Ok(CriterionReport::new(criterion, checks))
}

pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<CriterionReport>> {
    CRITERIA.iter().map(|(id, _)| run_criterion(*id, cfg)).collect()
}
