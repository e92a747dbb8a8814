//! Verification harness: identity suites, convergence studies, phase checks,
//! and figure-data exports, serialized as diffable CSV/JSON artifacts.
//!
//! Reports are deterministic: no timestamps live inside data files, field
//! order is fixed, and repeated runs with the same config are byte-identical.

mod contraction;
mod figures;
mod identities;
mod phase_check;

pub use contraction::{run_contraction_study, ConvergenceReport, ConvergenceRow};
pub use figures::{
    export_figure_data, export_figure_data_with, read_touch_csv, read_trajectory_csv, Figure,
    FigureFiles,
};
pub use identities::{run_identity_suite, run_identity_suite_with_fault, SuiteConfig};
pub use phase_check::{run_phase_check, PhaseCheckResult};

use serde::Serialize;

use crate::error::{Error, Result};

/// Version of the JSON report layout.
pub const REPORT_SCHEMA: u32 = 1;

/// One named check: the measured residual against its pinned tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub size: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, size: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        let pass = residual <= tolerance;
        Self {
            name: name.into(),
            size: size.into(),
            residual,
            tolerance,
            pass,
        }
    }

    pub fn line(&self) -> String {
        format!(
            "{} {:<38} {:<14} residual {:.3e} tol {:.3e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.size,
            self.residual,
            self.tolerance,
        )
    }
}

/// Top-level report: `{schema, suite, config, results}`.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: String,
    pub config: SuiteConfig,
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.results.iter().filter(|r| !r.pass).collect()
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn write_json(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_json()?).map_err(|e| Error::io(path, e))
    }
}
