//! Convergence study of the su(2) → h(1) contraction.

use serde::Serialize;

use crate::algebra::{contraction_error_closed_form, su2_contract};
use crate::error::{Error, Result};

use super::REPORT_SCHEMA;

/// One `(l, n)` cell of the study.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConvergenceRow {
    pub l: u64,
    pub n: u64,
    /// `|⟨n+1|a†|n⟩ - √(n+1)|` read off the rescaled ladder matrix.
    pub measured_error: f64,
    /// The closed-form oracle `√(n+1)·|√(1-n/(2l)) - 1|`.
    pub predicted_error: f64,
    /// `error(l)/error(2l)` at fixed `n`; empty where the error vanishes.
    pub ratio_to_double: Option<f64>,
}

/// Tabulated contraction errors over an `l` grid.
#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    pub schema: u32,
    pub suite: String,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    /// Largest gap between the measured error and the closed-form oracle.
    pub fn max_oracle_gap(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| (r.measured_error - r.predicted_error).abs())
            .fold(0.0, f64::max)
    }

    /// Largest deviation of the doubling ratio from 2.
    pub fn max_ratio_deviation(&self) -> f64 {
        self.rows
            .iter()
            .filter_map(|r| r.ratio_to_double)
            .map(|x| (x - 2.0).abs())
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    /// CSV with header `l,n,measured_error,predicted_error,ratio_to_double`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("l,n,measured_error,predicted_error,ratio_to_double\n");
        for r in &self.rows {
            let ratio = r.ratio_to_double.map(|x| x.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.l, r.n, r.measured_error, r.predicted_error, ratio
            ));
        }
        out
    }
}

/// Per-(l, n) error of the rescaled su(2) ladder against the oscillator
/// target, with the closed-form prediction and the halving ratio under
/// `l -> 2l`. `l_values` must be nonempty and ascending.
pub fn run_contraction_study(l_values: &[u64], n_max: u64) -> Result<ConvergenceReport> {
    if l_values.is_empty() {
        return Err(Error::Config("contraction study needs at least one l".into()));
    }
    if l_values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Config("l values must be strictly ascending".into()));
    }
    if 2 * l_values[0] < n_max + 2 {
        return Err(Error::Config(format!(
            "smallest l = {} cannot hold rungs up to n = {n_max}",
            l_values[0]
        )));
    }
    let dim = n_max as usize + 2;
    let mut rows = Vec::new();
    for &l in l_values {
        let ladder = su2_contract(2 * l, dim)?;
        let doubled = su2_contract(4 * l, dim)?;
        for n in 0..=n_max {
            let target = ((n + 1) as f64).sqrt();
            let measured = (ladder.raising_element(n as usize) - target).abs();
            let predicted = contraction_error_closed_form(2 * l, n);
            let next = (doubled.raising_element(n as usize) - target).abs();
            let ratio_to_double = if next > 0.0 { Some(measured / next) } else { None };
            rows.push(ConvergenceRow {
                l,
                n,
                measured_error: measured,
                predicted_error: predicted,
                ratio_to_double,
            });
        }
    }
    Ok(ConvergenceReport {
        schema: REPORT_SCHEMA,
        suite: "contract".into(),
        rows,
    })
}
