//! Figure-data export: trajectory and touch-event CSV files for the periodic
//! (`q = 5/7`) and incommensurate (`β/α = 5/3 + π/40`) configurations.
//!
//! Data files carry no timestamps; run parameters go into a JSON sidecar so
//! repeated exports are byte-identical.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::magnetron::{touch_events, trajectory_point, TouchEvent, TrajectoryParams};

use super::REPORT_SCHEMA;

/// Which captioned configuration to export.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// Periodic seven-touch orbit, `q = 5/7`.
    Fig1,
    /// Never-returning orbit, `β/α = 5/3 + π/40`.
    Fig2,
}

impl Figure {
    pub fn params(&self) -> TrajectoryParams {
        match self {
            Figure::Fig1 => TrajectoryParams::seven_cycle(),
            Figure::Fig2 => TrajectoryParams::incommensurate(),
        }
    }

    /// Touch count: the seven-cycle closes at j = 7; the incommensurate case
    /// is scanned through 10⁴ touches.
    pub fn default_touches(&self) -> u64 {
        match self {
            Figure::Fig1 => 7,
            Figure::Fig2 => 10_000,
        }
    }

    /// Touch intervals covered by the sampled trajectory file.
    pub fn default_trajectory_span(&self) -> u64 {
        match self {
            Figure::Fig1 => 7,
            Figure::Fig2 => 40,
        }
    }

    pub fn stem(&self) -> &'static str {
        match self {
            Figure::Fig1 => "fig1",
            Figure::Fig2 => "fig2",
        }
    }
}

/// Paths written by one export.
#[derive(Debug, Clone)]
pub struct FigureFiles {
    pub trajectory: PathBuf,
    pub touches: PathBuf,
    pub sidecar: PathBuf,
}

#[derive(Serialize)]
struct FigureSidecar {
    schema: u32,
    figure: String,
    alpha: f64,
    beta: f64,
    samples_per_interval: usize,
    trajectory_intervals: u64,
    touch_count: u64,
}

/// Exports with the captioned parameters and default sampling (1000 points
/// per touch interval).
pub fn export_figure_data(which: Figure, out_dir: &Path) -> Result<FigureFiles> {
    export_figure_data_with(
        which,
        out_dir,
        1000,
        which.default_touches(),
        which.default_trajectory_span(),
    )
}

/// Export with explicit sampling density, touch count, and trajectory span.
pub fn export_figure_data_with(
    which: Figure,
    out_dir: &Path,
    samples_per_interval: usize,
    touches: u64,
    trajectory_intervals: u64,
) -> Result<FigureFiles> {
    if samples_per_interval == 0 {
        return Err(Error::Config("sampling density must be positive".into()));
    }
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let params = which.params();

    let trajectory = out_dir.join(format!("{}_trajectory.csv", which.stem()));
    let mut csv = String::from("t,x,y\n");
    let interval = std::f64::consts::PI / params.alpha();
    let total = trajectory_intervals * samples_per_interval as u64;
    for i in 0..=total {
        let t = interval * i as f64 / samples_per_interval as f64;
        let (x, y) = trajectory_point(&params, t);
        csv.push_str(&format!("{t},{x},{y}\n"));
    }
    fs::write(&trajectory, csv).map_err(|e| Error::io(&trajectory, e))?;

    let touches_path = out_dir.join(format!("{}_touches.csv", which.stem()));
    let mut csv = String::from("j,t,theta\n");
    for ev in touch_events(&params, touches) {
        csv.push_str(&format!("{},{},{}\n", ev.index, ev.time, ev.angle));
    }
    fs::write(&touches_path, csv).map_err(|e| Error::io(&touches_path, e))?;

    let sidecar = out_dir.join(format!("{}_meta.json", which.stem()));
    let meta = FigureSidecar {
        schema: REPORT_SCHEMA,
        figure: which.stem().into(),
        alpha: params.alpha(),
        beta: params.beta(),
        samples_per_interval,
        trajectory_intervals,
        touch_count: touches,
    };
    let mut body = serde_json::to_string_pretty(&meta)?;
    body.push('\n');
    fs::write(&sidecar, body).map_err(|e| Error::io(&sidecar, e))?;

    Ok(FigureFiles {
        trajectory,
        touches: touches_path,
        sidecar,
    })
}

/// Reads a `t,x,y` trajectory file back.
pub fn read_trajectory_csv(path: &Path) -> Result<Vec<(f64, f64, f64)>> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| Error::csv(path, e))?;
    let mut out = Vec::new();
    for record in reader.deserialize() {
        let row: (f64, f64, f64) = record.map_err(|e| Error::csv(path, e))?;
        out.push(row);
    }
    Ok(out)
}

/// Reads a `j,t,theta` touch file back.
pub fn read_touch_csv(path: &Path) -> Result<Vec<TouchEvent>> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| Error::csv(path, e))?;
    let mut out = Vec::new();
    for record in reader.deserialize() {
        let (index, time, angle): (u64, f64, f64) = record.map_err(|e| Error::csv(path, e))?;
        out.push(TouchEvent { index, time, angle });
    }
    Ok(out)
}
