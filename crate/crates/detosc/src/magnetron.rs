//! Continuous cycloid trajectories that realize the cyclic models by
//! observation at the outer circle only.
//!
//! The curve `x(t) = cos(αt)cos(βt)`, `y(t) = -cos(αt)sin(βt)` touches the
//! unit circle at `t_j = jπ/α`, where the position angle is
//! `θ_j = jπ - βt_j = j(1 - β/α)π`. Rational `β/α` closes the orbit after
//! finitely many touches (the periodic, su(2)-like regime); irrational
//! `β/α` never returns (the su(1,1)-like regime). Angles are reduced into
//! `[0, 2π)` with exact rational arithmetic whenever the frequency ratio is
//! an exact rational.

use std::f64::consts::PI;

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::phase::Angle;

/// Frequencies of the parametric trajectory, with an optional exact rational
/// frequency ratio `q = β/α` for exact periodicity arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryParams {
    alpha: f64,
    beta: f64,
    ratio_hint: Option<Ratio<i64>>,
}

impl TrajectoryParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0) || !(beta > 0.0) {
            return Err(Error::InvalidTrajectory(format!(
                "frequencies must be positive: alpha = {alpha}, beta = {beta}"
            )));
        }
        Ok(Self {
            alpha,
            beta,
            ratio_hint: None,
        })
    }

    /// Builds `β = q·α` from an exact ratio, keeping `q` for exact angle
    /// reduction.
    pub fn from_ratio(alpha: f64, q: Ratio<i64>) -> Result<Self> {
        if !(alpha > 0.0) || q <= Ratio::new(0, 1) {
            return Err(Error::InvalidTrajectory(format!(
                "needs alpha > 0 and q > 0, got alpha = {alpha}, q = {q}"
            )));
        }
        let beta = alpha * q.to_f64().unwrap();
        Ok(Self {
            alpha,
            beta,
            ratio_hint: Some(q),
        })
    }

    /// Attaches an exact ratio to externally supplied frequencies; rejected
    /// when `|β/α - q|` exceeds 1e-12.
    pub fn with_ratio_hint(mut self, q: Ratio<i64>) -> Result<Self> {
        let actual = self.beta / self.alpha;
        if (actual - q.to_f64().unwrap()).abs() >= 1e-12 {
            return Err(Error::InvalidTrajectory(format!(
                "ratio hint {q} does not match beta/alpha = {actual}"
            )));
        }
        self.ratio_hint = Some(q);
        Ok(self)
    }

    /// The periodic seven-touch configuration: `q = 5/7`.
    pub fn seven_cycle() -> Self {
        Self::from_ratio(1.0, Ratio::new(5, 7)).unwrap()
    }

    /// The never-returning configuration: `β/α = 5/3 + π/40`.
    pub fn incommensurate() -> Self {
        let q = 5.0 / 3.0 + PI / 40.0;
        Self::new(1.0, q).unwrap()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn ratio_hint(&self) -> Option<Ratio<i64>> {
        self.ratio_hint
    }

    /// Touch instant `t_j = jπ/α`.
    pub fn touch_time(&self, j: u64) -> f64 {
        j as f64 * PI / self.alpha
    }

    /// Touch angle `θ_j = j(1 - β/α)π`, reduced into `[0, 2π)`; exact when a
    /// rational ratio is attached.
    pub fn touch_angle(&self, j: u64) -> f64 {
        match self.ratio_hint {
            Some(q) => touch_angle_exact(q, j).radians().rem_euclid(2.0 * PI),
            None => (j as f64 * (1.0 - self.beta / self.alpha) * PI).rem_euclid(2.0 * PI),
        }
    }
}

/// Exact touch angle `j(1 - q)π` as a reduced rational multiple of π.
fn touch_angle_exact(q: Ratio<i64>, j: u64) -> Angle {
    let one_minus_q = Ratio::new(1, 1) - q;
    Angle::from_pi_ratio(*one_minus_q.numer(), *one_minus_q.denom()).scale(j as i64)
}

/// One touch of the outer circle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TouchEvent {
    pub index: u64,
    pub time: f64,
    /// Position angle in `[0, 2π)`.
    pub angle: f64,
}

/// Verdict of the periodicity scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Commensurability {
    /// The orbit returns to the starting angle after `N` touches.
    Periodic(u64),
    /// No return found within the step budget.
    Aperiodic,
}

/// Point of the parametric trajectory at time `t`.
pub fn trajectory_point(params: &TrajectoryParams, t: f64) -> (f64, f64) {
    let radial = (params.alpha * t).cos();
    (
        radial * (params.beta * t).cos(),
        -radial * (params.beta * t).sin(),
    )
}

/// Touch events for `j = 0..=j_max`; every event sits on the unit circle.
pub fn touch_events(params: &TrajectoryParams, j_max: u64) -> Vec<TouchEvent> {
    (0..=j_max)
        .map(|j| TouchEvent {
            index: j,
            time: params.touch_time(j),
            angle: params.touch_angle(j),
        })
        .collect()
}

/// Scans for the least `N >= 1` with `θ_N ≡ 0 (mod 2π)`.
///
/// With an exact rational ratio attached the test is exact and `tol` is
/// ignored; otherwise the circular distance of `θ_N` from 0 is compared to
/// `tol`. Exhausting `max_steps` is not an error: it is the aperiodic
/// verdict.
pub fn classify_commensurability(
    params: &TrajectoryParams,
    tol: f64,
    max_steps: u64,
) -> Result<Commensurability> {
    if !(tol > 0.0) {
        return Err(Error::InvalidTrajectory(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    match params.ratio_hint {
        Some(q) => {
            for j in 1..=max_steps {
                if touch_angle_exact(q, j).is_zero() {
                    return Ok(Commensurability::Periodic(j));
                }
            }
            Ok(Commensurability::Aperiodic)
        }
        None => {
            let step = (1.0 - params.beta / params.alpha) * PI;
            for j in 1..=max_steps {
                let angle = (j as f64 * step).rem_euclid(2.0 * PI);
                if angle.min(2.0 * PI - angle) < tol {
                    return Ok(Commensurability::Periodic(j));
                }
            }
            Ok(Commensurability::Aperiodic)
        }
    }
}

/// True iff the touch angles `θ_0..θ_{N-1}` are exactly the `N`-th
/// roots-of-unity angles `{2πj/N}` as a set. Evaluated in exact rational
/// arithmetic.
pub fn uniform_coverage_check(q: Ratio<i64>, n_steps: u64) -> bool {
    if n_steps == 0 {
        return false;
    }
    let mut touched: Vec<Angle> = (0..n_steps).map(|j| touch_angle_exact(q, j)).collect();
    let mut roots: Vec<Angle> = (0..n_steps)
        .map(|j| Angle::from_turn_ratio(j as i64, n_steps as i64))
        .collect();
    let key = |a: &Angle| (*a.pi_multiple().numer(), *a.pi_multiple().denom());
    touched.sort_by_key(key);
    touched.dedup();
    roots.sort_by_key(key);
    touched == roots
}
