//! Geometric-phase check: one formal period multiplies every state by -1.

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::su11_generators;
use crate::error::{Error, Result};

/// Outcome of evolving `exp(-iωL3·T)` through whole periods `T = 2π/ω` on
/// the `k = 1/2` truncation.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PhaseCheckResult {
    pub period_count: u64,
    /// The common diagonal phase after `period_count` periods.
    pub resulting_phase: Complex64,
    /// True when every diagonal entry is -1 to within 1e-12.
    pub is_geometric_minus_one: bool,
    /// Largest deviation of a diagonal entry from `(-1)^period_count`.
    pub max_deviation: f64,
}

/// Evolves the oscillator-like Hamiltonian `ωL3` on the `k = 1/2` ladder
/// through `cycles` whole periods. The result is independent of `ω` because
/// only `ωT = 2π` enters: one period gives `e^{-i2π(n+1/2)} = -1` on every
/// rung, two periods restore the identity.
pub fn run_phase_check(dim: usize, cycles: u64) -> Result<PhaseCheckResult> {
    if cycles < 1 {
        return Err(Error::Config("phase check needs cycles >= 1".into()));
    }
    let rep = su11_generators(1, dim)?;
    let omega = 1.0;
    let period = 2.0 * std::f64::consts::PI / omega;
    let expected = if cycles % 2 == 1 { -1.0 } else { 1.0 };
    let mut max_deviation = 0.0f64;
    let mut first = Complex64::new(0.0, 0.0);
    for n in 0..dim {
        let energy = omega * rep.l3()[(n, n)].re;
        let entry = Complex64::from_polar(1.0, -energy * period * cycles as f64);
        if n == 0 {
            first = entry;
        }
        max_deviation = max_deviation.max((entry - Complex64::new(expected, 0.0)).norm());
    }
    Ok(PhaseCheckResult {
        period_count: cycles,
        resulting_phase: first,
        is_geometric_minus_one: cycles % 2 == 1 && max_deviation < 1e-12,
        max_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_period_is_minus_identity() {
        let r = run_phase_check(32, 1).unwrap();
        assert!(r.is_geometric_minus_one);
        assert!(r.max_deviation < 1e-12);
        assert!((r.resulting_phase - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn two_periods_restore_the_identity() {
        let r = run_phase_check(32, 2).unwrap();
        assert!(!r.is_geometric_minus_one);
        assert!(r.max_deviation < 1e-12);
    }

    #[test]
    fn even_periods_stay_trivial() {
        for cycles in [4u64, 6, 10] {
            let r = run_phase_check(16, cycles).unwrap();
            assert!(r.max_deviation < 1e-11, "cycles={cycles}");
        }
    }

    #[test]
    fn zero_cycles_is_a_config_error() {
        assert!(run_phase_check(8, 0).is_err());
    }

    #[test]
    fn unit_modulus_of_the_phase() {
        let r = run_phase_check(24, 3).unwrap();
        assert!((r.resulting_phase.norm() - 1.0).abs() < 1e-14);
    }
}
