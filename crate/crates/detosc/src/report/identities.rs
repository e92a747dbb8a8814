//! The aggregated identity suite over the automaton, spectral, and algebra
//! invariants, at configurable sizes.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    self, commutator, holstein_primakoff, ladder_from_positions, sector_two_k, su11_generators,
    su2_generators,
};
use crate::automaton::{CyclicModel, PairModel};
use crate::error::Result;
use crate::linalg::{dagger, identity, max_abs_diff};
use crate::spectral::{fourier_matrix, jm_state, JMLabel, ZetaPhase};

use super::{CheckResult, SuiteReport, REPORT_SCHEMA};

/// Sizes and tolerances for one suite run. Empty size lists skip the
/// corresponding family of checks.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    /// Cutoffs for the automaton/spectral checks.
    pub n_values: Vec<usize>,
    /// su(1,1) discrete-series weights (twice-value).
    pub two_k_values: Vec<u64>,
    /// Truncation dimension for the su(1,1) and oscillator checks.
    pub su11_dim: usize,
    /// su(2) weights (twice-value).
    pub two_l_values: Vec<u64>,
    /// `l` grid for the contraction-rate check.
    pub contraction_l_values: Vec<u64>,
    /// Largest rung for contraction errors.
    pub contraction_n_max: u64,
    /// Sectors for the position-ladder checks (twice-value `j`).
    pub two_j_values: Vec<i64>,
    /// Base absolute tolerance for O(1)-entry identities; dimension-scaled
    /// tolerances scale with it proportionally.
    pub base_tolerance: f64,
    /// Reserved for future sampled checks; recorded in the report.
    pub seed: Option<u64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            n_values: vec![3, 5, 7, 9],
            two_k_values: vec![1, 2, 3],
            su11_dim: 64,
            two_l_values: vec![1, 2, 3, 4, 5, 10, 40, 100, 200],
            contraction_l_values: vec![10_000, 100_000, 1_000_000],
            contraction_n_max: 8,
            two_j_values: vec![0, 1, 2],
            base_tolerance: 1e-12,
            seed: None,
        }
    }
}

impl SuiteConfig {
    /// Scale factor applied to every builtin tolerance.
    fn scale(&self) -> f64 {
        self.base_tolerance / 1e-12
    }
}

/// Runs every identity check at the configured sizes.
pub fn run_identity_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    run_identity_suite_with_fault(config, None)
}

/// Same as [`run_identity_suite`], but if `fault` names a check, one matrix
/// element of that check's operand is flipped before the residual is taken —
/// a self-test hook proving the harness detects broken inputs.
pub fn run_identity_suite_with_fault(
    config: &SuiteConfig,
    fault: Option<&str>,
) -> Result<SuiteReport> {
    let mut results = Vec::new();
    let s = config.scale();
    let tampered = |name: &str| fault == Some(name);

    for &n in &config.n_values {
        automaton_checks(&mut results, n, s)?;
        spectral_checks(&mut results, n, s)?;
    }
    su2_checks(&mut results, config, tampered("su2/commutators-dense"), s);
    su11_checks(&mut results, config, tampered("su11/commutators-dense"), s)?;
    oscillator_checks(&mut results, config, tampered("hp/ladder-commutator"), s)?;
    contraction_checks(&mut results, config, s);
    ladder_checks(&mut results, config, s)?;

    Ok(SuiteReport {
        schema: REPORT_SCHEMA,
        suite: "identities".into(),
        config: config.clone(),
        results,
    })
}

fn automaton_checks(out: &mut Vec<CheckResult>, n: usize, s: f64) -> Result<()> {
    let size = format!("N={n}");
    let thooft = CyclicModel::thooft(n, 1.0)?;
    let factor = CyclicModel::unphased(n, 1.0)?;
    let pair = PairModel::with_cutoff(n, 1.0)?;

    let u_thooft = thooft.evolution_matrix();
    let u_factor = factor.evolution_matrix();
    let u_tensor = pair.tensor_evolution();

    out.push(CheckResult::new(
        "unitarity/thooft",
        &size,
        u_thooft.unitarity_residual(),
        1e-13 * s,
    ));
    out.push(CheckResult::new(
        "unitarity/factor",
        &size,
        u_factor.unitarity_residual(),
        1e-13 * s,
    ));
    out.push(CheckResult::new(
        "unitarity/tensor",
        &size,
        u_tensor.unitarity_residual(),
        1e-13 * s,
    ));

    let minus_eye = identity(n).mapv(|z| -z);
    out.push(CheckResult::new(
        "periodicity/thooft",
        &size,
        max_abs_diff(&u_thooft.power(n), &minus_eye)?,
        1e-14 * n as f64 * s,
    ));
    out.push(CheckResult::new(
        "periodicity/factor",
        &size,
        max_abs_diff(&u_factor.power(n), &identity(n))?,
        1e-14 * n as f64 * s,
    ));

    // step^N = identity on every label, exact
    let mut bad_loops = 0u32;
    for k0 in 1..=n {
        let mut k = k0;
        for _ in 0..n {
            k = factor.step(k)?;
        }
        if k != k0 {
            bad_loops += 1;
        }
    }
    out.push(CheckResult::new(
        "step/period",
        &size,
        bad_loops as f64,
        0.5,
    ));

    // advance additivity, exact on indices and rational phases
    let mut bad_sums = 0u32;
    for (a, b) in [(0u64, 1u64), (1, 1), (3, 4), (n as u64, 2 * n as u64 + 1)] {
        let (k_ab, phase_ab) = thooft.advance(1, a + b)?;
        let (k_a, phase_a) = thooft.advance(1, a)?;
        let (k_chain, phase_b) = thooft.advance(k_a, b)?;
        if k_ab != k_chain || phase_ab != phase_a + phase_b {
            bad_sums += 1;
        }
    }
    out.push(CheckResult::new(
        "evolve/additivity",
        &size,
        bad_sums as f64,
        0.5,
    ));
    Ok(())
}

fn spectral_checks(out: &mut Vec<CheckResult>, n: usize, s: f64) -> Result<()> {
    let size = format!("N={n}");
    let f = fourier_matrix(n, true)?;
    let gram = dagger(&f).dot(&f);
    out.push(CheckResult::new(
        "fourier/gram",
        &size,
        crate::linalg::deviation_from_identity(&gram),
        1e-13 * n as f64 * s,
    ));

    // F† U F = diag(e^{i2πζn})
    let factor = CyclicModel::unphased(n, 1.0)?;
    let zeta = ZetaPhase::new(n)?;
    let conj = dagger(&f).dot(factor.evolution_matrix().matrix()).dot(&f);
    let mut polar = 0.0f64;
    for ((i, j), z) in conj.indexed_iter() {
        let target = if i == j {
            zeta.phase(i as i64)
        } else {
            Complex64::new(0.0, 0.0)
        };
        polar = polar.max((z - target).norm());
    }
    out.push(CheckResult::new(
        "polar/diagonalization",
        &size,
        polar,
        1e-12 * s,
    ));

    // eigenvalue laws on every |j,m⟩, forward and forward/backward
    let pair = PairModel::with_cutoff(n, 1.0)?;
    let u = pair.tensor_evolution();
    let ua = factor.evolution_matrix();
    let mixed = crate::linalg::kron(ua.matrix(), ua.dagger().matrix());
    let labels = JMLabel::all(n);
    let mut forward = 0.0f64;
    let mut skew = 0.0f64;
    for label in &labels {
        let v = jm_state(n, *label)?;
        let lam = zeta.phase(label.two_m);
        forward = forward.max(
            (u.matrix().dot(v.amplitudes()) - v.amplitudes().mapv(|z| z * lam))
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max),
        );
        let lam_j = zeta.phase(label.two_j);
        skew = skew.max(
            (mixed.dot(v.amplitudes()) - v.amplitudes().mapv(|z| z * lam_j))
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max),
        );
    }
    out.push(CheckResult::new(
        "jm/eigenvalue-forward",
        &size,
        forward,
        1e-12 * s,
    ));
    out.push(CheckResult::new("jm/eigenvalue-skew", &size, skew, 1e-12 * s));

    // pairwise orthonormality
    let states: Vec<_> = labels
        .iter()
        .map(|l| jm_state(n, *l))
        .collect::<Result<_>>()?;
    let mut gram_dev = 0.0f64;
    for (i, a) in states.iter().enumerate() {
        for (j, b) in states.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            gram_dev = gram_dev.max((a.overlap(b).norm() - target).abs());
        }
    }
    out.push(CheckResult::new(
        "jm/orthonormality",
        &size,
        gram_dev,
        1e-12 * s,
    ));

    // label bijection: modes -> (j,m) -> modes, exact
    let mut bad = 0u32;
    for label in &labels {
        let back = JMLabel::from_modes(n, label.n_a(), label.m_b())?;
        if back != *label {
            bad += 1;
        }
    }
    out.push(CheckResult::new("jm/label-bijection", &size, bad as f64, 0.5));
    Ok(())
}

fn su2_checks(out: &mut Vec<CheckResult>, config: &SuiteConfig, tamper: bool, s: f64) {
    for &two_l in &config.two_l_values {
        let size = format!("2l={two_l}");
        let rep = su2_generators(two_l);
        let exact = rep.exact_commutation_residual();
        out.push(CheckResult::new(
            "su2/commutators-exact",
            &size,
            exact
                .raising
                .max(exact.lowering)
                .max(exact.plus_minus_interior)
                .max(exact.plus_minus_boundary),
            1e-13 * s,
        ));

        // cross-check through dense float products; rounding grows with the
        // squared dimension of the ladder
        let mut lplus = rep.lplus().clone();
        if tamper {
            lplus[(1, 0)] += Complex64::new(0.5, 0.0);
        }
        let comm = commutator(&lplus, rep.lminus()).unwrap();
        let target = rep.l3().mapv(|z| z * 2.0);
        let dense = max_abs_diff(&comm, &target).unwrap();
        let dim = rep.dim() as f64;
        out.push(CheckResult::new(
            "su2/commutators-dense",
            &size,
            dense,
            3e-16 * dim * dim * s,
        ));
    }
}

fn su11_checks(
    out: &mut Vec<CheckResult>,
    config: &SuiteConfig,
    tamper: bool,
    s: f64,
) -> Result<()> {
    let dim = config.su11_dim;
    for &two_k in &config.two_k_values {
        let size = format!("2k={two_k},D={dim}");
        let rep = su11_generators(two_k, dim)?;
        let exact = rep.exact_commutation_residual();
        out.push(CheckResult::new(
            "su11/commutators-exact",
            &size,
            exact
                .raising
                .max(exact.lowering)
                .max(exact.plus_minus_interior),
            1e-12 * s,
        ));

        let mut lplus = rep.lplus().clone();
        if tamper {
            lplus[(1, 0)] += Complex64::new(0.5, 0.0);
        }
        let comm = commutator(&lplus, rep.lminus())?;
        let target = rep.l3().mapv(|z| z * -2.0);
        let mut interior = 0.0f64;
        let mut boundary = 0.0f64;
        for ((i, j), z) in comm.indexed_iter() {
            let d = (z - target[(i, j)]).norm();
            if i == dim - 1 {
                boundary = boundary.max(d);
            } else {
                interior = interior.max(d);
            }
        }
        out.push(CheckResult::new(
            "su11/commutators-dense",
            &size,
            interior,
            1e-11 * dim as f64 * s,
        ));

        // the truncation row must miss by exactly the cut radicand
        let cut = ((dim as u64 - 1 + two_k) * dim as u64) as f64;
        out.push(CheckResult::new(
            "su11/boundary-defect",
            &size,
            (boundary - cut).abs(),
            1e-9 * dim as f64 * s,
        ));
    }
    Ok(())
}

fn oscillator_checks(
    out: &mut Vec<CheckResult>,
    config: &SuiteConfig,
    tamper: bool,
    s: f64,
) -> Result<()> {
    if config.two_k_values.is_empty() {
        return Ok(());
    }
    let dim = config.su11_dim;
    let size = format!("2k=1,D={dim}");
    let rep = su11_generators(1, dim)?;
    let pair = holstein_primakoff(&rep)?;

    // the k = 1/2 map must land exactly on the oscillator elements
    let mut worst = 0.0f64;
    for n in 0..dim - 1 {
        worst = worst.max((pair.raising_element(n) - ((n + 1) as f64).sqrt()).abs());
    }
    out.push(CheckResult::new(
        "hp/oscillator-elements",
        &size,
        worst,
        1e-13 * s,
    ));

    let mut a = pair.a.clone();
    if tamper {
        a[(0, 1)] += Complex64::new(0.5, 0.0);
    }
    let comm = commutator(&a, &pair.a_dagger)?;
    let eye = identity(dim);
    let mut interior = 0.0f64;
    for ((i, j), z) in comm.indexed_iter() {
        if i < dim - 1 {
            interior = interior.max((z - eye[(i, j)]).norm());
        }
    }
    out.push(CheckResult::new(
        "hp/ladder-commutator",
        &size,
        interior,
        1e-12 * s,
    ));
    Ok(())
}

fn contraction_checks(out: &mut Vec<CheckResult>, config: &SuiteConfig, s: f64) {
    if config.contraction_l_values.is_empty() {
        return;
    }
    let size = format!(
        "l={}..{},n<={}",
        config.contraction_l_values.first().unwrap(),
        config.contraction_l_values.last().unwrap(),
        config.contraction_n_max
    );
    let mut oracle_gap = 0.0f64;
    let mut ratio_dev = 0.0f64;
    let mut monotone_breaks = 0u32;
    for n in 0..=config.contraction_n_max {
        let mut prev = f64::INFINITY;
        for &l in &config.contraction_l_values {
            let measured = algebra::contraction_error(2 * l, n);
            let predicted = algebra::contraction_error_closed_form(2 * l, n);
            oracle_gap = oracle_gap.max((measured - predicted).abs());
            if n > 0 {
                if measured >= prev {
                    monotone_breaks += 1;
                }
                prev = measured;
                let doubled = algebra::contraction_error(4 * l, n);
                ratio_dev = ratio_dev.max((measured / doubled - 2.0).abs());
            }
        }
    }
    out.push(CheckResult::new(
        "contraction/closed-form",
        &size,
        oracle_gap,
        1e-12 * s,
    ));
    out.push(CheckResult::new(
        "contraction/doubling-ratio",
        &size,
        ratio_dev,
        0.1,
    ));
    out.push(CheckResult::new(
        "contraction/monotone",
        &size,
        monotone_breaks as f64,
        0.5,
    ));
}

fn ladder_checks(out: &mut Vec<CheckResult>, config: &SuiteConfig, s: f64) -> Result<()> {
    for &n in &config.n_values {
        for &two_j in &config.two_j_values {
            if two_j.unsigned_abs() as usize + 2 > n {
                continue; // sector too small at this cutoff
            }
            let size = format!("N={n},2j={two_j}");
            let ladder = ladder_from_positions(n, two_j)?;
            let interior = ladder.interior();

            // sector shift realizes |j,m-1⟩ -> |j,m⟩: exact subdiagonal
            let mut shift_dev = 0.0f64;
            for m in 0..interior {
                shift_dev = shift_dev.max((ladder.shift[(m + 1, m)] - 1.0).norm());
            }
            out.push(CheckResult::new(
                "ladder/shift-identity",
                &size,
                shift_dev,
                1e-12 * s,
            ));

            let series = su11_generators(sector_two_k(two_j), ladder.dim)?;
            let mut series_dev = 0.0f64;
            for i in 0..ladder.dim {
                for j in 0..interior {
                    series_dev =
                        series_dev.max((ladder.lplus[(i, j)] - series.lplus()[(i, j)]).norm());
                    series_dev =
                        series_dev.max((ladder.lminus[(j, i)] - series.lminus()[(j, i)]).norm());
                }
            }
            out.push(CheckResult::new(
                "ladder/matches-series",
                &size,
                series_dev,
                1e-11 * s,
            ));

            let mut forms_dev = 0.0f64;
            for i in 0..interior {
                for j in 0..interior {
                    forms_dev =
                        forms_dev.max((ladder.lminus[(i, j)] - ladder.lminus_alt[(i, j)]).norm());
                }
            }
            out.push(CheckResult::new(
                "ladder/lowering-forms",
                &size,
                forms_dev,
                1e-12 * s,
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_is_green() {
        let report = run_identity_suite(&SuiteConfig::default()).unwrap();
        let failures = report.failures();
        assert!(
            failures.is_empty(),
            "failing checks: {:#?}",
            failures.iter().map(|f| f.line()).collect::<Vec<_>>()
        );
        assert!(!report.results.is_empty());
    }

    #[test]
    fn empty_size_lists_give_an_empty_report() {
        let config = SuiteConfig {
            n_values: vec![],
            two_k_values: vec![],
            two_l_values: vec![],
            contraction_l_values: vec![],
            two_j_values: vec![],
            ..SuiteConfig::default()
        };
        let report = run_identity_suite(&config).unwrap();
        assert!(report.results.is_empty());
        assert!(report.all_passed());
    }

    #[test]
    fn injected_fault_fails_the_named_check_only() {
        let config = SuiteConfig {
            n_values: vec![3],
            two_l_values: vec![4],
            ..SuiteConfig::default()
        };
        let report =
            run_identity_suite_with_fault(&config, Some("su2/commutators-dense")).unwrap();
        let failures = report.failures();
        assert_eq!(failures.len(), 1, "{failures:#?}");
        assert_eq!(failures[0].name, "su2/commutators-dense");

        let report2 = run_identity_suite_with_fault(&config, Some("hp/ladder-commutator")).unwrap();
        let failures2 = report2.failures();
        assert_eq!(failures2.len(), 1);
        assert_eq!(failures2[0].name, "hp/ladder-commutator");
    }

    #[test]
    fn reports_are_deterministic() {
        let config = SuiteConfig {
            n_values: vec![3, 5],
            ..SuiteConfig::default()
        };
        let a = run_identity_suite(&config).unwrap().to_json().unwrap();
        let b = run_identity_suite(&config).unwrap().to_json().unwrap();
        assert_eq!(a, b);
    }
}
