//! Analytic eigenbases and eigenvalue laws of the cyclic evolution operators.
//!
//! The phase-free factor matrix is diagonalized by discrete-Fourier vectors
//! with eigenvalues `λ_n = e^{i2πn/N}`, each of multiplicity 1. All evolution
//! phases are generated by the exact rational `ζ = (1-N)/N`, via the identity
//! `e^{i2πn/N} = e^{i2πζn}`. For the two-register system, the eigenvectors
//! are relabeled by half-integers `j = (n_A - m_B)/2`, `m = (n_A + m_B)/2`;
//! half-integers are stored in twice-value integer encoding (`two_j = 2j`),
//! never as floats.

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::automaton::BasisVector;
use crate::error::{Error, Result};
use crate::linalg::CMat;
use crate::phase::Angle;

/// The exact rational `ζ = (1-N)/N` that generates every evolution phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZetaPhase {
    n_states: usize,
    value: Ratio<i64>,
}

impl ZetaPhase {
    pub fn new(n_states: usize) -> Result<Self> {
        if n_states == 0 {
            return Err(Error::EmptyModel);
        }
        let n = n_states as i64;
        Ok(Self {
            n_states,
            value: Ratio::new(1 - n, n),
        })
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    /// `(1-N)/N` as an exact rational.
    pub fn value(&self) -> Ratio<i64> {
        self.value
    }

    /// The exact angle `2πζ·multiple`, reduced mod 2π.
    pub fn angle(&self, multiple: i64) -> Angle {
        let n = self.n_states as i64;
        // 2ζ·multiple in units of π; reduce the multiplier mod N first
        let m = multiple.rem_euclid(n);
        Angle::from_pi_ratio(2 * (1 - n) * m, n)
    }

    /// `e^{i2πζ·multiple}` as a unit complex number.
    pub fn phase(&self, multiple: i64) -> Complex64 {
        self.angle(multiple).to_complex()
    }
}

/// Label `|j,m⟩` of a two-register eigenvector, stored in twice-value
/// encoding together with the mode pair `(n_A, m_B)` it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JMLabel {
    pub two_j: i64,
    pub two_m: i64,
}

impl JMLabel {
    /// Builds the label from factor modes `n_A, m_B ∈ 0..N-1`.
    pub fn from_modes(n_states: usize, n_a: usize, m_b: usize) -> Result<Self> {
        let max = n_states - 1;
        for n in [n_a, m_b] {
            if n > max {
                return Err(Error::ModeOutOfRange { n, max });
            }
        }
        Ok(Self {
            two_j: n_a as i64 - m_b as i64,
            two_m: n_a as i64 + m_b as i64,
        })
    }

    /// Validates `(two_j, two_m)` against the cutoff and returns the label.
    pub fn new(n_states: usize, two_j: i64, two_m: i64) -> Result<Self> {
        let label = Self { two_j, two_m };
        label.validate(n_states)?;
        Ok(label)
    }

    pub fn validate(&self, n_states: usize) -> Result<()> {
        let n = n_states as i64;
        if (self.two_j + self.two_m).rem_euclid(2) != 0 {
            return Err(Error::InvalidLabel(format!(
                "two_j = {} and two_m = {} must share parity",
                self.two_j, self.two_m
            )));
        }
        if self.two_j.abs() > n - 1 {
            return Err(Error::InvalidLabel(format!(
                "|two_j| = {} exceeds N-1 = {}",
                self.two_j.abs(),
                n - 1
            )));
        }
        if self.two_m < self.two_j.abs() || self.two_m > 2 * (n - 1) - self.two_j.abs() {
            return Err(Error::InvalidLabel(format!(
                "two_m = {} outside |two_j| ..= 2(N-1)-|two_j| for N = {}",
                self.two_m, n_states
            )));
        }
        Ok(())
    }

    /// Factor mode `n_A = m + j`.
    pub fn n_a(&self) -> usize {
        ((self.two_m + self.two_j) / 2) as usize
    }

    /// Factor mode `m_B = m - j`.
    pub fn m_b(&self) -> usize {
        ((self.two_m - self.two_j) / 2) as usize
    }

    /// All `N²` labels in deterministic (n_A-major) order.
    pub fn all(n_states: usize) -> Vec<JMLabel> {
        let mut out = Vec::with_capacity(n_states * n_states);
        for n_a in 0..n_states {
            for m_b in 0..n_states {
                out.push(JMLabel::from_modes(n_states, n_a, m_b).unwrap());
            }
        }
        out
    }

    /// The fixed-`j` sector, ordered by increasing `m`; it has `N - |two_j|`
    /// members, `two_m = |two_j|, |two_j|+2, ..., 2(N-1)-|two_j|`.
    pub fn sector(n_states: usize, two_j: i64) -> Result<Vec<JMLabel>> {
        let n = n_states as i64;
        if two_j.abs() > n - 1 {
            return Err(Error::InvalidLabel(format!(
                "|two_j| = {} exceeds N-1 = {}",
                two_j.abs(),
                n - 1
            )));
        }
        let mut out = Vec::new();
        let mut two_m = two_j.abs();
        while two_m <= 2 * (n - 1) - two_j.abs() {
            out.push(JMLabel { two_j, two_m });
            two_m += 2;
        }
        Ok(out)
    }
}

/// One line of a finite-`N` Hamiltonian spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub label: JMLabel,
    /// Energy in units of 1/tau.
    pub energy: f64,
    /// The one-step eigenvalue `e^{i2πζ·2m}` of the tensor evolution.
    pub phase_eigenvalue: Complex64,
}

/// Normalized discrete-Fourier eigenvector
/// `(1/√N) Σ_k e^{±i2πnk/N} (k)`; `conjugate = true` selects the minus sign
/// used for the pair system (the default elsewhere in this crate).
pub fn fourier_eigenvector(n_states: usize, n: usize, conjugate: bool) -> Result<BasisVector> {
    if n_states == 0 {
        return Err(Error::EmptyModel);
    }
    if n >= n_states {
        return Err(Error::ModeOutOfRange {
            n,
            max: n_states - 1,
        });
    }
    let norm = 1.0 / (n_states as f64).sqrt();
    let sign = if conjugate { -1 } else { 1 };
    let mut v = Array1::zeros(n_states);
    for k in 1..=n_states {
        let angle = Angle::from_turn_ratio(sign * (n as i64) * (k as i64), n_states as i64);
        v[k - 1] = angle.to_complex() * norm;
    }
    Ok(BasisVector::new(v))
}

/// Matrix whose `n`-th column is `fourier_eigenvector(N, n, conjugate)`.
pub fn fourier_matrix(n_states: usize, conjugate: bool) -> Result<CMat> {
    let mut m = Array2::zeros((n_states, n_states));
    for n in 0..n_states {
        let v = fourier_eigenvector(n_states, n, conjugate)?;
        m.column_mut(n).assign(v.amplitudes());
    }
    Ok(m)
}

/// Eigenvalue `λ_n = e^{i2πn/N}` of the phase-free factor evolution, from the
/// exact rational angle.
pub fn eigenvalue_of(n_states: usize, n: usize) -> Result<Complex64> {
    if n_states == 0 {
        return Err(Error::EmptyModel);
    }
    if n >= n_states {
        return Err(Error::ModeOutOfRange {
            n,
            max: n_states - 1,
        });
    }
    Ok(Angle::from_turn_ratio(n as i64, n_states as i64).to_complex())
}

/// Normalized two-register eigenvector
/// `(1/N) Σ_{k,l} e^{-i2πζ(m(k+l) + j(k-l))} (k)_A ⊗ (l)_B`
/// in the A-major Kronecker convention.
pub fn jm_state(n_states: usize, label: JMLabel) -> Result<BasisVector> {
    label.validate(n_states)?;
    let zeta = ZetaPhase::new(n_states)?;
    let norm = 1.0 / n_states as f64;
    let mut v = Array1::zeros(n_states * n_states);
    for k in 1..=n_states as i64 {
        for l in 1..=n_states as i64 {
            // 2(m(k+l) + j(k-l)) is always even, so the half is an integer
            let twice = label.two_m * (k + l) + label.two_j * (k - l);
            debug_assert_eq!(twice.rem_euclid(2), 0);
            let angle = zeta.angle(-twice / 2);
            v[((k - 1) * n_states as i64 + (l - 1)) as usize] = angle.to_complex() * norm;
        }
    }
    Ok(BasisVector::new(v))
}

/// `N² × d` matrix of the fixed-`j` sector eigenvectors, columns ordered by
/// increasing `m`.
pub fn jm_sector_basis(n_states: usize, two_j: i64) -> Result<CMat> {
    let labels = JMLabel::sector(n_states, two_j)?;
    let mut basis = Array2::zeros((n_states * n_states, labels.len()));
    for (col, label) in labels.iter().enumerate() {
        let v = jm_state(n_states, *label)?;
        basis.column_mut(col).assign(v.amplitudes());
    }
    Ok(basis)
}

/// The formal frequency `ω = -ζ·2π/τ`; finite for every `N` and `→ 2π/τ` as
/// `N → ∞`.
pub fn omega(n_states: usize, tau: f64) -> Result<f64> {
    let zeta = ZetaPhase::new(n_states)?;
    let z = *zeta.value().numer() as f64 / *zeta.value().denom() as f64;
    Ok(-z * 2.0 * std::f64::consts::PI / tau)
}

/// Finite-`N` spectrum of the total Hamiltonian on every `|j,m⟩`:
/// `E = (2π/τ)(-ζ·2m + n_branch)`, where `n_branch` is the integer branch
/// freedom of the one-step eigenphase (1 unless stated otherwise).
pub fn hamiltonian_spectrum(
    n_states: usize,
    tau: f64,
    n_branch: i64,
) -> Result<Vec<SpectrumEntry>> {
    if !(tau > 0.0) {
        return Err(Error::NonPositiveTau(tau));
    }
    let zeta = ZetaPhase::new(n_states)?;
    let z = *zeta.value().numer() as f64 / *zeta.value().denom() as f64;
    let two_pi_over_tau = 2.0 * std::f64::consts::PI / tau;
    let entries = JMLabel::all(n_states)
        .into_iter()
        .map(|label| SpectrumEntry {
            label,
            energy: two_pi_over_tau * (-z * label.two_m as f64 + n_branch as f64),
            phase_eigenvalue: zeta.phase(label.two_m),
        })
        .collect();
    Ok(entries)
}

/// Eigenvalue of the conserved half-difference of the factor Hamiltonians,
/// `-(2πζ/τ)·j = ω·j`, on the sector labeled by `j`.
pub fn invariant_excess(n_states: usize, tau: f64, label: JMLabel) -> Result<f64> {
    if !(tau > 0.0) {
        return Err(Error::NonPositiveTau(tau));
    }
    label.validate(n_states)?;
    Ok(omega(n_states, tau)? * label.two_j as f64 / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{CyclicModel, PairModel};
    use crate::linalg::dagger;
    use num_complex::Complex64;

    fn apply(m: &CMat, v: &BasisVector) -> Array1<Complex64> {
        m.dot(v.amplitudes())
    }

    #[test]
    fn zeta_is_the_exact_rational() {
        let z = ZetaPhase::new(7).unwrap();
        assert_eq!(z.value(), Ratio::new(-6, 7));
        // value·N = 1-N as integers
        assert_eq!(z.value() * 7, Ratio::new(-6, 1));
    }

    #[test]
    fn zeta_phase_equals_root_of_unity() {
        // e^{i2πζn} = e^{i2πn/N} for all n
        for n_states in [2usize, 5, 9, 12] {
            let z = ZetaPhase::new(n_states).unwrap();
            for n in 0..3 * n_states as i64 {
                let lhs = z.phase(n);
                let rhs = Angle::from_turn_ratio(n, n_states as i64).to_complex();
                assert!((lhs - rhs).norm() < 1e-14, "N={n_states}, n={n}");
            }
        }
    }

    #[test]
    fn trivial_fourier_vectors() {
        let v = fourier_eigenvector(1, 0, false).unwrap();
        assert_eq!(v.amplitudes()[0], Complex64::new(1.0, 0.0));

        let u = fourier_eigenvector(4, 0, true).unwrap();
        for k in 0..4 {
            assert!((u.amplitudes()[k] - Complex64::new(0.5, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn fourier_mode_out_of_range_is_rejected() {
        assert!(fourier_eigenvector(4, 4, false).is_err());
        assert!(eigenvalue_of(4, 7).is_err());
    }

    #[test]
    fn factor_evolution_has_the_stated_eigenvector() {
        // N=5, n=2: eigenvalue e^{i4π/5} on the conjugate-convention vector
        let model = CyclicModel::unphased(5, 1.0).unwrap();
        let u = model.evolution_matrix();
        let v = fourier_eigenvector(5, 2, true).unwrap();
        let lam = eigenvalue_of(5, 2).unwrap();
        let expected = Angle::from_pi_ratio(4, 5).to_complex();
        assert!((lam - expected).norm() < 1e-15);
        let residual = (apply(u.matrix(), &v) - v.amplitudes().mapv(|z| z * lam))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        assert!(residual < 1e-13);
    }

    #[test]
    fn plus_convention_vector_gains_the_conjugate_eigenvalue() {
        // the plus-sign vector picks up e^{-i2πn/N}, times the model phase
        let model = CyclicModel::thooft(5, 1.0).unwrap();
        let u = model.evolution_matrix();
        let v = fourier_eigenvector(5, 2, false).unwrap();
        let lam = model.phase_per_step().to_complex() * eigenvalue_of(5, 2).unwrap().conj();
        let residual = (apply(u.matrix(), &v) - v.amplitudes().mapv(|z| z * lam))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        assert!(residual < 1e-13);
    }

    #[test]
    fn eigenvalues_n4_are_the_fourth_roots() {
        let expected = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, -1.0),
        ];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(eigenvalue_of(4, n).unwrap(), *want);
        }
        assert_eq!(eigenvalue_of(1, 0).unwrap(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn fourier_basis_is_orthonormal() {
        for n_states in [2usize, 5, 9, 16] {
            let f = fourier_matrix(n_states, true).unwrap();
            let gram = dagger(&f).dot(&f);
            let dev = crate::linalg::deviation_from_identity(&gram);
            assert!(
                dev < 1e-13 * n_states as f64,
                "N={n_states}: {dev:.3e}"
            );
        }
    }

    #[test]
    fn fourier_conjugation_diagonalizes_the_factor() {
        // F† U F = diag(1, e^{i2πζ}, ..., e^{i2πζ(N-1)})
        for n_states in [3usize, 5, 8] {
            let model = CyclicModel::unphased(n_states, 1.0).unwrap();
            let f = fourier_matrix(n_states, true).unwrap();
            let conj = dagger(&f).dot(model.evolution_matrix().matrix()).dot(&f);
            let zeta = ZetaPhase::new(n_states).unwrap();
            let mut off = 0.0f64;
            let mut diag = 0.0f64;
            for ((i, j), z) in conj.indexed_iter() {
                if i == j {
                    diag = diag.max((z - zeta.phase(i as i64)).norm());
                } else {
                    off = off.max(z.norm());
                }
            }
            assert!(off < 1e-12, "N={n_states} off-diagonal {off:.3e}");
            assert!(diag < 1e-12, "N={n_states} diagonal {diag:.3e}");
        }
    }

    #[test]
    fn jm_label_bijection_is_exact() {
        for n_states in 1..=64usize {
            let labels = JMLabel::all(n_states);
            assert_eq!(labels.len(), n_states * n_states);
            for label in labels {
                let back = JMLabel::from_modes(n_states, label.n_a(), label.m_b()).unwrap();
                assert_eq!(back, label);
                label.validate(n_states).unwrap();
            }
        }
    }

    #[test]
    fn jm_label_rejects_bad_parity_and_range() {
        assert!(JMLabel::new(5, 1, 2).is_err());
        assert!(JMLabel::new(5, 5, 5).is_err());
        assert!(JMLabel::new(5, 0, 10).is_err());
        assert!(JMLabel::new(5, 2, 0).is_err());
        assert!(jm_state(5, JMLabel { two_j: 1, two_m: 2 }).is_err());
    }

    #[test]
    fn jm_zero_label_is_the_uniform_vector() {
        let v = jm_state(4, JMLabel::new(4, 0, 0).unwrap()).unwrap();
        for z in v.amplitudes() {
            assert!((z - Complex64::new(0.25, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn jm_states_diagonalize_the_tensor_evolution() {
        let n_states = 5;
        let pair = PairModel::with_cutoff(n_states, 1.0).unwrap();
        let u = pair.tensor_evolution();
        let zeta = ZetaPhase::new(n_states).unwrap();
        for label in JMLabel::all(n_states) {
            let v = jm_state(n_states, label).unwrap();
            let lam = zeta.phase(label.two_m);
            let residual = (apply(u.matrix(), &v) - v.amplitudes().mapv(|z| z * lam))
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            assert!(residual < 1e-12, "{label:?}: {residual:.3e}");
        }
    }

    #[test]
    fn forward_backward_evolution_reads_off_j() {
        let n_states = 5;
        let model = CyclicModel::unphased(n_states, 1.0).unwrap();
        let ua = model.evolution_matrix();
        let mixed = crate::linalg::kron(ua.matrix(), ua.dagger().matrix());
        let zeta = ZetaPhase::new(n_states).unwrap();
        for label in JMLabel::all(n_states) {
            let v = jm_state(n_states, label).unwrap();
            let lam = zeta.phase(label.two_j);
            let residual = (mixed.dot(v.amplitudes()) - v.amplitudes().mapv(|z| z * lam))
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            assert!(residual < 1e-12, "{label:?}: {residual:.3e}");
        }
    }

    #[test]
    fn jm_states_with_distinct_labels_are_orthogonal() {
        let n_states = 4;
        let labels = JMLabel::all(n_states);
        let vs: Vec<_> = labels
            .iter()
            .map(|l| jm_state(n_states, *l).unwrap())
            .collect();
        for (i, a) in vs.iter().enumerate() {
            for (ii, b) in vs.iter().enumerate() {
                let ov = a.overlap(b).norm();
                if i == ii {
                    assert!((ov - 1.0).abs() < 1e-12);
                } else {
                    assert!(ov < 1e-12, "{:?} vs {:?}: {ov:.3e}", labels[i], labels[ii]);
                }
            }
        }
    }

    #[test]
    fn spectrum_matches_the_hand_value() {
        // N=11, tau=1, m=3 (two_m=6), branch 1: E = 2π(6·(10/11) + 1)
        let entries = hamiltonian_spectrum(11, 1.0, 1).unwrap();
        let want = 2.0 * std::f64::consts::PI * (6.0 * (10.0 / 11.0) + 1.0);
        let entry = entries
            .iter()
            .find(|e| e.label.two_j == 0 && e.label.two_m == 6)
            .unwrap();
        assert!((entry.energy - want).abs() < 1e-12);
    }

    #[test]
    fn spectrum_spacing_is_twice_omega() {
        let n_states = 9;
        let tau = 0.5;
        let w = omega(n_states, tau).unwrap();
        let entries = hamiltonian_spectrum(n_states, tau, 1).unwrap();
        let at = |two_m: i64| {
            entries
                .iter()
                .find(|e| e.label.two_j == 0 && e.label.two_m == two_m)
                .unwrap()
                .energy
        };
        for two_m in [0i64, 2, 4, 6] {
            let gap = at(two_m + 2) - at(two_m);
            assert!((gap - 2.0 * w).abs() < 1e-12);
        }
    }

    #[test]
    fn spectrum_approaches_the_oscillator_ladder() {
        // E - ω(2m + n_branch) = (2π/τ)·n_branch/N, vanishing as N grows
        let tau = 1.0;
        let n_branch = 1i64;
        let mut last = f64::INFINITY;
        for n_states in [11usize, 101, 1001] {
            let w = omega(n_states, tau).unwrap();
            let entries = hamiltonian_spectrum(n_states, tau, n_branch).unwrap();
            let e = entries
                .iter()
                .find(|e| e.label.two_j == 0 && e.label.two_m == 4)
                .unwrap();
            let target = w * (4.0 + n_branch as f64);
            let gap = (e.energy - target).abs();
            let predicted = 2.0 * std::f64::consts::PI / tau * n_branch as f64 / n_states as f64;
            assert!((gap - predicted).abs() < 1e-10);
            assert!(gap < last);
            last = gap;
        }
    }

    #[test]
    fn invariant_excess_values() {
        // j = 0 vanishes for any N
        let zero = JMLabel::new(6, 0, 4).unwrap();
        assert_eq!(invariant_excess(6, 1.0, zero).unwrap(), 0.0);
        // N=9, tau=1, j=2: ω·2 with ω = (8/9)·2π
        let label = JMLabel::new(9, 4, 6).unwrap();
        let want = (8.0 / 9.0) * 2.0 * std::f64::consts::PI * 2.0;
        assert!((invariant_excess(9, 1.0, label).unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn sector_enumeration_has_the_right_size() {
        for n_states in 2..=12usize {
            for two_j in -(n_states as i64 - 1)..=(n_states as i64 - 1) {
                let sector = JMLabel::sector(n_states, two_j).unwrap();
                assert_eq!(sector.len(), n_states - two_j.unsigned_abs() as usize);
            }
        }
    }
}
