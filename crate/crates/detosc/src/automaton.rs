//! Deterministic cyclic state machines and their one-time-step evolution
//! operators.
//!
//! A model is a register of `N` position states `(k)`, `k = 1..N`, advancing
//! one slot per tick of size `tau` with the wrap `(N) -> (1)`. Positions embed
//! as one-hot vectors, `(k) = e_{k-1}`, and one tick is the cyclic permutation
//! with ones on the subdiagonal and a single one in the top-right corner,
//! multiplied by a unit phase per step:
//!
//! * the single-register model uses the phase `e^{-iπ/N}`, so `U^N = -1`;
//! * each factor of the two-register pair model is phase-free, so `U^N = 1`.
//!
//! One-hot states are evolved by index arithmetic plus an exact rational
//! phase accumulator; dense matrices are built only where a matrix is the
//! object under study.

use ndarray::{Array1, Array2};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{kron, CMat, CVec};
use crate::phase::Angle;

/// A single cyclic register: `N` states, time step `tau`, and the unit phase
/// attached to every step.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicModel {
    n_states: usize,
    tau: f64,
    phase_per_step: Angle,
}

impl CyclicModel {
    /// Cyclic model with the phase convention `e^{-iπ/N}` per step, for which
    /// the evolution matrix obeys `U^N = -1`.
    pub fn thooft(n_states: usize, tau: f64) -> Result<Self> {
        if n_states == 0 {
            return Err(Error::EmptyModel);
        }
        let n = i64::try_from(n_states).map_err(|_| Error::EmptyModel)?;
        Self::new(n_states, tau, Angle::from_pi_ratio(-1, n))
    }

    /// Phase-free cyclic model, one factor of the two-register pair system;
    /// the evolution matrix obeys `U^N = 1`.
    pub fn unphased(n_states: usize, tau: f64) -> Result<Self> {
        Self::new(n_states, tau, Angle::zero())
    }

    pub fn new(n_states: usize, tau: f64, phase_per_step: Angle) -> Result<Self> {
        if n_states == 0 {
            return Err(Error::EmptyModel);
        }
        if !(tau > 0.0) {
            return Err(Error::NonPositiveTau(tau));
        }
        Ok(Self {
            n_states,
            tau,
            phase_per_step,
        })
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn phase_per_step(&self) -> Angle {
        self.phase_per_step
    }

    fn check_position(&self, k: usize) -> Result<()> {
        if k < 1 || k > self.n_states {
            return Err(Error::PositionOutOfRange {
                k,
                n: self.n_states,
            });
        }
        Ok(())
    }

    /// One deterministic tick: `k -> k+1` reduced into `1..=N`.
    pub fn step(&self, k: usize) -> Result<usize> {
        self.check_position(k)?;
        Ok(k % self.n_states + 1)
    }

    /// `steps` ticks by index arithmetic, with the accumulated global phase.
    pub fn advance(&self, k: usize, steps: u64) -> Result<(usize, Angle)> {
        self.check_position(k)?;
        let n = self.n_states as u64;
        let shifted = ((k as u64 - 1 + steps % n) % n + 1) as usize;
        let phase = self.step_phase(steps);
        Ok((shifted, phase))
    }

    fn step_phase(&self, steps: u64) -> Angle {
        // the phase has period dividing 2N steps, so reducing first keeps i64 safe
        let reduced = steps % (2 * self.n_states as u64);
        self.phase_per_step.scale(reduced as i64)
    }

    /// The dense `N×N` one-step evolution matrix: `phase_per_step` times the
    /// cyclic permutation with ones on the subdiagonal and a one in the
    /// top-right corner.
    pub fn evolution_matrix(&self) -> EvolutionOperator {
        let n = self.n_states;
        let phase = self.phase_per_step.to_complex();
        let mut m = Array2::zeros((n, n));
        for col in 0..n {
            m[((col + 1) % n, col)] = phase;
        }
        EvolutionOperator { matrix: m }
    }

    /// Applies the evolution `steps` times to a dense state vector. The
    /// operator is a phased cyclic permutation, so this is an index rotation
    /// plus one global phase; no matrix product is involved.
    pub fn evolve(&self, state: &BasisVector, steps: u64) -> Result<BasisVector> {
        let n = self.n_states;
        if state.dim() != n {
            return Err(Error::StateArity {
                got: state.dim(),
                expected: n,
            });
        }
        let shift = (steps % n as u64) as usize;
        let phase = self.step_phase(steps).to_complex();
        let mut out = Array1::zeros(n);
        for i in 0..n {
            out[(i + shift) % n] = phase * state.amplitudes()[i];
        }
        Ok(BasisVector::new(out))
    }
}

/// Two synchronized cyclic registers with a shared cutoff `N` and time step;
/// both factors are phase-free.
#[derive(Debug, Clone, PartialEq)]
pub struct PairModel {
    model_a: CyclicModel,
    model_b: CyclicModel,
}

impl PairModel {
    pub fn new(model_a: CyclicModel, model_b: CyclicModel) -> Result<Self> {
        if model_a.n_states != model_b.n_states {
            return Err(Error::CutoffMismatch {
                a: model_a.n_states,
                b: model_b.n_states,
            });
        }
        if model_a.tau != model_b.tau {
            return Err(Error::TauMismatch {
                a: model_a.tau,
                b: model_b.tau,
            });
        }
        Ok(Self { model_a, model_b })
    }

    /// The standard two-register system at cutoff `N`.
    pub fn with_cutoff(n_states: usize, tau: f64) -> Result<Self> {
        Ok(Self {
            model_a: CyclicModel::unphased(n_states, tau)?,
            model_b: CyclicModel::unphased(n_states, tau)?,
        })
    }

    pub fn n_states(&self) -> usize {
        self.model_a.n_states
    }

    pub fn tau(&self) -> f64 {
        self.model_a.tau
    }

    pub fn model_a(&self) -> &CyclicModel {
        &self.model_a
    }

    pub fn model_b(&self) -> &CyclicModel {
        &self.model_b
    }

    /// One synchronized tick of both registers.
    pub fn step(&self, k_a: usize, k_b: usize) -> Result<(usize, usize)> {
        Ok((self.model_a.step(k_a)?, self.model_b.step(k_b)?))
    }

    /// `steps` synchronized ticks with the accumulated global phase.
    pub fn advance(&self, k_a: usize, k_b: usize, steps: u64) -> Result<((usize, usize), Angle)> {
        let (a, pa) = self.model_a.advance(k_a, steps)?;
        let (b, pb) = self.model_b.advance(k_b, steps)?;
        Ok(((a, b), pa + pb))
    }

    /// The `N²×N²` Kronecker product of the two factor matrices. Row/column
    /// indices follow the A-major convention: `(k)_A ⊗ (l)_B` sits at
    /// `(k-1)·N + (l-1)`.
    pub fn tensor_evolution(&self) -> EvolutionOperator {
        let ua = self.model_a.evolution_matrix();
        let ub = self.model_b.evolution_matrix();
        EvolutionOperator {
            matrix: kron(&ua.matrix, &ub.matrix),
        }
    }

    /// `steps` ticks applied to a dense pair-state vector by double index
    /// rotation plus one global phase.
    pub fn evolve(&self, state: &BasisVector, steps: u64) -> Result<BasisVector> {
        let n = self.n_states();
        if state.dim() != n * n {
            return Err(Error::StateArity {
                got: state.dim(),
                expected: n * n,
            });
        }
        let shift = (steps % n as u64) as usize;
        let phase = (self.model_a.step_phase(steps) + self.model_b.step_phase(steps)).to_complex();
        let mut out = Array1::zeros(n * n);
        for ka in 0..n {
            for kb in 0..n {
                let src = ka * n + kb;
                let dst = ((ka + shift) % n) * n + (kb + shift) % n;
                out[dst] = phase * state.amplitudes()[src];
            }
        }
        Ok(BasisVector::new(out))
    }
}

/// A pure position label: one register index, or an (A, B) index pair, always
/// in `1..=N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeterministicState {
    Single(usize),
    Pair(usize, usize),
}

impl DeterministicState {
    /// Embeds the label as a one-hot vector: `(k) = e_{k-1}` for a single
    /// register, A-major `e_{(k_A-1)·N + (k_B-1)}` for a pair.
    pub fn to_basis_vector(&self, n_states: usize) -> Result<BasisVector> {
        match *self {
            DeterministicState::Single(k) => BasisVector::one_hot(n_states, k),
            DeterministicState::Pair(ka, kb) => BasisVector::pair_one_hot(n_states, ka, kb),
        }
    }
}

/// Dense complex state vector of length `N` (single register) or `N²` (pair).
#[derive(Debug, Clone, PartialEq)]
pub struct BasisVector {
    amplitudes: CVec,
}

impl BasisVector {
    pub fn new(amplitudes: CVec) -> Self {
        Self { amplitudes }
    }

    /// One-hot embedding of position `k` in `1..=N`.
    pub fn one_hot(n_states: usize, k: usize) -> Result<Self> {
        if k < 1 || k > n_states {
            return Err(Error::PositionOutOfRange { k, n: n_states });
        }
        let mut v = Array1::zeros(n_states);
        v[k - 1] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes: v })
    }

    /// One-hot embedding of the pair `(k_A, k_B)`, A-major.
    pub fn pair_one_hot(n_states: usize, k_a: usize, k_b: usize) -> Result<Self> {
        for k in [k_a, k_b] {
            if k < 1 || k > n_states {
                return Err(Error::PositionOutOfRange { k, n: n_states });
            }
        }
        let mut v = Array1::zeros(n_states * n_states);
        v[(k_a - 1) * n_states + (k_b - 1)] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes: v })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &CVec {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> CVec {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Self {
            amplitudes: self.amplitudes.mapv(|z| z / n),
        }
    }

    /// Hermitian inner product `⟨self|other⟩`.
    pub fn overlap(&self, other: &Self) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

/// Dense complex unitary matrix: a phased cyclic permutation (single factor)
/// or a Kronecker product of two of them.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionOperator {
    matrix: CMat,
}

impl EvolutionOperator {
    pub fn from_matrix(matrix: CMat) -> Self {
        Self { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMat {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMat {
        self.matrix
    }

    pub fn dagger(&self) -> Self {
        Self {
            matrix: crate::linalg::dagger(&self.matrix),
        }
    }

    pub fn power(&self, exponent: usize) -> CMat {
        crate::linalg::matrix_power(&self.matrix, exponent)
    }

    pub fn apply(&self, state: &BasisVector) -> Result<BasisVector> {
        if state.dim() != self.dim() {
            return Err(Error::StateArity {
                got: state.dim(),
                expected: self.dim(),
            });
        }
        Ok(BasisVector {
            amplitudes: self.matrix.dot(state.amplitudes()),
        })
    }

    /// ‖U†U - I‖_max.
    pub fn unitarity_residual(&self) -> f64 {
        crate::linalg::unitarity_residual(&self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{identity, max_abs_diff};
    use proptest::prelude::*;

    #[test]
    fn step_advances_and_wraps() {
        let m = CyclicModel::unphased(7, 1.0).unwrap();
        assert_eq!(m.step(1).unwrap(), 2);
        assert_eq!(m.step(7).unwrap(), 1);
    }

    #[test]
    fn step_rejects_out_of_range() {
        let m = CyclicModel::unphased(7, 1.0).unwrap();
        assert!(m.step(0).is_err());
        assert!(m.step(8).is_err());
    }

    #[test]
    fn five_steps_close_the_five_cycle() {
        let m = CyclicModel::unphased(5, 1.0).unwrap();
        let mut k = 3;
        for _ in 0..5 {
            k = m.step(k).unwrap();
        }
        assert_eq!(k, 3);
    }

    #[test]
    fn constructors_reject_degenerate_models() {
        assert!(matches!(CyclicModel::thooft(0, 1.0), Err(Error::EmptyModel)));
        assert!(matches!(
            CyclicModel::unphased(3, 0.0),
            Err(Error::NonPositiveTau(_))
        ));
    }

    #[test]
    fn thooft_matrix_n3_matches_hand_value() {
        let m = CyclicModel::thooft(3, 1.0).unwrap();
        let u = m.evolution_matrix();
        let phase = Angle::from_pi_ratio(-1, 3).to_complex();
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let expected = ndarray::array![
            [zero, zero, one],
            [one, zero, zero],
            [zero, one, zero]
        ]
        .mapv(|z| phase * z);
        assert_eq!(max_abs_diff(u.matrix(), &expected).unwrap(), 0.0);
    }

    #[test]
    fn evolution_matrix_is_exactly_unitary() {
        for n in [1, 2, 3, 7, 16] {
            let m = CyclicModel::thooft(n, 1.0).unwrap();
            // each column holds a single unit phase, so U†U is exactly zero
            // off the diagonal and |phase|² ≈ 1 on it
            assert!(m.evolution_matrix().unitarity_residual() < 1e-15);
            let p = CyclicModel::unphased(n, 1.0).unwrap();
            assert_eq!(p.evolution_matrix().unitarity_residual(), 0.0);
        }
    }

    #[test]
    fn thooft_seventh_power_is_minus_identity() {
        let m = CyclicModel::thooft(7, 1.0).unwrap();
        let u7 = m.evolution_matrix().power(7);
        let minus_i = identity(7).mapv(|z| -z);
        assert!(max_abs_diff(&u7, &minus_i).unwrap() < 1e-14);
    }

    #[test]
    fn unphased_nth_power_is_exactly_identity() {
        let m = CyclicModel::unphased(9, 1.0).unwrap();
        let u9 = m.evolution_matrix().power(9);
        assert_eq!(max_abs_diff(&u9, &identity(9)).unwrap(), 0.0);
    }

    #[test]
    fn tensor_evolution_n2_matches_hand_kronecker() {
        // swap ⊗ swap: (1,1)->(2,2), (2,2)->(1,1), (1,2)->(2,1), (2,1)->(1,2)
        let p = PairModel::with_cutoff(2, 1.0).unwrap();
        let u = p.tensor_evolution();
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let expected = ndarray::array![
            [zero, zero, zero, one],
            [zero, zero, one, zero],
            [zero, one, zero, zero],
            [one, zero, zero, zero]
        ];
        assert_eq!(max_abs_diff(u.matrix(), &expected).unwrap(), 0.0);
        assert_eq!(u.unitarity_residual(), 0.0);
    }

    #[test]
    fn tensor_wrap_realizes_the_spurious_transition() {
        let n = 5;
        let p = PairModel::with_cutoff(n, 1.0).unwrap();
        let u = p.tensor_evolution();
        let top = BasisVector::pair_one_hot(n, n, n).unwrap();
        let back = u.apply(&top).unwrap();
        let origin = BasisVector::pair_one_hot(n, 1, 1).unwrap();
        assert_eq!(back, origin);
    }

    #[test]
    fn pair_models_must_share_cutoff_and_tau() {
        let a = CyclicModel::unphased(5, 1.0).unwrap();
        let b = CyclicModel::unphased(6, 1.0).unwrap();
        assert!(matches!(
            PairModel::new(a.clone(), b),
            Err(Error::CutoffMismatch { .. })
        ));
        let c = CyclicModel::unphased(5, 0.5).unwrap();
        assert!(matches!(
            PairModel::new(a, c),
            Err(Error::TauMismatch { .. })
        ));
    }

    #[test]
    fn evolve_accumulates_the_exact_thooft_phase() {
        let m = CyclicModel::thooft(7, 1.0).unwrap();
        let v = BasisVector::one_hot(7, 1).unwrap();
        let out = m.evolve(&v, 7).unwrap();
        // seven steps: back to k=1 with global phase e^{-iπ} = -1, exactly
        assert_eq!(out.amplitudes()[0], Complex64::new(-1.0, 0.0));
        let (k, phase) = m.advance(1, 7).unwrap();
        assert_eq!(k, 1);
        assert!(phase.is_pi());
    }

    #[test]
    fn evolve_zero_steps_is_identity() {
        let m = CyclicModel::thooft(7, 1.0).unwrap();
        let v = BasisVector::one_hot(7, 4).unwrap();
        assert_eq!(m.evolve(&v, 0).unwrap(), v);
    }

    #[test]
    fn pair_advance_matches_hand_iteration() {
        // (2,4) after 3 synchronized steps at N=5 lands on (5,2), phase 1
        let p = PairModel::with_cutoff(5, 1.0).unwrap();
        let ((a, b), phase) = p.advance(2, 4, 3).unwrap();
        assert_eq!((a, b), (5, 2));
        assert!(phase.is_zero());
    }

    #[test]
    fn dense_and_index_paths_agree() {
        let p = PairModel::with_cutoff(4, 1.0).unwrap();
        let u = p.tensor_evolution();
        let v = BasisVector::pair_one_hot(4, 3, 2).unwrap();
        let dense = u.apply(&u.apply(&v).unwrap()).unwrap();
        let shifted = p.evolve(&v, 2).unwrap();
        assert_eq!(dense, shifted);
    }

    proptest! {
        #[test]
        fn step_n_times_is_identity(n in 1usize..140, k0 in 1usize..1024) {
            let k0 = (k0 - 1) % n + 1;
            let m = CyclicModel::unphased(n, 1.0).unwrap();
            let mut k = k0;
            for _ in 0..n {
                k = m.step(k).unwrap();
            }
            prop_assert_eq!(k, k0);
        }

        #[test]
        fn advance_is_additive_in_steps(
            n in 1usize..40,
            k in 1usize..40,
            a in 0u64..5000,
            b in 0u64..5000,
        ) {
            let k = (k - 1) % n + 1;
            let m = CyclicModel::thooft(n, 1.0).unwrap();
            // exact equality of both the index and the rational phase
            let (k_ab, phase_ab) = m.advance(k, a + b).unwrap();
            let (k_a, phase_a) = m.advance(k, a).unwrap();
            let (k_chain, phase_b) = m.advance(k_a, b).unwrap();
            prop_assert_eq!(k_ab, k_chain);
            prop_assert_eq!(phase_ab, phase_a + phase_b);
        }

        #[test]
        fn evolve_is_additive_up_to_rounding(
            n in 1usize..40,
            k in 1usize..40,
            a in 0u64..5000,
            b in 0u64..5000,
        ) {
            let k = (k - 1) % n + 1;
            let m = CyclicModel::thooft(n, 1.0).unwrap();
            let v = BasisVector::one_hot(n, k).unwrap();
            let combined = m.evolve(&v, a + b).unwrap();
            let chained = m.evolve(&m.evolve(&v, a).unwrap(), b).unwrap();
            let diff: f64 = combined
                .amplitudes()
                .iter()
                .zip(chained.amplitudes().iter())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max);
            // the two phase factors multiply in floats on the chained path
            prop_assert!(diff < 5e-15, "diff = {diff:.3e}");
        }

        #[test]
        fn advance_matches_repeated_step(n in 1usize..60, k in 1usize..60, s in 0u64..200) {
            let k = (k - 1) % n + 1;
            let m = CyclicModel::thooft(n, 1.0).unwrap();
            let (fast, _) = m.advance(k, s).unwrap();
            let mut slow = k;
            for _ in 0..s {
                slow = m.step(slow).unwrap();
            }
            prop_assert_eq!(fast, slow);
        }
    }
}
