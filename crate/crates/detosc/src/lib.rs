//! Deterministic finite-state models and their quantum limit.
//!
//! This crate is a numerical laboratory for two deterministic systems — a
//! single cyclic register with the phase convention `e^{-iπ/N}` per step, and
//! a pair of synchronized phase-free registers — together with the operator
//! algebra each one generates:
//!
//! * [`automaton`] builds the state machines and their exact one-step
//!   evolution operators (phased cyclic permutations and their Kronecker
//!   product);
//! * [`spectral`] holds the discrete-Fourier eigenbasis, the eigenvalue law
//!   `λ_n = e^{i2πn/N} = e^{i2πζn}` with `ζ = (1-N)/N`, the half-integer
//!   `|j,m⟩` relabeling of the pair system, and the finite-`N` Hamiltonian
//!   spectrum;
//! * [`algebra`] constructs su(2) and su(1,1) discrete-series generators with
//!   exact integer radicands, the ladder built from position operators, the
//!   Holstein–Primakoff map to the oscillator algebra `[a, a†] = 1`, and the
//!   `l → ∞` contraction of the rescaled su(2) ladder;
//! * [`magnetron`] realizes both regimes as cycloid trajectories observed
//!   only at the outer circle — rational frequency ratios close the orbit,
//!   irrational ones never return;
//! * [`report`] is the verification harness behind the `detosc` binary:
//!   identity suites, contraction convergence studies, geometric-phase
//!   checks, and figure-data exports with deterministic CSV/JSON output.
//!
//! The `examples/` directory walks through each capability; start with
//! `cargo run --example periodicity`.

pub mod algebra;
pub mod automaton;
pub mod error;
pub mod linalg;
pub mod magnetron;
pub mod phase;
pub mod report;
pub mod spectral;

pub use error::{Error, Result};
