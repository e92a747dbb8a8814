//! Fourier eigenbasis, the ζ-phase eigenvalue law, and the finite-N
//! Hamiltonian spectrum.
//!
//! ```bash
//! cargo run --example spectrum
//! ```

use detosc::automaton::CyclicModel;
use detosc::linalg::dagger;
use detosc::spectral::{
    eigenvalue_of, fourier_matrix, hamiltonian_spectrum, omega, ZetaPhase,
};

fn main() -> detosc::Result<()> {
    let n_states = 5;
    let zeta = ZetaPhase::new(n_states)?;
    println!("N = {n_states}: ζ = {} (exact rational)", zeta.value());
    println!("eigenvalues λ_n = e^(i2πn/N) = e^(i2πζn):");
    for n in 0..n_states {
        let lam = eigenvalue_of(n_states, n)?;
        println!("  n = {n}: {:+.6} {:+.6}i", lam.re, lam.im);
    }

    // conjugating the factor evolution by the Fourier basis is diagonal
    let u = CyclicModel::unphased(n_states, 1.0)?.evolution_matrix();
    let f = fourier_matrix(n_states, true)?;
    let diag = dagger(&f).dot(u.matrix()).dot(&f);
    let mut off = 0.0f64;
    for ((i, j), z) in diag.indexed_iter() {
        if i != j {
            off = off.max(z.norm());
        }
    }
    println!("\npolar form: off-diagonal residual of F†UF = {off:.3e}");

    // spectrum of the pair Hamiltonian at the default branch n = 1
    let n_states = 11;
    let tau = 1.0;
    let w = omega(n_states, tau)?;
    println!("\nN = {n_states}, τ = {tau}: ω = -ζ·2π/τ = {w:.6}  (2π/τ = {:.6})", 2.0 * std::f64::consts::PI);
    let entries = hamiltonian_spectrum(n_states, tau, 1)?;
    println!("lowest j = 0 levels, E = (2π/τ)(-ζ·2m + 1):");
    println!("{:>6} {:>12} {:>14}", "m", "E", "E/ω - (2m+1)");
    for e in entries
        .iter()
        .filter(|e| e.label.two_j == 0 && e.label.two_m <= 8)
    {
        let m = e.label.two_m as f64 / 2.0;
        println!(
            "{m:>6.1} {:>12.6} {:>14.3e}",
            e.energy,
            e.energy / w - (e.label.two_m as f64 + 1.0)
        );
    }
    println!("(the last column shrinks like 1/N: the oscillator ladder emerges)");
    Ok(())
}
