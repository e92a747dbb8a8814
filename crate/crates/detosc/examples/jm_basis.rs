//! The |j,m⟩ relabeling of the two-register eigenbasis and its eigenvalue
//! laws.
//!
//! ```bash
//! cargo run --example jm_basis
//! ```

use detosc::automaton::PairModel;
use detosc::linalg::kron;
use detosc::spectral::{invariant_excess, jm_state, JMLabel, ZetaPhase};

fn main() -> detosc::Result<()> {
    let n_states = 5;
    let pair = PairModel::with_cutoff(n_states, 1.0)?;
    let forward = pair.tensor_evolution();
    let ua = pair.model_a().evolution_matrix();
    let skew = kron(ua.matrix(), ua.dagger().matrix());
    let zeta = ZetaPhase::new(n_states)?;

    println!("N = {n_states}: all {} labels (j = (n_A-m_B)/2, m = (n_A+m_B)/2)", n_states * n_states);
    println!(
        "{:>6} {:>6} {:>6} {:>6} {:>14} {:>14}",
        "j", "m", "n_A", "m_B", "U residual", "U_A⊗U_B† res."
    );
    let mut worst_forward = 0.0f64;
    let mut worst_skew = 0.0f64;
    for label in JMLabel::all(n_states) {
        let v = jm_state(n_states, label)?;
        let lam_m = zeta.phase(label.two_m);
        let rf = (forward.matrix().dot(v.amplitudes()) - v.amplitudes().mapv(|z| z * lam_m))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        let lam_j = zeta.phase(label.two_j);
        let rs = (skew.dot(v.amplitudes()) - v.amplitudes().mapv(|z| z * lam_j))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        worst_forward = worst_forward.max(rf);
        worst_skew = worst_skew.max(rs);
        if label.two_j.abs() <= 1 && label.two_m <= 3 {
            println!(
                "{:>6.1} {:>6.1} {:>6} {:>6} {:>14.3e} {:>14.3e}",
                label.two_j as f64 / 2.0,
                label.two_m as f64 / 2.0,
                label.n_a(),
                label.m_b(),
                rf,
                rs
            );
        }
    }
    println!("  ... worst residuals over all labels: {worst_forward:.3e}, {worst_skew:.3e}");
    println!("forward evolution reads off m (eigenvalue e^(i2πζ·2m)),");
    println!("forward ⊗ backward reads off j (eigenvalue e^(i2πζ·2j)).");

    // the conserved excess of register A over register B
    println!("\ninvariant excess (H_A - H_B)/2 on |j,m⟩ = ω·j:");
    for two_j in [0i64, 2, 4] {
        let label = JMLabel::new(9, two_j, two_j + 2)?;
        let value = invariant_excess(9, 1.0, label)?;
        println!("  N = 9, j = {}: {value:.6}", two_j as f64 / 2.0);
    }
    Ok(())
}
