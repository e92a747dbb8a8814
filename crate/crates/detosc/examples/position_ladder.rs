//! Building the su(1,1) ladder from the position operators of the pair
//! system, sector by sector, and matching it against the discrete series.
//!
//! ```bash
//! cargo run --example position_ladder
//! ```

use detosc::algebra::{ladder_from_positions, sector_two_k, su11_generators, PositionOperators};
use detosc::spectral::{jm_state, JMLabel};

fn main() -> detosc::Result<()> {
    let n_states = 7;

    // the diagonal phase operator raises m by one on every |j,m⟩
    let positions = PositionOperators::new(n_states)?;
    let shift = positions.forward_shift()?;
    let sector = JMLabel::sector(n_states, 0)?;
    let lower = jm_state(n_states, sector[2])?;
    let upper = jm_state(n_states, sector[3])?;
    let moved = shift.dot(lower.amplitudes());
    let residual = (&moved - upper.amplitudes())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    println!("e^(-i2πζ(N_A+N_B)) |0,2⟩ = |0,3⟩ up to {residual:.3e}");

    println!("\nsector ladders at N = {n_states} vs the discrete series D+_k, k = |j|+1/2:");
    println!(
        "{:>5} {:>5} {:>5} {:>14} {:>14} {:>14}",
        "j", "k", "dim", "‖ΔL+‖ inner", "‖ΔL-‖ inner", "forms gap"
    );
    for two_j in [0i64, 1, 2] {
        let ladder = ladder_from_positions(n_states, two_j)?;
        let series = su11_generators(sector_two_k(two_j), ladder.dim)?;
        let interior = ladder.interior();
        let mut dp = 0.0f64;
        let mut dm = 0.0f64;
        let mut forms = 0.0f64;
        for i in 0..ladder.dim {
            for j in 0..interior {
                dp = dp.max((ladder.lplus[(i, j)] - series.lplus()[(i, j)]).norm());
                dm = dm.max((ladder.lminus[(j, i)] - series.lminus()[(j, i)]).norm());
            }
        }
        for i in 0..interior {
            for j in 0..interior {
                forms = forms.max((ladder.lminus[(i, j)] - ladder.lminus_alt[(i, j)]).norm());
            }
        }
        println!(
            "{:>5.1} {:>5.1} {:>5} {:>14.3e} {:>14.3e} {:>14.3e}",
            two_j as f64 / 2.0,
            sector_two_k(two_j) as f64 / 2.0,
            ladder.dim,
            dp,
            dm,
            forms
        );
    }

    // what the top rung does: the j = 0 sector wraps, others leave the sector
    println!("\ntop-rung behavior of the sector shift (the excluded boundary):");
    for two_j in [0i64, 1] {
        let ladder = ladder_from_positions(n_states, two_j)?;
        let top = ladder.dim - 1;
        let corner = ladder.shift[(0, top)].norm();
        let col_norm: f64 = (0..ladder.dim)
            .map(|i| ladder.shift[(i, top)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        println!(
            "  j = {:.1}: ‖top column‖ = {col_norm:.3e}, wrap corner = {corner:.3e}",
            two_j as f64 / 2.0
        );
    }
    println!("(j = 0 wraps back to |0,0⟩; j ≠ 0 exits the sector, so the column projects to zero)");
    Ok(())
}
