//! The two deterministic models and their one-step evolution operators.
//!
//! ```bash
//! cargo run --example periodicity
//! ```

use detosc::automaton::{BasisVector, CyclicModel, PairModel};
use detosc::linalg::{identity, max_abs_diff};

fn main() -> detosc::Result<()> {
    println!("cyclic register with the e^(-iπ/N) phase: U^N = -1");
    println!("{:>4}  {:>12}  {:>12}", "N", "‖U^N + I‖", "‖U†U - I‖");
    for n in [3usize, 5, 7, 31] {
        let model = CyclicModel::thooft(n, 1.0)?;
        let u = model.evolution_matrix();
        let minus_eye = identity(n).mapv(|z| -z);
        println!(
            "{n:>4}  {:>12.3e}  {:>12.3e}",
            max_abs_diff(&u.power(n), &minus_eye)?,
            u.unitarity_residual()
        );
    }

    println!("\nphase-free factor of the pair system: U^N = +1, exactly");
    for n in [3usize, 7, 16] {
        let u = CyclicModel::unphased(n, 1.0)?.evolution_matrix();
        println!(
            "  N = {n:>2}: ‖U^N - I‖ = {:.1e}",
            max_abs_diff(&u.power(n), &identity(n))?
        );
    }

    // one-hot states evolve by index arithmetic with an exact phase
    let model = CyclicModel::thooft(7, 1.0)?;
    let (k, phase) = model.advance(1, 7)?;
    println!("\nN = 7: position 1 after 7 steps -> position {k}, global phase {phase}");
    let v = BasisVector::one_hot(7, 1)?;
    let evolved = model.evolve(&v, 7)?;
    println!("dense amplitude at slot 1: {}", evolved.amplitudes()[0]);

    // the pair register steps both slots in lockstep, wrap included
    let pair = PairModel::with_cutoff(5, 1.0)?;
    let mut state = (2usize, 4usize);
    print!("\npair N = 5 from (2,4): ");
    for _ in 0..5 {
        state = pair.step(state.0, state.1)?;
        print!("({},{}) ", state.0, state.1);
    }
    println!();

    let tensor = pair.tensor_evolution();
    println!(
        "tensor operator: {}x{}, unitarity residual {:.1e}",
        tensor.dim(),
        tensor.dim(),
        tensor.unitarity_residual()
    );
    Ok(())
}
