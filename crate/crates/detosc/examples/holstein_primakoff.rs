//! The Holstein–Primakoff map: dressing the square-root-free k = 1/2 ladder
//! into the oscillator operators, exactly.
//!
//! ```bash
//! cargo run --example holstein_primakoff
//! ```

use detosc::algebra::{commutator, holstein_primakoff, su11_generators};
use detosc::linalg::identity;

fn main() -> detosc::Result<()> {
    let dim = 64;
    let rep = su11_generators(1, dim)?; // k = 1/2, the fundamental series

    println!("k = 1/2 ladder: L+|n⟩ = (n+1)|n+1⟩ — no square roots");
    for n in 0..4usize {
        println!("  ⟨{}|L+|{}⟩ = {}", n + 1, n, rep.lplus()[(n + 1, n)].re);
    }

    let pair = holstein_primakoff(&rep)?;
    println!("\na = (L3+1/2)^(-1/2) L-,  a† = L+ (L3+1/2)^(-1/2):");
    println!("{:>3} {:>20} {:>12} {:>10}", "n", "⟨n+1|a†|n⟩", "√(n+1)", "gap");
    for n in [0usize, 1, 2, 7, 31, 62] {
        let got = pair.raising_element(n);
        let want = ((n + 1) as f64).sqrt();
        println!("{n:>3} {got:>20.15} {want:>12.8} {:>10.1e}", (got - want).abs());
    }

    let comm = commutator(&pair.a, &pair.a_dagger)?;
    let eye = identity(dim);
    let mut interior = 0.0f64;
    for ((i, j), z) in comm.indexed_iter() {
        if i < dim - 1 {
            interior = interior.max((z - eye[(i, j)]).norm());
        }
    }
    let boundary = (comm[(dim - 1, dim - 1)] - eye[(dim - 1, dim - 1)]).norm();
    println!("\n[a, a†] = 1: interior residual {interior:.3e}");
    println!("truncation row defect {boundary:.3} (the cut rung, excluded by design)");

    // higher k stays a deformed ladder; only k = 1/2 is the oscillator
    let rep3 = su11_generators(3, 8)?; // k = 3/2
    let pair3 = holstein_primakoff(&rep3)?;
    println!("\nk = 3/2 for contrast: ⟨1|a†|0⟩ = {:.6} vs √1 = 1", pair3.raising_element(0));
    Ok(())
}
