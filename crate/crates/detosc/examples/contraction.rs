//! Group contraction of the rescaled su(2) ladder onto the oscillator
//! algebra: the error halves every time l doubles.
//!
//! ```bash
//! cargo run --example contraction
//! ```

use detosc::report::run_contraction_study;

fn main() -> detosc::Result<()> {
    let report = run_contraction_study(&[10_000, 100_000, 1_000_000], 8)?;
    println!("a† = L+/√(2l): distance of ⟨n+1|a†|n⟩ from √(n+1)");
    println!(
        "{:>9} {:>3} {:>14} {:>14} {:>10}",
        "l", "n", "measured", "closed form", "ratio(2l)"
    );
    for row in &report.rows {
        println!(
            "{:>9} {:>3} {:>14.6e} {:>14.6e} {:>10}",
            row.l,
            row.n,
            row.measured_error,
            row.predicted_error,
            row.ratio_to_double
                .map(|r| format!("{r:.5}"))
                .unwrap_or_else(|| "-".into()),
        );
    }
    println!(
        "\nlargest gap to the closed-form oracle: {:.3e}",
        report.max_oracle_gap()
    );
    println!(
        "largest deviation of the doubling ratio from 2: {:.3e}",
        report.max_ratio_deviation()
    );
    println!("(first-order 1/l convergence: halving l's error needs doubling l)");
    Ok(())
}
