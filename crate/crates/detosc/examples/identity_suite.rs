//! Running the aggregated identity suite from code and inspecting the
//! machine-readable report.
//!
//! ```bash
//! cargo run --example identity_suite
//! ```

use detosc::report::{run_identity_suite, SuiteConfig};

fn main() -> detosc::Result<()> {
    let config = SuiteConfig {
        n_values: vec![3, 5, 7],
        two_k_values: vec![1, 2],
        su11_dim: 32,
        two_l_values: vec![2, 10, 100],
        ..SuiteConfig::default()
    };
    let report = run_identity_suite(&config)?;
    for r in &report.results {
        println!("{}", r.line());
    }
    println!(
        "\n{} checks, all passed: {}",
        report.results.len(),
        report.all_passed()
    );

    // the same report serializes to the versioned JSON schema
    let json = report.to_json()?;
    let head: String = json.lines().take(6).collect::<Vec<_>>().join("\n");
    println!("\nreport head:\n{head}\n  ...");
    Ok(())
}
