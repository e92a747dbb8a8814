//! Cycloid trajectories observed at the outer circle: the periodic q = 5/7
//! orbit and the never-returning incommensurate one, plus CSV export.
//!
//! ```bash
//! cargo run --example magnetron
//! ```

use detosc::magnetron::{
    classify_commensurability, touch_events, uniform_coverage_check, TrajectoryParams,
};
use detosc::report::{export_figure_data_with, Figure};
use num_rational::Ratio;

fn main() -> detosc::Result<()> {
    let seven = TrajectoryParams::seven_cycle();
    println!("q = β/α = 5/7: touches of the unit circle");
    println!("{:>3} {:>10} {:>10} {:>12}", "j", "t", "θ", "θ/(2π/7)");
    for ev in touch_events(&seven, 7) {
        println!(
            "{:>3} {:>10.5} {:>10.6} {:>12.6}",
            ev.index,
            ev.time,
            ev.angle,
            ev.angle / (2.0 * std::f64::consts::PI / 7.0)
        );
    }
    println!(
        "classification: {:?}",
        classify_commensurability(&seven, 1e-9, 100)?
    );
    println!(
        "angles cover the 7th roots exactly: {}",
        uniform_coverage_check(Ratio::new(5, 7), 7)
    );

    let incom = TrajectoryParams::incommensurate();
    println!("\nβ/α = 5/3 + π/40: same observation, no return");
    println!(
        "  within 10^4 touches at tol 1e-4: {:?}",
        classify_commensurability(&incom, 1e-4, 10_000)?
    );
    println!(
        "  within 10^5 touches at tol 1e-6: {:?}",
        classify_commensurability(&incom, 1e-6, 100_000)?
    );
    let near = (1..=10_000u64)
        .map(|j| {
            let theta = incom.touch_angle(j);
            (theta.min(2.0 * std::f64::consts::PI - theta), j)
        })
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .unwrap();
    println!("  closest approach to the start: {:.4e} rad at j = {}", near.0, near.1);

    let out = std::path::Path::new("target/figure-data");
    let fig1 = export_figure_data_with(Figure::Fig1, out, 200, 7, 7)?;
    let fig2 = export_figure_data_with(Figure::Fig2, out, 200, 2_000, 12)?;
    println!("\nwrote {}", fig1.trajectory.display());
    println!("wrote {}", fig1.touches.display());
    println!("wrote {}", fig2.trajectory.display());
    println!("wrote {}", fig2.touches.display());
    Ok(())
}
