//! Muckenhoupt A_p constants across the built-in weight families.
//!
//! ```bash
//! cargo run --release -p qgt --example ap_constant
//! ```

use qgt::grid::Grid;
use qgt::weights::{ap_constant, Weight};

fn main() -> qgt::Result<()> {
    let fine = Grid::new(65536)?;
    let cases: Vec<(&str, f64)> = vec![
        ("constant:c=2", 2.0),
        ("trig:a0=1:cos1=0.5", 2.0),
        ("power:alpha=0.5", 2.0),
        ("power:alpha=-0.5", 2.0),
        ("power:alpha=0.95", 2.0),
        ("power:alpha=1.5", 2.0),   // dual weight |t|^-1.5 is not integrable
        ("power:alpha=0.5", 1.5),
        ("power:alpha=0.5", 3.0),
        ("polypower:coeffs=0,0,1:mu=0.4", 2.0), // P = t^2, below the 1/deg boundary
        ("polypower:coeffs=0,0,1:mu=0.6", 2.0), // above it
    ];

    println!(
        "{:<34} {:>4} {:>12} {:>10} {:>10}  diverging",
        "weight", "p", "k_hat", "interval", "refine"
    );
    for (spec, p) in cases {
        let w: Weight = spec.parse()?;
        let est = ap_constant(&w, p, 12, fine)?;
        println!(
            "{:<34} {:>4} {:>12.4} {:>10.4} {:>10.4}  {}",
            spec, p, est.k_hat, est.argmax_interval.1, est.refinement_ratio, est.diverging
        );
    }
    println!("\nA quotient that keeps growing as the sampling grid refines signals a");
    println!("weight outside A_p; stable quotients come with a maximizing interval.");
    Ok(())
}
