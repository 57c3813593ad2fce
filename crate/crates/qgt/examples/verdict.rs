//! The composite quasi-greedy decision procedure on representative cases.
//!
//! ```bash
//! cargo run --release -p qgt --example verdict
//! ```

use qgt::experiments::{quasi_greedy_verdict, VerdictConfig};
use qgt::grid::Grid;
use qgt::weights::Weight;

fn main() -> qgt::Result<()> {
    let grid = Grid::new(4096)?;
    let config = VerdictConfig::default();

    let cases = [
        ("constant:c=1", 2.0),        // orthonormal baseline
        ("constant:c=1", 4.0),        // p != 2
        ("trig:a0=1:cos1=0.5", 2.0),  // bounded positive weight
        ("power:alpha=0.8", 2.0),     // vanishing weight, still A_2
        ("power:alpha=1.5", 2.0),     // not even A_2
    ];

    for (spec, p) in cases {
        let w: Weight = spec.parse()?;
        let run = quasi_greedy_verdict(&w, p, &config, grid, 1)?;
        println!(
            "{:<22} p = {:<3} -> {}",
            spec,
            p,
            run.report.verdict.expect("verdict always set")
        );
        for row in &run.report.rows {
            let stage = match row[0] as usize {
                1 => "A_p gate          (k_hat)",
                2 => "democracy slope          ",
                3 => "Fejer decay slope        ",
                4 => "Riesz min ratio          ",
                5 => "sign max ratio           ",
                _ => unreachable!(),
            };
            let fired = if row[3] == 0.0 {
                "pass"
            } else if row[3] == 0.5 {
                "grey"
            } else {
                "FIRED"
            };
            println!("    stage {stage} statistic {:>10.4}  {}", row[1], fired);
        }
        println!("    note: {}\n", run.report.notes);
    }
    Ok(())
}
