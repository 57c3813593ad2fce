//! Sign-unconditionality ratios: how far can flipping signs of the constant
//! coefficients move the norm of sum_{k <= n} eps_k e_{n_k}?
//!
//! In L^2 with a flat weight the ratio is exactly 1. In L^4 the all-plus
//! pattern concentrates like a Dirichlet kernel (norm ~ n^{3/4}) while random
//! signs stay near sqrt(n), so the ratio grows like n^{1/4} — the failure
//! mode that rules out quasi-greediness away from p = 2.
//!
//! ```bash
//! cargo run --release -p qgt --example sign_patterns
//! ```

use qgt::experiments::{sign_unconditionality, IndexSets};
use qgt::grid::Grid;
use qgt::weights::Weight;

fn main() -> qgt::Result<()> {
    let grid = Grid::new(2048)?;
    let blocks = IndexSets::Blocks(vec![8, 16, 32, 64, 128]);

    for (spec, p) in [
        ("constant:c=1", 2.0),
        ("constant:c=1", 4.0),
        ("trig:a0=1:cos1=0.5", 2.0),
    ] {
        let w: Weight = spec.parse()?;
        let report = sign_unconditionality(&w, p, &blocks, 64, 1, grid)?;
        println!("weight {spec}, p = {p}");
        println!("{:>6} {:>12} {:>12} {:>9}", "|A|", "min norm", "max norm", "ratio");
        for row in &report.rows {
            println!(
                "{:>6} {:>12.5} {:>12.5} {:>9.4}",
                row[0] as usize, row[1], row[2], row[3]
            );
        }
        println!();
    }
    Ok(())
}
