//! Lower bounds on the partial-sum operator norms ||T_N||_{p,w}.
//!
//! Uniform boundedness of the T_N is equivalent to the weight satisfying the
//! A_p condition (Hunt-Muckenhoupt-Wheeden), which in turn characterizes the
//! Schauder-basis property of the system in the weighted space. The probe
//! maximizes ||T_N f|| / ||f|| over random polynomials and concentration
//! bumps; watch the |t|^3 column grow while the others stay flat.
//!
//! ```bash
//! cargo run --release -p qgt --example schauder_probe
//! ```

use qgt::fourier::operator_norm_probe;
use qgt::grid::Grid;
use qgt::weights::Weight;

fn main() -> qgt::Result<()> {
    let grid = Grid::new(8192)?;
    let cases = [
        ("constant:c=1", 2.0),
        ("constant:c=1", 4.0),
        ("trig:a0=1:cos1=0.5", 2.0),
        ("power:alpha=3", 2.0),
    ];

    let mut tables = Vec::new();
    for (spec, p) in cases {
        let w: Weight = spec.parse()?;
        tables.push(operator_norm_probe(&w, p, 256, 3, 1, grid)?);
    }

    print!("{:>6}", "N");
    for (spec, p) in cases {
        print!(" {:>24}", format!("{spec} p={p}"));
    }
    println!();
    for row in 0..tables[0].len() {
        print!("{:>6}", tables[0][row].0);
        for table in &tables {
            print!(" {:>24.6}", table[row].1);
        }
        println!();
    }
    println!("\nValues are lower bounds on the true operator norms.");
    Ok(())
}
