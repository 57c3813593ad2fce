//! Greedy m-term error curves for a truncated sawtooth in three regimes:
//! the orthonormal baseline, a bounded positive weight (Riesz regime), and a
//! weight vanishing at the origin.
//!
//! ```bash
//! cargo run --release -p qgt --example greedy_curve
//! ```

use num_complex::Complex64;
use qgt::fourier::{synthesize, CoefficientVector};
use qgt::greedy::greedy_error_curve;
use qgt::grid::{Grid, TAU};
use qgt::weights::Weight;

fn sawtooth(degree: i64) -> CoefficientVector {
    let mut c = CoefficientVector::new();
    for k in 1..=degree {
        let a = TAU.sqrt() * if k % 2 == 0 { 1.0 } else { -1.0 } / k as f64;
        c.insert(k, Complex64::new(0.0, a));
        c.insert(-k, Complex64::new(0.0, -a));
    }
    c
}

fn main() -> qgt::Result<()> {
    let grid = Grid::new(2048)?;
    let f = synthesize(&sawtooth(128), grid);

    let weights = [
        "constant:c=1".parse::<Weight>()?,
        "trig:a0=1:cos1=0.5".parse::<Weight>()?,
        "power:alpha=0.8".parse::<Weight>()?,
    ];
    let curves: Vec<Vec<(usize, f64)>> = weights
        .iter()
        .map(|w| greedy_error_curve(&f, w, 2.0, 256))
        .collect::<qgt::Result<Vec<_>>>()?;

    println!(
        "{:>5} {:>16} {:>16} {:>16}",
        "m", "w = 1", "w = 1+cos(t)/2", "w = |t|^0.8"
    );
    for m in [0usize, 1, 2, 4, 8, 16, 32, 64, 128, 192, 256] {
        println!(
            "{:>5} {:>16.6e} {:>16.6e} {:>16.6e}",
            m, curves[0][m].1, curves[1][m].1, curves[2][m].1
        );
    }
    println!("\nAll three curves reach the quadrature floor once the support is exhausted;");
    println!("thresholding is exactly optimal only in the orthonormal column.");
    Ok(())
}
