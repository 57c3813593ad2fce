//! Decreasing rearrangements and the Lorentz norms l^{2,1} and l^{2,inf}.
//!
//! Flat sequences are the extremal case: both norms land within a factor of
//! two of sqrt(n), which is what turns constant-coefficient sums into a
//! sqrt(n)-scale ruler.
//!
//! ```bash
//! cargo run --release -p qgt --example lorentz_norms
//! ```

use num_complex::Complex64;
use qgt::fourier::CoefficientVector;
use qgt::greedy::{decreasing_rearrangement, greedy_ordering, lorentz_norms};

fn main() {
    // mixed-magnitude example
    let c = CoefficientVector::from_pairs([
        (0i64, Complex64::new(3.0, 0.0)),
        (-1, Complex64::new(0.0, 1.0)),
        (1, Complex64::new(-3.0, 0.0)),
        (4, Complex64::new(0.3, 0.4)),
    ]);
    println!("moduli, decreasing: {:?}", decreasing_rearrangement(&c));
    println!("greedy ordering (natural indices): {:?}", greedy_ordering(&c).indices());
    let norms = lorentz_norms(&c);
    println!("l21 = {:.6}, l2inf = {:.6}\n", norms.l21, norms.l2inf);

    println!("{:>7} {:>12} {:>12} {:>12}", "n", "l2inf", "l21", "l21/sqrt n");
    for n in [1usize, 4, 16, 64, 256, 1024, 4096] {
        let flat = CoefficientVector::from_pairs(
            (0..n).map(|i| (i as i64, Complex64::new(1.0, 0.0))),
        );
        let norms = lorentz_norms(&flat);
        println!(
            "{:>7} {:>12.4} {:>12.4} {:>12.4}",
            n,
            norms.l2inf,
            norms.l21,
            norms.l21 / (n as f64).sqrt()
        );
    }
    println!("\nFor unimodular coefficients l2inf = sqrt(n) exactly while l21/sqrt(n)");
    println!("climbs toward 2: the two norms pinch every flat expansion to sqrt(n).");
}
