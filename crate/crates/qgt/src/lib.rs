//! Greedy trigonometric approximation in weighted `L^p` spaces on the torus.
//!
//! The crate measures, at desk scale, how the trigonometric system behaves
//! as a basis of `L^p(T; w)` for a nonnegative 2*pi-periodic weight `w`:
//!
//! * [`grid`] — midpoint sampling and weighted-norm quadrature;
//! * [`weights`] — symbolic weight families and brute-force Muckenhoupt
//!   `A_p` constant estimation;
//! * [`fourier`] — the system in its natural ordering `0, -1, 1, -2, 2, ...`,
//!   coefficients, partial sums, Dirichlet kernels, operator-norm probes;
//! * [`greedy`] — greedy orderings, m-term approximants, Lorentz norms,
//!   error curves;
//! * [`experiments`] — reproducible experiments (sign patterns, democracy,
//!   kernel growth, Fejer recovery, Riesz bounds) and the composite
//!   quasi-greedy verdict;
//! * [`report`] / [`cli`] — CSV/JSON reports and the `qgt` binary.
//!
//! Every experiment is deterministic given its parameters and seed; see the
//! runnable programs under `examples/` for one walk-through per capability.
//!
//! ```
//! use qgt::{Grid, Weight};
//!
//! let grid = Grid::new(4096)?;
//! let weight: Weight = "power:alpha=0.5".parse()?;
//! let est = qgt::weights::ap_constant(&weight, 2.0, 10, grid)?;
//! assert!(est.k_hat >= 1.0 && !est.diverging);
//! # Ok::<(), qgt::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod experiments;
pub mod fourier;
pub mod greedy;
pub mod grid;
pub mod report;
pub mod weights;

pub use error::{Error, Result};
pub use fourier::CoefficientVector;
pub use greedy::{GreedyOrdering, LorentzNorms};
pub use grid::{Grid, SampledFunction};
pub use report::{ExperimentReport, Verdict};
pub use weights::{ApEstimate, Weight};
