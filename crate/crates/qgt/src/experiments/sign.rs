//! Sign-unconditionality probe: how much can flipping coefficient signs move
//! the weighted norm of a constant-coefficient sum? Quasi-greedy systems
//! keep the min/max ratio bounded (Wojtaszczyk's sign-unconditionality for
//! constant coefficients); a ratio that keeps growing witnesses failure.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fourier::natural_index_to_freq;
use crate::grid::{weighted_lp_norm, Grid, SampledFunction, TAU};
use crate::report::ExperimentReport;
use crate::weights::Weight;

use super::{stream_rng, RNG_NAME};

/// Sets of at most this size are enumerated exactly (all `2^|A|` sign
/// patterns) instead of Monte-Carlo sampled.
pub const EXACT_ENUMERATION_LIMIT: usize = 12;

/// Which index sets (in the natural ordering) the experiment sums over.
#[derive(Clone, Debug)]
pub enum IndexSets {
    /// Prefix blocks `{1..n}` for each listed `n`.
    Blocks(Vec<usize>),
    /// Explicit natural-ordering index sets.
    Sets(Vec<Vec<usize>>),
}

impl IndexSets {
    fn materialize(&self) -> Vec<Vec<usize>> {
        match self {
            IndexSets::Blocks(sizes) => sizes.iter().map(|n| (1..=*n).collect()).collect(),
            IndexSets::Sets(sets) => sets.clone(),
        }
    }
}

/// Min/max weighted norm of `sum_{k in A} eps_k e_{n_k}` over sign patterns.
///
/// The all-plus pattern is always included; beyond it, patterns come from a
/// seeded stream, except that sets with `|A| <=` [`EXACT_ENUMERATION_LIMIT`]
/// are enumerated exactly. Rows: `(set_size, min_norm, max_norm, ratio)`.
pub fn sign_unconditionality(
    w: &Weight,
    p: f64,
    sets: &IndexSets,
    trials: usize,
    seed: u64,
    grid: Grid,
) -> Result<ExperimentReport> {
    if trials < 2 {
        return Err(Error::invalid("sign experiment needs trials >= 2"));
    }
    let set_list = sets.materialize();
    if set_list.iter().any(|s| s.is_empty()) {
        return Err(Error::invalid("index sets must be nonempty"));
    }
    for set in &set_list {
        for &j in set {
            let k = natural_index_to_freq(j)?;
            if 2 * k.unsigned_abs() as usize >= grid.size() {
                return Err(Error::invalid(format!(
                    "natural index {j} aliases on a grid of {} nodes",
                    grid.size()
                )));
            }
        }
    }

    let ws = w.sample(grid)?;
    let rows: Vec<Vec<f64>> = set_list
        .par_iter()
        .enumerate()
        .map(|(row_id, set)| set_row(set, row_id as u64, &ws, p, trials, seed, grid))
        .collect::<Result<Vec<_>>>()?;

    let mut report = ExperimentReport::new(
        "sign-uncond",
        &["set_size", "min_norm", "max_norm", "ratio"],
    );
    report.set_param("weight", w);
    report.set_param("p", p);
    report.set_param("grid_size", grid.size());
    report.set_param("seed", seed);
    report.set_param("trials", trials);
    report.set_param("rng", RNG_NAME);
    report.set_param("exact_enumeration_limit", EXACT_ENUMERATION_LIMIT);
    for row in rows {
        report.push_row(row);
    }
    report.append_note(
        "Sign-unconditionality for constant coefficients: bounded max/min ratios are necessary \
         for a quasi-greedy system; all-plus pattern always sampled.",
    );
    Ok(report)
}

fn set_row(
    set: &[usize],
    row_id: u64,
    ws: &SampledFunction,
    p: f64,
    trials: usize,
    seed: u64,
    grid: Grid,
) -> Result<Vec<f64>> {
    let basis = basis_rows(set, grid)?;
    let n = set.len();
    let mut min_norm = f64::INFINITY;
    let mut max_norm: f64 = 0.0;
    let mut eval = |signs: &[f64]| -> Result<()> {
        let norm = pattern_norm(&basis, signs, ws, p, grid)?;
        min_norm = min_norm.min(norm);
        max_norm = max_norm.max(norm);
        Ok(())
    };

    if n <= EXACT_ENUMERATION_LIMIT {
        let mut signs = vec![1.0; n];
        for pattern in 0..(1u64 << n) {
            for (b, s) in signs.iter_mut().enumerate() {
                *s = if pattern >> b & 1 == 0 { 1.0 } else { -1.0 };
            }
            eval(&signs)?;
        }
    } else {
        let mut rng = stream_rng(seed, &[row_id, n as u64]);
        let mut signs = vec![1.0; n];
        eval(&signs)?; // all-plus first
        use rand::Rng;
        for _ in 1..trials {
            for s in signs.iter_mut() {
                *s = if rng.gen::<bool>() { 1.0 } else { -1.0 };
            }
            eval(&signs)?;
        }
    }
    Ok(vec![n as f64, min_norm, max_norm, max_norm / min_norm])
}

/// Samples of `e_{n_k}` for every `k` in the set.
fn basis_rows(set: &[usize], grid: Grid) -> Result<Vec<Vec<Complex64>>> {
    let scale = 1.0 / TAU.sqrt();
    set.iter()
        .map(|&j| {
            let k = natural_index_to_freq(j)? as f64;
            Ok(grid
                .nodes()
                .map(|t| {
                    let (s, c) = (k * t).sin_cos();
                    Complex64::new(c * scale, s * scale)
                })
                .collect())
        })
        .collect()
}

fn pattern_norm(
    basis: &[Vec<Complex64>],
    signs: &[f64],
    ws: &SampledFunction,
    p: f64,
    grid: Grid,
) -> Result<f64> {
    let m = grid.size();
    let mut sum = vec![Complex64::new(0.0, 0.0); m];
    for (row, sign) in basis.iter().zip(signs) {
        let s = *sign;
        for (acc, v) in sum.iter_mut().zip(row) {
            *acc += v * s;
        }
    }
    let f = SampledFunction::new(grid, sum)?;
    weighted_lp_norm(&f, ws, p)
}
