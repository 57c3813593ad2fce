//! Democracy probe: compare weighted norms of constant-coefficient sums over
//! blocks, random index sets, and arithmetic progressions of equal size, and
//! track the fundamental function `phi(n) = sup_{|A| <= n} ||sum_A e_{n_k}||`.
//!
//! For a quasi-greedy trigonometric system every such sum must scale like
//! `sqrt(n)`; the block column's log-log slope against `n` is the trend the
//! verdict procedure tests against 1/2.

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fourier::natural_index_to_freq;
use crate::grid::{weighted_lp_norm, Grid, SampledFunction, TAU};
use crate::report::ExperimentReport;
use crate::weights::Weight;

use super::{loglog_slope, stream_rng, RNG_NAME};

/// Rows: `(n, block_norm, min_random, max_random, phi_hat, phi_hat_over_sqrt_n)`.
///
/// Random sets are `trials` size-`n` subsets of `{1..min(n^2, M/2)}`; the
/// arithmetic progression uses the widest step that stays under the same
/// index cap. `phi_hat` maximizes over every sampled set.
pub fn democracy(
    w: &Weight,
    p: f64,
    n_list: &[usize],
    trials: usize,
    seed: u64,
    grid: Grid,
) -> Result<ExperimentReport> {
    if n_list.is_empty() {
        return Err(Error::invalid("democracy needs at least one set size"));
    }
    let m = grid.size();
    for &n in n_list {
        if n < 1 || 4 * n >= m {
            return Err(Error::invalid(format!(
                "set size {n} needs n < M/4 on a grid of {m} nodes"
            )));
        }
    }
    if trials < 1 {
        return Err(Error::invalid("democracy needs trials >= 1"));
    }

    let ws = w.sample(grid)?;
    let rows: Vec<Vec<f64>> = n_list
        .par_iter()
        .map(|&n| democracy_row(n, &ws, p, trials, seed, grid))
        .collect::<Result<Vec<_>>>()?;

    let mut report = ExperimentReport::new(
        "democracy",
        &[
            "n",
            "block_norm",
            "min_random",
            "max_random",
            "phi_hat",
            "phi_hat_over_sqrt_n",
        ],
    );
    report.set_param("weight", w);
    report.set_param("p", p);
    report.set_param("grid_size", m);
    report.set_param("seed", seed);
    report.set_param("trials", trials);
    report.set_param("rng", RNG_NAME);
    for row in rows {
        report.push_row(row);
    }
    if report.rows.len() >= 2 {
        let ns: Vec<f64> = report.column("n").unwrap();
        let blocks: Vec<f64> = report.column("block_norm").unwrap();
        report.set_param(
            "block_slope_fit",
            crate::report::format_sig12(loglog_slope(&ns, &blocks)),
        );
    }
    report.append_note(
        "Constant-coefficient sums over equal-size sets; a democratic quasi-greedy system keeps \
         every norm comparable to sqrt(n).",
    );
    Ok(report)
}

fn democracy_row(
    n: usize,
    ws: &SampledFunction,
    p: f64,
    trials: usize,
    seed: u64,
    grid: Grid,
) -> Result<Vec<f64>> {
    let cap = (grid.size() / 2).min(n * n).max(n);
    let block: Vec<usize> = (1..=n).collect();
    let block_norm = set_norm(&block, ws, p, grid)?;

    let mut min_random = f64::INFINITY;
    let mut max_random: f64 = 0.0;
    for trial in 0..trials {
        let mut rng = stream_rng(seed, &[n as u64, trial as u64]);
        let set = random_subset(&mut rng, n, cap);
        let norm = set_norm(&set, ws, p, grid)?;
        min_random = min_random.min(norm);
        max_random = max_random.max(norm);
    }

    // widest arithmetic progression from 1 that stays under the cap
    let step = if n == 1 { 1 } else { ((cap - 1) / (n - 1)).max(1) };
    let ap: Vec<usize> = (0..n).map(|i| 1 + i * step).collect();
    let ap_norm = set_norm(&ap, ws, p, grid)?;

    let phi_hat = block_norm.max(max_random).max(ap_norm);
    Ok(vec![
        n as f64,
        block_norm,
        min_random,
        max_random,
        phi_hat,
        phi_hat / (n as f64).sqrt(),
    ])
}

fn random_subset<R: Rng>(rng: &mut R, n: usize, cap: usize) -> Vec<usize> {
    debug_assert!(cap >= n);
    let mut chosen = std::collections::BTreeSet::new();
    while chosen.len() < n {
        chosen.insert(rng.gen_range(1..=cap));
    }
    chosen.into_iter().collect()
}

fn set_norm(set: &[usize], ws: &SampledFunction, p: f64, grid: Grid) -> Result<f64> {
    let m = grid.size();
    let scale = 1.0 / TAU.sqrt();
    let mut sum = vec![Complex64::new(0.0, 0.0); m];
    for &j in set {
        let k = natural_index_to_freq(j)? as f64;
        for (jj, t) in grid.nodes().enumerate() {
            let (s, c) = (k * t).sin_cos();
            sum[jj] += Complex64::new(c * scale, s * scale);
        }
    }
    let f = SampledFunction::new(grid, sum)?;
    weighted_lp_norm(&f, ws, p)
}
