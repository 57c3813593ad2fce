//! Riesz-bound probe: the ratio
//!
//! ```text
//! R(a) = ||sum_k a_k e_{n_k}||_{2,w}^2 / sum_k |a_k|^2
//! ```
//!
//! is a weighted average of `w` against `|sum a_k e_{n_k}|^2`, so it always
//! lies between the essential bounds of the weight. Two-sided positive
//! bounds over all coefficient vectors are exactly the Riesz-basis property;
//! translated Fejer bumps concentrated at the extrema of `w` probe the
//! sharpness of the bracket, and concentration at a zero of `w` drives the
//! ratio toward zero.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fourier::{dirichlet_kernel, unit_disc, synthesize, CoefficientVector};
use crate::grid::{weighted_lp_norm, Grid, SampledFunction};
use crate::report::ExperimentReport;
use crate::weights::{essential_bounds, Weight};

use super::{stream_rng, RNG_NAME};

/// Single summary row `(trials, min_ratio, max_ratio, ess_lower, ess_upper)`
/// over `trials` random coefficient vectors supported in `|k| <= max_freq`
/// plus Fejer bumps translated to the weight's extrema.
pub fn riesz_bounds(
    w: &Weight,
    max_freq: usize,
    trials: usize,
    seed: u64,
    grid: Grid,
) -> Result<ExperimentReport> {
    if trials < 10 {
        return Err(Error::invalid("riesz bounds need trials >= 10"));
    }
    let m = grid.size();
    if 2 * max_freq >= m {
        return Err(Error::invalid(format!(
            "max frequency {max_freq} aliases on a grid of {m} nodes"
        )));
    }

    let ws = w.sample(grid)?;
    let ratios: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|trial| -> Result<f64> {
            let mut rng = stream_rng(seed, &[trial as u64]);
            let mut c = CoefficientVector::new();
            for k in -(max_freq as i64)..=(max_freq as i64) {
                c.insert(k, unit_disc(&mut rng));
            }
            let energy: f64 = c.iter().map(|(_, v)| v.norm_sqr()).sum();
            let f = synthesize(&c, grid);
            ratio(&f, &ws, energy)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut min_ratio = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let mut max_ratio = ratios.iter().copied().fold(0.0f64, f64::max);

    // Fejer bumps at the grid extrema of the weight: these are the
    // concentration probes that make the bracket sharp.
    let n_bump = 2 * max_freq + 1;
    for u in [w.min_location(grid), w.max_location(grid)] {
        let kernel = dirichlet_kernel(n_bump, u, grid)?;
        let r = ratio(&kernel, &ws, n_bump as f64)?;
        min_ratio = min_ratio.min(r);
        max_ratio = max_ratio.max(r);
    }

    let (lo, hi) = essential_bounds(w, grid);
    let mut report = ExperimentReport::new(
        "riesz-bounds",
        &["trials", "min_ratio", "max_ratio", "ess_lower", "ess_upper"],
    );
    report.set_param("weight", w);
    report.set_param("grid_size", m);
    report.set_param("max_freq", max_freq);
    report.set_param("seed", seed);
    report.set_param("trials", trials);
    report.set_param("rng", RNG_NAME);
    report.push_row(vec![trials as f64, min_ratio, max_ratio, lo, hi]);
    report.append_note(
        "Energy ratios of random and concentrated expansions; a two-sided positive bracket over \
         all coefficient vectors is the Riesz-basis property in the weighted L2 space.",
    );
    Ok(report)
}

fn ratio(f: &SampledFunction, ws: &SampledFunction, energy: f64) -> Result<f64> {
    let norm = weighted_lp_norm(f, ws, 2.0)?;
    Ok(norm * norm / energy)
}
