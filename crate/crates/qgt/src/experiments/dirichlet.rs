//! Dirichlet-kernel growth: weighted norms of `D_N` across `N`, the
//! interpolation (Hoelder) inequality between the 1-, 2- and p-norms, and the
//! classical Lebesgue-constant fit `||D_N||_{L1} ~ (4/pi^2) log N`.
//!
//! The incompatibility that rules out `p != 2` lives here: `||D_N||_{p,w}`
//! comparable to `sqrt(N)` on both sides of 2 forces `||D_N||_{1,w}` up to
//! `sqrt(N)` through Hoelder, while the Lebesgue constant only allows
//! logarithmic growth.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fourier::dirichlet_snapshots;
use crate::grid::{weighted_l1_norm, weighted_lp_norm, Grid, TAU};
use crate::report::{format_sig12, ExperimentReport};
use crate::weights::Weight;

use super::fit_slope;

/// Rows per `N`: weighted 1- and 2-norms, one weighted p-norm and one
/// Hoelder-slack column per requested `p`, `||D_N||_{2,w}^2 / N`, the
/// unweighted classical Lebesgue constant `(2 pi)^(-1/2) ||D_N||_{L1(T)}`
/// and its direct ratio to `log N`.
///
/// Params carry `lebesgue_slope_fit`: the least-squares slope of the
/// Lebesgue constant against `log N`, the run's own large-N estimate of the
/// classical `4/pi^2`.
pub fn dirichlet_growth(
    w: &Weight,
    p_list: &[f64],
    n_list: &[usize],
    grid: Grid,
) -> Result<ExperimentReport> {
    let m = grid.size();
    if n_list.is_empty() {
        return Err(Error::invalid("dirichlet growth needs at least one N"));
    }
    let mut sorted = n_list.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted[0] < 2 {
        return Err(Error::invalid("kernel sizes must be >= 2 (log N scaling)"));
    }
    if 4 * sorted[sorted.len() - 1] >= m {
        return Err(Error::invalid(format!(
            "max N {} needs N < M/4 on a grid of {m} nodes",
            sorted[sorted.len() - 1]
        )));
    }
    for &p in p_list {
        if !p.is_finite() || p <= 1.0 {
            return Err(Error::InvalidExponent(p));
        }
    }

    let ws = w.sample(grid)?;
    let one = Weight::constant(1.0)?.sample(grid)?;
    let kernels = dirichlet_snapshots(&sorted, 0.0, grid)?;

    let rows: Vec<Vec<f64>> = sorted
        .par_iter()
        .zip(&kernels)
        .map(|(&n, kernel)| -> Result<Vec<f64>> {
            let norm1w = weighted_l1_norm(kernel, &ws)?;
            let norm2w = weighted_lp_norm(kernel, &ws, 2.0)?;
            let lebesgue = weighted_l1_norm(kernel, &one)? / TAU.sqrt();
            let mut row = vec![n as f64, norm1w, norm2w];
            for &p in p_list {
                row.push(weighted_lp_norm(kernel, &ws, p)?);
            }
            row.push(norm2w * norm2w / n as f64);
            row.push(lebesgue);
            row.push(lebesgue / (n as f64).ln());
            for &p in p_list {
                let normp = weighted_lp_norm(kernel, &ws, p)?;
                row.push(holder_slack(norm1w, norm2w, normp, p));
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut columns: Vec<String> = vec!["n".into(), "norm_1w".into(), "norm_2w".into()];
    for &p in p_list {
        columns.push(format!("norm_{}", p_tag(p)));
    }
    columns.push("norm_2w_sq_over_n".into());
    columns.push("lebesgue_constant".into());
    columns.push("lebesgue_ratio".into());
    for &p in p_list {
        columns.push(format!("holder_slack_{}", p_tag(p)));
    }
    let col_refs: Vec<&str> = columns.iter().map(|c| c.as_str()).collect();

    let mut report = ExperimentReport::new("dirichlet-growth", &col_refs);
    report.set_param("weight", w);
    report.set_param("grid_size", m);
    report.set_param(
        "p_list",
        p_list
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    for row in rows {
        report.push_row(row);
    }
    if report.rows.len() >= 2 {
        let logs: Vec<f64> = sorted.iter().map(|n| (*n as f64).ln()).collect();
        let lams = report.column("lebesgue_constant").unwrap();
        report.set_param("lebesgue_slope_fit", format_sig12(fit_slope(&logs, &lams)));
    }
    report.append_note(
        "Partial-sum kernel growth; lebesgue_slope_fit estimates the classical 4/pi^2 constant \
         from the run's own data, and nonnegative holder_slack columns certify the \
         interpolation inequality between the 1-, 2- and p-norms.",
    );
    Ok(report)
}

/// Interpolation slack; nonnegative for every measure by Hoelder's inequality.
/// For p < 2: `||D||_1^t ||D||_2^(1-t) - ||D||_p` with `t = 2/p - 1`.
/// For p > 2: `||D||_1^t ||D||_p^(1-t) - ||D||_2` with `t = (p-2)/(2p-2)`.
fn holder_slack(norm1: f64, norm2: f64, normp: f64, p: f64) -> f64 {
    if p < 2.0 {
        let theta = 2.0 / p - 1.0;
        norm1.powf(theta) * norm2.powf(1.0 - theta) - normp
    } else if p > 2.0 {
        let theta = (p - 2.0) / (2.0 * p - 2.0);
        norm1.powf(theta) * normp.powf(1.0 - theta) - norm2
    } else {
        0.0
    }
}

fn p_tag(p: f64) -> String {
    format!("p{}", p).replace('.', "_")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parseval_column_for_flat_weight() {
        let grid = Grid::new(4096).unwrap();
        let w = Weight::constant(1.0).unwrap();
        let report = dirichlet_growth(&w, &[1.5, 3.0], &[8, 64, 511], grid).unwrap();
        for row in &report.rows {
            let n = row[0];
            let norm2 = row[report.column_index("norm_2w").unwrap()];
            assert!((norm2 - n.sqrt()).abs() < 1e-10, "N={n}");
            let over_n = row[report.column_index("norm_2w_sq_over_n").unwrap()];
            assert!((over_n - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn holder_slack_nonnegative() {
        let grid = Grid::new(4096).unwrap();
        for spec in ["constant:c=1", "trig:a0=1:cos1=0.5", "power:alpha=0.5"] {
            let w: Weight = spec.parse().unwrap();
            let report =
                dirichlet_growth(&w, &[1.5, 3.0], &[8, 16, 32, 64, 128, 256], grid).unwrap();
            for col in ["holder_slack_p1_5", "holder_slack_p3"] {
                for v in report.column(col).unwrap() {
                    assert!(v >= 0.0, "{spec} {col}: {v}");
                }
            }
        }
    }

    #[test]
    fn lebesgue_fit_approaches_classical_constant() {
        let grid = Grid::new(4096).unwrap();
        let w = Weight::constant(1.0).unwrap();
        let ns: Vec<usize> = (3..=9).map(|k| 1usize << k).collect();
        let report = dirichlet_growth(&w, &[], &ns, grid).unwrap();
        let fit: f64 = report.params["lebesgue_slope_fit"].parse().unwrap();
        let classical = 4.0 / (std::f64::consts::PI * std::f64::consts::PI);
        assert!(
            (fit - classical).abs() < 0.1 * classical,
            "fit {fit} vs {classical}"
        );
    }

    #[test]
    fn rejects_aliasing_and_tiny_kernels() {
        let grid = Grid::new(256).unwrap();
        let w = Weight::constant(1.0).unwrap();
        assert!(dirichlet_growth(&w, &[], &[64], grid).is_err());
        assert!(dirichlet_growth(&w, &[], &[1, 8], grid).is_err());
        assert!(dirichlet_growth(&w, &[0.5], &[8], grid).is_err());
    }
}
