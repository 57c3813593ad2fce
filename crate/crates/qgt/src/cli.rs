//! Command-line front end: parse weight specs and experiment parameters, run
//! one experiment, serialize the report.
//!
//! Range flags accept either a dyadic spec `a:b` meaning `{2^a, ..., 2^b}`
//! or an explicit comma list `8,16,32`. The grid size defaults to 4096 and
//! can be overridden globally through the `QGT_GRID_SIZE` environment
//! variable. Exit status is 0 iff the run completed and the report was
//! emitted; the verdict value never affects the exit status.

use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::experiments::{
    ap_constant_report, democracy, dirichlet_growth, fejer_weight_recovery, quasi_greedy_verdict,
    riesz_bounds, sign_unconditionality, IndexSets, VerdictConfig, RNG_NAME,
};
use crate::fourier::{synthesize, unit_disc, CoefficientVector};
use crate::greedy::{greedy_error_curve, DEFAULT_COEFF_FLOOR};
use crate::grid::{Grid, TAU};
use crate::report::ExperimentReport;
use crate::weights::Weight;

pub const DEFAULT_GRID_SIZE: usize = 4096;
pub const GRID_SIZE_ENV: &str = "QGT_GRID_SIZE";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Debug, Args)]
pub struct CommonOpts {
    /// Weight spec: constant:c=1.0 | power:alpha=0.5 |
    /// polypower:coeffs=1,0,-1:mu=0.25 | trig:a0=1:cos1=0.5 |
    /// tabulated:file=PATH
    #[arg(long)]
    pub weight: String,
    /// Lebesgue exponent, must exceed 1
    #[arg(long, default_value_t = 2.0)]
    pub p: f64,
    /// Midpoint grid size (even, >= 64); QGT_GRID_SIZE overrides the default
    #[arg(long)]
    pub grid: Option<usize>,
    /// Seed for the per-row ChaCha8 streams
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Output path; stdout when absent
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Estimate the Muckenhoupt A_p constant of a weight
    ApConstant {
        #[command(flatten)]
        common: CommonOpts,
        /// Interval family depth (dyadic lengths down to 2*pi*2^-depth)
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
    /// Greedy m-term error curve for a built-in test function
    GreedyRun {
        #[command(flatten)]
        common: CommonOpts,
        /// Test function: sawtooth:degree=D | random:degree=D | ek:k=K
        #[arg(long, default_value = "sawtooth:degree=128")]
        function: String,
        /// Largest number of retained terms
        #[arg(long, default_value_t = 64)]
        m_max: usize,
    },
    /// Weighted Dirichlet-kernel norms, Lebesgue constants, Hoelder slack
    DirichletGrowth {
        #[command(flatten)]
        common: CommonOpts,
        /// Kernel sizes, dyadic a:b or comma list
        #[arg(long, default_value = "3:9")]
        n: String,
        /// Extra exponents for norm and slack columns (comma list)
        #[arg(long, default_value = "1.5,3")]
        p_list: String,
    },
    /// Constant-coefficient norms over blocks, random sets, progressions
    Democracy {
        #[command(flatten)]
        common: CommonOpts,
        /// Set sizes, dyadic a:b or comma list
        #[arg(long, default_value = "4:8")]
        n: String,
        /// Random sets per size
        #[arg(long, default_value_t = 8)]
        trials: usize,
    },
    /// Min/max norms over sign patterns on index blocks
    SignUncond {
        #[command(flatten)]
        common: CommonOpts,
        /// Block sizes, dyadic a:b or comma list
        #[arg(long, default_value = "3:7")]
        n: String,
        /// Sign patterns per block (exact enumeration for small blocks)
        #[arg(long, default_value_t = 64)]
        trials: usize,
    },
    /// Fejer-type recovery of the weight from squared-kernel averages
    FejerRecover {
        #[command(flatten)]
        common: CommonOpts,
        /// Kernel sizes, dyadic a:b or comma list
        #[arg(long, default_value = "5:9")]
        n: String,
        /// Recovery points (comma list of reals)
        #[arg(long, default_value = "0")]
        u_list: String,
    },
    /// Two-sided energy-ratio bounds for random and concentrated expansions
    RieszBounds {
        #[command(flatten)]
        common: CommonOpts,
        /// Largest coefficient frequency
        #[arg(long, default_value_t = 64)]
        max_freq: usize,
        /// Random coefficient vectors
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Composite quasi-greedy decision procedure
    Verdict {
        #[command(flatten)]
        common: CommonOpts,
        /// Interval family depth for the A_p gate
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
}

#[derive(Debug, Parser)]
#[command(
    name = "qgt",
    about = "Greedy trigonometric approximation diagnostics in weighted L^p spaces",
    version
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

impl RunConfig {
    pub fn common(&self) -> &CommonOpts {
        match &self.command {
            Command::ApConstant { common, .. }
            | Command::GreedyRun { common, .. }
            | Command::DirichletGrowth { common, .. }
            | Command::Democracy { common, .. }
            | Command::SignUncond { common, .. }
            | Command::FejerRecover { common, .. }
            | Command::RieszBounds { common, .. }
            | Command::Verdict { common, .. } => common,
        }
    }
}

/// Parses argv into a validated [`RunConfig`]. Returns a usage error naming
/// the offending flag on bad input.
pub fn parse_args<I, T>(argv: I) -> std::result::Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = RunConfig::try_parse_from(argv)?;
    let common = config.common();
    if !common.p.is_finite() || common.p <= 1.0 {
        return Err(usage_error("--p must exceed 1"));
    }
    if let Some(g) = common.grid {
        if g < 64 || g % 2 != 0 {
            return Err(usage_error("--grid must be an even integer >= 64"));
        }
    }
    Ok(config)
}

fn usage_error(msg: &str) -> clap::Error {
    clap::Error::raw(clap::error::ErrorKind::ValueValidation, format!("{msg}\n"))
}

/// Effective grid size: flag, then QGT_GRID_SIZE, then the default.
pub fn resolve_grid_size(flag: Option<usize>) -> Result<usize> {
    if let Some(g) = flag {
        return Ok(g);
    }
    if let Ok(raw) = std::env::var(GRID_SIZE_ENV) {
        let g: usize = raw.parse().map_err(|_| {
            Error::invalid(format!("{GRID_SIZE_ENV}={raw} is not a grid size"))
        })?;
        if g < 64 || !g.is_multiple_of(2) {
            return Err(Error::invalid(format!(
                "{GRID_SIZE_ENV}={g} must be an even integer >= 64"
            )));
        }
        return Ok(g);
    }
    Ok(DEFAULT_GRID_SIZE)
}

/// `a:b` as the dyadic list `{2^a..2^b}`, otherwise a comma list.
pub fn parse_range(spec: &str) -> Result<Vec<usize>> {
    let vals: Vec<usize> = if let Some((a, b)) = spec.split_once(':') {
        let a: u32 = a
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad dyadic range `{spec}`")))?;
        let b: u32 = b
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad dyadic range `{spec}`")))?;
        if a > b || b >= 63 {
            return Err(Error::invalid(format!("empty or oversized dyadic range `{spec}`")));
        }
        (a..=b).map(|e| 1usize << e).collect()
    } else {
        spec.split(',')
            .map(|v| {
                v.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("`{v}` is not an integer in `{spec}`")))
            })
            .collect::<Result<Vec<_>>>()?
    };
    if vals.is_empty() {
        return Err(Error::invalid(format!("range `{spec}` is empty")));
    }
    Ok(vals)
}

fn parse_real_list(spec: &str) -> Result<Vec<f64>> {
    spec.split(',')
        .map(|v| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| Error::invalid(format!("`{v}` is not a number in `{spec}`")))
        })
        .collect()
}

/// Built-in test functions for `greedy-run`.
fn build_test_function(spec: &str, grid: Grid, seed: u64) -> Result<CoefficientVector> {
    let mut parts = spec.split(':');
    let head = parts.next().unwrap_or_default();
    let mut kv = std::collections::BTreeMap::new();
    for part in parts {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::invalid(format!("bad function spec `{spec}`")))?;
        kv.insert(k.to_string(), v.to_string());
    }
    let degree = |default: usize| -> Result<usize> {
        match kv.get("degree") {
            Some(raw) => raw
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("bad degree in `{spec}`"))),
            None => Ok(default),
        }
    };
    let mut c = CoefficientVector::new();
    match head {
        // truncated Fourier series of the sawtooth t on [-pi, pi)
        "sawtooth" => {
            let d = degree(128)?;
            if 2 * d >= grid.size() {
                return Err(Error::invalid("sawtooth degree aliases on this grid"));
            }
            for k in 1..=d as i64 {
                let a = TAU.sqrt() * if k % 2 == 0 { 1.0 } else { -1.0 } / k as f64;
                c.insert(k, Complex64::new(0.0, a));
                c.insert(-k, Complex64::new(0.0, -a));
            }
        }
        "random" => {
            let d = degree(64)?;
            if 2 * d >= grid.size() {
                return Err(Error::invalid("random degree aliases on this grid"));
            }
            let mut rng = crate::experiments::stream_rng(seed, &[0xF0]);
            for k in -(d as i64)..=(d as i64) {
                c.insert(k, unit_disc(&mut rng));
            }
        }
        "ek" => {
            let k: i64 = kv
                .get("k")
                .ok_or_else(|| Error::invalid("ek function needs k="))?
                .parse()
                .map_err(|_| Error::invalid(format!("bad k in `{spec}`")))?;
            if 2 * k.unsigned_abs() as usize >= grid.size() {
                return Err(Error::invalid("ek frequency aliases on this grid"));
            }
            c.insert(k, Complex64::new(1.0, 0.0));
        }
        other => {
            return Err(Error::invalid(format!(
                "unknown test function `{other}` (expected sawtooth, random, or ek)"
            )))
        }
    }
    Ok(c)
}

/// Runs the configured experiment and returns its report.
pub fn run(config: &RunConfig) -> Result<ExperimentReport> {
    let common = config.common();
    let weight: Weight = common.weight.parse()?;
    let grid = Grid::new(resolve_grid_size(common.grid)?)?;
    match &config.command {
        Command::ApConstant { depth, .. } => {
            ap_constant_report(&weight, common.p, *depth, grid)
        }
        Command::GreedyRun { function, m_max, .. } => {
            let coeffs = build_test_function(function, grid, common.seed)?;
            let f = synthesize(&coeffs, grid);
            let curve = greedy_error_curve(&f, &weight, common.p, *m_max)?;
            // the synthesized input is band-limited: the curve tail is the
            // quadrature residual, reported as the truncation note
            let mut report = ExperimentReport::new("greedy-run", &["m", "error"]);
            report.set_param("weight", &weight);
            report.set_param("p", common.p);
            report.set_param("grid_size", grid.size());
            report.set_param("seed", common.seed);
            report.set_param("function", function);
            report.set_param("coeff_floor", DEFAULT_COEFF_FLOOR);
            report.set_param("rng", RNG_NAME);
            for (m, err) in curve {
                report.push_row(vec![m as f64, err]);
            }
            report.append_note(
                "Weighted error of the m-term thresholding approximant; the input is \
                 band-limited on this grid so no truncation remainder is excluded.",
            );
            Ok(report)
        }
        Command::DirichletGrowth { n, p_list, .. } => {
            let ns = parse_range(n)?;
            let ps = parse_real_list(p_list)?;
            dirichlet_growth(&weight, &ps, &ns, grid)
        }
        Command::Democracy { n, trials, .. } => {
            let ns = parse_range(n)?;
            democracy(&weight, common.p, &ns, *trials, common.seed, grid)
        }
        Command::SignUncond { n, trials, .. } => {
            let ns = parse_range(n)?;
            sign_unconditionality(
                &weight,
                common.p,
                &IndexSets::Blocks(ns),
                *trials,
                common.seed,
                grid,
            )
        }
        Command::FejerRecover { n, u_list, .. } => {
            let ns = parse_range(n)?;
            let us = parse_real_list(u_list)?;
            fejer_weight_recovery(&weight, &us, &ns, grid)
        }
        Command::RieszBounds { max_freq, trials, .. } => {
            riesz_bounds(&weight, *max_freq, *trials, common.seed, grid)
        }
        Command::Verdict { depth, .. } => {
            let config = VerdictConfig {
                ap_depth: *depth,
                ..VerdictConfig::default()
            };
            let run = quasi_greedy_verdict(&weight, common.p, &config, grid, common.seed)?;
            Ok(run.report)
        }
    }
}

/// Serializes `report` to the requested sink. Unwritable paths surface as
/// errors (nonzero exit in the binary).
pub fn emit(
    report: &ExperimentReport,
    format: OutputFormat,
    path: Option<&std::path::Path>,
) -> Result<()> {
    let payload = match format {
        OutputFormat::Csv => report.to_csv_string(),
        OutputFormat::Json => {
            let mut s = report.to_json_string();
            s.push('\n');
            s
        }
    };
    match path {
        Some(p) => std::fs::write(p, payload)?,
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(payload.as_bytes())?;
        }
    }
    Ok(())
}

/// Full CLI entry point used by the `qgt` binary.
pub fn main_impl<I, T>(argv: I) -> Result<i32>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match parse_args(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version and prints usage errors itself
            e.exit();
        }
    };
    let report = run(&config)?;
    let common = config.common();
    emit(&report, common.format, common.output.as_deref())?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    fn args(line: &str) -> Vec<String> {
        std::iter::once("qgt".to_string())
            .chain(line.split_whitespace().map(|s| s.to_string()))
            .collect()
    }

    #[test]
    fn parse_verdict_example() {
        let cfg =
            parse_args(args("verdict --weight power:alpha=0.8 --p 2 --grid 8192 --seed 7"))
                .unwrap();
        let common = cfg.common();
        assert_eq!(common.weight, "power:alpha=0.8");
        assert_eq!(common.p, 2.0);
        assert_eq!(common.grid, Some(8192));
        assert_eq!(common.seed, 7);
        assert_eq!(common.format, OutputFormat::Csv);
        assert!(matches!(cfg.command, Command::Verdict { .. }));
    }

    #[test]
    fn parse_ap_depth() {
        let cfg = parse_args(args("ap-constant --weight constant:c=2 --p 2 --depth 10")).unwrap();
        match cfg.command {
            Command::ApConstant { depth, .. } => assert_eq!(depth, 10),
            _ => panic!("wrong subcommand"),
        }
    }

    #[test]
    fn parse_rejects_bad_p_and_grid() {
        assert!(parse_args(args("democracy --weight constant:c=1 --p 0.5")).is_err());
        assert!(parse_args(args("democracy --weight constant:c=1 --p 1.0")).is_err());
        assert!(parse_args(args("democracy --weight constant:c=1 --grid 63")).is_err());
        assert!(parse_args(args("democracy --weight constant:c=1 --grid 100 --p 2")).is_ok());
    }

    #[test]
    fn parse_rejects_unknown_subcommand() {
        assert!(parse_args(args("schauder --weight constant:c=1")).is_err());
    }

    #[test]
    fn range_specs() {
        assert_eq!(parse_range("3:5").unwrap(), vec![8, 16, 32]);
        assert_eq!(parse_range("8,16,99").unwrap(), vec![8, 16, 99]);
        assert!(parse_range("5:3").is_err());
        assert!(parse_range("").is_err());
        assert!(parse_range("a:b").is_err());
    }

    #[test]
    fn unknown_weight_variant_fails_at_run() {
        let cfg = parse_args(args("democracy --weight gauss:s=1 --p 2")).unwrap();
        assert!(run(&cfg).is_err());
    }

    #[test]
    fn greedy_run_produces_decreasing_curve() {
        let cfg = parse_args(args(
            "greedy-run --weight trig:a0=1:cos1=0.5 --p 2 --grid 1024 \
             --function sawtooth:degree=64 --m-max 128",
        ))
        .unwrap();
        let report = run(&cfg).unwrap();
        let errs = report.column("error").unwrap();
        assert_eq!(errs.len(), 129);
        assert!(errs.last().unwrap() < &1e-8);
    }

    #[test]
    fn verdict_run_reports_enum_string() {
        let cfg = parse_args(args("verdict --weight constant:c=1 --p 2 --grid 4096")).unwrap();
        let report = run(&cfg).unwrap();
        assert_eq!(report.verdict, Some(Verdict::ConsistentWithQuasiGreedy));
        let json = report.to_json_string();
        assert!(json.contains("\"consistent-with-quasi-greedy\""));
    }

    #[test]
    fn test_function_specs_validate() {
        let grid = Grid::new(256).unwrap();
        assert!(build_test_function("sawtooth:degree=16", grid, 1).is_ok());
        assert!(build_test_function("sawtooth:degree=128", grid, 1).is_err());
        assert!(build_test_function("ek:k=7", grid, 1).is_ok());
        assert!(build_test_function("ek", grid, 1).is_err());
        assert!(build_test_function("spline:degree=3", grid, 1).is_err());
    }
}
