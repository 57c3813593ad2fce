//! Symbolic weight families on the torus and brute-force Muckenhoupt `A_p`
//! constant estimation.
//!
//! A weight is a nonnegative 2*pi-periodic function. The estimator scans a
//! dyadic family of intervals (lengths `2*pi * 2^-l`, `l = 0..depth`, centers
//! shifted by a quarter length, wrap-around included) and maximizes the
//! quotient
//!
//! ```text
//! (1/|I| int_I w) * (1/|I| int_I w^(-1/(p-1)))^(p-1)
//! ```
//!
//! computed from prefix sums of the samples on a fine grid. The reported
//! `k_hat` is a lower bound on the true A_p constant; divergence ("w is not
//! in A_p") is a reported flag, never an exception. Three triggers set it:
//!
//! * `k_hat` exceeds [`AP_DIVERGENCE_CAP`] (or a prefix sum overflows),
//! * `k_hat` grows by more than [`AP_DEPTH_GROWTH_FACTOR`] between the last
//!   two depths,
//! * `k_hat` grows by more than [`AP_REFINEMENT_FACTOR`] when the fine grid
//!   is refined from `M/2` to `M` cells. A non-integrable `w^(-1/(p-1))` is
//!   regularized by any fixed grid, so its quotient keeps climbing under
//!   refinement while integrable singularities stabilize; this is the trigger
//!   that actually fires for power weights past the `A_p` range.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{reduce_to_torus, sample, Grid, SampledFunction, TAU};

/// Estimates above this cap are reported as diverging.
pub const AP_DIVERGENCE_CAP: f64 = 1e8;
/// Growth factor between the last two depths that flags divergence.
pub const AP_DEPTH_GROWTH_FACTOR: f64 = 2.0;
/// Growth factor under grid refinement (M/2 -> M) that flags divergence.
pub const AP_REFINEMENT_FACTOR: f64 = 1.25;

const TRIG_VALIDATION_GRID: usize = 8192;
const POLY_ENDPOINT_TOL: f64 = 1e-9;

/// Symbolic description of a nonnegative 2*pi-periodic weight.
#[derive(Clone, Debug, PartialEq)]
pub enum Weight {
    /// `w(t) = c`, `c > 0`.
    Constant { c: f64 },
    /// `w(t) = |t|^alpha` on `[-pi, pi)`, extended periodically.
    Power { alpha: f64 },
    /// `w(t) = |P(t)|^mu` with `P` given by ascending-degree coefficients.
    PolyPower { coeffs: Vec<f64>, mu: f64 },
    /// `w(t) = a0 + sum_j a_j cos(jt) + b_j sin(jt)`.
    Trig { a0: f64, cos: Vec<f64>, sin: Vec<f64> },
    /// Nearest-node lookup into tabulated values on a midpoint grid.
    Tabulated { grid: Grid, values: Vec<f64> },
}

fn eval_poly(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

impl Weight {
    pub fn constant(c: f64) -> Result<Self> {
        if !c.is_finite() || c <= 0.0 {
            return Err(Error::invalid(format!(
                "constant weight needs c > 0, got {c}"
            )));
        }
        Ok(Weight::Constant { c })
    }

    pub fn power(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::invalid("power weight exponent must be finite"));
        }
        Ok(Weight::Power { alpha })
    }

    /// `coeffs` in ascending degree. The periodization is continuous only
    /// when `|P(-pi)| = |P(pi)|`; construction enforces that hypothesis.
    pub fn poly_power(coeffs: Vec<f64>, mu: f64) -> Result<Self> {
        if coeffs.iter().all(|c| *c == 0.0) {
            return Err(Error::invalid("polynomial weight must not be identically zero"));
        }
        if !mu.is_finite() {
            return Err(Error::invalid("poly power exponent must be finite"));
        }
        let left = eval_poly(&coeffs, -std::f64::consts::PI).abs();
        let right = eval_poly(&coeffs, std::f64::consts::PI).abs();
        let scale = left.abs().max(right.abs()).max(1.0);
        if (left - right).abs() > POLY_ENDPOINT_TOL * scale {
            return Err(Error::invalid(format!(
                "|P(-pi)| = {left:.6e} and |P(pi)| = {right:.6e} must agree for a periodic polynomial weight"
            )));
        }
        Ok(Weight::PolyPower { coeffs, mu })
    }

    /// Fails when the trigonometric polynomial dips below zero anywhere on a
    /// fine validation grid.
    pub fn trig(a0: f64, cos: Vec<f64>, sin: Vec<f64>) -> Result<Self> {
        let w = Weight::Trig { a0, cos, sin };
        let g = Grid::new(TRIG_VALIDATION_GRID).expect("even validation grid");
        for t in g.nodes() {
            let v = w.evaluate(t);
            if v < 0.0 {
                return Err(Error::invalid(format!(
                    "trig weight is negative ({v:.6e}) at t = {t:.6e}"
                )));
            }
        }
        Ok(w)
    }

    pub fn tabulated(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.size() {
            return Err(Error::invalid(format!(
                "tabulated weight has {} values for a grid of {} nodes",
                values.len(),
                grid.size()
            )));
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::invalid(
                "tabulated weight values must be finite and nonnegative",
            ));
        }
        Ok(Weight::Tabulated { grid, values })
    }

    /// Pointwise value after reducing `t` mod 2*pi into `[-pi, pi)`.
    /// May return `+inf` at isolated singular points; those never coincide
    /// with midpoint grid nodes for the built-in families.
    pub fn evaluate(&self, t: f64) -> f64 {
        let t = reduce_to_torus(t);
        match self {
            Weight::Constant { c } => *c,
            Weight::Power { alpha } => t.abs().powf(*alpha),
            Weight::PolyPower { coeffs, mu } => eval_poly(coeffs, t).abs().powf(*mu),
            Weight::Trig { a0, cos, sin } => {
                let mut v = *a0;
                for (j, a) in cos.iter().enumerate() {
                    v += a * ((j + 1) as f64 * t).cos();
                }
                for (j, b) in sin.iter().enumerate() {
                    v += b * ((j + 1) as f64 * t).sin();
                }
                v
            }
            Weight::Tabulated { grid, values } => {
                let pos = (t + std::f64::consts::PI) / grid.step() - 0.5;
                let j = pos.round().rem_euclid(grid.size() as f64) as usize % grid.size();
                values[j]
            }
        }
    }

    /// Samples the weight on `grid` as a real-valued [`SampledFunction`].
    pub fn sample(&self, grid: Grid) -> Result<SampledFunction> {
        sample(grid, |t| Complex64::new(self.evaluate(t), 0.0))
    }

    pub(crate) fn sample_values(&self, grid: Grid) -> Vec<f64> {
        grid.nodes().map(|t| self.evaluate(t)).collect()
    }

    /// Node of `probe_grid` where the weight is smallest (first on ties).
    /// Built-in singular families attain their minimum next to the
    /// singularity, so this is where concentration probes are centered.
    pub fn min_location(&self, probe_grid: Grid) -> f64 {
        let mut best = (f64::INFINITY, 0usize);
        for (j, t) in probe_grid.nodes().enumerate() {
            let v = self.evaluate(t);
            if v < best.0 {
                best = (v, j);
            }
        }
        probe_grid.node(best.1)
    }

    /// Node of `probe_grid` where the weight is largest (first on ties).
    pub fn max_location(&self, probe_grid: Grid) -> f64 {
        let mut best = (f64::NEG_INFINITY, 0usize);
        for (j, t) in probe_grid.nodes().enumerate() {
            let v = self.evaluate(t);
            if v > best.0 {
                best = (v, j);
            }
        }
        probe_grid.node(best.1)
    }
}

/// Grid minimum and maximum of the weight; approximates the essential
/// bounds for the built-in (a.e. continuous) families.
pub fn essential_bounds(w: &Weight, probe_grid: Grid) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for t in probe_grid.nodes() {
        let v = w.evaluate(t);
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo, hi)
}

/// Outcome of the brute-force A_p scan.
#[derive(Clone, Debug)]
pub struct ApEstimate {
    pub p: f64,
    /// Max of the A_p quotient over the interval family; >= 1 by the
    /// arithmetic-geometric mean inequality.
    pub k_hat: f64,
    /// (center, length) of the maximizing interval.
    pub argmax_interval: (f64, f64),
    pub interval_family_depth: usize,
    pub diverging: bool,
    /// `k_hat` at full resolution over `k_hat` at half resolution.
    pub refinement_ratio: f64,
}

struct ScanOutcome {
    per_depth: Vec<f64>,
    argmax: (f64, f64),
    overflow: bool,
}

fn scan_family(wvals: &[f64], p: f64, depth: usize) -> ScanOutcome {
    let m = wvals.len();
    let h = TAU / m as f64;
    let exponent = -1.0 / (p - 1.0);
    let mut overflow = false;

    // doubled prefix sums so wrap-around intervals are plain index ranges
    let mut pw = vec![0.0f64; 2 * m + 1];
    let mut ps = vec![0.0f64; 2 * m + 1];
    for i in 0..2 * m {
        let wv = wvals[i % m];
        let sv = wv.powf(exponent);
        pw[i + 1] = pw[i] + wv;
        ps[i + 1] = ps[i] + sv;
        if !pw[i + 1].is_finite() || !ps[i + 1].is_finite() {
            overflow = true;
        }
    }

    let mut per_depth = Vec::with_capacity(depth + 1);
    let mut k_max = 0.0f64;
    let mut argmax = (0.0, TAU);
    for level in 0..=depth {
        let cells = m >> level;
        if cells == 0 {
            break;
        }
        let step = (cells / 4).max(1);
        let mut start = 0usize;
        while start < m {
            let aw = (pw[start + cells] - pw[start]) / cells as f64;
            let asig = (ps[start + cells] - ps[start]) / cells as f64;
            let q = aw * asig.powf(p - 1.0);
            if q > k_max {
                k_max = q;
                let center = -std::f64::consts::PI + (start as f64 + cells as f64 / 2.0) * h;
                argmax = (reduce_to_torus(center), cells as f64 * h);
            }
            start += step;
        }
        per_depth.push(k_max);
    }
    ScanOutcome {
        per_depth,
        argmax,
        overflow,
    }
}

/// Brute-force estimate of the A_p constant of `w` at exponent `p`.
///
/// `fine_grid.size()` must be divisible by `2^(depth+1)` and the smallest
/// interval must cover at least four cells, i.e. `size >= 2^(depth+2)`.
pub fn ap_constant(w: &Weight, p: f64, depth: usize, fine_grid: Grid) -> Result<ApEstimate> {
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::InvalidExponent(p));
    }
    if depth < 1 {
        return Err(Error::invalid("interval family depth must be >= 1"));
    }
    let m = fine_grid.size();
    if !m.is_multiple_of(1usize << (depth + 1)) || m < (1usize << (depth + 2)) {
        return Err(Error::invalid(format!(
            "fine grid of {m} cells cannot resolve depth {depth}; need a multiple of 2^{} of at least 2^{}",
            depth + 1,
            depth + 2
        )));
    }

    let full = scan_family(&w.sample_values(fine_grid), p, depth);
    let half_grid = Grid::new(m / 2)?;
    let half = scan_family(&w.sample_values(half_grid), p, depth);

    let mut k_hat = *full.per_depth.last().expect("depth >= 1");
    let half_k = *half.per_depth.last().expect("depth >= 1");
    let refinement_ratio = if half_k > 0.0 && k_hat.is_finite() {
        k_hat / half_k
    } else {
        f64::INFINITY
    };
    let depth_growth = if full.per_depth.len() >= 2 {
        let prev = full.per_depth[full.per_depth.len() - 2];
        if prev > 0.0 {
            k_hat / prev
        } else {
            f64::INFINITY
        }
    } else {
        1.0
    };

    let mut diverging = full.overflow
        || !k_hat.is_finite()
        || k_hat > AP_DIVERGENCE_CAP
        || depth_growth > AP_DEPTH_GROWTH_FACTOR
        || refinement_ratio > AP_REFINEMENT_FACTOR;
    if !k_hat.is_finite() {
        k_hat = AP_DIVERGENCE_CAP;
        diverging = true;
    }

    Ok(ApEstimate {
        p,
        k_hat,
        argmax_interval: full.argmax,
        interval_family_depth: depth,
        diverging,
        refinement_ratio,
    })
}

// ---------------------------------------------------------------------------
// Spec-string grammar:
//   constant:c=1.0
//   power:alpha=0.5
//   polypower:coeffs=1,0,-1:mu=0.25      (coeffs ascending degree)
//   trig:a0=1:cos1=0.5:sin2=-0.25
//   tabulated:file=PATH                  (CSV rows "t,value")
// ---------------------------------------------------------------------------

fn spec_err(spec: &str, reason: impl Into<String>) -> Error {
    Error::WeightSpec {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn parse_f64(spec: &str, key: &str, raw: &str) -> Result<f64> {
    raw.parse::<f64>()
        .map_err(|_| spec_err(spec, format!("`{key}` expects a number, got `{raw}`")))
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let mut parts = spec.split(':');
        let head = parts.next().unwrap_or_default();
        let mut kv = Vec::new();
        for part in parts {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| spec_err(spec, format!("expected key=value, got `{part}`")))?;
            kv.push((k, v));
        }
        let find = |key: &str| kv.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);

        match head {
            "constant" => {
                let c = parse_f64(spec, "c", find("c").ok_or_else(|| spec_err(spec, "missing c="))?)?;
                Weight::constant(c)
            }
            "power" => {
                let a = parse_f64(
                    spec,
                    "alpha",
                    find("alpha").ok_or_else(|| spec_err(spec, "missing alpha="))?,
                )?;
                Weight::power(a)
            }
            "polypower" => {
                let raw = find("coeffs").ok_or_else(|| spec_err(spec, "missing coeffs="))?;
                let coeffs = raw
                    .split(',')
                    .map(|c| parse_f64(spec, "coeffs", c))
                    .collect::<Result<Vec<_>>>()?;
                let mu = parse_f64(spec, "mu", find("mu").ok_or_else(|| spec_err(spec, "missing mu="))?)?;
                Weight::poly_power(coeffs, mu)
            }
            "trig" => {
                let a0 = parse_f64(spec, "a0", find("a0").ok_or_else(|| spec_err(spec, "missing a0="))?)?;
                let mut cos = Vec::new();
                let mut sin = Vec::new();
                for (k, v) in &kv {
                    if *k == "a0" {
                        continue;
                    }
                    let (kind, idx) = if let Some(i) = k.strip_prefix("cos") {
                        ("cos", i)
                    } else if let Some(i) = k.strip_prefix("sin") {
                        ("sin", i)
                    } else {
                        return Err(spec_err(spec, format!("unknown trig key `{k}`")));
                    };
                    let j: usize = idx
                        .parse()
                        .map_err(|_| spec_err(spec, format!("bad harmonic index in `{k}`")))?;
                    if j == 0 {
                        return Err(spec_err(spec, "harmonic indices start at 1"));
                    }
                    let val = parse_f64(spec, k, v)?;
                    let target = if kind == "cos" { &mut cos } else { &mut sin };
                    if target.len() < j {
                        target.resize(j, 0.0);
                    }
                    target[j - 1] = val;
                }
                Weight::trig(a0, cos, sin)
            }
            "tabulated" => {
                let path = find("file").ok_or_else(|| spec_err(spec, "missing file="))?;
                let text = std::fs::read_to_string(path)
                    .map_err(|e| spec_err(spec, format!("cannot read `{path}`: {e}")))?;
                let mut pairs = Vec::new();
                for (lineno, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let (ts, vs) = line.split_once(',').ok_or_else(|| {
                        spec_err(spec, format!("line {}: expected `t,value`", lineno + 1))
                    })?;
                    pairs.push((
                        parse_f64(spec, "t", ts.trim())?,
                        parse_f64(spec, "value", vs.trim())?,
                    ));
                }
                let m = pairs.len();
                let grid = Grid::new(m).map_err(|_| {
                    spec_err(spec, format!("{m} rows do not form an even midpoint grid"))
                })?;
                for (j, (t, _)) in pairs.iter().enumerate() {
                    if (t - grid.node(j)).abs() > 1e-9 {
                        return Err(spec_err(
                            spec,
                            format!("row {} abscissa {t} is not midpoint node {}", j + 1, grid.node(j)),
                        ));
                    }
                }
                Weight::tabulated(grid, pairs.into_iter().map(|(_, v)| v).collect())
            }
            other => Err(spec_err(spec, format!("unknown weight variant `{other}`"))),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Constant { c } => write!(f, "constant:c={c}"),
            Weight::Power { alpha } => write!(f, "power:alpha={alpha}"),
            Weight::PolyPower { coeffs, mu } => {
                let cs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                write!(f, "polypower:coeffs={}:mu={mu}", cs.join(","))
            }
            Weight::Trig { a0, cos, sin } => {
                write!(f, "trig:a0={a0}")?;
                for (j, a) in cos.iter().enumerate() {
                    if *a != 0.0 {
                        write!(f, ":cos{}={a}", j + 1)?;
                    }
                }
                for (j, b) in sin.iter().enumerate() {
                    if *b != 0.0 {
                        write!(f, ":sin{}={b}", j + 1)?;
                    }
                }
                Ok(())
            }
            Weight::Tabulated { grid, .. } => write!(f, "tabulated:nodes={}", grid.size()),
        }
    }
}
