//! Greedy ordering, m-term thresholding approximants, decreasing
//! rearrangements, and the Lorentz sequence norms used to measure them.
//!
//! The greedy ordering sorts coefficients by nonincreasing modulus; ties go
//! to the smaller natural-ordering index, so runs are fully reproducible.
//! Moduli at or below a configurable floor are treated as zero to keep
//! quadrature noise out of the ordering's tail.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::{
    freq_to_natural_index, natural_index_to_freq, synthesize, CoefficientVector,
};
use crate::grid::{weighted_lp_norm, Grid, SampledFunction, TAU};
use crate::weights::Weight;

/// Moduli at or below this are treated as exactly zero by the ordering.
pub const DEFAULT_COEFF_FLOOR: f64 = 1e-13;

/// Permutation of natural-ordering indices, largest modulus first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyOrdering {
    rho: Vec<usize>,
}

impl GreedyOrdering {
    /// `rho(j)` for 1-based position `j`.
    pub fn position(&self, j: usize) -> usize {
        self.rho[j - 1]
    }

    pub fn indices(&self) -> &[usize] {
        &self.rho
    }

    pub fn len(&self) -> usize {
        self.rho.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rho.is_empty()
    }
}

/// Greedy ordering with the default coefficient floor.
pub fn greedy_ordering(c: &CoefficientVector) -> GreedyOrdering {
    greedy_ordering_with_floor(c, DEFAULT_COEFF_FLOOR)
}

/// Greedy ordering, treating moduli `<= floor` as zero.
pub fn greedy_ordering_with_floor(c: &CoefficientVector, floor: f64) -> GreedyOrdering {
    let mut items: Vec<(usize, f64)> = c
        .iter()
        .filter(|(_, v)| v.norm() > floor)
        .map(|(k, v)| (freq_to_natural_index(k), v.norm()))
        .collect();
    items.sort_by(|a, b| {
        b.1.partial_cmp(&a.1)
            .expect("finite moduli")
            .then(a.0.cmp(&b.0))
    });
    GreedyOrdering {
        rho: items.into_iter().map(|(idx, _)| idx).collect(),
    }
}

/// Synthesis of the `m` largest-modulus terms. `m` past the support size
/// returns the full synthesis.
pub fn greedy_approximant(c: &CoefficientVector, m: usize, grid: Grid) -> SampledFunction {
    let ordering = greedy_ordering(c);
    let kept: Vec<i64> = ordering
        .indices()
        .iter()
        .take(m)
        .map(|&j| natural_index_to_freq(j).expect("ordering holds valid indices"))
        .collect();
    let filtered = CoefficientVector::from_pairs(kept.into_iter().map(|k| (k, c.get(k))));
    synthesize(&filtered, grid)
}

/// Moduli sorted in nonincreasing order.
pub fn decreasing_rearrangement(c: &CoefficientVector) -> Vec<f64> {
    let mut moduli: Vec<f64> = c.iter().map(|(_, v)| v.norm()).collect();
    moduli.sort_by(|a, b| b.partial_cmp(a).expect("finite moduli"));
    moduli
}

/// The sequence norms `||a||_{2,inf} = sup_n sqrt(n) a*_n` and
/// `||a||_{2,1} = sum_n a*_n / sqrt(n)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzNorms {
    pub l21: f64,
    pub l2inf: f64,
}

pub fn lorentz_norms(c: &CoefficientVector) -> LorentzNorms {
    let rearranged = decreasing_rearrangement(c);
    let mut l21 = 0.0;
    let mut l2inf: f64 = 0.0;
    for (i, a) in rearranged.iter().enumerate() {
        let n = (i + 1) as f64;
        l21 += a / n.sqrt();
        l2inf = l2inf.max(n.sqrt() * a);
    }
    LorentzNorms { l21, l2inf }
}

/// Greedy error curve `m -> ||f - G_m f||_{p,w}` for `m = 0..=m_max`.
///
/// Coefficients are extracted up to the grid's aliasing limit `M/2 - 1`, so
/// `f` should be band-limited below that; otherwise the curve flattens at
/// the truncation residual instead of reaching zero.
pub fn greedy_error_curve(
    f: &SampledFunction,
    w: &Weight,
    p: f64,
    m_max: usize,
) -> Result<Vec<(usize, f64)>> {
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::InvalidExponent(p));
    }
    let grid = f.grid();
    let n_max = grid.size() / 2 - 1;
    let coeffs = crate::fourier::fourier_coefficients(f, n_max)?;
    let ordering = greedy_ordering(&coeffs);
    let ws = w.sample(grid)?;

    let mut residual = f.clone();
    let mut curve = Vec::with_capacity(m_max + 1);
    curve.push((0, weighted_lp_norm(&residual, &ws, p)?));
    for m in 1..=m_max {
        if m <= ordering.len() {
            let j = ordering.position(m);
            let k = natural_index_to_freq(j)?;
            let a = coeffs.get(k) / Complex64::new(TAU.sqrt(), 0.0);
            // subtract a_k e_k(t) in place
            let rot = rotation(k as f64, grid.step());
            let mut cur = rotation(k as f64, grid.node(0));
            for (jj, v) in residual.values_mut().iter_mut().enumerate() {
                if jj % 64 == 0 && jj > 0 {
                    cur = rotation(k as f64, grid.node(jj));
                }
                *v -= a * cur;
                cur *= rot;
            }
        }
        curve.push((m, weighted_lp_norm(&residual, &ws, p)?));
    }
    Ok(curve)
}

fn rotation(k: f64, angle: f64) -> Complex64 {
    let (s, c) = (k * angle).rem_euclid(TAU).sin_cos();
    Complex64::new(c, s)
}
