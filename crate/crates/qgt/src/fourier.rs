//! The trigonometric system `e_k(t) = (2*pi)^(-1/2) e^(ikt)` in its natural
//! ordering, Fourier coefficients by quadrature, partial-sum operators, and
//! Dirichlet kernels.
//!
//! The natural ordering enumerates the frequencies as `0, -1, 1, -2, 2, ...`:
//! position 1 holds frequency 0, position `2j` holds `-j`, position `2j+1`
//! holds `+j`. Symmetric and natural partial sums are related by
//! `S_{2N+1} = T_N`.
//!
//! Coefficients are computed by direct `O(M*N)` midpoint quadrature, which is
//! exact for band-limited inputs below the aliasing limit `M/2`. The inner
//! loops advance `e^(ik t_j)` by complex rotation and re-anchor the phase
//! every few dozen steps to keep rounding drift below 1e-13.

use num_complex::Complex64;
use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::grid::{reduce_to_torus, sample, Grid, SampledFunction, TAU};
use crate::weights::Weight;

/// Steps between exact re-anchorings of the incremental phase rotation.
const PHASE_REFRESH: usize = 64;

#[inline]
fn phase(angle: f64) -> Complex64 {
    let (s, c) = angle.rem_euclid(TAU).sin_cos();
    Complex64::new(c, s)
}

/// Natural-ordering position (1-based) to frequency: 1 -> 0, 2j -> -j, 2j+1 -> j.
pub fn natural_index_to_freq(j: usize) -> Result<i64> {
    if j < 1 {
        return Err(Error::invalid("natural-ordering indices start at 1"));
    }
    Ok(if j == 1 {
        0
    } else if j.is_multiple_of(2) {
        -((j / 2) as i64)
    } else {
        (j / 2) as i64
    })
}

/// Frequency to natural-ordering position; inverse of [`natural_index_to_freq`].
pub fn freq_to_natural_index(k: i64) -> usize {
    if k == 0 {
        1
    } else if k < 0 {
        2 * (-k) as usize
    } else {
        2 * k as usize + 1
    }
}

/// Finite map from integer frequency to complex coefficient.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CoefficientVector {
    entries: BTreeMap<i64, Complex64>,
}

impl CoefficientVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, Complex64)>) -> Self {
        let mut c = Self::new();
        for (k, v) in pairs {
            c.insert(k, v);
        }
        c
    }

    /// Stores a coefficient; panics on non-finite values (type invariant).
    pub fn insert(&mut self, freq: i64, value: Complex64) {
        assert!(
            value.re.is_finite() && value.im.is_finite(),
            "coefficient at frequency {freq} is not finite"
        );
        self.entries.insert(freq, value);
    }

    /// Coefficient at `freq`; absent keys mean zero.
    pub fn get(&self, freq: i64) -> Complex64 {
        self.entries
            .get(&freq)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest `|k|` present, 0 when empty.
    pub fn max_freq(&self) -> i64 {
        self.entries.keys().map(|k| k.abs()).max().unwrap_or(0)
    }
}

/// Fourier coefficients `<f, e_k>` for `|k| <= n_max` by midpoint quadrature.
/// Requires `n_max < M/2` (anti-aliasing).
pub fn fourier_coefficients(f: &SampledFunction, n_max: usize) -> Result<CoefficientVector> {
    let grid = f.grid();
    let m = grid.size();
    if 2 * n_max >= m {
        return Err(Error::invalid(format!(
            "bandwidth {n_max} aliases on a grid of {m} nodes; need n_max < M/2"
        )));
    }
    let scale = grid.step() / TAU.sqrt();
    let vals = f.values();
    let mut out = CoefficientVector::new();
    for k in -(n_max as i64)..=(n_max as i64) {
        let rot = phase(-(k as f64) * grid.step());
        let mut cur = phase(-(k as f64) * grid.node(0));
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, v) in vals.iter().enumerate() {
            if j % PHASE_REFRESH == 0 && j > 0 {
                cur = phase(-(k as f64) * grid.node(j));
            }
            acc += v * cur;
            cur *= rot;
        }
        out.insert(k, acc * scale);
    }
    Ok(out)
}

/// Pointwise synthesis `sum_k a_k e_k(t)` over all stored coefficients.
pub fn synthesize(c: &CoefficientVector, grid: Grid) -> SampledFunction {
    let mut values = vec![Complex64::new(0.0, 0.0); grid.size()];
    let scale = 1.0 / TAU.sqrt();
    for (k, a) in c.iter() {
        let a = a * scale;
        let rot = phase(k as f64 * grid.step());
        let mut cur = phase(k as f64 * grid.node(0));
        for (j, v) in values.iter_mut().enumerate() {
            if j % PHASE_REFRESH == 0 && j > 0 {
                cur = phase(k as f64 * grid.node(j));
            }
            *v += a * cur;
            cur *= rot;
        }
    }
    SampledFunction::new(grid, values).expect("synthesis of finite coefficients is finite")
}

/// Symmetric partial sum `T_N f = sum_{|k| <= N} <f, e_k> e_k`.
pub fn partial_sum_symmetric(c: &CoefficientVector, n: usize, grid: Grid) -> SampledFunction {
    let kept = CoefficientVector::from_pairs(c.iter().filter(|(k, _)| k.unsigned_abs() <= n as u64));
    synthesize(&kept, grid)
}

/// Natural-ordering partial sum `S_N f = sum_{k=1}^N <f, e_{n_k}> e_{n_k}`.
/// Satisfies `S_{2N+1} = T_N`.
pub fn partial_sum_natural(c: &CoefficientVector, n: usize, grid: Grid) -> SampledFunction {
    let kept =
        CoefficientVector::from_pairs(c.iter().filter(|(k, _)| freq_to_natural_index(*k) <= n));
    synthesize(&kept, grid)
}

/// Samples of the shifted Dirichlet kernel `D_N(t - u) = sum_{k=1}^N e_{n_k}(t - u)`.
pub fn dirichlet_kernel(n_terms: usize, shift: f64, grid: Grid) -> Result<SampledFunction> {
    let snaps = dirichlet_snapshots(&[n_terms], shift, grid)?;
    Ok(snaps.into_iter().next().expect("one snapshot requested"))
}

/// Shared engine: kernels for several term counts in one sweep.
/// `n_list` must be strictly increasing and start at >= 1.
pub(crate) fn dirichlet_snapshots(
    n_list: &[usize],
    shift: f64,
    grid: Grid,
) -> Result<Vec<SampledFunction>> {
    if n_list.is_empty() || n_list[0] < 1 || n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid(
            "kernel term counts must be strictly increasing and at least 1",
        ));
    }
    let m = grid.size();
    let n_max = *n_list.last().unwrap();
    let scale = Complex64::new(1.0 / TAU.sqrt(), 0.0);

    let x: Vec<f64> = grid.nodes().map(|t| reduce_to_torus(t - shift)).collect();
    let rot: Vec<Complex64> = x.iter().map(|&xi| phase(xi)).collect();
    // running e^(i j' x) and the kernel accumulated so far (term k=1 is freq 0)
    let mut pos: Vec<Complex64> = vec![Complex64::new(1.0, 0.0); m];
    let mut acc: Vec<Complex64> = vec![Complex64::new(1.0, 0.0); m];

    let mut out = Vec::with_capacity(n_list.len());
    let mut want = n_list.iter().peekable();
    let mut snap = |k: usize, acc: &[Complex64], want: &mut std::iter::Peekable<std::slice::Iter<usize>>| {
        if want.peek() == Some(&&k) {
            want.next();
            let values: Vec<Complex64> = acc.iter().map(|v| v * scale).collect();
            out.push(SampledFunction::new(grid, values).expect("finite kernel"));
        }
    };
    snap(1, &acc, &mut want);

    let mut k = 1usize;
    let mut half = 0usize;
    while k < n_max {
        half += 1;
        let refresh = half.is_multiple_of(PHASE_REFRESH);
        for j in 0..m {
            if refresh {
                pos[j] = phase(half as f64 * x[j]);
            } else {
                pos[j] *= rot[j];
            }
            acc[j] += pos[j].conj(); // frequency -half, natural position 2*half
        }
        k += 1;
        snap(k, &acc, &mut want);
        if k == n_max {
            break;
        }
        for j in 0..m {
            acc[j] += pos[j]; // frequency +half, natural position 2*half + 1
        }
        k += 1;
        snap(k, &acc, &mut want);
    }
    Ok(out)
}

/// One `(N, lower bound on ||T_N||_{p,w})` row per dyadic `N <= n_max`.
///
/// The bound maximizes `||T_N f||_{p,w} / ||f||_{p,w}` over a fixed,
/// seed-reproducible family: random trigonometric polynomials of degree
/// `<= N` and `<= 2N` with coefficients uniform on the unit disc, plus
/// smoothed indicator bumps (plain and modulated to the band edge) centered
/// where the weight is smallest, at widths proportional to `1/N`. True
/// operator norms are suprema; these values are lower bounds only.
pub fn operator_norm_probe(
    w: &Weight,
    p: f64,
    n_max: usize,
    trials: usize,
    seed: u64,
    grid: Grid,
) -> Result<Vec<(usize, f64)>> {
    if trials < 1 {
        return Err(Error::invalid("operator norm probe needs trials >= 1"));
    }
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::InvalidExponent(p));
    }
    let m = grid.size();
    if 4 * n_max >= m {
        return Err(Error::invalid(format!(
            "probe bandwidth 2*{n_max} needs a grid larger than {m} nodes"
        )));
    }

    let ws = w.sample(grid)?;
    let center = w.min_location(grid);
    let mut rows = Vec::new();
    let mut n = 1usize;
    while n <= n_max {
        let mut best: f64 = 0.0;
        for trial in 0..trials {
            for (tag, degree) in [(0u64, n), (1u64, 2 * n)] {
                let mut rng = crate::experiments::stream_rng(seed, &[n as u64, trial as u64, tag]);
                let mut c = CoefficientVector::new();
                for k in -(degree as i64)..=(degree as i64) {
                    c.insert(k, unit_disc(&mut rng));
                }
                let f = synthesize(&c, grid);
                best = best.max(projection_ratio(&f, n, &ws, p)?);
            }
        }
        for width_mul in [0.25, 1.0, 4.0] {
            let hw = width_mul * std::f64::consts::PI / n as f64;
            let bump = smoothed_step(grid, center, hw);
            best = best.max(projection_ratio(&bump, n, &ws, p)?);
            let modulated = sample(grid, |t| {
                let d = torus_distance(t, center);
                Complex64::new(0.0, (n as f64 + 1.0) * t).exp() * step_profile(d, hw)
            })?;
            best = best.max(projection_ratio(&modulated, n, &ws, p)?);
        }
        rows.push((n, best));
        n *= 2;
    }
    Ok(rows)
}

fn projection_ratio(f: &SampledFunction, n: usize, w: &SampledFunction, p: f64) -> Result<f64> {
    let c = fourier_coefficients(f, n)?;
    let tnf = partial_sum_symmetric(&c, n, f.grid());
    let num = crate::grid::weighted_lp_norm(&tnf, w, p)?;
    let den = crate::grid::weighted_lp_norm(f, w, p)?;
    Ok(if den > 0.0 { num / den } else { 0.0 })
}

fn torus_distance(t: f64, u: f64) -> f64 {
    reduce_to_torus(t - u).abs()
}

fn step_profile(d: f64, hw: f64) -> f64 {
    // indicator of [-hw, hw] with raised-cosine edges of width hw/4
    let ew = hw / 4.0;
    if d <= hw - ew {
        1.0
    } else if d < hw + ew {
        0.5 * (1.0 + (std::f64::consts::PI * (d - (hw - ew)) / (2.0 * ew)).cos())
    } else {
        0.0
    }
}

pub(crate) fn smoothed_step(grid: Grid, center: f64, hw: f64) -> SampledFunction {
    sample(grid, |t| {
        Complex64::new(step_profile(torus_distance(t, center), hw), 0.0)
    })
    .expect("step profile is finite")
}

/// Complex value uniform on the closed unit disc; the coefficient
/// distribution used by every randomized probe in this crate.
pub fn unit_disc<R: Rng>(rng: &mut R) -> Complex64 {
    loop {
        let re: f64 = rng.gen_range(-1.0..1.0);
        let im: f64 = rng.gen_range(-1.0..1.0);
        if re * re + im * im <= 1.0 {
            return Complex64::new(re, im);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::weighted_lp_norm;

    fn e_k(k: i64, grid: Grid) -> SampledFunction {
        sample(grid, |t| {
            Complex64::new(0.0, k as f64 * t).exp() / Complex64::new(TAU.sqrt(), 0.0)
        })
        .unwrap()
    }

    #[test]
    fn natural_ordering_first_values() {
        let first: Vec<i64> = (1..=5).map(|j| natural_index_to_freq(j).unwrap()).collect();
        assert_eq!(first, vec![0, -1, 1, -2, 2]);
        assert_eq!(natural_index_to_freq(4).unwrap(), -2);
        assert_eq!(freq_to_natural_index(7), 15);
        assert!(natural_index_to_freq(0).is_err());
    }

    #[test]
    fn natural_ordering_is_a_bijection() {
        for j in 1..=10_000usize {
            let k = natural_index_to_freq(j).unwrap();
            assert_eq!(freq_to_natural_index(k), j);
        }
    }

    #[test]
    fn coefficients_of_a_pure_character() {
        let grid = Grid::new(256).unwrap();
        let f = e_k(5, grid);
        let c = fourier_coefficients(&f, 8).unwrap();
        for (k, v) in c.iter() {
            if k == 5 {
                assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
            } else {
                assert!(v.norm() < 1e-12, "leak at {k}: {v}");
            }
        }
    }

    #[test]
    fn coefficients_of_the_constant() {
        let grid = Grid::new(64).unwrap();
        let f = sample(grid, |_| Complex64::new(1.0, 0.0)).unwrap();
        let c = fourier_coefficients(&f, 2).unwrap();
        assert!((c.get(0) - Complex64::new(TAU.sqrt(), 0.0)).norm() < 1e-12);
        assert!(c.get(1).norm() < 1e-12 && c.get(-1).norm() < 1e-12);
    }

    #[test]
    fn coefficients_of_the_sign_function() {
        // <sign, e_1> = (2 pi)^(-1/2) * int sign(t) e^(-it) dt = -4i / sqrt(2 pi)
        let grid = Grid::new(4096).unwrap();
        let f = sample(grid, |t| Complex64::new(t.signum(), 0.0)).unwrap();
        let c = fourier_coefficients(&f, 1).unwrap();
        let exact = Complex64::new(0.0, -4.0 / TAU.sqrt());
        assert!((c.get(1) - exact).norm() < 1e-6, "got {}", c.get(1));
        assert!((c.get(1) + c.get(-1)).norm() < 1e-12);
    }

    #[test]
    fn aliasing_bandwidth_rejected() {
        let grid = Grid::new(64).unwrap();
        let f = sample(grid, |_| Complex64::new(1.0, 0.0)).unwrap();
        assert!(fourier_coefficients(&f, 32).is_err());
        assert!(fourier_coefficients(&f, 31).is_ok());
    }

    #[test]
    fn partial_sum_reproduces_and_truncates() {
        let grid = Grid::new(256).unwrap();
        let f = e_k(3, grid);
        let c = fourier_coefficients(&f, 8).unwrap();
        let rec = partial_sum_symmetric(&c, 5, grid);
        let zero = partial_sum_symmetric(&c, 2, grid);
        for j in 0..grid.size() {
            assert!((rec.values()[j] - f.values()[j]).norm() < 1e-12);
            assert!(zero.values()[j].norm() < 1e-12);
        }
    }

    #[test]
    fn partial_sum_constant_term() {
        let grid = Grid::new(64).unwrap();
        let mut c = CoefficientVector::new();
        c.insert(0, Complex64::new(TAU.sqrt(), 0.0));
        let s = partial_sum_symmetric(&c, 0, grid);
        for v in s.values() {
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn natural_and_symmetric_sums_agree() {
        let grid = Grid::new(512).unwrap();
        let mut rng = crate::experiments::stream_rng(11, &[0]);
        for trial in 0..5u64 {
            let mut c = CoefficientVector::new();
            for k in -40i64..=40 {
                c.insert(k, unit_disc(&mut rng));
            }
            for n in [1usize, 2, 7, 40] {
                let s = partial_sum_natural(&c, 2 * n + 1, grid);
                let t = partial_sum_symmetric(&c, n, grid);
                for j in 0..grid.size() {
                    assert!(
                        (s.values()[j] - t.values()[j]).norm() < 1e-12,
                        "trial {trial} n {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn natural_sum_activation_of_negative_frequency() {
        let grid = Grid::new(128).unwrap();
        let f = e_k(-2, grid);
        let c = fourier_coefficients(&f, 4).unwrap();
        // n_4 = -2, so N = 4 is the first natural partial sum that sees it
        let s3 = partial_sum_natural(&c, 3, grid);
        let s4 = partial_sum_natural(&c, 4, grid);
        assert!(s3.values().iter().all(|v| v.norm() < 1e-12));
        for j in 0..grid.size() {
            assert!((s4.values()[j] - f.values()[j]).norm() < 1e-12);
        }
    }

    #[test]
    fn natural_sum_keeps_only_constant_at_n1() {
        let grid = Grid::new(128).unwrap();
        let mut c = CoefficientVector::new();
        c.insert(0, Complex64::new(2.0, 0.0));
        c.insert(1, Complex64::new(1.0, 0.0));
        c.insert(-1, Complex64::new(1.0, 0.0));
        let s1 = partial_sum_natural(&c, 1, grid);
        let expect = 2.0 / TAU.sqrt();
        for v in s1.values() {
            assert!((v - Complex64::new(expect, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn dirichlet_kernel_basics() {
        let grid = Grid::new(4096).unwrap();
        let d1 = dirichlet_kernel(1, 0.0, grid).unwrap();
        for v in d1.values() {
            assert!((v - Complex64::new(1.0 / TAU.sqrt(), 0.0)).norm() < 1e-12);
        }

        let one = sample(grid, |_| Complex64::new(1.0, 0.0)).unwrap();
        for n in [1usize, 4, 64, 511] {
            let d = dirichlet_kernel(n, 0.0, grid).unwrap();
            let norm = weighted_lp_norm(&d, &one, 2.0).unwrap();
            assert!(
                (norm - (n as f64).sqrt()).abs() < 1e-10,
                "n={n}: {norm} vs {}",
                (n as f64).sqrt()
            );
        }

        // D_3 = (2 pi)^(-1/2) (1 + 2 cos t)
        let d3 = dirichlet_kernel(3, 0.0, grid).unwrap();
        for (j, v) in d3.values().iter().enumerate() {
            let t = grid.node(j);
            let expect = (1.0 + 2.0 * t.cos()) / TAU.sqrt();
            assert!((v - Complex64::new(expect, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn dirichlet_kernel_shift_matches_resampling() {
        let grid = Grid::new(512).unwrap();
        let u = 1.2345;
        let shifted = dirichlet_kernel(8, u, grid).unwrap();
        // brute-force reference from the natural enumeration
        for (j, v) in shifted.values().iter().enumerate() {
            let x = grid.node(j) - u;
            let mut expect = Complex64::new(0.0, 0.0);
            for k in 1..=8usize {
                let f = natural_index_to_freq(k).unwrap() as f64;
                expect += Complex64::new(0.0, f * x).exp();
            }
            expect /= Complex64::new(TAU.sqrt(), 0.0);
            assert!((v - expect).norm() < 1e-12);
        }
    }

    #[test]
    fn parseval_for_bandlimited_functions() {
        let grid = Grid::new(1024).unwrap();
        let one = sample(grid, |_| Complex64::new(1.0, 0.0)).unwrap();
        let mut rng = crate::experiments::stream_rng(3, &[0]);
        let mut c = CoefficientVector::new();
        for k in -50i64..=50 {
            c.insert(k, unit_disc(&mut rng));
        }
        let f = synthesize(&c, grid);
        let coeff_energy: f64 = c.iter().map(|(_, v)| v.norm_sqr()).sum();
        let tnf = partial_sum_symmetric(&fourier_coefficients(&f, 50).unwrap(), 50, grid);
        let norm = weighted_lp_norm(&tnf, &one, 2.0).unwrap();
        assert!((norm * norm - coeff_energy).abs() < 1e-10 * coeff_energy);
    }

    #[test]
    fn analysis_inverts_synthesis() {
        let grid = Grid::new(512).unwrap();
        let mut rng = crate::experiments::stream_rng(5, &[1]);
        let mut c = CoefficientVector::new();
        for k in [-200i64, -31, -1, 0, 2, 57, 255] {
            c.insert(k, unit_disc(&mut rng));
        }
        let f = synthesize(&c, grid);
        let back = fourier_coefficients(&f, 255).unwrap();
        for (k, v) in c.iter() {
            assert!((back.get(k) - v).norm() < 1e-10, "k={k}");
        }
    }

    #[test]
    fn translation_covariance_of_coefficients() {
        let grid = Grid::new(512).unwrap();
        let u = 0.7771;
        let mut c = CoefficientVector::new();
        let mut rng = crate::experiments::stream_rng(9, &[2]);
        for k in -20i64..=20 {
            c.insert(k, unit_disc(&mut rng));
        }
        // resample the translated symbolic function, never the grid
        let translated = sample(grid, |t| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, a) in c.iter() {
                acc += a * Complex64::new(0.0, k as f64 * (t - u)).exp();
            }
            acc / Complex64::new(TAU.sqrt(), 0.0)
        })
        .unwrap();
        let ct = fourier_coefficients(&translated, 20).unwrap();
        for (k, a) in c.iter() {
            let expect = a * Complex64::new(0.0, -(k as f64) * u).exp();
            assert!((ct.get(k) - expect).norm() < 1e-10, "k={k}");
        }
    }

    #[test]
    fn probe_is_an_orthogonal_projection_in_l2() {
        let grid = Grid::new(1024).unwrap();
        let w = Weight::constant(1.0).unwrap();
        let rows = operator_norm_probe(&w, 2.0, 16, 2, 7, grid).unwrap();
        for (n, ratio) in rows {
            assert!((ratio - 1.0).abs() < 1e-10, "n={n}: {ratio}");
        }
    }

    #[test]
    fn probe_bounded_for_l4_lebesgue() {
        let grid = Grid::new(2048).unwrap();
        let w = Weight::constant(1.0).unwrap();
        let rows = operator_norm_probe(&w, 4.0, 64, 2, 7, grid).unwrap();
        for (n, ratio) in rows {
            assert!(ratio < 3.0, "n={n}: {ratio}");
        }
    }

    #[test]
    fn probe_grows_outside_a2() {
        // |t|^3 is not an A_2 weight: the lower bounds must keep climbing.
        let grid = Grid::new(8192).unwrap();
        let w = Weight::power(3.0).unwrap();
        let rows = operator_norm_probe(&w, 2.0, 512, 1, 7, grid).unwrap();
        let from = rows.iter().position(|(n, _)| *n == 8).unwrap();
        let tail = &rows[from..];
        for pair in tail.windows(2) {
            assert!(
                pair[1].1 > 1.2 * pair[0].1,
                "no growth from N={} ({}) to N={} ({})",
                pair[0].0,
                pair[0].1,
                pair[1].0,
                pair[1].1
            );
        }
    }
}
