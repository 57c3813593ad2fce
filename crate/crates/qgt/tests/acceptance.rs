//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Run with `cargo test -p qgt --test acceptance -- --nocapture` to see the
//! lines for passing criteria too.

use std::time::Instant;

use num_complex::Complex64;

use qgt::experiments::{
    democracy, dirichlet_growth, fejer_weight_recovery, loglog_slope, quasi_greedy_verdict,
    riesz_bounds, sign_unconditionality, stream_rng, IndexSets, VerdictConfig,
};
use qgt::fourier::{
    dirichlet_kernel, fourier_coefficients, partial_sum_natural, partial_sum_symmetric,
    synthesize, unit_disc, CoefficientVector,
};
use qgt::greedy::{greedy_error_curve, lorentz_norms};
use qgt::grid::{weighted_lp_norm, Grid};
use qgt::weights::{ap_constant, Weight};
use qgt::Verdict;

fn criterion(n: usize, desc: &str, ok: bool, detail: String) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("criterion {n:2} [{tag}] {desc} — {detail}");
    assert!(ok, "criterion {n} failed: {detail}");
}

fn flat_weight(grid: Grid) -> qgt::SampledFunction {
    Weight::constant(1.0).unwrap().sample(grid).unwrap()
}

#[test]
fn criterion_01_orthonormal_anchor() {
    let start = Instant::now();
    let grid = Grid::new(4096).unwrap();
    let one = flat_weight(grid);

    let mut worst_norm = 0.0f64;
    for n in [1usize, 4, 64, 511] {
        let d = dirichlet_kernel(n, 0.0, grid).unwrap();
        let norm = weighted_lp_norm(&d, &one, 2.0).unwrap();
        worst_norm = worst_norm.max((norm - (n as f64).sqrt()).abs());
    }

    let mut rng = stream_rng(1, &[101]);
    let mut worst_coeff = 0.0f64;
    for _ in 0..5 {
        let mut c = CoefficientVector::new();
        for k in -100i64..=100 {
            c.insert(k, unit_disc(&mut rng));
        }
        let f = synthesize(&c, grid);
        let back = fourier_coefficients(&f, 100).unwrap();
        for (k, v) in c.iter() {
            worst_coeff = worst_coeff.max((back.get(k) - v).norm());
        }
    }

    let elapsed = start.elapsed().as_secs_f64();
    criterion(
        1,
        "orthonormal anchor",
        worst_norm < 1e-10 && worst_coeff < 1e-10 && elapsed < 5.0,
        format!(
            "max |norm - sqrt(N)| = {worst_norm:.2e}, max round-trip error = {worst_coeff:.2e}, \
             {elapsed:.2}s"
        ),
    );
}

#[test]
fn criterion_02_schauder_gate() {
    let start = Instant::now();
    let fine = Grid::new(65536).unwrap();

    let flat = ap_constant(&Weight::constant(3.0).unwrap(), 2.0, 12, fine).unwrap();
    let flat_ok = (flat.k_hat - 1.0).abs() <= 1e-9 && !flat.diverging;

    let sqrtw = Weight::power(0.5).unwrap();
    let d12 = ap_constant(&sqrtw, 2.0, 12, fine).unwrap();
    let d14 = ap_constant(&sqrtw, 2.0, 14, fine).unwrap();
    let stable_ok = !d12.diverging
        && !d14.diverging
        && (d14.k_hat - d12.k_hat).abs() <= 0.05 * d12.k_hat;

    let steep = ap_constant(&Weight::power(1.5).unwrap(), 2.0, 14, fine).unwrap();

    let elapsed = start.elapsed().as_secs_f64();
    criterion(
        2,
        "Schauder gate (A_p estimates)",
        flat_ok && stable_ok && steep.diverging && elapsed < 30.0,
        format!(
            "constant k_hat = {:.12}, power(0.5) d12/d14 = {:.4}/{:.4}, power(1.5) diverging = \
             {} (refinement ratio {:.3}), {elapsed:.2}s",
            flat.k_hat, d12.k_hat, d14.k_hat, steep.diverging, steep.refinement_ratio
        ),
    );
}

#[test]
fn criterion_03_natural_symmetric_consistency() {
    let grid = Grid::new(1024).unwrap();
    let mut worst = 0.0f64;
    for trial in 0..20u64 {
        let mut rng = stream_rng(3, &[trial]);
        let n = 1 + (trial as usize * 5) % 100;
        let mut c = CoefficientVector::new();
        for k in -(n as i64)..=(n as i64) {
            c.insert(k, unit_disc(&mut rng));
        }
        let s = partial_sum_natural(&c, 2 * n + 1, grid);
        let t = partial_sum_symmetric(&c, n, grid);
        for (a, b) in s.values().iter().zip(t.values()) {
            worst = worst.max((a - b).norm());
        }
    }
    criterion(
        3,
        "S_{2N+1} = T_N consistency",
        worst < 1e-12,
        format!("max pointwise gap over 20 functions = {worst:.2e}"),
    );
}

#[test]
fn criterion_04_greedy_convergence_in_l2() {
    let grid = Grid::new(512).unwrap();
    let w = Weight::constant(1.0).unwrap();
    let mut monotone = true;
    let mut worst_final = 0.0f64;
    for trial in 0..50u64 {
        let mut rng = stream_rng(4, &[trial]);
        use rand::Rng;
        let support = 5 + (rng.gen::<u64>() % 40) as i64;
        let mut c = CoefficientVector::new();
        for k in -support..=support {
            if rng.gen::<f64>() < 0.7 {
                c.insert(k, unit_disc(&mut rng));
            }
        }
        if c.is_empty() {
            c.insert(0, Complex64::new(1.0, 0.0));
        }
        let f = synthesize(&c, grid);
        let curve = greedy_error_curve(&f, &w, 2.0, c.len()).unwrap();
        for pair in curve.windows(2) {
            if pair[1].1 > pair[0].1 + 1e-12 {
                monotone = false;
            }
        }
        worst_final = worst_final.max(curve.last().unwrap().1);
    }
    criterion(
        4,
        "greedy convergence in unweighted L^2",
        monotone && worst_final < 1e-10,
        format!("curves nonincreasing = {monotone}, worst terminal error = {worst_final:.2e}"),
    );
}

#[test]
fn criterion_05_p4_failure_witness() {
    let start = Instant::now();
    let grid = Grid::new(4096).unwrap();
    let w = Weight::constant(1.0).unwrap();

    let report = democracy(&w, 4.0, &[16, 32, 64, 128, 256], 8, 1, grid).unwrap();
    let slope: f64 = report.params["block_slope_fit"].parse().unwrap();
    let slope_ok = (slope - 0.75).abs() <= 0.05;

    let verdict = quasi_greedy_verdict(&w, 4.0, &VerdictConfig::default(), grid, 1).unwrap();
    let verdict_ok = verdict.report.verdict == Some(Verdict::WitnessesFailure);

    let elapsed = start.elapsed().as_secs_f64();
    criterion(
        5,
        "p = 4 failure witness (democracy slope)",
        slope_ok && verdict_ok && elapsed < 120.0,
        format!(
            "block slope = {slope:.4} (target 0.75 +- 0.05), verdict = {:?}, {elapsed:.1}s",
            verdict.report.verdict.unwrap()
        ),
    );
}

#[test]
fn criterion_06_weight_recovery_engine() {
    let trig_grid = Grid::new(4096).unwrap();
    let trig = Weight::trig(1.0, vec![0.5], vec![]).unwrap();
    let report =
        fejer_weight_recovery(&trig, &[0.0, std::f64::consts::FRAC_PI_2], &[256], trig_grid)
            .unwrap();
    let trig_ok = report.rows.iter().all(|r| r[4] < 0.05);

    let power_grid = Grid::new(16384).unwrap();
    let power = Weight::power(0.8).unwrap();
    let ns: Vec<usize> = (5..=10).map(|k| 1usize << k).collect();
    let decay = fejer_weight_recovery(&power, &[0.0], &ns, power_grid).unwrap();
    let n_col = decay.column("n").unwrap();
    let f_col = decay.column("f_n").unwrap();
    let slope = loglog_slope(&n_col, &f_col);
    let slope_ok = (slope + 0.8).abs() <= 0.12;

    let verdict = quasi_greedy_verdict(
        &power,
        2.0,
        &VerdictConfig::default(),
        Grid::new(4096).unwrap(),
        1,
    )
    .unwrap();
    let verdict_ok = verdict.report.verdict == Some(Verdict::WitnessesFailure);

    criterion(
        6,
        "Fejer weight-recovery engine",
        trig_ok && slope_ok && verdict_ok,
        format!(
            "trig recovery within 0.05 = {trig_ok}, power(0.8) decay slope = {slope:.4} \
             (target -0.8 +- 0.12), verdict = {:?}",
            verdict.report.verdict.unwrap()
        ),
    );
}

#[test]
fn criterion_07_riesz_equivalence() {
    let grid = Grid::new(2048).unwrap();
    let w = Weight::trig(1.0, vec![0.5], vec![]).unwrap();
    let report = riesz_bounds(&w, 64, 200, 1, grid).unwrap();
    let row = &report.rows[0];
    let (min_r, max_r) = (row[1], row[2]);
    let bracket_ok = min_r >= 0.5 - 1e-6 && max_r <= 1.5 + 1e-6;
    let sharp_ok = min_r < 0.7 && max_r > 1.3;

    let verdict = quasi_greedy_verdict(
        &w,
        2.0,
        &VerdictConfig::default(),
        Grid::new(4096).unwrap(),
        1,
    )
    .unwrap();
    let verdict_ok = verdict.report.verdict == Some(Verdict::ConsistentWithQuasiGreedy);

    criterion(
        7,
        "Riesz equivalence for a bounded positive weight",
        bracket_ok && sharp_ok && verdict_ok,
        format!(
            "ratios in [{min_r:.4}, {max_r:.4}] within [0.5, 1.5], verdict = {:?}",
            verdict.report.verdict.unwrap()
        ),
    );
}

#[test]
fn criterion_08_lebesgue_constant_and_holder() {
    let grid = Grid::new(32768).unwrap();
    let w = Weight::constant(1.0).unwrap();
    let mut ns: Vec<usize> = (3..=12).map(|k| 1usize << k).collect();
    ns.extend((2..=10).map(|k| 3usize << k)); // off-dyadic coverage
    ns.sort_unstable();
    let report = dirichlet_growth(&w, &[1.5, 3.0], &ns, grid).unwrap();

    let fit: f64 = report.params["lebesgue_slope_fit"].parse().unwrap();
    let classical = 4.0 / (std::f64::consts::PI * std::f64::consts::PI);
    let fit_ok = (fit - classical).abs() <= 0.10 * classical;

    let mut slack_ok = true;
    for col in ["holder_slack_p1_5", "holder_slack_p3"] {
        for v in report.column(col).unwrap() {
            if v < 0.0 {
                slack_ok = false;
            }
        }
    }

    criterion(
        8,
        "Lebesgue constant fit and Hoelder slack",
        fit_ok && slack_ok,
        format!(
            "lebesgue slope fit = {fit:.5} vs classical {classical:.5} (within 10%), \
             all slack columns nonnegative = {slack_ok}"
        ),
    );
}

#[test]
fn criterion_09_lorentz_layer() {
    let mut flat_ok = true;
    for n in [1usize, 2, 7, 64, 1000, 10_000] {
        let c = CoefficientVector::from_pairs(
            (0..n).map(|i| (i as i64, Complex64::new(0.0, 1.0))),
        );
        let norms = lorentz_norms(&c);
        let root = (n as f64).sqrt();
        if norms.l2inf != root || norms.l21 < root || norms.l21 > 2.0 * root {
            flat_ok = false;
        }
    }

    let mut fuzz_ok = true;
    let mut rng = stream_rng(9, &[0]);
    for _ in 0..1000 {
        let mut c = CoefficientVector::new();
        for k in -20i64..=20 {
            c.insert(k, unit_disc(&mut rng));
        }
        let norms = lorentz_norms(&c);
        if norms.l2inf > norms.l21 + 1e-12 {
            fuzz_ok = false;
        }
    }

    criterion(
        9,
        "Lorentz sequence layer",
        flat_ok && fuzz_ok,
        format!("flat sequences exact = {flat_ok}, l2inf <= l21 on 1000 fuzz cases = {fuzz_ok}"),
    );
}

#[test]
fn criterion_10_determinism_across_thread_counts() {
    let render = || -> (String, String) {
        let grid = Grid::new(2048).unwrap();
        let w = Weight::trig(1.0, vec![0.5], vec![]).unwrap();
        let dem = democracy(&w, 2.0, &[8, 16, 32, 64], 6, 42, grid).unwrap();
        let fej = fejer_weight_recovery(&w, &[0.0, 1.0], &[16, 32, 64], grid).unwrap();
        let rie = riesz_bounds(&w, 32, 20, 42, grid).unwrap();
        let sig =
            sign_unconditionality(&w, 2.0, &IndexSets::Blocks(vec![8, 16, 32]), 16, 42, grid)
                .unwrap();
        let csv = [&dem, &fej, &rie, &sig]
            .iter()
            .map(|r| r.to_csv_string())
            .collect::<String>();
        let json = [&dem, &fej, &rie, &sig]
            .iter()
            .map(|r| r.to_json_string())
            .collect::<String>();
        (csv, json)
    };

    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(render);
    let eight = rayon::ThreadPoolBuilder::new()
        .num_threads(8)
        .build()
        .unwrap()
        .install(render);

    criterion(
        10,
        "byte-identical reports at 1 and 8 worker threads",
        single == eight,
        format!(
            "csv identical = {}, json identical = {}",
            single.0 == eight.0,
            single.1 == eight.1
        ),
    );
}
