//! Acceptance gate: one test per release criterion. Every test prints a
//! single `[PASS]`/`[SKIP]` line (visible with `--nocapture`) so the gate
//! can be read off the test output directly.
//!
//! Criteria 1–6 and 11 are self-contained. Criteria 7–10 reproduce
//! reference diabetes-cohort numbers and need the Pima CSV at
//! `data/pima.csv` (or a path in `IROC_PIMA_CSV`); when the file is absent
//! they print `[SKIP]` and pass vacuously rather than fabricating data.

use std::path::{Path, PathBuf};
use std::sync::OnceLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use iroc::bootstrap::{bootstrap_predict, percentile_intervals, point_auc};
use iroc::interval::{ClassedIntervalDataset, IntervalPrediction};
use iroc::logistic::{fit_logistic, LogisticConfig};
use iroc::pairwise::{classical_auc, confidence_sweep, pairwise_counts, SweepRow};
use iroc::rates::{build_curve, integrate_curve, IntegrationRule, Pairing};
use iroc::synth::{validate_bounds, SyntheticConfig};
use iroc::tabular::{load_csv, stratified_split, TabularDataset};

// Tolerances, pinned once. The reference-number tolerances are deliberately
// loose (+-0.03) because the source experiment's solver, regularization,
// and quantile rule are unreported; the mathematical identities are tight.
const TOL_DECOMPOSITION: f64 = 1e-12;
const TOL_RECTANGLE: f64 = 1e-12;
const TOL_TRAPEZOID: f64 = 5e-3;
const TOL_REFERENCE_TABLE: f64 = 0.03;
const TOL_POINT_AUC_MEAN: f64 = 0.02;
const TOL_BOUND_ENDPOINT: f64 = 0.05;

// ---------------------------------------------------------------------------
// Randomized-dataset helpers
// ---------------------------------------------------------------------------

/// Continuous-endpoint dataset: class-shifted lowers plus uniform widths.
fn continuous_dataset(rng: &mut ChaCha8Rng, n_pos: usize, n_neg: usize) -> ClassedIntervalDataset {
    let mut draw = |shift: f64, n: usize| {
        (0..n)
            .map(|_| {
                let lower = rng.random_range(-3.0..3.0) + shift;
                let width = rng.random_range(0.0..1.5);
                IntervalPrediction::new(lower, lower + width).unwrap()
            })
            .collect::<Vec<_>>()
    };
    let pos = draw(0.8, n_pos);
    let neg = draw(0.0, n_neg);
    ClassedIntervalDataset::new(pos, neg)
}

/// Tie-heavy dataset: endpoints snapped to a coarse grid so exact
/// cross-class endpoint collisions are the norm, not the exception.
fn grid_dataset(rng: &mut ChaCha8Rng, n_pos: usize, n_neg: usize) -> ClassedIntervalDataset {
    let mut draw = |n: usize| {
        (0..n)
            .map(|_| {
                let lower = f64::from(rng.random_range(-8i32..=8)) / 4.0;
                let width = f64::from(rng.random_range(0i32..=6)) / 4.0;
                IntervalPrediction::new(lower, lower + width).unwrap()
            })
            .collect::<Vec<_>>()
    };
    let pos = draw(n_pos);
    let neg = draw(n_neg);
    ClassedIntervalDataset::new(pos, neg)
}

/// Quadratic reference counter.
fn brute_force(data: &ClassedIntervalDataset) -> (u64, u64, u64) {
    let mut above = 0u64;
    let mut below = 0u64;
    let mut overlap = 0u64;
    for p in data.positives() {
        for n in data.negatives() {
            if p.lower() > n.upper() {
                above += 1;
            } else if p.upper() < n.lower() {
                below += 1;
            } else {
                overlap += 1;
            }
        }
    }
    (above, below, overlap)
}

// ---------------------------------------------------------------------------
// Criterion 1 — decomposition identity
// ---------------------------------------------------------------------------

#[test]
fn criterion_01_decomposition_identity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC1);
    let mut worst: f64 = 0.0;
    for i in 0..1000 {
        let n_pos = rng.random_range(1..=500);
        let n_neg = rng.random_range(1..=500);
        let data = if i % 2 == 0 {
            continuous_dataset(&mut rng, n_pos, n_neg)
        } else {
            grid_dataset(&mut rng, n_pos, n_neg)
        };
        let r = pairwise_counts(&data).unwrap();
        let defect = (r.p_correct + r.p_overlap + r.p_incorrect - 1.0).abs();
        worst = worst.max(defect);
        assert!(
            defect <= TOL_DECOMPOSITION,
            "dataset {i}: decomposition defect {defect:e}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "decomposition sweep took {elapsed:?}, budget 10 s"
    );
    println!(
        "[PASS] criterion 1: three-region probabilities sum to 1 within {TOL_DECOMPOSITION:e} \
         on 1000 randomized datasets (worst defect {worst:.2e}, {elapsed:.2?})"
    );
}

// ---------------------------------------------------------------------------
// Criterion 2 — oracle equivalence of the fast counter
// ---------------------------------------------------------------------------

#[test]
fn criterion_02_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC2);
    for i in 0..200 {
        let n_pos = rng.random_range(1..=500);
        let n_neg = rng.random_range(1..=500);
        let data = if i % 2 == 0 {
            continuous_dataset(&mut rng, n_pos, n_neg)
        } else {
            grid_dataset(&mut rng, n_pos, n_neg)
        };
        let fast = pairwise_counts(&data).unwrap();
        let (above, below, overlap) = brute_force(&data);
        assert_eq!(
            (fast.above_count, fast.below_count, fast.overlap_count),
            (above, below, overlap),
            "dataset {i}: fast counter diverged from brute force"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "oracle sweep took {elapsed:?}, budget 30 s"
    );
    println!(
        "[PASS] criterion 2: fast pairwise counter equals O(n^2) brute force exactly \
         on 200 randomized datasets up to 500 per class ({elapsed:.2?})"
    );
}

// ---------------------------------------------------------------------------
// Criterion 3 — counting vs. curve integration
// ---------------------------------------------------------------------------

#[test]
fn criterion_03_counting_vs_curve_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC3);
    let mut worst_rect: f64 = 0.0;
    let mut worst_trap: f64 = 0.0;
    for i in 0..50 {
        let n_pos = rng.random_range(100..=400);
        let n_neg = rng.random_range(100..=400);
        let data = continuous_dataset(&mut rng, n_pos, n_neg);
        let r = pairwise_counts(&data).unwrap();
        for (pairing, target) in [
            (Pairing::Strict, r.p_correct),
            (Pairing::Permissive, r.upper_auc()),
        ] {
            let curve = build_curve(&data, pairing).unwrap();
            let rect = integrate_curve(&curve, IntegrationRule::Step).unwrap();
            let trap = integrate_curve(&curve, IntegrationRule::Trapezoid).unwrap();
            let rect_delta = (rect - target).abs();
            let trap_delta = (trap - target).abs();
            worst_rect = worst_rect.max(rect_delta);
            worst_trap = worst_trap.max(trap_delta);
            assert!(
                rect_delta < TOL_RECTANGLE,
                "dataset {i} {pairing:?}: rectangle delta {rect_delta:e}"
            );
            assert!(
                trap_delta < TOL_TRAPEZOID,
                "dataset {i} {pairing:?}: trapezoid delta {trap_delta:e}"
            );
        }
    }
    // The rectangle rule must stay exact under heavy endpoint ties too.
    for _ in 0..25 {
        let n_pos = rng.random_range(1..=200);
        let n_neg = rng.random_range(1..=200);
        let data = grid_dataset(&mut rng, n_pos, n_neg);
        let r = pairwise_counts(&data).unwrap();
        for (pairing, target) in [
            (Pairing::Strict, r.p_correct),
            (Pairing::Permissive, r.upper_auc()),
        ] {
            let curve = build_curve(&data, pairing).unwrap();
            let rect = integrate_curve(&curve, IntegrationRule::Step).unwrap();
            let delta = (rect - target).abs();
            worst_rect = worst_rect.max(delta);
            assert!(delta < TOL_RECTANGLE, "tie-heavy rectangle delta {delta:e}");
        }
    }
    println!(
        "[PASS] criterion 3: rectangle rule matches pairwise counting within {TOL_RECTANGLE:e} \
         (worst {worst_rect:.2e}), trapezoid within {TOL_TRAPEZOID} for n >= 100 per class \
         (worst {worst_trap:.2e})"
    );
}

// ---------------------------------------------------------------------------
// Criterion 4 — classical reduction on point intervals
// ---------------------------------------------------------------------------

#[test]
fn criterion_04_classical_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC4);
    for i in 0..100 {
        // Distinct scores: draw from a wide integer lattice and dedup.
        let n_pos = rng.random_range(1..=80);
        let n_neg = rng.random_range(1..=80);
        let mut seen = std::collections::HashSet::new();
        let mut draw = |n: usize| {
            (0..n)
                .map(|_| loop {
                    let v = rng.random_range(-1_000_000i64..1_000_000);
                    if seen.insert(v) {
                        return v as f64 / 512.0;
                    }
                })
                .collect::<Vec<f64>>()
        };
        let pos = draw(n_pos);
        let neg = draw(n_neg);
        let to_points = |xs: &[f64]| {
            xs.iter()
                .map(|&x| IntervalPrediction::point(x).unwrap())
                .collect::<Vec<_>>()
        };
        let data = ClassedIntervalDataset::new(to_points(&pos), to_points(&neg));
        let r = pairwise_counts(&data).unwrap();
        let classical = classical_auc(&pos, &neg).unwrap();
        assert_eq!(r.p_correct, classical, "dataset {i}: auc_l != classical");
        assert_eq!(r.upper_auc(), classical, "dataset {i}: auc_u != classical");
        assert_eq!(r.overlap_count, 0, "dataset {i}: unexpected overlap");
    }
    println!(
        "[PASS] criterion 4: point intervals with distinct scores give \
         auc_l = auc_u = classical AUC bitwise on 100 randomized datasets"
    );
}

// ---------------------------------------------------------------------------
// Criterion 5 — uAUC monotonicity for symmetric-width families
// ---------------------------------------------------------------------------

#[test]
fn criterion_05_uauc_monotone_in_confidence() {
    // Construction that satisfies the monotonicity hypothesis by design:
    // every incorrectly-ordered pair has a strictly smaller score gap than
    // every correctly-ordered pair, so widening symmetric intervals retires
    // incorrect pairs first.
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC5);
    let levels: Vec<f64> = (0..16).map(|k| f64::from(k) * 0.05).collect();
    for sample in 0..50 {
        let n_near_pos = rng.random_range(3..=8);
        let n_far_pos = rng.random_range(2..=6);
        let n_bad_neg = rng.random_range(3..=8);
        let n_good_neg = rng.random_range(3..=8);
        let mut pos_scores = vec![0.0f64; n_near_pos];
        for _ in 0..n_far_pos {
            pos_scores.push(10.0 + rng.random_range(0.0..1.0));
        }
        let mut neg_scores = Vec::new();
        for _ in 0..n_bad_neg {
            // Sits above the near positives by a small gap: incorrect order.
            neg_scores.push(rng.random_range(0.1..1.0));
        }
        for _ in 0..n_good_neg {
            // Sits below everything by a comfortably larger gap.
            neg_scores.push(-rng.random_range(1.5..3.0));
        }

        let provider = |gamma: f64| -> iroc::Result<ClassedIntervalDataset> {
            let delta = 8.0 * gamma;
            let widen = |xs: &[f64]| {
                xs.iter()
                    .map(|&x| IntervalPrediction::new(x - delta, x + delta).unwrap())
                    .collect::<Vec<_>>()
            };
            Ok(ClassedIntervalDataset::new(
                widen(&pos_scores),
                widen(&neg_scores),
            ))
        };
        let rows: Vec<SweepRow> = confidence_sweep(provider, &levels).unwrap();
        let defined: Vec<(f64, f64)> = rows
            .iter()
            .filter_map(|row| row.report.uauc.map(|u| (row.level, u)))
            .collect();
        assert!(
            !defined.is_empty(),
            "sample {sample}: uAUC undefined at every level"
        );
        for w in defined.windows(2) {
            assert!(
                w[1].1 >= w[0].1,
                "sample {sample}: uAUC fell from {} at level {} to {} at level {}",
                w[0].1,
                w[0].0,
                w[1].1,
                w[1].0
            );
        }
    }
    println!(
        "[PASS] criterion 5: uAUC non-decreasing in the confidence level wherever defined, \
         across 50 constructed symmetric-width score samples x 16 levels"
    );
}

// ---------------------------------------------------------------------------
// Criterion 6 — bound containment in the synthetic world
// ---------------------------------------------------------------------------

#[test]
fn criterion_06_bound_containment_across_seeds() {
    let alphas: Vec<f64> = (1..=10).map(|k| f64::from(k) / 100.0).collect();
    let mut contained_runs = 0usize;
    let mut total_runs = 0usize;
    for seed in [11u64, 22, 33, 44, 55] {
        let template = SyntheticConfig {
            mu0: 0.0,
            mu1: 1.0,
            n_per_class: 20_000,
            alpha: 0.0,
            seed,
        };
        let rows = validate_bounds(&template, &alphas).unwrap();
        assert_eq!(rows.len(), alphas.len());
        let mut prev_width = f64::NEG_INFINITY;
        for row in &rows {
            total_runs += 1;
            if row.contained {
                contained_runs += 1;
            }
            let width = row.upper_bound - row.lower_bound;
            assert!(
                width >= prev_width - 1e-12,
                "seed {seed}: bound width fell from {prev_width} to {width} at alpha {}",
                row.alpha
            );
            prev_width = width;
        }
    }
    assert_eq!(
        (contained_runs, total_runs),
        (50, 50),
        "auc_star must be contained in every run"
    );
    println!(
        "[PASS] criterion 6: true optimal AUC inside the bound interval in 50/50 runs \
         (5 seeds x 10 miscoverage rates, n 20000 per class), width non-decreasing in alpha"
    );
}

// ---------------------------------------------------------------------------
// Pima-backed criteria (7-10). Self-skipping when the CSV is absent.
// ---------------------------------------------------------------------------

fn pima_path() -> Option<PathBuf> {
    if let Ok(p) = std::env::var("IROC_PIMA_CSV") {
        let p = PathBuf::from(p);
        if p.exists() {
            return Some(p);
        }
    }
    let repo = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/pima.csv");
    repo.exists().then_some(repo)
}

fn skip_line(criterion: u32, what: &str) {
    println!(
        "[SKIP] criterion {criterion}: {what} — requires the Pima CSV at data/pima.csv \
         (or IROC_PIMA_CSV); file not present"
    );
}

fn load_pima(path: &Path) -> TabularDataset {
    let data = load_csv(path, "Outcome").expect("Pima CSV must load");
    assert_eq!(data.n_rows(), 768, "Pima cohort is 768 rows");
    assert_eq!(data.n_features(), 8, "Pima cohort has 8 features");
    data
}

/// One shared end-to-end run for criteria 8-10: 30% stratified split at
/// seed 42, 300 bootstrap refits, percentile intervals at {50,70,90,95}%.
struct SharedPipeline {
    sweep: Vec<SweepRow>,
    datasets: Vec<(f64, ClassedIntervalDataset)>,
    point_auc_bootstrap_mean: f64,
}

fn shared_pipeline() -> Option<&'static SharedPipeline> {
    static CELL: OnceLock<Option<SharedPipeline>> = OnceLock::new();
    CELL.get_or_init(|| {
        let path = pima_path()?;
        let data = load_pima(&path);
        let (train, test) = stratified_split(&data, 0.30, 42).unwrap();
        assert_eq!(train.n_rows(), 230);
        assert_eq!(test.n_rows(), 538);
        let config = LogisticConfig::default();
        let matrix = bootstrap_predict(&train, &test, 300, 42, &config).unwrap();
        let means = matrix.column_means();
        let point_auc_bootstrap_mean = point_auc(&means, &test.labels).unwrap();

        let levels = [0.50, 0.70, 0.90, 0.95];
        let mut datasets = Vec::new();
        let provider = |gamma: f64| -> iroc::Result<ClassedIntervalDataset> {
            percentile_intervals(&matrix, &test.labels, gamma)
        };
        let sweep = confidence_sweep(provider, &levels).unwrap();
        for &gamma in &levels {
            datasets.push((
                gamma,
                percentile_intervals(&matrix, &test.labels, gamma).unwrap(),
            ));
        }
        Some(SharedPipeline {
            sweep,
            datasets,
            point_auc_bootstrap_mean,
        })
    })
    .as_ref()
}

#[test]
fn criterion_07_baseline_point_auc() {
    let Some(path) = pima_path() else {
        skip_line(7, "baseline point AUC 0.831 +- 0.02 over 5 split seeds");
        return;
    };
    let data = load_pima(&path);
    let config = LogisticConfig::default();
    let mut aucs = Vec::new();
    for seed in [42u64, 43, 44, 45, 46] {
        let (train, test) = stratified_split(&data, 0.30, seed).unwrap();
        let model = fit_logistic(&train, &config).unwrap();
        let scores = model.predict(&test);
        aucs.push(point_auc(&scores, &test.labels).unwrap());
    }
    let mean = aucs.iter().sum::<f64>() / aucs.len() as f64;
    assert!(
        (mean - 0.831).abs() <= TOL_POINT_AUC_MEAN,
        "mean point AUC {mean:.4} outside 0.831 +- {TOL_POINT_AUC_MEAN} (per-seed {aucs:.4?})"
    );
    println!(
        "[PASS] criterion 7: mean test point AUC {mean:.4} within 0.831 +- {TOL_POINT_AUC_MEAN} \
         over split seeds 42-46 (per-seed {aucs:.4?})"
    );
}

#[test]
fn criterion_08_ninety_percent_interval_row() {
    let Some(run) = shared_pipeline() else {
        skip_line(8, "90% interval row (auc_l/auc_u/overlap/incorrect)");
        return;
    };
    let row = run
        .sweep
        .iter()
        .find(|r| (r.level - 0.90).abs() < 1e-12)
        .expect("sweep contains the 90% level");
    let rep = &row.report;
    let expected = [
        ("auc_l", rep.auc_l, 0.607),
        ("auc_u", rep.auc_u, 0.944),
        ("overlap", rep.three_region.p_overlap, 0.337),
        ("incorrect", rep.three_region.p_incorrect, 0.056),
    ];
    for (name, got, want) in expected {
        assert!(
            (got - want).abs() <= TOL_REFERENCE_TABLE,
            "90% {name}: got {got:.4}, expected {want} +- {TOL_REFERENCE_TABLE}"
        );
    }
    // Diagnostic route: curve integration must sit within 0.005 of counting.
    let (_, data90) = run
        .datasets
        .iter()
        .find(|(g, _)| (g - 0.90).abs() < 1e-12)
        .unwrap();
    let r = pairwise_counts(data90).unwrap();
    for (pairing, target) in [
        (Pairing::Strict, r.p_correct),
        (Pairing::Permissive, r.upper_auc()),
    ] {
        let curve = build_curve(data90, pairing).unwrap();
        for rule in [IntegrationRule::Trapezoid, IntegrationRule::Step] {
            let area = integrate_curve(&curve, rule).unwrap();
            assert!(
                (area - target).abs() < TOL_TRAPEZOID,
                "{pairing:?}/{rule:?} delta {:.2e} vs counting",
                (area - target).abs()
            );
        }
    }
    println!(
        "[PASS] criterion 8: 90% row auc_l {:.4} / auc_u {:.4} / overlap {:.4} / incorrect {:.4} \
         each within +-{TOL_REFERENCE_TABLE} of (0.607, 0.944, 0.337, 0.056); \
         integration deltas < {TOL_TRAPEZOID}",
        rep.auc_l, rep.auc_u, rep.three_region.p_overlap, rep.three_region.p_incorrect
    );
}

#[test]
fn criterion_09_sweep_trends_and_values() {
    let Some(run) = shared_pipeline() else {
        skip_line(9, "confidence-sweep trends across {50,70,90,95}%");
        return;
    };
    let expected = [
        (0.50, 0.7492, 0.8914, 0.1423),
        (0.70, 0.6997, 0.9139, 0.2142),
        (0.90, 0.6072, 0.9439, 0.3367),
        (0.95, 0.5585, 0.9562, 0.3977),
    ];
    assert_eq!(run.sweep.len(), expected.len());
    for (row, (level, auc_l, auc_u, overlap)) in run.sweep.iter().zip(expected) {
        assert!((row.level - level).abs() < 1e-12);
        for (name, got, want) in [
            ("auc_l", row.report.auc_l, auc_l),
            ("auc_u", row.report.auc_u, auc_u),
            ("overlap", row.report.three_region.p_overlap, overlap),
        ] {
            assert!(
                (got - want).abs() <= TOL_REFERENCE_TABLE,
                "level {level}: {name} {got:.4} vs {want} +- {TOL_REFERENCE_TABLE}"
            );
        }
    }
    for w in run.sweep.windows(2) {
        assert!(
            w[1].report.auc_l < w[0].report.auc_l,
            "auc_l must be strictly decreasing in the level"
        );
        assert!(
            w[1].report.auc_u > w[0].report.auc_u,
            "auc_u must be strictly increasing in the level"
        );
        assert!(
            w[1].report.three_region.p_overlap > w[0].report.three_region.p_overlap,
            "overlap must be strictly increasing in the level"
        );
    }
    println!(
        "[PASS] criterion 9: sweep columns match the reference {{50,70,90,95}}% table \
         within +-{TOL_REFERENCE_TABLE} with strictly monotone auc_l/auc_u/overlap"
    );
}

#[test]
fn criterion_10_selective_metrics_at_ninety() {
    let Some(run) = shared_pipeline() else {
        skip_line(10, "abstention rate and uAUC at the 90% level");
        return;
    };
    let row = run
        .sweep
        .iter()
        .find(|r| (r.level - 0.90).abs() < 1e-12)
        .unwrap();
    let ar = row.report.abstention_rate;
    let u = row.report.uauc.expect("uAUC defined at the 90% level");
    assert!(
        (ar - 0.337).abs() <= TOL_REFERENCE_TABLE,
        "AR {ar:.4} vs 0.337 +- {TOL_REFERENCE_TABLE}"
    );
    assert!(
        (u - 0.916).abs() <= TOL_REFERENCE_TABLE,
        "uAUC {u:.4} vs 0.916 +- {TOL_REFERENCE_TABLE}"
    );
    assert!(
        u > run.point_auc_bootstrap_mean,
        "uAUC {u:.4} must exceed the point AUC {:.4} of the bootstrap-mean scores",
        run.point_auc_bootstrap_mean
    );
    println!(
        "[PASS] criterion 10: 90% level AR {ar:.4} (0.337 +- {TOL_REFERENCE_TABLE}) and \
         uAUC {u:.4} (0.916 +- {TOL_REFERENCE_TABLE}), uAUC > point AUC {:.4}",
        run.point_auc_bootstrap_mean
    );
}

// ---------------------------------------------------------------------------
// Criterion 11 — synthetic-world reproduction of the reference bounds
// ---------------------------------------------------------------------------

#[test]
fn criterion_11_synthetic_bound_reproduction() {
    let start = Instant::now();
    let template = SyntheticConfig {
        mu0: 0.0,
        mu1: 1.0,
        n_per_class: 20_000,
        alpha: 0.0,
        seed: 42,
    };
    let alphas: Vec<f64> = (1..=10).map(|k| f64::from(k) / 100.0).collect();
    let rows = validate_bounds(&template, &alphas).unwrap();

    for row in &rows {
        assert!(
            (0.755..=0.770).contains(&row.auc_star),
            "alpha {}: empirical optimal AUC {:.4} outside [0.755, 0.770]",
            row.alpha,
            row.auc_star
        );
        assert!(row.contained, "alpha {}: bound missed auc_star", row.alpha);
    }
    let row01 = &rows[0];
    let row05 = &rows[4];
    for (name, got, want) in [
        ("alpha=0.01 lower", row01.lower_bound, 0.574),
        ("alpha=0.01 upper", row01.upper_bound, 0.903),
        ("alpha=0.05 lower", row05.lower_bound, 0.459),
        ("alpha=0.05 upper", row05.upper_bound, 0.992),
    ] {
        assert!(
            (got - want).abs() <= TOL_BOUND_ENDPOINT,
            "{name}: got {got:.4}, expected {want} +- {TOL_BOUND_ENDPOINT}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "synthetic reproduction took {elapsed:?}, budget 60 s"
    );
    println!(
        "[PASS] criterion 11: empirical optimal AUC {:.4} in [0.755, 0.770]; \
         alpha=0.01 bound [{:.3}, {:.3}] and alpha=0.05 bound [{:.3}, {:.3}] within \
         +-{TOL_BOUND_ENDPOINT} of the reference values ({elapsed:.2?})",
        row01.auc_star,
        row01.lower_bound,
        row01.upper_bound,
        row05.lower_bound,
        row05.upper_bound
    );
}
