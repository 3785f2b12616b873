//! Acceptance gate for the whole workspace: one test per criterion, each
//! printing a single `ACCEPTANCE <n>: PASS|FAIL` line (visible with
//! `--nocapture`; the test name carries the same verdict either way).

use std::sync::OnceLock;
use std::time::Instant;

use logmaj_core::bounds;
use logmaj_core::campaign::{run_campaign, CampaignConfig, CampaignReport};
use logmaj_core::eig::{hermitian_eig, hermitian_eigenvalues};
use logmaj_core::generators::{
    gaussian_matrix, nested_frame, random_patterned_isometry, random_psd,
    random_strict_contraction, rng_from, Field, GenConfig, SpectrumMode,
};
use logmaj_core::{BoundReport, ComplexMatrix, IndexSequence, Report};
use num_complex::Complex64;
use rand::Rng;

struct SequentialRun {
    report: CampaignReport,
    elapsed_seconds: f64,
}

/// The default campaign on one worker, shared between criteria 1 and 8.
fn sequential_default_run() -> &'static SequentialRun {
    static RUN: OnceLock<SequentialRun> = OnceLock::new();
    RUN.get_or_init(|| {
        let started = Instant::now();
        let report = run_campaign(&CampaignConfig::default(), Some(1))
            .expect("default campaign config is valid");
        SequentialRun {
            report,
            elapsed_seconds: started.elapsed().as_secs_f64(),
        }
    })
}

fn verdict(criterion: &str, pass: bool) {
    println!("ACCEPTANCE {criterion}: {}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "acceptance criterion {criterion} failed");
}

fn bound(report: &Report) -> &BoundReport {
    match report {
        Report::Bound(b) => b,
        Report::Identity(_) => panic!("expected a bound report"),
    }
}

#[test]
fn criterion_1_falsification_campaign() {
    let run = sequential_default_run();
    let violations = run.report.total_violations();
    let failures = run.report.total_generation_failures();
    println!(
        "campaign: {violations} violations, {failures} generation failures, {:.1}s",
        run.elapsed_seconds
    );
    verdict(
        "1 (default campaign, zero violations in under 300s)",
        violations == 0 && failures == 0 && run.elapsed_seconds < 300.0,
    );
}

#[test]
fn criterion_2_counterexample_reproduction() {
    let reports = bounds::counterexample_reports(1e-9).unwrap();
    let find = |name: &str| -> &BoundReport {
        reports
            .iter()
            .map(bound)
            .find(|r| r.check_name == name)
            .unwrap_or_else(|| panic!("missing {name}"))
    };
    let mixed = find("counterexample/mixed_product");
    let top = find("counterexample/top_eigenvalue");
    let fallback_top = find("counterexample/fallback_top");
    let fallback_bottom = find("counterexample/fallback_bottom");
    let reproduction = match bounds::reproduce_counterexamples(1e-9).unwrap() {
        Report::Identity(r) => r,
        Report::Bound(_) => panic!("expected identity report"),
    };
    let pass = mixed.lhs == 0.0
        && mixed.rhs_terms == vec![1.0]
        && !mixed.satisfied
        && top.lhs == 1.0
        && top.rhs_terms == vec![2.0]
        && !top.satisfied
        && fallback_top.lhs == 1.0
        && fallback_top.rhs_terms == vec![1.0]
        && fallback_top.satisfied
        && fallback_bottom.lhs == 1.0
        && fallback_bottom.rhs_terms == vec![0.0]
        && fallback_bottom.satisfied
        && reproduction.residual == 0.0
        && reproduction.satisfied;
    verdict("2 (counterexamples reproduce exactly: 0 vs 1 and 1 < 2)", pass);
}

#[test]
fn criterion_3_equality_witnesses() {
    let mut pass = true;

    // A = B = I: the three-term form is an equality 2^k = 1 + 1 + (2^k - 2)
    // for every index subsequence.
    for n in 1..=8usize {
        let id = ComplexMatrix::identity(n);
        for idx in IndexSequence::all(n) {
            let reports = bounds::main_bounds(&id, &id, &idx, 1e-9).unwrap();
            let three = bound(&reports[1]);
            assert_eq!(three.check_name, "main_bounds/three_term");
            if three.margin.abs() > 1e-9 {
                println!("identity witness failed at n={n} I={:?}", idx.indices());
                pass = false;
            }
        }
    }

    // A = B random strict contraction: the difference term vanishes and the
    // Hua chains collapse to equalities.
    let mut rng = rng_from(3);
    for n in 1..=6usize {
        for _ in 0..20 {
            let a = random_strict_contraction(&GenConfig::new(rng.gen(), n)).unwrap();
            for report in [
                bounds::hua_det_inequality(&a, &a, 1e-9).unwrap(),
                bounds::hua_strengthened_det(&a, &a, 1e-9).unwrap(),
            ] {
                let r = bound(&report);
                if r.margin.abs() > 1e-9 * r.scale() {
                    println!("{} not an equality at A=B, margin {}", r.check_name, r.margin);
                    pass = false;
                }
            }
        }
    }

    // A = B = 0: every contraction check evaluates on exact ones and zeros.
    for n in 1..=4usize {
        let zero = ComplexMatrix::zeros(n, n);
        let mut margins = Vec::new();
        for k in 1..=n {
            for r in bounds::marcus_bounds(&zero, &zero, k, 1e-9).unwrap() {
                margins.push(bound(&r).margin);
            }
        }
        for idx in IndexSequence::all(n) {
            margins.push(bound(&bounds::contraction_main_bound(&zero, &zero, &idx, 1e-9).unwrap()).margin);
            margins.push(bound(&bounds::reversal_bound(&zero, &zero, &idx, 1e-9).unwrap()).margin);
        }
        margins.push(bound(&bounds::reversal_det(&zero, &zero, 1e-9).unwrap()).margin);
        if margins.iter().any(|m| *m != 0.0) {
            println!("zero witness not exact at n={n}: {margins:?}");
            pass = false;
        }
    }

    verdict("3 (equality witnesses: A=B=I, A=B, A=B=0)", pass);
}

#[test]
fn criterion_4_identity_residuals() {
    let mut rng = rng_from(4);
    let mut worst = 0.0f64;
    let mut pass = true;
    for trial in 0..1000u64 {
        let n = 1 + (trial as usize % 8);
        let a = random_strict_contraction(&GenConfig::new(rng.gen(), n)).unwrap();
        let b = random_strict_contraction(&GenConfig::new(rng.gen(), n)).unwrap();
        for report in [
            bounds::hua_identity_residual(&a, &b, 1e-10).unwrap(),
            bounds::sum_identity_residual(&a, &b, 1e-10).unwrap(),
        ] {
            match report {
                Report::Identity(r) => {
                    worst = worst.max(r.residual / (1.0 + r.scale));
                    if !r.satisfied {
                        println!("{} residual {} at scale {}", r.check_name, r.residual, r.scale);
                        pass = false;
                    }
                }
                Report::Bound(_) => panic!("expected identity report"),
            }
        }
    }
    println!("worst identity residual / (1 + scale): {worst:.3e}");
    verdict("4 (identity residuals below 1e-10 * (1 + scale))", pass);
}

#[test]
fn criterion_5_scalar_identity_family() {
    let mut rng = rng_from(5);
    let mut pass = true;
    for _ in 0..1000 {
        let mut scalar = || {
            let r = 0.94 * rng.gen::<f64>();
            let theta = std::f64::consts::TAU * rng.gen::<f64>();
            ComplexMatrix::new(1, 1, vec![Complex64::from_polar(r, theta)]).unwrap()
        };
        let a = scalar();
        let b = scalar();
        for report in [
            bounds::hua_det_inequality(&a, &b, 1e-9).unwrap(),
            bounds::hua_reversal_det(&a, &b, 1e-9).unwrap(),
            bounds::hua_strengthened_det(&a, &b, 1e-9).unwrap(),
            bounds::reversal_det(&a, &b, 1e-9).unwrap(),
        ] {
            let r = bound(&report);
            if r.margin.abs() > 1e-12 * r.scale() {
                println!("{} margin {} at scale {}", r.check_name, r.margin, r.scale());
                pass = false;
            }
        }
    }
    verdict("5 (n=1 identity family within 1e-12 * scale)", pass);
}

#[test]
fn criterion_6_oracle_checks() {
    let mut rng = rng_from(6);
    let mut violations = 0usize;
    for i in 0..1000usize {
        let n = 1 + (i % 8);
        let spectrum = match i % 3 {
            0 => SpectrumMode::Uniform,
            1 => SpectrumMode::Clustered,
            _ => SpectrumMode::RankDeficient,
        };
        let cfg = GenConfig {
            spectrum,
            ..GenConfig::new(rng.gen(), n)
        };
        let a = random_psd(&cfg).unwrap();
        let decomp = hermitian_eig(&a, 1e-10).unwrap();

        let idx = IndexSequence::random(n, &mut rng);
        let frame = nested_frame(&decomp, &idx, rng.gen()).unwrap();
        let nested = bounds::nested_frame_det_bound(&a, &idx, &frame, 1e-9).unwrap();

        let k = rng.gen_range(1..=n);
        let u = random_patterned_isometry(n, k, n, rng.gen()).unwrap();
        let fan = bounds::fan_min_det(&a, &u, 1e-9).unwrap();

        let mut lambdas: Vec<f64> = (0..n).map(|_| 0.05 + rng.gen::<f64>() * 10.0).collect();
        if i % 3 == 2 && n > 1 {
            let zeros = rng.gen_range(1..n);
            for slot in lambdas.iter_mut().take(zeros) {
                *slot = 0.0;
            }
        }
        lambdas.sort_by(|x, y| y.partial_cmp(x).unwrap());
        let m = rng.gen_range(1..=n);
        let k = rng.gen_range(1..=n);
        let u = random_patterned_isometry(n, k, m, rng.gen()).unwrap();
        let reduction = bounds::partial_isometry_reduction(&lambdas, &u, m, 1e-9).unwrap();

        for report in [nested, fan, reduction] {
            if !report.satisfied() {
                println!("oracle violation in {} at n={n} draw {i}", report.check_name());
                violations += 1;
            }
        }
    }
    verdict("6 (frame and isometry oracles, zero violations)", violations == 0);
}

#[test]
fn criterion_7_numerical_core() {
    let sizes = [1usize, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64];
    let mut rng = rng_from(7);
    let mut pass = true;

    for i in 0..1000usize {
        let n = sizes[i % sizes.len()];
        let a = gaussian_matrix(&mut rng, n, n, Field::Complex).hermitian_part();
        let decomp = hermitian_eig(&a, 1e-12).unwrap();
        let recon = decomp.reconstruction_residual(&a);
        let orth = decomp.vectors.orthonormality_defect();
        if recon > 1e-11 * (1.0 + a.max_abs()) || orth > 1e-12 {
            println!("eig invariants failed at n={n}: recon {recon:.3e} orth {orth:.3e}");
            pass = false;
        }
    }

    for i in 0..120usize {
        let n = sizes[i % sizes.len()];
        let mut spectrum: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * 10.0).collect();
        spectrum.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let cfg = GenConfig {
            spectrum: SpectrumMode::Prescribed(spectrum.clone()),
            ..GenConfig::new(rng.gen(), n)
        };
        let a = random_psd(&cfg).unwrap();
        let eigs = hermitian_eigenvalues(&a, 1e-12).unwrap();
        let top = spectrum[0].max(1.0);
        for (got, want) in eigs.iter().zip(&spectrum) {
            if (got - want).abs() > 1e-9 * top {
                println!("round-trip failed at n={n}: {got} vs {want}");
                pass = false;
            }
        }
    }

    verdict("7 (eigendecomposition residuals and spectrum round-trip up to n=64)", pass);
}

#[test]
fn criterion_8_determinism_across_workers() {
    let sequential = sequential_default_run();
    let parallel = run_campaign(&CampaignConfig::default(), Some(8))
        .expect("default campaign config is valid");
    let same = sequential.report.to_json_string() == parallel.to_json_string();
    verdict("8 (byte-identical report bodies, 1 vs 8 workers)", same);
}
