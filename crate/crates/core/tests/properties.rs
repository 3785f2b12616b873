//! Property tests for the library invariants: eigendecomposition contracts,
//! product utilities, generator postconditions, and the falsification
//! property (no bound check ever reports a margin below tolerance on
//! instances that meet its preconditions).

use logmaj_core::bounds;
use logmaj_core::det::determinant;
use logmaj_core::eig::{hermitian_eig, hermitian_eigenvalues};
use logmaj_core::generators::{
    gaussian_matrix, nested_frame, random_patterned_isometry, random_psd, random_square,
    random_strict_contraction, rng_from, Field, GenConfig, SpectrumMode,
};
use logmaj_core::products::{
    head_product, indexed_log_product, indexed_product, tail_product,
};
use logmaj_core::schur::eigenvalue_moduli;
use logmaj_core::singular::singular_values;
use logmaj_core::{BoundReport, ComplexMatrix, IndexSequence, Report};
use proptest::prelude::*;
use rand::Rng;

const BOUND_TOL: f64 = 1e-9;
const IDENTITY_TOL: f64 = 1e-10;

fn spectrum_mode(tag: u8) -> SpectrumMode {
    match tag % 3 {
        0 => SpectrumMode::Uniform,
        1 => SpectrumMode::Clustered,
        _ => SpectrumMode::RankDeficient,
    }
}

fn gen_config(seed: u64, n: usize, tag: u8) -> GenConfig {
    GenConfig {
        spectrum: spectrum_mode(tag),
        ..GenConfig::new(seed, n)
    }
}

fn psd_pair(seed: u64, n: usize, tag: u8) -> (ComplexMatrix, ComplexMatrix) {
    let mut rng = rng_from(seed);
    let a = random_psd(&gen_config(rng.gen(), n, tag)).unwrap();
    let b = random_psd(&gen_config(rng.gen(), n, tag)).unwrap();
    (a, b)
}

fn contraction_pair(seed: u64, n: usize) -> (ComplexMatrix, ComplexMatrix) {
    let mut rng = rng_from(seed);
    let a = random_strict_contraction(&GenConfig::new(rng.gen(), n)).unwrap();
    let b = random_strict_contraction(&GenConfig::new(rng.gen(), n)).unwrap();
    (a, b)
}

fn bound(report: &Report) -> &BoundReport {
    match report {
        Report::Bound(b) => b,
        Report::Identity(_) => panic!("expected a bound report"),
    }
}

fn assert_satisfied(report: &Report) {
    match report {
        Report::Bound(b) => assert!(
            b.satisfied,
            "{} violated: lhs {} rhs {:?} margin {}",
            b.check_name, b.lhs, b.rhs_terms, b.margin
        ),
        Report::Identity(r) => assert!(
            r.satisfied,
            "{} violated: residual {} scale {}",
            r.check_name, r.residual, r.scale
        ),
    }
}

fn sample_indices(n: usize, seed: u64) -> Vec<IndexSequence> {
    let mut rng = rng_from(seed);
    vec![IndexSequence::full(n), IndexSequence::random(n, &mut rng)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn eigendecomposition_invariants_hold(seed in any::<u64>(), n in 1usize..=16) {
        let mut rng = rng_from(seed);
        let a = gaussian_matrix(&mut rng, n, n, Field::Complex).hermitian_part();
        let decomp = hermitian_eig(&a, 1e-12).unwrap();
        prop_assert!(decomp
            .eigenvalues
            .windows(2)
            .all(|w| w[0] >= w[1]));
        prop_assert!(decomp.vectors.orthonormality_defect() <= 1e-12);
        let residual = decomp.reconstruction_residual(&a);
        prop_assert!(residual <= 1e-11 * (1.0 + a.max_abs()));
    }

    #[test]
    fn psd_singular_values_equal_eigenvalues(seed in any::<u64>(), n in 1usize..=8, tag in any::<u8>()) {
        let a = random_psd(&gen_config(seed, n, tag)).unwrap();
        let eigs = hermitian_eigenvalues(&a, 1e-12).unwrap();
        let sigmas = singular_values(&a).unwrap();
        let top = eigs[0].max(1.0);
        for (s, e) in sigmas.iter().zip(&eigs) {
            prop_assert!((s - e).abs() <= 1e-9 * top, "sigma {s} vs eig {e}");
        }
    }

    #[test]
    fn hermitian_determinant_matches_eigenvalue_product(seed in any::<u64>(), n in 1usize..=8) {
        let (a, b) = psd_pair(seed, n, 0);
        let sum = a.add(&b).hermitian_part();
        let det = determinant(&sum).unwrap().re;
        let product: f64 = hermitian_eigenvalues(&sum, 1e-12).unwrap().iter().product();
        prop_assert!(
            (det - product).abs() <= 1e-9 * product.abs().max(1.0),
            "det {det} vs product {product}"
        );
    }

    #[test]
    fn weyl_tail_holds_on_random_squares(seed in any::<u64>(), n in 1usize..=8) {
        let m = random_square(&GenConfig::new(seed, n)).unwrap();
        let sigmas = singular_values(&m).unwrap();
        let mut moduli = eigenvalue_moduli(&m).unwrap();
        moduli.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for k in 1..=n {
            let lhs = tail_product(&moduli, k);
            let rhs = tail_product(&sigmas, k);
            let scale = lhs.abs().max(rhs.abs()).max(1.0);
            prop_assert!(lhs >= rhs - 1e-8 * scale, "k={k}: moduli tail {lhs} vs sigma tail {rhs}");
        }
    }

    #[test]
    fn log_product_agrees_with_plain(
        raw in prop::collection::vec(1e-6f64..1e6, 1..=12),
        mask in any::<u16>(),
    ) {
        let mut values = raw;
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let n = values.len();
        let mut picked: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        if picked.is_empty() {
            picked = vec![1];
        }
        let idx = IndexSequence::new(picked, n).unwrap();
        let plain = indexed_product(&values, &idx);
        let logged = indexed_log_product(&values, &idx).value();
        prop_assert!((plain - logged).abs() <= 1e-12 * plain.abs().max(1e-300));
    }

    #[test]
    fn head_and_tail_products_match_indexed(
        raw in prop::collection::vec(0.0f64..10.0, 1..=10),
        k_seed in any::<u64>(),
    ) {
        let mut values = raw;
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let n = values.len();
        let k = (k_seed as usize % n) + 1;
        let head_idx = IndexSequence::head(k, n).unwrap();
        let tail_idx = IndexSequence::new(((n - k + 1)..=n).collect(), n).unwrap();
        prop_assert_eq!(head_product(&values, k), indexed_product(&values, &head_idx));
        prop_assert_eq!(tail_product(&values, k), indexed_product(&values, &tail_idx));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn psd_family_margins_stay_above_tolerance(
        seed in any::<u64>(),
        n in 1usize..=6,
        tag in any::<u8>(),
    ) {
        let (a, b) = psd_pair(seed, n, tag);
        for k in 1..=n {
            assert_satisfied(&bounds::fiedler_chain(&a, &b, k, BOUND_TOL).unwrap());
            assert_satisfied(&bounds::oppenheim_tail_power(&a, &b, k, BOUND_TOL).unwrap());
            assert_satisfied(&bounds::head_tail_power(&a, &b, k, BOUND_TOL).unwrap());
            for r in bounds::tail_chain(&a, &b, k, BOUND_TOL).unwrap() {
                assert_satisfied(&r);
            }
        }
        assert_satisfied(&bounds::minkowski_det(&a, &b, BOUND_TOL).unwrap());
        assert_satisfied(&bounds::hartfiel_det(&a, &b, BOUND_TOL).unwrap());
        for i in 1..n {
            for j in (i + 1)..=n {
                assert_satisfied(&bounds::pairwise_bound(&a, &b, i, j, BOUND_TOL).unwrap());
            }
        }
        for idx in sample_indices(n, seed ^ 0x5eed) {
            assert_satisfied(&bounds::lidskii_product(&a, &b, &idx, BOUND_TOL).unwrap());
            for r in bounds::main_bounds(&a, &b, &idx, BOUND_TOL).unwrap() {
                assert_satisfied(&r);
            }
        }
    }

    #[test]
    fn contraction_family_margins_stay_above_tolerance(seed in any::<u64>(), n in 1usize..=6) {
        let (a, b) = contraction_pair(seed, n);
        assert_satisfied(&bounds::hua_identity_residual(&a, &b, IDENTITY_TOL).unwrap());
        assert_satisfied(&bounds::sum_identity_residual(&a, &b, IDENTITY_TOL).unwrap());
        assert_satisfied(&bounds::hua_det_inequality(&a, &b, BOUND_TOL).unwrap());
        assert_satisfied(&bounds::hua_reversal_det(&a, &b, BOUND_TOL).unwrap());
        assert_satisfied(&bounds::hua_strengthened_det(&a, &b, BOUND_TOL).unwrap());
        assert_satisfied(&bounds::reversal_det(&a, &b, BOUND_TOL).unwrap());
        for k in 1..=n {
            for r in bounds::marcus_bounds(&a, &b, k, BOUND_TOL).unwrap() {
                assert_satisfied(&r);
            }
        }
        for idx in sample_indices(n, seed ^ 0xc0ffee) {
            assert_satisfied(&bounds::contraction_main_bound(&a, &b, &idx, BOUND_TOL).unwrap());
            assert_satisfied(&bounds::reversal_bound(&a, &b, &idx, BOUND_TOL).unwrap());
        }
    }

    #[test]
    fn frame_margins_stay_above_tolerance(
        seed in any::<u64>(),
        n in 1usize..=8,
        tag in any::<u8>(),
    ) {
        let mut rng = rng_from(seed);
        let a = random_psd(&gen_config(rng.gen(), n, tag)).unwrap();
        let decomp = hermitian_eig(&a, 1e-10).unwrap();
        let idx = IndexSequence::random(n, &mut rng);
        let frame = nested_frame(&decomp, &idx, rng.gen()).unwrap();
        assert_satisfied(&bounds::nested_frame_det_bound(&a, &idx, &frame, BOUND_TOL).unwrap());

        let k = rng.gen_range(1..=n);
        let u = random_patterned_isometry(n, k, n, rng.gen()).unwrap();
        assert_satisfied(&bounds::fan_min_det(&a, &u, BOUND_TOL).unwrap());

        let mut lambdas: Vec<f64> = (0..n).map(|_| 0.05 + rng.gen::<f64>() * 10.0).collect();
        if tag % 3 == 2 && n > 1 {
            let zeros = rng.gen_range(1..n);
            for slot in lambdas.iter_mut().take(zeros) {
                *slot = 0.0;
            }
        }
        lambdas.sort_by(|x, y| y.partial_cmp(x).unwrap());
        let m = rng.gen_range(1..=n);
        let k = rng.gen_range(1..=n);
        let u = random_patterned_isometry(n, k, m, rng.gen()).unwrap();
        assert_satisfied(&bounds::partial_isometry_reduction(&lambdas, &u, m, BOUND_TOL).unwrap());
    }

    #[test]
    fn tail_chain_dominates_two_term_form(
        seed in any::<u64>(),
        n in 1usize..=8,
        tag in any::<u8>(),
        k_seed in any::<u64>(),
    ) {
        let (a, b) = psd_pair(seed, n, tag);
        let k = (k_seed as usize % n) + 1;
        let reports = bounds::tail_chain(&a, &b, k, BOUND_TOL).unwrap();
        let tail = bound(&reports[0]);
        prop_assert_eq!(tail.rhs_terms.len(), 2);
        let scale = tail.scale();
        // The aligned middle link dominates the three-term link...
        prop_assert!(tail.rhs_terms[0] >= tail.rhs_terms[1] - BOUND_TOL * scale);
        // ...and the three-term link keeps a nonnegative cross term, so it
        // dominates the plain two-term sum of tail products.
        let pa = tail_product(&hermitian_eigenvalues(&a, 1e-10).unwrap(), k);
        let pb = tail_product(&hermitian_eigenvalues(&b, 1e-10).unwrap(), k);
        prop_assert!(tail.rhs_terms[1] >= pa + pb - BOUND_TOL * scale);
    }

    #[test]
    fn main_bounds_satisfied_flag_is_scale_invariant(
        seed in any::<u64>(),
        n in 1usize..=6,
        tag in any::<u8>(),
    ) {
        let (a, b) = psd_pair(seed, n, tag);
        for idx in sample_indices(n, seed ^ 0xab1e) {
            let base = bounds::main_bounds(&a, &b, &idx, BOUND_TOL).unwrap();
            for c in [0.1, 10.0] {
                let scaled = bounds::main_bounds(
                    &a.scale_real(c),
                    &b.scale_real(c),
                    &idx,
                    BOUND_TOL,
                )
                .unwrap();
                for (orig, new) in base.iter().zip(&scaled) {
                    prop_assert_eq!(
                        orig.satisfied(),
                        new.satisfied(),
                        "flag changed under scaling by {} for {}",
                        c,
                        orig.check_name()
                    );
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn scalar_product_bound_holds_on_nonnegative_sequences(
        a in prop::collection::vec(0.0f64..10.0, 1..=8),
        mut b in prop::collection::vec(0.0f64..10.0, 1..=8),
    ) {
        b.resize(a.len(), 0.0);
        for r in bounds::scalar_product_bound(&a, &b, BOUND_TOL).unwrap() {
            assert_satisfied(&r);
        }
    }

    #[test]
    fn scalar_identity_family_at_dimension_one(
        are in -0.66f64..0.66,
        aim in -0.66f64..0.66,
        bre in -0.66f64..0.66,
        bim in -0.66f64..0.66,
    ) {
        let a = ComplexMatrix::new(1, 1, vec![num_complex::Complex64::new(are, aim)]).unwrap();
        let b = ComplexMatrix::new(1, 1, vec![num_complex::Complex64::new(bre, bim)]).unwrap();
        let reports = [
            bounds::hua_det_inequality(&a, &b, BOUND_TOL).unwrap(),
            bounds::hua_reversal_det(&a, &b, BOUND_TOL).unwrap(),
            bounds::hua_strengthened_det(&a, &b, BOUND_TOL).unwrap(),
            bounds::reversal_det(&a, &b, BOUND_TOL).unwrap(),
        ];
        for r in &reports {
            let r = bound(r);
            prop_assert!(
                r.margin.abs() <= 1e-12 * r.scale(),
                "{} is an identity at n=1 but had margin {}",
                r.check_name,
                r.margin
            );
        }
    }

    #[test]
    fn equal_contractions_give_hua_equality(seed in any::<u64>(), n in 1usize..=6) {
        let a = random_strict_contraction(&GenConfig::new(seed, n)).unwrap();
        for r in [
            bounds::hua_det_inequality(&a, &a, BOUND_TOL).unwrap(),
            bounds::hua_strengthened_det(&a, &a, BOUND_TOL).unwrap(),
        ] {
            let r = bound(&r);
            prop_assert!(
                r.margin.abs() <= 1e-9 * r.scale(),
                "{} should be an equality at A=B, margin {}",
                r.check_name,
                r.margin
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_psd_is_hermitian_and_deterministic(
        seed in any::<u64>(),
        n in 1usize..=8,
        tag in any::<u8>(),
    ) {
        let cfg = gen_config(seed, n, tag);
        let a = random_psd(&cfg).unwrap();
        prop_assert!(a.hermitian_defect() <= 1e-13);
        let again = random_psd(&cfg).unwrap();
        prop_assert_eq!(a.entries(), again.entries());
    }

    #[test]
    fn generated_contraction_respects_margin(
        seed in any::<u64>(),
        n in 1usize..=8,
        delta in 0.01f64..0.9,
    ) {
        let cfg = GenConfig { delta, ..GenConfig::new(seed, n) };
        let a = random_strict_contraction(&cfg).unwrap();
        let top = singular_values(&a).unwrap()[0];
        prop_assert!(top <= 1.0 - delta + 1e-10, "sigma_1 {top} above 1 - {delta}");
    }

    #[test]
    fn patterned_isometry_postconditions(
        seed in any::<u64>(),
        n in 1usize..=8,
        k_seed in any::<u64>(),
        m_seed in any::<u64>(),
    ) {
        let k = (k_seed as usize % n) + 1;
        let m = (m_seed as usize % n) + 1;
        let u = random_patterned_isometry(n, k, m, seed).unwrap();
        prop_assert!(u.orthonormality_defect() <= 1e-12);
        for row in m..n {
            prop_assert_eq!(u[(row, 0)].norm(), 0.0);
        }
        let again = random_patterned_isometry(n, k, m, seed).unwrap();
        prop_assert_eq!(u.entries(), again.entries());
    }

    #[test]
    fn nested_frame_postconditions(
        seed in any::<u64>(),
        n in 1usize..=8,
        tag in any::<u8>(),
    ) {
        let mut rng = rng_from(seed);
        let a = random_psd(&gen_config(rng.gen(), n, tag)).unwrap();
        let decomp = hermitian_eig(&a, 1e-10).unwrap();
        let idx = IndexSequence::random(n, &mut rng);
        let frame = nested_frame(&decomp, &idx, rng.gen()).unwrap();
        prop_assert!(frame.orthonormality_defect() <= 1e-10);
        let coords = decomp.vectors.adjoint_mul(&frame);
        for (t, &i_t) in idx.indices().iter().enumerate() {
            let out_of_span: f64 = (i_t..n)
                .map(|row| coords[(row, t)].norm_sqr())
                .sum::<f64>()
                .sqrt();
            prop_assert!(out_of_span <= 1e-10, "column {t} leaks {out_of_span}");
        }
    }

    #[test]
    fn prescribed_spectrum_round_trips(
        seed in any::<u64>(),
        raw in prop::collection::vec(0.0f64..10.0, 1..=12),
    ) {
        let mut spectrum = raw;
        spectrum.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let cfg = GenConfig {
            spectrum: SpectrumMode::Prescribed(spectrum.clone()),
            ..GenConfig::new(seed, spectrum.len())
        };
        let a = random_psd(&cfg).unwrap();
        let eigs = hermitian_eigenvalues(&a, 1e-12).unwrap();
        let top = spectrum[0].max(1.0);
        for (got, want) in eigs.iter().zip(&spectrum) {
            prop_assert!((got - want).abs() <= 1e-9 * top, "eig {got} vs prescribed {want}");
        }
    }
}
