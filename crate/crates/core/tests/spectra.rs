//! Statistical checks on zonal families and transform multipliers. All
//! seeds are fixed, so each run is deterministic.

use grassmann_harmonics::grassmann::{haar_orthogonal, Subspace};
use grassmann_harmonics::partitions::enumerate_types;
use grassmann_harmonics::stats::stream_rng;
use grassmann_harmonics::transforms::{
    alpha_cosine_multiplier, classify_table, cosine_multiplier, family_for, radon_adjoint_norm, spectrum,
    Operator, SpectrumConfig, Verdict,
};
use grassmann_harmonics::zonal::{build_family, evaluate_zonal, spectral_component, MomentOracle};
use grassmann_harmonics::{Partition, TypePredicate};
use nalgebra::DMatrix;

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn kappa1_methods_agree() {
    let mut quad = MomentOracle::quadrature_kappa1(5, 1, 16).unwrap();
    let fq = build_family(5, 1, 8, &mut quad).unwrap();
    let mut mc = MomentOracle::monte_carlo(5, 1, 1_000_000, 31).unwrap();
    let fm = build_family(5, 1, 8, &mut mc).unwrap();
    for l in fq.types() {
        let (cq, cm, se) = (fq.coefficients(l).unwrap(), fm.coefficients(l).unwrap(), fm.coefficient_stderr(l).unwrap());
        for t in 0..cq.len() {
            assert!((cq[t] - cm[t]).abs() <= 3.0 * se[t] + 1e-12, "{l} coefficient {t}");
        }
    }
    // ⟨y², y⟩ = E[y³] from both oracles.
    let y = |p: &[f64]| p[0];
    let exact = quad.expectation(|p| y(p).powi(3));
    let sampled = mc.expectation(|p| y(p).powi(3));
    assert!(sampled.within_sigmas(exact.mean, 3.0));
}

#[test]
fn zonal_values_and_norms() {
    let family = family_for(4, 1, 8, 0, 0).unwrap();
    let perp = Subspace::span_of(DMatrix::from_column_slice(4, 1, &[0.0, 1.0, 0.0, 0.0])).unwrap();
    let v = evaluate_zonal(&family, &part(&[2]), &perp).unwrap();
    assert!((v + 0.25).abs() < 1e-2);

    let mut mc = MomentOracle::monte_carlo(5, 2, 400_000, 8).unwrap();
    let f2 = build_family(5, 2, 6, &mut mc).unwrap();
    for l in f2.types() {
        let e = f2.norm_sq(l).unwrap();
        assert!(e.mean > 5.0 * e.stderr, "{l}");
    }
    let z22 = |e: &Subspace| evaluate_zonal(&f2, &part(&[2, 2]), e).unwrap();
    let self_component = spectral_component(z22, &part(&[2, 2]), &f2, 200_000, 3).unwrap();
    assert!(self_component.mean > 5.0 * self_component.stderr);
    let cross = spectral_component(z22, &part(&[4, 0]), &f2, 200_000, 4).unwrap();
    assert!(cross.within_sigmas(0.0, 3.0));
    let one = spectral_component(|_| 1.0, &part(&[0, 0]), &f2, 1000, 5).unwrap();
    assert!((one.mean - 1.0).abs() < 1e-12);
}

#[test]
fn trivial_type_multiplier_is_a_probability() {
    for (n, k) in [(3, 1), (4, 2), (5, 2), (6, 3)] {
        let family = family_for(n, k, 0, 1000, 1).unwrap();
        let e = cosine_multiplier(&part(&vec![0; k.min(n - k)]), &family, 200_000, 2).unwrap();
        assert!(e.mean > 0.0 && e.mean < 1.0, "({n},{k}): {}", e.mean);
    }
}

#[test]
fn multipliers_do_not_depend_on_base_point() {
    let (n, k) = (4, 2);
    let canonical = family_for(n, k, 4, 1_000_000, 40).unwrap();
    let mut rng = stream_rng(41, 0);
    let q = haar_orthogonal(n, &mut rng);
    let base = Subspace::canonical(n, k).unwrap().transform(&q).unwrap();
    let mut oracle = MomentOracle::monte_carlo_about(base, 1_000_000, 42).unwrap();
    let moved = build_family(n, k, 4, &mut oracle).unwrap();
    for l in enumerate_types(2, 4).unwrap() {
        let a = cosine_multiplier(&l, &canonical, 300_000, 43).unwrap();
        let b = cosine_multiplier(&l, &moved, 300_000, 44).unwrap();
        let combined = a.stderr.hypot(b.stderr);
        assert!((a.mean - b.mean).abs() <= 3.0 * combined, "{l}: {} vs {}", a.mean, b.mean);
    }
}

#[test]
fn alpha_one_is_the_cosine_transform() {
    let family = family_for(5, 2, 4, 400_000, 50).unwrap();
    let l = part(&[2, 2]);
    let a = alpha_cosine_multiplier(1.0, &l, &family, 100_000, 51).unwrap();
    let c = cosine_multiplier(&l, &family, 100_000, 51).unwrap();
    assert_eq!(a, c);
    assert_eq!(a.operator, Operator::Cos);
}

#[test]
fn cosine_kills_second_part_four() {
    let family = family_for(4, 2, 8, 1_000_000, 60).unwrap();
    let e = cosine_multiplier(&part(&[4, 4]), &family, 1_000_000, 61).unwrap();
    assert!(e.estimate().within_sigmas(0.0, 3.0));
}

#[test]
fn alpha_image_pattern() {
    let family = family_for(5, 2, 12, 2_000_000, 70).unwrap();
    // Even α: the kernel (y₁y₂)^{α/2} is a polynomial of degree α, so only
    // types of weight at most 2α can survive.
    let even = alpha_cosine_multiplier(2.0, &part(&[4, 4]), &family, 1_000_000, 71).unwrap();
    assert_eq!(even.verdict(), Verdict::Vanishing, "{even:?}");
    // α = 3 keeps λ₂ ≤ 4 and kills λ₂ ≥ 6.
    let kept = alpha_cosine_multiplier(3.0, &part(&[4, 2]), &family, 1_000_000, 72).unwrap();
    assert_eq!(kept.verdict(), Verdict::Surviving, "{kept:?}");
    let killed = alpha_cosine_multiplier(3.0, &part(&[6, 6]), &family, 1_000_000, 73).unwrap();
    assert_eq!(killed.verdict(), Verdict::Vanishing, "{killed:?}");
}

#[test]
fn radon_examples() {
    let family = family_for(4, 2, 4, 1_000_000, 80).unwrap();
    let killed = radon_adjoint_norm(1, &part(&[2, 2]), &family, 100_000, 4, 81).unwrap();
    assert!(killed.estimate().within_sigmas(0.0, 3.0));
    let kept = radon_adjoint_norm(1, &part(&[2, 0]), &family, 100_000, 4, 82).unwrap();
    assert_eq!(kept.verdict(), Verdict::Surviving);
}

#[test]
fn radon_pattern_on_three_planes() {
    let mut cfg = SpectrumConfig::new(Operator::RadonAdjoint { p: 1 }, 5, 3, 8, 200_000, 90);
    cfg.family_samples = 2_000_000;
    let table = spectrum(&cfg).unwrap();
    for row in classify_table(&table, &TypePredicate::radon_image(5, 1)) {
        assert_eq!(row.matches(), Some(true), "{row:?}");
    }
}
