use grassmann_harmonics::grassmann::{haar_orthogonal, haar_sample, principal_cosines, RescalingFlow, Subspace};
use grassmann_harmonics::stats::stream_rng;
use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::Rng;
use rand_distr::StandardNormal;

fn dims() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=7).prop_flat_map(|n| (Just(n), 1..n))
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cosines_are_symmetric((n, k) in dims(), seed in any::<u64>()) {
        let mut rng = stream_rng(seed, 0);
        let a = haar_sample(n, k, &mut rng).unwrap();
        let b = haar_sample(n, k, &mut rng).unwrap();
        let ab = principal_cosines(&a, &b).unwrap();
        let ba = principal_cosines(&b, &a).unwrap();
        prop_assert!(close(ab.values(), ba.values(), 1e-9));
    }

    #[test]
    fn cosines_are_orthogonally_invariant((n, k) in dims(), seed in any::<u64>()) {
        let mut rng = stream_rng(seed, 0);
        let a = haar_sample(n, k, &mut rng).unwrap();
        let b = haar_sample(n, k, &mut rng).unwrap();
        let q = haar_orthogonal(n, &mut rng);
        let before = principal_cosines(&a, &b).unwrap();
        let after = principal_cosines(&a.transform(&q).unwrap(), &b.transform(&q).unwrap()).unwrap();
        prop_assert!(close(before.values(), after.values(), 1e-9));
    }

    #[test]
    fn cosines_survive_complements((n, k) in dims(), seed in any::<u64>()) {
        let mut rng = stream_rng(seed, 0);
        let a = haar_sample(n, k, &mut rng).unwrap();
        let b = haar_sample(n, k, &mut rng).unwrap();
        let direct = principal_cosines(&a, &b).unwrap();
        let dual = principal_cosines(&a.orthogonal_complement(), &b.orthogonal_complement()).unwrap();
        prop_assert!(close(direct.values(), dual.values(), 1e-9));
    }

    #[test]
    fn flow_scales_the_chart((n, k) in dims(), seed in any::<u64>(), s in 0.1f64..=1.0) {
        let mut rng = stream_rng(seed, 0);
        let flow = RescalingFlow::new(Subspace::canonical(n, k).unwrap());
        let a = DMatrix::from_fn(n - k, k, |_, _| 0.3 * rng.sample::<f64, _>(StandardNormal));
        let e = flow.from_chart(&a).unwrap();
        let scaled = flow.chart(&flow.apply(s, &e).unwrap()).unwrap();
        prop_assert!((scaled - a * s).amax() <= 1e-8);
    }

    #[test]
    fn flow_is_a_semigroup((n, k) in dims(), seed in any::<u64>(), s in 0.05f64..3.0, t in 0.05f64..3.0) {
        let mut rng = stream_rng(seed, 0);
        let base = Subspace::canonical(n, k).unwrap();
        let flow = RescalingFlow::new(base.clone());
        let e = haar_sample(n, k, &mut rng).unwrap();
        let (Ok(once), Ok(twice)) = (flow.apply(s * t, &e), flow.apply(t, &e).and_then(|f| flow.apply(s, &f))) else {
            // Nearly non-transversal draws are rejected by the flow itself.
            return Ok(());
        };
        let c1 = principal_cosines(&once, &base).unwrap();
        let c2 = principal_cosines(&twice, &base).unwrap();
        prop_assert!(close(c1.values(), c2.values(), 1e-9));
    }
}

#[test]
fn jacobian_tends_to_inverse_cosine() {
    let mut rng = stream_rng(5, 0);
    let base = Subspace::canonical(5, 2).unwrap();
    let flow = RescalingFlow::new(base.clone());
    for _ in 0..50 {
        let e = haar_sample(5, 2, &mut rng).unwrap();
        let limit = 1.0 / grassmann_harmonics::grassmann::abs_cosine(&e, &base).unwrap();
        let err = (flow.jacobian_factor(1e-5, &e).unwrap() - limit).abs();
        // Convergence is not uniform: near-orthogonal draws have a huge limit,
        // so only the relative error stays small there.
        if limit <= 100.0 {
            assert!(err <= 1e-4, "limit {limit}: error {err}");
        } else {
            assert!(err <= 1e-5 * limit, "limit {limit}: error {err}");
        }
    }
}
