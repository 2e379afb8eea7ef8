//! Property tests over random states built from proptest-drawn amplitudes.

use concurrence_bounds::bounds::{evaluate, superpose_exact, BoundsOptions};
use concurrence_bounds::concurrence::{
    concurrence, concurrence_from_purity, concurrence_vector, concurrence_vector_dot,
    pair_concurrence, pair_concurrence_closed_form,
};
use concurrence_bounds::io::StateFile;
use concurrence_bounds::state::SCHMIDT_THRESHOLD;
use concurrence_bounds::verify::sampling::haar_unitary;
use concurrence_bounds::verify::seed_stream;
use concurrence_bounds::{schmidt_decompose, PureState, Superposition};
use num_complex::Complex64;
use proptest::prelude::*;

fn state(max_dim: usize) -> impl Strategy<Value = PureState> {
    (2..=max_dim, 2..=max_dim).prop_flat_map(|(na, nb)| {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), na * nb)
            .prop_filter("nonzero", |v| v.iter().map(|(a, b)| a * a + b * b).sum::<f64>() > 1e-3)
            .prop_map(move |v| {
                PureState::new(na, nb, v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap()
            })
    })
}

fn pair(max_dim: usize) -> impl Strategy<Value = (PureState, PureState)> {
    (2..=max_dim, 2..=max_dim).prop_flat_map(|(na, nb)| {
        let one = prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), na * nb)
            .prop_filter("nonzero", |v| v.iter().map(|(a, b)| a * a + b * b).sum::<f64>() > 1e-3)
            .prop_map(move |v| {
                PureState::new(na, nb, v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap()
            });
        (one.clone(), one)
    })
}

fn max_diff(a: &PureState, b: &PureState) -> f64 {
    a.amplitudes().iter().zip(b.amplitudes()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn schmidt_reassembles(s in state(5)) {
        let form = schmidt_decompose(&s, SCHMIDT_THRESHOLD);
        prop_assert!(max_diff(&form.reassemble().unwrap(), &s) < 1e-10);
        prop_assert!(form.coefficients.windows(2).all(|w| w[0] >= w[1]));
        let total: f64 = form.coefficients.iter().map(|l| l * l).sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn concurrence_routes_agree(s in state(6)) {
        let c = concurrence(&s);
        prop_assert!((c - concurrence_from_purity(&s)).abs() < 1e-10);
        let (na, nb) = s.dims();
        let cap = (2.0 * (1.0 - 1.0 / na.min(nb) as f64)).sqrt();
        prop_assert!(c <= cap + 1e-12);
    }

    #[test]
    fn local_unitary_invariance(s in state(4), seed in 0u64..1000) {
        let mut rng = seed_stream(seed, 0);
        let (na, nb) = s.dims();
        let moved = s.apply_local(&haar_unitary(na, &mut rng), &haar_unitary(nb, &mut rng)).unwrap();
        prop_assert!((concurrence(&s) - concurrence(&moved)).abs() < 1e-10);
    }

    #[test]
    fn pair_symmetry_and_closed_form((x, y) in pair(4)) {
        let xy = pair_concurrence(&x, &y).unwrap();
        prop_assert!((xy - pair_concurrence(&y, &x).unwrap()).abs() < 1e-12);
        prop_assert!((xy - pair_concurrence_closed_form(&x, &y).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn phase_covariance((x, y) in pair(4), t in 0.0f64..6.3) {
        let z = Complex64::from_polar(1.0, t);
        let v = concurrence_vector(&x, &y).unwrap();
        let w = concurrence_vector(&x.with_phase(z), &y).unwrap();
        // Each component picks up conj(z).
        let d = concurrence_vector_dot(&w, &v).unwrap();
        prop_assert!((d - z.conj() * v.norm().powi(2)).norm() < 1e-10);
        prop_assert!((concurrence(&x.with_phase(z)) - concurrence(&x)).abs() < 1e-12);
    }

    #[test]
    fn state_file_round_trip(s in state(5)) {
        let text = serde_json::to_string(&StateFile::from_state(&s)).unwrap();
        let back: StateFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_state().unwrap().0, s);
    }

    #[test]
    fn arbitrary_pairs_are_bracketed((x, y) in pair(3), t in 0.0f64..1.0, phase in 0.0f64..6.3) {
        let s = Superposition::pair(
            Complex64::new(t, 0.0), x,
            Complex64::from_polar((1.0 - t * t).sqrt(), phase), y,
        ).unwrap();
        prop_assume!(superpose_exact(&s).map(|e| e.norm > 1e-6).unwrap_or(false));
        let e = superpose_exact(&s).unwrap();
        prop_assert!((e.exact - e.expansion).abs() < 1e-9);
        let r = evaluate(&s, &BoundsOptions { reference: true, ..BoundsOptions::default() }, None).unwrap();
        prop_assert!(r.brackets(1e-9), "{:?}", r);
        prop_assert!(r.upper <= r.reference_upper.unwrap() + 1e-9);
        prop_assert!(r.lower >= r.reference_lower.unwrap() - 1e-9);
    }
}
