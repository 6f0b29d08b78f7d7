mod common;

use common::{random_pair_state, random_params};
use lgdot_core::lganalysis::{correlator, find_first_violation, joint_probabilities, LgEvaluator};
use lgdot_core::{Branch, DotParameters};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn both_routes_agree_on_random_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let ps = random_pair_state(&mut rng);
        let (p_pp, p_pm) = joint_probabilities(&ps).unwrap();
        assert!((0.0..=1.0).contains(&p_pp) && (0.0..=1.0).contains(&p_pm));
        assert!((correlator(&ps).unwrap() - (p_pp - p_pm)).abs() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn lg_values_stay_in_range(seed in any::<u64>(), t in 0.0..2500.0f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pt = LgEvaluator::new(&random_params(&mut rng)).unwrap().lg_point(t).unwrap();
        prop_assert!(pt.k_t.abs() <= 1.0 && pt.k_2t.abs() <= 1.0);
        prop_assert!(pt.k_plus.abs() <= 3.0 && pt.k_minus.abs() <= 3.0);
        prop_assert!(pt.k_minus >= -1.5 - 1e-9 && pt.k_plus >= -1.5 - 1e-9);
        prop_assert_eq!(pt.k_plus, pt.k_2t + 2.0 * pt.k_t);
        prop_assert_eq!(pt.k_minus, pt.k_2t - 2.0 * pt.k_t);
    }

    #[test]
    fn no_violation_without_coherence(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = DotParameters { eta_override: Some(0.0), ..random_params(&mut rng) };
        let ev = LgEvaluator::new(&p).unwrap();
        for k in 0..=25 {
            let pt = ev.lg_point(100.0 * k as f64).unwrap();
            prop_assert!(pt.k_plus >= -1.0 - 1e-12 && pt.k_minus >= -1.0 - 1e-12);
        }
    }

    #[test]
    fn correlator_scales_with_mixture_weight(seed in any::<u64>(), t in 0.0..2500.0f64, eta in 0.0..=1.0f64, g in 0.0..2.0f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = random_params(&mut rng);
        let pure = DotParameters { eta_override: Some(1.0), g_noise: 0.0, ..base };
        let mixed = DotParameters { eta_override: Some(eta), g_noise: g, ..base };
        let k_pure = LgEvaluator::new(&pure).unwrap().gated_correlator(t).unwrap();
        let k_mixed = LgEvaluator::new(&mixed).unwrap().gated_correlator(t).unwrap();
        prop_assert!((k_mixed - eta / (1.0 + g) * k_pure).abs() < 1e-10);
    }
}

fn min_kminus(p: &DotParameters, t_max: f64, dt: f64) -> f64 {
    let ev = LgEvaluator::new(p).unwrap();
    let n = (t_max / dt) as usize;
    (0..=n).map(|i| ev.lg_point(i as f64 * dt).unwrap().k_minus).fold(f64::INFINITY, f64::min)
}

#[test]
fn minus_branch_violates_first() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut both = 0;
    for _ in 0..12 {
        let p = DotParameters {
            gamma_dephase0: rng.gen_range(0.0..2e-4),
            g_noise: rng.gen_range(0.0..0.3),
            eta_override: Some(rng.gen_range(0.85..=1.0)),
            ..random_params(&mut rng)
        };
        let dt = 2.0 * std::f64::consts::PI * lgdot_core::constants::HBAR / p.s_fss / 40.0;
        let t_max = 60.0 * dt;
        let minus = find_first_violation(&p, Branch::Minus, t_max, dt).unwrap();
        let plus = find_first_violation(&p, Branch::Plus, t_max, dt).unwrap();
        if let (Some(m), Some(pl)) = (minus, plus) {
            both += 1;
            assert!(m <= pl, "minus {m} after plus {pl} for {p:?}");
        }
    }
    assert!(both > 0, "no sample violated on both branches");
}

#[test]
fn smaller_overlap_never_deepens_violation() {
    let base = DotParameters::default();
    let mut prev = f64::NEG_INFINITY;
    for eta in [1.0, 0.9, 0.75, 0.5, 0.25, 0.0] {
        let m = min_kminus(&DotParameters { eta_override: Some(eta), ..base }, 1500.0, 10.0);
        assert!(m >= prev, "eta {eta}: {m} < {prev}");
        prev = m;
    }
}

#[test]
fn trends_over_coarse_sweeps() {
    let check = |values: &[f64], make: &dyn Fn(f64) -> DotParameters| {
        let mins: Vec<f64> = values.iter().map(|&v| min_kminus(&make(v), 3000.0, 5.0)).collect();
        for w in mins.windows(2) {
            assert!(w[1] >= w[0], "{mins:?}");
        }
    };
    let base = DotParameters { g_noise: 0.3, ..DotParameters::default() };
    check(&[0.5, 1.0, 3.0, 8.0], &|s| DotParameters { s_fss: s, ..base });
    let base = DotParameters::default();
    check(&[0.0, 0.3, 1.0], &|g| DotParameters { g_noise: g, ..base });
    let base = DotParameters { s_fss: 2.5, g_noise: 0.2, ..DotParameters::default() };
    check(&[4.0, 20.0, 80.0], &|t| DotParameters { temperature: t, ..base });
}
