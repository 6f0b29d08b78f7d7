mod common;

use common::{random_density, random_hermitian, random_problem};
use lgdot_core::densmat::{hermiticity_defect, lindblad_rhs, min_eigenvalue, propagate, trace, Liouvillian};
use lgdot_core::oracle::{max_step, rk4_reference};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Step count for an RK4 run accurate well below 1e-9 over `t`.
fn fine_steps(p: &common::Problem, t: f64) -> usize {
    ((t / (max_step(&p.h0, &p.channels) / 20.0)).ceil() as usize).max(1000)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn liouvillian_action_matches_rhs(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_problem(&mut rng);
        let gen = Liouvillian::new(&p.h0, &p.channels).unwrap();
        let rho = random_hermitian(&mut rng, 4, 1.0);
        let direct = lindblad_rhs(&rho, &p.h0, &p.channels).unwrap();
        let flat = gen.apply(&rho).unwrap();
        prop_assert!(flat.max_abs_diff(&direct) < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn propagation_keeps_a_valid_state(seed in any::<u64>(), t in 0.0..5000.0f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_problem(&mut rng);
        let gen = Liouvillian::new(&p.h0, &p.channels).unwrap();
        let rho = propagate(&p.rho0, &gen, t).unwrap();
        prop_assert!((trace(&rho).re - 1.0).abs() < 1e-9);
        prop_assert!(trace(&rho).im.abs() < 1e-9);
        prop_assert!(hermiticity_defect(&rho) < 1e-10);
        prop_assert!(min_eigenvalue(&rho) >= -1e-9);
    }

    #[test]
    fn semigroup(seed in any::<u64>(), t1 in 0.0..2500.0f64, t2 in 0.0..2500.0f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_problem(&mut rng);
        let gen = Liouvillian::new(&p.h0, &p.channels).unwrap();
        let once = propagate(&p.rho0, &gen, t1 + t2).unwrap();
        let twice = propagate(&propagate(&p.rho0, &gen, t1).unwrap(), &gen, t2).unwrap();
        prop_assert!(once.max_abs_diff(&twice) < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn propagate_matches_reference_integrator(seed in any::<u64>(), t in 1.0..5000.0f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_problem(&mut rng);
        let gen = Liouvillian::new(&p.h0, &p.channels).unwrap();
        let exact = propagate(&p.rho0, &gen, t).unwrap();
        let reference = rk4_reference(&p.rho0, &p.h0, &p.channels, t, fine_steps(&p, t)).unwrap();
        let err = exact.max_abs_diff(&reference);
        prop_assert!(err < 1e-8, "max-entry difference {err:e}");
    }
}

#[test]
fn reference_integrator_is_fourth_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let p = random_problem(&mut rng);
        let t = 5000.0;
        let gen = Liouvillian::new(&p.h0, &p.channels).unwrap();
        let exact = propagate(&p.rho0, &gen, t).unwrap();
        let coarse = ((t / max_step(&p.h0, &p.channels)).ceil() as usize).max(1000);
        let err = |steps| rk4_reference(&p.rho0, &p.h0, &p.channels, t, steps).unwrap().max_abs_diff(&exact);
        let ratio = err(coarse) / err(2 * coarse);
        assert!((ratio - 16.0).abs() <= 0.2 * 16.0, "halving ratio {ratio}");
    }
}

#[test]
fn random_density_matrices_are_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        lgdot_core::densmat::validate_density(&random_density(&mut rng, 4), 1e-9).unwrap();
    }
}
