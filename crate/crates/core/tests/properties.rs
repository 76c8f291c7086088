use proptest::prelude::*;
use squarewell::{residuals, solve_spectrum, solve_state, DimensionlessWell, Parity};

fn well(v0: f64) -> DimensionlessWell {
    DimensionlessWell::new(v0).unwrap()
}

#[test]
fn gap_grows_as_depth_shrinks() {
    // descending depths; n stays bound while n <= floor(sqrt(v0)) + 1
    let depths: Vec<f64> = (0..60).map(|k| 1e4 * 0.85f64.powi(k)).collect();
    for n in [1usize, 2, 3, 5, 8] {
        let mut previous = f64::NEG_INFINITY;
        for &v0 in depths.iter().filter(|&&v0| n <= well(v0).bound_state_count()) {
            let gap = (n * n) as f64 - solve_state(n, &well(v0)).unwrap().energy;
            assert!(gap > previous, "n = {n}, v0 = {v0}: {gap} <= {previous}");
            previous = gap;
        }
    }
}

#[test]
fn deep_well_bound_in_low_lying_regime() {
    // the 1.5·n²/√v0 bound follows the leading-order 4/π coefficient, which
    // only describes states well below the rim
    for v0 in [1e4, 3e4, 1e5, 1e6] {
        let spectrum = solve_spectrum(&well(v0)).unwrap();
        let limit = (v0.sqrt() / 2.0) as usize;
        for s in &spectrum.states[..limit] {
            let n2 = (s.n * s.n) as f64;
            assert!(n2 - s.energy <= 1.5 * n2 / v0.sqrt(), "v0 = {v0}, n = {}", s.n);
        }
    }
}

#[test]
fn leading_coefficient_approaches_four_over_pi() {
    let v0 = 1e8;
    let ground = solve_state(1, &well(v0)).unwrap();
    let coefficient = (1.0 - ground.energy) * v0.sqrt();
    assert!((coefficient - 4.0 / std::f64::consts::PI).abs() < 1e-3, "{coefficient}");
}

#[test]
fn exact_integer_roots_include_threshold_state() {
    for root in 1..=40u32 {
        let v0 = f64::from(root * root);
        let spectrum = solve_spectrum(&well(v0)).unwrap();
        assert_eq!(spectrum.states.len(), root as usize + 1);
        let top = spectrum.states.last().unwrap();
        assert!(top.is_threshold());
        assert_eq!(top.energy, v0);
        assert!(spectrum.states[..root as usize].iter().all(|s| !s.is_threshold()));
    }
}

#[test]
fn solver_contract_near_integer_roots() {
    // √v0 just above an integer leaves a sliver-thin top branch
    for root in [3.0f64, 10.0, 31.0] {
        for eps in [1e-12, 1e-9, 1e-6] {
            let v0 = (root + eps).powi(2);
            let w = well(v0);
            let spectrum = solve_spectrum(&w).unwrap();
            for s in &spectrum.states {
                assert!(residuals(s, &w).max_abs() <= 1e-9, "v0 = {v0}, n = {}", s.n);
                assert!(s.energy <= v0);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_wells_satisfy_state_invariants(log_v0 in -3.0f64..5.0) {
        let v0 = 10f64.powf(log_v0);
        let w = well(v0);
        let spectrum = solve_spectrum(&w).unwrap();
        prop_assert_eq!(spectrum.states.len(), w.bound_state_count());
        let scale = (2.0 / std::f64::consts::PI).powi(2);
        for (i, s) in spectrum.states.iter().enumerate() {
            prop_assert_eq!(s.n, i + 1);
            prop_assert_eq!(s.parity == Parity::Even, s.n % 2 == 1);
            let r = residuals(s, &w);
            prop_assert!(r.max_abs() <= 1e-9, "n = {}: {:?}", s.n, r);
            prop_assert!(s.energy > 0.0 && s.energy <= v0);
            prop_assert!(s.eta >= 0.0);
            prop_assert!((s.energy - scale * s.xi * s.xi).abs() <= 1e-12 * s.energy);
            prop_assert!(s.energy < (s.n * s.n) as f64);
        }
    }
}
