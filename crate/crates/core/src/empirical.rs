//! Closed-form estimate `E*_n = n²·(1 + α·v0^(−β))⁻¹` of the finite-well
//! spectrum and its deviation from the infinite-well levels `n²`.

use serde::{Deserialize, Serialize};

use crate::error::{require_nonnegative, require_positive, Error, Result};
use crate::well::{DimensionlessWell, PhysicalWell};

/// The constant pair `(α, β)` of the estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EmpiricalModel {
    alpha: f64,
    beta: f64,
}

impl EmpiricalModel {
    /// Published constants: α = 1.3624, β = 1/2.
    pub const PUBLISHED: EmpiricalModel = EmpiricalModel {
        alpha: 1.3624,
        beta: 0.5,
    };

    /// `alpha = 0` is accepted and collapses the estimate to `n²`.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        Ok(Self {
            alpha: require_nonnegative("alpha", alpha)?,
            beta: require_positive("beta", beta)?,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `α·v0^(−β)`, the relative depression of every level.
    fn correction(&self, v0: f64) -> f64 {
        self.alpha * v0.powf(-self.beta)
    }

    /// `n²·(1 + α·v0^(−β))⁻¹` without the range check.
    pub(crate) fn evaluate(&self, n: usize, v0: f64) -> f64 {
        let n2 = (n * n) as f64;
        n2 / (1.0 + self.correction(v0))
    }
}

impl Default for EmpiricalModel {
    fn default() -> Self {
        Self::PUBLISHED
    }
}

impl<'de> Deserialize<'de> for EmpiricalModel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            alpha: f64,
            beta: f64,
        }
        let raw = Raw::deserialize(deserializer)?;
        EmpiricalModel::new(raw.alpha, raw.beta).map_err(serde::de::Error::custom)
    }
}

/// Both forms of `ΔE_n = n² − E*_n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyShift {
    /// `n²·[1 − (1 + α·v0^(−β))⁻¹]`, evaluated as `n²·x/(1 + x)`.
    pub exact_form: f64,
    /// `α·n²·v0^(−β)`, the leading term for deep wells.
    pub approx_form: f64,
    /// False when `√v0 < 10·α`, where the leading-term form is unreliable.
    pub approx_valid: bool,
}

fn check_range(n: usize, well: &DimensionlessWell) -> Result<()> {
    let limit = well.bound_state_count();
    if n == 0 || n > limit {
        return Err(Error::StateOutOfRange {
            n,
            limit,
            v0: well.v0(),
        });
    }
    Ok(())
}

pub fn e_star(n: usize, well: &DimensionlessWell, model: &EmpiricalModel) -> Result<f64> {
    check_range(n, well)?;
    Ok(model.evaluate(n, well.v0()))
}

pub fn delta_e(n: usize, well: &DimensionlessWell, model: &EmpiricalModel) -> Result<EnergyShift> {
    check_range(n, well)?;
    let n2 = (n * n) as f64;
    let x = model.correction(well.v0());
    Ok(EnergyShift {
        exact_form: n2 * x / (1.0 + x),
        approx_form: n2 * x,
        approx_valid: well.v0().sqrt() >= 10.0 * model.alpha(),
    })
}

/// The estimate in joules, computed through the reduced path.
pub fn e_star_physical(n: usize, well: &PhysicalWell, model: &EmpiricalModel) -> Result<f64> {
    let reduced = well.reduce()?;
    well.restore_energy(e_star(n, &reduced, model)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::well::{ELECTRON_MASS, ELECTRON_VOLT};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn well(v0: f64) -> DimensionlessWell {
        DimensionlessWell::new(v0).unwrap()
    }

    const PAPER: EmpiricalModel = EmpiricalModel::PUBLISHED;

    #[test]
    fn printed_values() {
        assert_eq!(format!("{:.4}", e_star(1, &well(15.0), &PAPER).unwrap()), "0.7398");
        assert_eq!(format!("{:.4}", e_star(9, &well(64.0), &PAPER).unwrap()), "69.2130");
    }

    #[test]
    fn zero_alpha_gives_box_levels() {
        let model = EmpiricalModel::new(0.0, 0.7).unwrap();
        for n in 1..=4 {
            assert_eq!(e_star(n, &well(15.0), &model).unwrap(), (n * n) as f64);
            let shift = delta_e(n, &well(15.0), &model).unwrap();
            assert_eq!(shift.exact_form, 0.0);
            assert_eq!(shift.approx_form, 0.0);
        }
    }

    #[test]
    fn shift_forms() {
        let shift = delta_e(2, &well(25.0), &PAPER).unwrap();
        // 4·(1 − 1/1.27248)
        assert_relative_eq!(shift.exact_form, 0.856_532_126_241_669_8, max_relative = 1e-14);
        assert_relative_eq!(shift.approx_form, 1.089_92, max_relative = 1e-14);
        // √25 = 5 < 13.624
        assert!(!shift.approx_valid);
        assert!(delta_e(1, &well(400.0), &PAPER).unwrap().approx_valid);
    }

    #[test]
    fn range_error_names_limit() {
        let err = e_star(5, &well(15.0), &PAPER).unwrap_err();
        assert!(matches!(err, Error::StateOutOfRange { n: 5, limit: 4, .. }));
        assert!(err.to_string().contains("[sqrt(V0)]+1 = 4"), "{err}");
        assert!(e_star(0, &well(15.0), &PAPER).is_err());
        assert!(delta_e(10, &well(64.0), &PAPER).is_err());
    }

    #[test]
    fn model_validation() {
        assert!(EmpiricalModel::new(-0.1, 0.5).is_err());
        assert!(EmpiricalModel::new(1.0, 0.0).is_err());
        assert!(EmpiricalModel::new(f64::NAN, 0.5).is_err());
        assert!(serde_json::from_str::<EmpiricalModel>(r#"{"alpha":1.0,"beta":-1.0}"#).is_err());
    }

    #[test]
    fn physical_electron_example() {
        let w = PhysicalWell::new(ELECTRON_MASS, 1e-9, ELECTRON_VOLT).unwrap();
        // E*₁ at v0 = 2.65936 is 0.544828...; times 6.02467e-20 J
        let e = e_star_physical(1, &w, &PAPER).unwrap();
        assert_relative_eq!(e, 3.282_407_981_584_002e-20, max_relative = 1e-12);
    }

    #[test]
    fn physical_deep_limit() {
        let w = PhysicalWell::new(ELECTRON_MASS, 1e-9, 1e6 * ELECTRON_VOLT).unwrap();
        let unit = w.energy_unit().joules_per_unit;
        for n in [1, 2, 10] {
            let ratio = e_star_physical(n, &w, &PAPER).unwrap() / ((n * n) as f64 * unit);
            assert!(ratio < 1.0 && ratio > 0.998, "{ratio}");
        }
    }

    proptest! {
        #[test]
        fn physical_matches_reduced_path(
            mass in 1e-31f64..1e-26,
            width in 1e-10f64..1e-8,
            depth_units in 0.5f64..1e4,
            alpha in 0.0f64..3.0,
            beta in 0.1f64..1.0,
            n_frac in 0.0f64..1.0,
        ) {
            let unit = PhysicalWell::new(mass, width, 1.0).unwrap().energy_unit().joules_per_unit;
            let w = PhysicalWell::new(mass, width, depth_units * unit).unwrap();
            let reduced = w.reduce().unwrap();
            let n = 1 + (n_frac * reduced.bound_state_count() as f64) as usize;
            let n = n.min(reduced.bound_state_count());
            let model = EmpiricalModel::new(alpha, beta).unwrap();
            let direct = e_star_physical(n, &w, &model).unwrap();
            let composed = w.restore_energy(e_star(n, &reduced, &model).unwrap()).unwrap();
            prop_assert!((direct - composed).abs() <= 1e-12 * composed.abs());
        }

        #[test]
        fn estimate_below_box_and_shift_structure(
            v0 in 0.01f64..1e6,
            alpha in 1e-3f64..3.0,
            beta in 0.1f64..1.0,
        ) {
            let w = well(v0);
            let model = EmpiricalModel::new(alpha, beta).unwrap();
            let count = w.bound_state_count().min(50);
            let ratio1 = delta_e(1, &w, &model).unwrap().exact_form;
            for n in 1..=count {
                let n2 = (n * n) as f64;
                let e = e_star(n, &w, &model).unwrap();
                prop_assert!(e < n2);
                let shift = delta_e(n, &w, &model).unwrap();
                prop_assert!(shift.exact_form < shift.approx_form);
                prop_assert!(((shift.exact_form / n2) - ratio1).abs() <= 2.0 * f64::EPSILON * ratio1);
                let half = delta_e(n, &w, &EmpiricalModel::new(alpha, 0.5).unwrap()).unwrap();
                if half.approx_valid {
                    prop_assert!(half.approx_form <= 1.15 * half.exact_form);
                }
                if n > 1 {
                    prop_assert!(e > e_star(n - 1, &w, &model).unwrap());
                }
            }
        }

        #[test]
        fn estimate_increases_with_depth(v0 in 0.01f64..1e6, factor in 1.001f64..10.0) {
            let shallow = well(v0);
            let deep = well(v0 * factor);
            let e_shallow = e_star(1, &shallow, &PAPER).unwrap();
            let e_deep = e_star(1, &deep, &PAPER).unwrap();
            prop_assert!(e_deep > e_shallow);
            prop_assert!(1.0 - e_deep <= PAPER.alpha() / (v0 * factor).sqrt());
        }
    }
}
