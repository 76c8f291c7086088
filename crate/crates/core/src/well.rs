//! Well descriptions and the reduced energy unit.
//!
//! Everything inside the library works in reduced units, where energies are
//! measured in multiples of the infinite-well ground state
//! `E₁ = π²ħ²/(2ma²)`. In those units the infinite well has the spectrum
//! `n²` and a finite well is fully described by its depth `v0`.
//! Physical units (kg, m, J) only appear at the boundary through
//! [`PhysicalWell`].

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require_nonnegative, require_positive, Result};

/// Reduced Planck constant, J·s (CODATA 2018 / SI 2019).
pub const HBAR: f64 = 1.054_571_817e-34;

/// One electronvolt in joules (exact in SI 2019).
pub const ELECTRON_VOLT: f64 = 1.602_176_634e-19;

/// Electron rest mass, kg (CODATA 2018).
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;

/// A square well in reduced units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DimensionlessWell {
    v0: f64,
}

impl DimensionlessWell {
    pub fn new(v0: f64) -> Result<Self> {
        Ok(Self {
            v0: require_positive("v0", v0)?,
        })
    }

    /// Depth in units of the infinite-well ground-state energy.
    pub fn v0(&self) -> f64 {
        self.v0
    }

    /// Radius `R = (π/2)·√v0` of the constraint circle `ξ² + η² = R²`.
    pub fn radius(&self) -> f64 {
        0.5 * PI * self.v0.sqrt()
    }

    /// Number of bound states, `[√v0] + 1`.
    ///
    /// When `√v0` is an exact integer the top state sits exactly at threshold
    /// (`η = 0`) and is counted.
    pub fn bound_state_count(&self) -> usize {
        self.v0.sqrt().floor() as usize + 1
    }

    /// True when `√v0` is an exact integer, so the top state is marginal.
    pub fn has_threshold_state(&self) -> bool {
        self.v0.sqrt().fract() == 0.0
    }
}

impl<'de> Deserialize<'de> for DimensionlessWell {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            v0: f64,
        }
        let raw = Raw::deserialize(deserializer)?;
        DimensionlessWell::new(raw.v0).map_err(serde::de::Error::custom)
    }
}

/// A square well in SI units: particle mass (kg), well width (m), depth (J).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalWell {
    mass: f64,
    width: f64,
    depth: f64,
}

impl PhysicalWell {
    pub fn new(mass: f64, width: f64, depth: f64) -> Result<Self> {
        Ok(Self {
            mass: require_positive("mass", mass)?,
            width: require_positive("width", width)?,
            depth: require_positive("depth", depth)?,
        })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn depth(&self) -> f64 {
        self.depth
    }

    /// The reduced energy unit `π²ħ²/(2·mass·width²)` for this well.
    pub fn energy_unit(&self) -> EnergyUnit {
        EnergyUnit {
            joules_per_unit: PI * PI * HBAR * HBAR / (2.0 * self.mass * self.width * self.width),
        }
    }

    /// Express this well in reduced units: `v0 = depth / E₁`.
    ///
    /// Fails only if the quotient overflows or underflows.
    pub fn reduce(&self) -> Result<DimensionlessWell> {
        DimensionlessWell::new(self.energy_unit().to_reduced(self.depth))
    }

    /// Convert a reduced energy back to joules.
    pub fn restore_energy(&self, e_reduced: f64) -> Result<f64> {
        require_nonnegative("reduced energy", e_reduced)?;
        Ok(self.energy_unit().to_joules(e_reduced))
    }
}

/// Value of the reduced energy unit in joules.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct EnergyUnit {
    pub joules_per_unit: f64,
}

impl EnergyUnit {
    pub fn to_joules(self, e_reduced: f64) -> f64 {
        e_reduced * self.joules_per_unit
    }

    pub fn to_reduced(self, joules: f64) -> f64 {
        joules / self.joules_per_unit
    }
}

pub fn energy_unit(well: &PhysicalWell) -> EnergyUnit {
    well.energy_unit()
}

pub fn reduce(well: &PhysicalWell) -> Result<DimensionlessWell> {
    well.reduce()
}

pub fn restore_energy(e_reduced: f64, well: &PhysicalWell) -> Result<f64> {
    well.restore_energy(e_reduced)
}
