//! Bound states of a particle in a one-dimensional finite square well.
//!
//! * [`well`]: reduced units and conversion to and from SI.
//! * [`exact`]: the spectrum from the parity transcendental equations.
//! * [`empirical`]: the closed-form estimate `n²·(1 + α·v0^(−β))⁻¹`.
//! * [`fit`]: recovering `(α, β)` from exact spectra.
//! * [`report`]: exact-versus-estimate comparison tables.
//!
//! ```
//! use squarewell::{solve_spectrum, DimensionlessWell};
//!
//! let spectrum = solve_spectrum(&DimensionlessWell::new(15.0)?)?;
//! assert_eq!(spectrum.states.len(), 4);
//! assert!((spectrum.states[0].energy - 0.7359).abs() < 5e-4);
//! # Ok::<(), squarewell::Error>(())
//! ```

pub mod empirical;
pub mod error;
pub mod exact;
pub mod fit;
pub mod report;
pub mod roots;
pub mod well;

pub use empirical::{delta_e, e_star, e_star_physical, EmpiricalModel, EnergyShift};
pub use error::{Error, Result};
pub use exact::{
    bound_state_count, branch_interval, residuals, solve_spectrum, solve_state, BoundState, Branch, Parity, Residuals,
    Spectrum,
};
pub use fit::{build_dataset, fit_model, objective_value, DataPoint, FitConfig, FitResult, Objective};
pub use report::{compare, render, Comparison, ComparisonRow, Format};
pub use well::{energy_unit, reduce, restore_energy, DimensionlessWell, EnergyUnit, PhysicalWell};
