//! Exact bound states from the parity transcendental equations.
//!
//! With `ξ` the interior wavenumber and `η` the exterior decay constant (both
//! dimensionless), bound states satisfy
//!
//! ```text
//! even parity:   ξ tan ξ = η
//! odd parity:   −ξ cot ξ = η
//! both:          ξ² + η² = R²,   R = (π/2)·√v0
//! ```
//!
//! and the reduced energy is `E' = (2/π)²·ξ²`. The parity equations are
//! evaluated in the pole-free forms `ξ sin ξ − η cos ξ` and
//! `ξ cos ξ + η sin ξ`, with `η = √(R² − ξ²)` taken from the circle. State
//! `n` then has exactly one sign change on `[(n−1)π/2, min(nπ/2, R)]`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::bisect;
use crate::well::DimensionlessWell;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Ground state is even; parity alternates with `n`.
    pub fn of_state(n: usize) -> Self {
        if n % 2 == 1 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Pole-free residual of the parity equation at `(xi, eta)`.
    pub fn residual(self, xi: f64, eta: f64) -> f64 {
        let (sin, cos) = xi.sin_cos();
        match self {
            Parity::Even => xi * sin - eta * cos,
            Parity::Odd => xi * cos + eta * sin,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundState {
    pub n: usize,
    pub parity: Parity,
    pub xi: f64,
    pub eta: f64,
    /// Reduced energy `E'_n`.
    pub energy: f64,
}

impl BoundState {
    /// A threshold state has no exterior decay and sits exactly at `E' = v0`.
    pub fn is_threshold(&self) -> bool {
        self.eta == 0.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub well: DimensionlessWell,
    pub states: Vec<BoundState>,
}

impl Spectrum {
    pub fn energies(&self) -> impl Iterator<Item = f64> + '_ {
        self.states.iter().map(|s| s.energy)
    }
}

/// The ξ-interval holding state `n`, and that state's parity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Branch {
    pub lo: f64,
    pub hi: f64,
    pub parity: Parity,
}

/// Signed residuals of the circle equation and the pole-free parity equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residuals {
    pub circle: f64,
    pub parity: f64,
}

impl Residuals {
    pub fn max_abs(&self) -> f64 {
        self.circle.abs().max(self.parity.abs())
    }
}

pub fn bound_state_count(well: &DimensionlessWell) -> usize {
    well.bound_state_count()
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

pub fn branch_interval(n: usize, well: &DimensionlessWell) -> Result<Branch> {
    check_range(n, well)?;
    let radius = well.radius();
    Ok(Branch {
        lo: (n - 1) as f64 * FRAC_PI_2,
        hi: (n as f64 * FRAC_PI_2).min(radius),
        parity: Parity::of_state(n),
    })
}

/// `√(R² − x²)`, factored to keep precision when `x` is close to `R`. Gives
/// `η` from `ξ` and `ξ` from `η` alike.
fn eta_on_circle(xi: f64, radius: f64) -> f64 {
    ((radius - xi) * (radius + xi)).max(0.0).sqrt()
}

fn energy_from_xi(xi: f64) -> f64 {
    let scale = 2.0 / PI;
    scale * scale * xi * xi
}

pub fn solve_state(n: usize, well: &DimensionlessWell) -> Result<BoundState> {
    let branch = branch_interval(n, well)?;
    let radius = well.radius();

    if n == well.bound_state_count() && well.has_threshold_state() {
        return Ok(BoundState {
            n,
            parity: branch.parity,
            xi: radius,
            eta: 0.0,
            energy: well.v0(),
        });
    }

    let parity = branch.parity;
    let no_bracket = Error::NoBracket {
        n,
        lo: branch.lo,
        hi: branch.hi,
    };
    // Bisect to the last representable bracket; the 1e-13·max(1, R) width
    // target alone leaves parity residuals near 1e-7 for R ~ 1e3.
    let xi = bisect(
        |xi| parity.residual(xi, eta_on_circle(xi, radius)),
        branch.lo,
        branch.hi,
        0.0,
    )
    .ok_or_else(|| no_bracket.clone())?;
    let mut eta = eta_on_circle(xi, radius);
    let mut xi = xi;

    // Near the rim η(ξ) is too steep for ξ to resolve the root; there the
    // residual is better conditioned in η with ξ = √(R² − η²). Keep the
    // pair with the smaller residual.
    if eta < xi {
        let eta_alt = bisect(
            |eta| parity.residual(eta_on_circle(eta, radius), eta),
            eta_on_circle(branch.hi, radius),
            eta_on_circle(branch.lo, radius),
            0.0,
        )
        .ok_or(no_bracket)?;
        let xi_alt = eta_on_circle(eta_alt, radius);
        let worst = |xi: f64, eta: f64| {
            let circle = (xi - radius) * (xi + radius) + eta * eta;
            circle.abs().max(parity.residual(xi, eta).abs())
        };
        if worst(xi_alt, eta_alt) < worst(xi, eta) {
            xi = xi_alt;
            eta = eta_alt;
        }
    }

    Ok(BoundState {
        n,
        parity,
        xi,
        eta,
        energy: energy_from_xi(xi).min(well.v0()),
    })
}

pub fn solve_spectrum(well: &DimensionlessWell) -> Result<Spectrum> {
    let states = (1..=well.bound_state_count())
        .map(|n| solve_state(n, well))
        .collect::<Result<Vec<_>>>()?;
    Ok(Spectrum { well: *well, states })
}

pub fn residuals(state: &BoundState, well: &DimensionlessWell) -> Residuals {
    let radius = well.radius();
    Residuals {
        circle: (state.xi - radius) * (state.xi + radius) + state.eta * state.eta,
        parity: state.parity.residual(state.xi, state.eta),
    }
}
