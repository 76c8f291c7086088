//! Least-squares calibration of `(α, β)` against exact spectra.
//!
//! The search is a coordinate scheme: for each trial `β` the objective is
//! minimized over `α` by golden-section, and `β` itself is scanned on a grid
//! that is refined by a factor of ten around the best point at every level.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::solve_spectrum;
use crate::roots::golden_section_min;
use crate::well::DimensionlessWell;

/// Search box for `α`.
pub const ALPHA_BOX: (f64, f64) = (0.5, 3.0);
/// Search box for `β`.
pub const BETA_BOX: (f64, f64) = (0.3, 0.7);
/// Golden-section tolerance on `α`.
pub const ALPHA_TOL: f64 = 1e-6;

const BETA_COARSE_STEP: f64 = 0.01;
const BETA_FINEST_STEP: f64 = 1e-6;
const BETA_REFINE_POINTS: usize = 21;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Objective {
    /// `Σ ((E* − E')/E')²`
    SumSquaredRelativeError,
    /// `Σ (E* − E')²`
    SumSquaredAbsoluteError,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitConfig {
    pub v0_grid: Vec<f64>,
    pub include_marginal: bool,
    pub objective: Objective,
    pub beta_fixed: Option<f64>,
}

impl Default for FitConfig {
    /// `v0 ∈ {4, 5, …, 100} ∪ {150, 200, …, 1000}`, relative error,
    /// threshold states excluded, both constants free.
    fn default() -> Self {
        let mut v0_grid: Vec<f64> = (4..=100).map(f64::from).collect();
        v0_grid.extend((150..=1000).step_by(50).map(f64::from));
        Self {
            v0_grid,
            include_marginal: false,
            objective: Objective::SumSquaredRelativeError,
            beta_fixed: None,
        }
    }
}

impl FitConfig {
    pub fn validate(&self) -> Result<()> {
        if self.v0_grid.is_empty() {
            return Err(Error::InvalidConfig("v0 grid is empty".into()));
        }
        if let Some(bad) = self.v0_grid.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            return Err(Error::InvalidConfig(format!(
                "v0 grid values must be positive and finite, got {bad}"
            )));
        }
        if let Some(pair) = self.v0_grid.windows(2).find(|w| w[1] <= w[0]) {
            return Err(Error::InvalidConfig(format!(
                "v0 grid must be strictly increasing, got {} then {}",
                pair[0], pair[1]
            )));
        }
        if let Some(beta) = self.beta_fixed {
            if !(beta.is_finite() && beta > 0.0) {
                return Err(Error::InvalidConfig(format!(
                    "fixed beta must be positive and finite, got {beta}"
                )));
            }
        }
        Ok(())
    }
}

/// One exact energy entering the objective.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DataPoint {
    pub v0: f64,
    pub n: usize,
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub alpha: f64,
    pub beta: f64,
    pub objective_value: f64,
    pub dataset_size: usize,
    pub config: FitConfig,
}

/// Exact energies for every well in the grid, ordered by `(v0, n)`.
pub fn build_dataset(config: &FitConfig) -> Result<Vec<DataPoint>> {
    config.validate()?;
    let mut rows = Vec::new();
    for &v0 in &config.v0_grid {
        let spectrum = solve_spectrum(&DimensionlessWell::new(v0)?)?;
        rows.extend(
            spectrum
                .states
                .iter()
                .filter(|s| config.include_marginal || !s.is_threshold())
                .map(|s| DataPoint {
                    v0,
                    n: s.n,
                    energy: s.energy,
                }),
        );
    }
    Ok(rows)
}

fn estimate(alpha: f64, beta: f64, point: &DataPoint) -> f64 {
    let n2 = (point.n * point.n) as f64;
    n2 / (1.0 + alpha * point.v0.powf(-beta))
}

pub fn objective_value(alpha: f64, beta: f64, dataset: &[DataPoint], objective: Objective) -> f64 {
    dataset
        .iter()
        .map(|p| {
            let diff = estimate(alpha, beta, p) - p.energy;
            match objective {
                Objective::SumSquaredRelativeError => (diff / p.energy).powi(2),
                Objective::SumSquaredAbsoluteError => diff * diff,
            }
        })
        .sum()
}

/// Best `α` for a fixed `β`, as `(α, objective)`.
fn best_alpha(beta: f64, dataset: &[DataPoint], objective: Objective) -> (f64, f64) {
    golden_section_min(
        |alpha| objective_value(alpha, beta, dataset, objective),
        ALPHA_BOX.0,
        ALPHA_BOX.1,
        ALPHA_TOL,
    )
}

fn scan_beta(dataset: &[DataPoint], objective: Objective) -> Result<(f64, f64, f64)> {
    let (beta_lo, beta_hi) = BETA_BOX;
    let coarse_points = ((beta_hi - beta_lo) / BETA_COARSE_STEP).round() as usize + 1;

    // (beta, alpha, objective) of the best grid point so far
    let mut best = (f64::NAN, f64::NAN, f64::INFINITY);
    let mut best_index = 0;
    for i in 0..coarse_points {
        let beta = beta_lo + i as f64 * BETA_COARSE_STEP;
        let (alpha, value) = best_alpha(beta, dataset, objective);
        if value < best.2 {
            best = (beta, alpha, value);
            best_index = i;
        }
    }
    if best_index == 0 || best_index + 1 == coarse_points {
        return Err(Error::FitBoundary {
            parameter: "beta",
            value: best.0,
            lo: beta_lo,
            hi: beta_hi,
        });
    }

    let mut step = BETA_COARSE_STEP;
    while step > BETA_FINEST_STEP * 1.5 {
        let centre = best.0;
        step /= 10.0;
        let half = (BETA_REFINE_POINTS / 2) as f64;
        for i in 0..BETA_REFINE_POINTS {
            let beta = centre + (i as f64 - half) * step;
            if beta <= beta_lo || beta >= beta_hi {
                continue;
            }
            let (alpha, value) = best_alpha(beta, dataset, objective);
            if value < best.2 {
                best = (beta, alpha, value);
            }
        }
    }
    Ok(best)
}

fn check_alpha(alpha: f64) -> Result<()> {
    let (lo, hi) = ALPHA_BOX;
    if alpha - lo <= 2.0 * ALPHA_TOL || hi - alpha <= 2.0 * ALPHA_TOL {
        return Err(Error::FitBoundary {
            parameter: "alpha",
            value: alpha,
            lo,
            hi,
        });
    }
    Ok(())
}

/// Fit `(α, β)` to an explicit dataset. Returns `(alpha, beta, objective)`.
pub fn fit_dataset(dataset: &[DataPoint], objective: Objective, beta_fixed: Option<f64>) -> Result<(f64, f64, f64)> {
    if dataset.is_empty() {
        return Err(Error::InvalidConfig("dataset is empty".into()));
    }
    let (beta, alpha, value) = match beta_fixed {
        Some(beta) => {
            let (alpha, value) = best_alpha(beta, dataset, objective);
            (beta, alpha, value)
        }
        None => scan_beta(dataset, objective)?,
    };
    check_alpha(alpha)?;
    Ok((alpha, beta, value))
}

pub fn fit_model(config: &FitConfig) -> Result<FitResult> {
    let dataset = build_dataset(config)?;
    let (alpha, beta, objective_value) = fit_dataset(&dataset, config.objective, config.beta_fixed)?;
    Ok(FitResult {
        alpha,
        beta,
        objective_value,
        dataset_size: dataset.len(),
        config: config.clone(),
    })
}

/// Parse a v0 grid such as `4..100:1,150..1000:50` or `15,25,64`.
///
/// Items are comma separated; `a..b:s` expands to `a, a+s, …` up to and
/// including `b`. The result must be strictly increasing.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = |item: &str| Error::InvalidConfig(format!("cannot parse v0 grid item '{item}'"));
    let mut grid = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((range, step)) = item.split_once(':') {
            let (start, end) = range.split_once("..").ok_or_else(|| bad(item))?;
            let start: f64 = start.trim().parse().map_err(|_| bad(item))?;
            let end: f64 = end.trim().parse().map_err(|_| bad(item))?;
            let step: f64 = step.trim().parse().map_err(|_| bad(item))?;
            if !(step.is_finite() && step > 0.0 && start.is_finite() && end.is_finite()) {
                return Err(bad(item));
            }
            let count = ((end - start) / step + 1e-9).floor();
            if !(0.0..=1e7).contains(&count) {
                return Err(bad(item));
            }
            grid.extend((0..=count as usize).map(|k| start + k as f64 * step));
        } else {
            grid.push(item.parse().map_err(|_| bad(item))?);
        }
    }
    let config = FitConfig {
        v0_grid: grid,
        ..FitConfig::default()
    };
    config.validate()?;
    Ok(config.v0_grid)
}
