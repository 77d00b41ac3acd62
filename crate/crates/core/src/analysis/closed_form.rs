//! Asymptotic length and nearest-neighbour laws for sparse i.i.d. matrices.
//!
//! Active cells are modelled as a planar Poisson process of intensity
//! `rho`. The L1 ball of radius `r` has area `2r²`, so the nearest-neighbour
//! distance `S` has survival `exp(-2 rho r²)` and mean
//! `sqrt(pi) / (2 sqrt 2) * rho^(-1/2)`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// `sqrt(pi) / (2 sqrt(2))`, about 0.6267.
pub fn nn_constant() -> f64 {
    PI.sqrt() / (2.0 * 2f64.sqrt())
}

fn check_density(rho: f64) -> Result<()> {
    if rho > 0.0 && rho <= 1.0 {
        Ok(())
    } else {
        Err(Error::DensityOutOfRange(rho))
    }
}

/// Predicted canonical string length for an `n x n` matrix of density `rho`.
pub fn expected_length(n: usize, rho: f64) -> Result<f64> {
    check_density(rho)?;
    let n = n as f64;
    Ok(nn_constant() * n * n * rho.sqrt())
}

/// Predicted mean Manhattan distance from an active cell to its nearest
/// active neighbour.
pub fn expected_nn_distance(rho: f64) -> Result<f64> {
    check_density(rho)?;
    Ok(nn_constant() / rho.sqrt())
}

/// `P(S > r)`.
pub fn nn_survival(rho: f64, r: f64) -> Result<f64> {
    check_density(rho)?;
    if r < 0.0 || r.is_nan() {
        return Err(Error::NegativeRadius(r));
    }
    Ok((-2.0 * rho * r * r).exp())
}

/// Density of `S`: `4 rho r exp(-2 rho r²)`.
pub fn nn_density(rho: f64, r: f64) -> Result<f64> {
    let survival = nn_survival(rho, r)?;
    Ok(4.0 * rho * r * survival)
}
