//! Support function `λ(θ)`, boundary of the numerical range `W(T)` and the
//! numerical radius `ω₂(T)`.
//!
//! The boundary is traced as the envelope of the support lines
//! `x cos θ + y sin θ = λ(θ)`:
//!
//! `x = λ cos θ − λ' sin θ`, `y = λ sin θ + λ' cos θ`.
//!
//! For normal matrices `λ` has corners and the envelope formula emits points
//! on the polygon edges rather than only the vertices. Those samples are
//! still on `∂W(T)` up to the central-difference error but are not smooth.

use alloc::vec::Vec;
use core::f64::consts::TAU;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::optimize::golden_max;

pub const MIN_BOUNDARY_GRID: usize = 8;
pub const MIN_RADIUS_GRID: usize = 64;
pub const DEFAULT_RADIUS_GRID: usize = 256;
pub const DEFAULT_REFINE_TOL: f64 = 1e-12;

/// Largest eigenvalue of `Re(e^{−iθ}T)`.
pub fn support_function(t: &ComplexMatrix, theta: f64) -> Result<f64> {
    t.require_square()?;
    Ok(hermitian_eig(&t.rotated_hermitian_part(theta))?.largest())
}

/// `‖Re(e^{−iθ}T)‖`, i.e. `max(λ(θ), λ(θ + π))`.
pub fn rotated_real_norm(t: &ComplexMatrix, theta: f64) -> Result<f64> {
    t.require_square()?;
    Ok(hermitian_eig(&t.rotated_hermitian_part(theta))?.spectral_radius())
}

/// Uniform samples of `∂W(T)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySample {
    pub thetas: Vec<f64>,
    pub support: Vec<f64>,
    pub lambda_prime: Vec<f64>,
    pub points: Vec<(f64, f64)>,
}

impl BoundarySample {
    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }

    /// Largest `|x cos θ + y sin θ − λ(θ)|` over the samples.
    pub fn envelope_residual(&self) -> f64 {
        self.thetas
            .iter()
            .zip(&self.support)
            .zip(&self.points)
            .map(|((&th, &l), &(x, y))| (x * th.cos() + y * th.sin() - l).abs())
            .fold(0.0, f64::max)
    }
}

/// Sample `∂W(T)` at `grid_size` uniform angles on `[0, 2π)`, with `λ'` by
/// the five-point central difference on the periodic grid.
pub fn boundary(t: &ComplexMatrix, grid_size: usize) -> Result<BoundarySample> {
    t.require_square()?;
    if grid_size < MIN_BOUNDARY_GRID {
        return Err(Error::GridTooSmall { got: grid_size, min: MIN_BOUNDARY_GRID });
    }
    let h = TAU / grid_size as f64;
    let thetas: Vec<f64> = (0..grid_size).map(|j| j as f64 * h).collect();
    let support = thetas.iter().map(|&th| support_function(t, th)).collect::<Result<Vec<_>>>()?;
    Ok(assemble_boundary(thetas, support))
}

/// Build boundary points from precomputed support values on a uniform
/// periodic grid.
pub fn assemble_boundary(thetas: Vec<f64>, support: Vec<f64>) -> BoundarySample {
    let m = thetas.len();
    let h = TAU / m as f64;
    let lambda_prime: Vec<f64> = (0..m)
        .map(|j| {
            let at = |k: usize| support[(j + k) % m];
            (8.0 * (at(1) - at(m - 1)) - (at(2) - at(m - 2))) / (12.0 * h)
        })
        .collect();
    let points = thetas
        .iter()
        .zip(&support)
        .zip(&lambda_prime)
        .map(|((&th, &l), &lp)| {
            let (s, c) = th.sin_cos();
            (l * c - lp * s, l * s + lp * c)
        })
        .collect();
    BoundarySample { thetas, support, lambda_prime, points }
}

/// Grid maximum of a `2π`-periodic function followed by golden-section
/// refinement around every grid local maximum within `slack` of the best.
fn periodic_sup<F: FnMut(f64) -> Result<f64>>(mut f: F, grid_size: usize, refine_tol: f64) -> Result<(f64, f64)> {
    let h = TAU / grid_size as f64;
    let vals = (0..grid_size).map(|j| f(j as f64 * h)).collect::<Result<Vec<_>>>()?;
    let (mut best_theta, mut best) = (0.0, f64::NEG_INFINITY);
    for (j, &v) in vals.iter().enumerate() {
        if v > best {
            best = v;
            best_theta = j as f64 * h;
        }
    }
    let spread = vals.iter().fold(0.0f64, |acc, &v| acc.max((v - best).abs()));
    let slack = 0.05 * spread + 1e-12;
    let mut err = None;
    for j in 0..grid_size {
        let v = vals[j];
        let prev = vals[(j + grid_size - 1) % grid_size];
        let next = vals[(j + 1) % grid_size];
        if v < prev || v < next || v < best - slack {
            continue;
        }
        let centre = j as f64 * h;
        let (x, fx) = golden_max(
            |th| match f(th) {
                Ok(v) => v,
                Err(e) => {
                    err = Some(e);
                    f64::NEG_INFINITY
                }
            },
            centre - h,
            centre + h,
            refine_tol,
        );
        if fx > best {
            best = fx;
            best_theta = x.rem_euclid(TAU);
        }
    }
    match err {
        Some(e) => Err(e),
        None => Ok((best_theta, best)),
    }
}

/// `ω₂(T) = sup_θ ‖Re(e^{−iθ}T)‖` by a `grid_size` sweep and golden-section
/// refinement in `θ` to `refine_tol`.
pub fn numerical_radius(t: &ComplexMatrix, grid_size: usize, refine_tol: f64) -> Result<f64> {
    numerical_radius_with_angle(t, grid_size, refine_tol).map(|r| r.1)
}

/// Like [`numerical_radius`] but also returns a maximising angle.
pub fn numerical_radius_with_angle(t: &ComplexMatrix, grid_size: usize, refine_tol: f64) -> Result<(f64, f64)> {
    t.require_square()?;
    if grid_size < MIN_RADIUS_GRID {
        return Err(Error::GridTooSmall { got: grid_size, min: MIN_RADIUS_GRID });
    }
    periodic_sup(|th| rotated_real_norm(t, th), grid_size, refine_tol)
}

/// [`numerical_radius`] with the default grid of 256 and tolerance `1e−12`.
pub fn numerical_radius_default(t: &ComplexMatrix) -> Result<f64> {
    numerical_radius(t, DEFAULT_RADIUS_GRID, DEFAULT_REFINE_TOL)
}

/// `sup_θ λ(θ)`. Coincides with [`numerical_radius`] on matrices whose
/// boundary is a regular arc, such as compressed shifts.
pub fn support_sup(t: &ComplexMatrix, grid_size: usize, refine_tol: f64) -> Result<f64> {
    t.require_square()?;
    if grid_size < MIN_RADIUS_GRID {
        return Err(Error::GridTooSmall { got: grid_size, min: MIN_RADIUS_GRID });
    }
    periodic_sup(|th| support_function(t, th), grid_size, refine_tol).map(|r| r.1)
}
