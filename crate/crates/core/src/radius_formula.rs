//! Explicit numerical radius of `S(φ)` for `φ = ((z − α)/(1 − ᾱz))^n`.
//!
//! With `a = |α|` and `t_n` the last KMS angle,
//!
//! `ω₂ = (−(1 + a²) cos t_n + 2a)/(1 − 2a cos t_n + a²)`.
//!
//! For `n ∈ {2, 3, 4}` the angle is algebraic and closed forms are
//! available through [`radius_closed_form`].

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use core::f64::consts::PI;

use crate::blaschke::poisson_kernel;
use crate::error::{Error, Result};
use crate::kms::solve_root;

fn modulus(alpha: Complex64) -> Result<f64> {
    let a = alpha.norm();
    if a < 1.0 {
        Ok(a)
    } else {
        Err(Error::AlphaOutOfRange { modulus: a })
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyProduct)
    } else {
        Ok(())
    }
}

/// `ω₂(S(φ))` for a single zero `α` of multiplicity `n`.
pub fn radius_single_zero(alpha: Complex64, n: usize) -> Result<f64> {
    let a = modulus(alpha)?;
    check_degree(n)?;
    if a == 0.0 {
        return Ok((PI / (n as f64 + 1.0)).cos());
    }
    let c = solve_root(a, n, n)?.cos();
    Ok((-(1.0 + a * a) * c + 2.0 * a) / (1.0 - 2.0 * a * c + a * a))
}

/// The same radius written through the Poisson kernel:
/// `((1 − a²)/(2a))·(−P_a(e^{it_n}) + (1 + a²)/(1 − a²))`.
pub fn radius_poisson_form(alpha: Complex64, n: usize) -> Result<f64> {
    let a = modulus(alpha)?;
    check_degree(n)?;
    if a == 0.0 {
        return Ok((PI / (n as f64 + 1.0)).cos());
    }
    let t = solve_root(a, n, n)?;
    let p = poisson_kernel(a, t)?;
    Ok((1.0 - a * a) / (2.0 * a) * (-p + (1.0 + a * a) / (1.0 - a * a)))
}

/// Closed forms for `n = 2, 3, 4`.
pub fn radius_closed_form(alpha: Complex64, n: usize) -> Result<f64> {
    let a = modulus(alpha)?;
    let a2 = a * a;
    let a3 = a2 * a;
    match n {
        2 => Ok((1.0 + 2.0 * a - a2) / 2.0),
        3 => {
            let r = (a2 + 8.0).sqrt();
            Ok((7.0 * a - a3 + (1.0 + a2) * r) / (4.0 + 2.0 * a2 + 2.0 * a * r))
        }
        4 => {
            let r = (a2 + 2.0 * a + 5.0).sqrt();
            Ok((-a3 + a2 + 7.0 * a + 1.0 + (1.0 + a2) * r) / (2.0 * a2 + 2.0 * a + 4.0 + 2.0 * a * r))
        }
        degree => Err(Error::UnsupportedDegree { degree }),
    }
}
