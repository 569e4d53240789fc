//! Polynomial functional calculus, operator Möbius maps and numerical
//! certificates for radius inequalities on nilpotent contractions.
//!
//! For a nilpotent contraction `T` with `Tⁿ = 0`, a polynomial self-map `f`
//! of the disc and `|α| < 1`, with `m` the order of `α` as a zero of
//! `f − f(α)`:
//!
//! `ω₂((f(α)I − f(T))(I − conj(f(α)) f(T))^{−1}) ≤ r_n(|α|)^m`
//!
//! where `r_n(a)` is the numerical radius of the single-zero compressed
//! shift (see [`crate::radius_formula`]). At `f(z) = z`, `α = 0` this is
//! `ω₂(T) ≤ cos(π/(n+1))`.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix};
use crate::model_operator::shift_adjoint_matrix;
use crate::numerical_range::numerical_radius_default;
use crate::radius_formula::radius_single_zero;

pub const SELF_MAP_SAMPLES: usize = 4096;
pub const SELF_MAP_SLACK: f64 = 1e-9;
pub const VANISHING_TOL: f64 = 1e-10;
pub const NILPOTENT_TOL: f64 = 1e-12;

/// A polynomial `Σ c_k z^k` certified to map the disc into its closure.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticSelfMap {
    coeffs: Vec<Complex64>,
    boundary_sup: f64,
}

impl AnalyticSelfMap {
    /// Certify `sup |f(e^{it})| ≤ 1 + 1e−9` on 4096 equispaced samples.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ConstantMap);
        }
        let mut sup = 0.0f64;
        for j in 0..SELF_MAP_SAMPLES {
            let z = Complex64::from_polar(1.0, TAU * j as f64 / SELF_MAP_SAMPLES as f64);
            sup = sup.max(horner(&coeffs, z).norm());
        }
        if sup > 1.0 + SELF_MAP_SLACK {
            return Err(Error::SelfMapViolation { sup });
        }
        Ok(Self { coeffs, boundary_sup: sup })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = Complex64::new(1.0, 0.0);
        Self { coeffs, boundary_sup: 1.0 }
    }

    /// `z`, `z²`, `(z + z³)/2` and `0.9z(1 + z)/2`.
    pub fn standard_family() -> [Self; 4] {
        [
            Self::monomial(1),
            Self::monomial(2),
            Self::from_real(&[0.0, 0.5, 0.0, 0.5]).expect("(z + z^3)/2 is a self-map"),
            Self::from_real(&[0.0, 0.45, 0.45]).expect("0.9z(1 + z)/2 is a self-map"),
        ]
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn boundary_sup(&self) -> f64 {
        self.boundary_sup
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        horner(&self.coeffs, z)
    }

    /// Coefficients of `f(α + w)` in powers of `w`.
    pub fn taylor_at(&self, alpha: Complex64) -> Vec<Complex64> {
        let mut b = self.coeffs.clone();
        let d = b.len();
        // repeated synthetic division by (z − α)
        for i in 0..d {
            for j in (i..d - 1).rev() {
                let carry = alpha * b[j + 1];
                b[j] += carry;
            }
        }
        b
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// A contraction `T` with `Tⁿ = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct NilpotentContraction {
    matrix: ComplexMatrix,
    order: usize,
    norm: f64,
}

impl NilpotentContraction {
    /// Check `‖T‖ ≤ 1 + 1e−12` and `‖T^order‖ < 1e−12`.
    pub fn new(matrix: ComplexMatrix, order: usize) -> Result<Self> {
        matrix.require_square()?;
        let norm = linalg::operator_norm(&matrix)?;
        if norm > 1.0 + 1e-12 {
            return Err(Error::NotContraction { norm });
        }
        let residual = linalg::operator_norm(&matrix.pow(order as u32))?;
        if !(residual < NILPOTENT_TOL) {
            return Err(Error::NotNilpotent { order, residual });
        }
        Ok(Self { matrix, order, norm })
    }

    /// Nilpotent of order equal to the dimension.
    pub fn from_matrix(matrix: ComplexMatrix) -> Result<Self> {
        let n = matrix.require_square()?;
        Self::new(matrix, n)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }
}

/// Strictly upper-triangular matrix with entries uniform in the square
/// `[−1, 1)²`, scaled to unit norm. Deterministic per seed.
pub fn random_nilpotent_contraction(n: usize, seed: u64) -> NilpotentContraction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let raw = ComplexMatrix::from_fn(n, n, |r, c| {
        if c > r {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let norm = linalg::operator_norm(&raw).unwrap_or(0.0);
    let matrix = if norm > 0.0 { raw.scale_real(1.0 / norm) } else { raw };
    let norm = if norm > 0.0 { linalg::operator_norm(&matrix).unwrap_or(1.0) } else { 0.0 };
    NilpotentContraction { matrix, order: n.max(1), norm }
}

/// `(αI − T)(I − ᾱT)^{−1}`.
pub fn operator_mobius(t: &ComplexMatrix, alpha: Complex64) -> Result<ComplexMatrix> {
    let n = t.require_square()?;
    if !(alpha.norm() < 1.0) {
        return Err(Error::AlphaOutOfRange { modulus: alpha.norm() });
    }
    let id = ComplexMatrix::identity(n);
    let num = &id.scale(alpha) - t;
    let den = &id - &t.scale(alpha.conj());
    linalg::solve(&den, &num)
}

/// `f(T)` by Horner's rule.
pub fn polynomial_apply(t: &ComplexMatrix, f: &AnalyticSelfMap) -> Result<ComplexMatrix> {
    let n = t.require_square()?;
    let mut acc = ComplexMatrix::zeros(n, n);
    for &c in f.coeffs().iter().rev() {
        acc = (&acc * t).shift_diagonal(c);
    }
    Ok(acc)
}

/// Smallest `m ≥ 1` with `|f^{(m)}(α)|/m! > 1e−10`.
pub fn vanishing_order(f: &AnalyticSelfMap, alpha: Complex64) -> Result<usize> {
    f.taylor_at(alpha)
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, c)| c.norm() > VANISHING_TOL)
        .map(|(m, _)| m)
        .ok_or(Error::ConstantMap)
}

/// Two sides of an inequality `lhs ≤ rhs`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityReport {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

impl InequalityReport {
    fn new(lhs: f64, rhs: f64) -> Self {
        Self { lhs, rhs, margin: rhs - lhs }
    }

    pub fn holds(&self, tol: f64) -> bool {
        self.margin >= -tol
    }
}

/// [`InequalityReport`] plus the vanishing order used for the exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzPickReport {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub order: usize,
}

fn check_alpha(alpha: Complex64) -> Result<()> {
    if alpha.norm() < 1.0 {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange { modulus: alpha.norm() })
    }
}

/// `g(X) = (f(α)I − f(X))(I − conj(f(α)) f(X))^{−1}`.
pub fn composed_mobius(x: &ComplexMatrix, f: &AnalyticSelfMap, alpha: Complex64) -> Result<ComplexMatrix> {
    let w = f.evaluate(alpha);
    operator_mobius(&polynomial_apply(x, f)?, w)
}

/// Both sides of the sharpened Schwarz–Pick inequality.
pub fn schwarz_pick_check(t: &NilpotentContraction, f: &AnalyticSelfMap, alpha: Complex64) -> Result<SchwarzPickReport> {
    check_alpha(alpha)?;
    let m = vanishing_order(f, alpha)?;
    let lhs = numerical_radius_default(&composed_mobius(t.matrix(), f, alpha)?)?;
    let rhs = radius_single_zero(Complex64::new(alpha.norm(), 0.0), t.order())?.powi(m as i32);
    Ok(SchwarzPickReport { lhs, rhs, margin: rhs - lhs, order: m })
}

/// The three quantities of the proof chain
/// `ω₂(g(T)) ≤ ω₂(g(S_n*)) ≤ ω₂(Möb_α(S_n*))^m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzPickChain {
    pub on_t: f64,
    pub on_shift: f64,
    pub mobius_shift_power: f64,
    pub order: usize,
}

impl SchwarzPickChain {
    /// `(first link margin, second link margin)`.
    pub fn margins(&self) -> (f64, f64) {
        (self.on_shift - self.on_t, self.mobius_shift_power - self.on_shift)
    }
}

pub fn schwarz_pick_chain(t: &NilpotentContraction, f: &AnalyticSelfMap, alpha: Complex64) -> Result<SchwarzPickChain> {
    check_alpha(alpha)?;
    let m = vanishing_order(f, alpha)?;
    let s = shift_adjoint_matrix(t.order());
    let on_t = numerical_radius_default(&composed_mobius(t.matrix(), f, alpha)?)?;
    let on_shift = numerical_radius_default(&composed_mobius(&s, f, alpha)?)?;
    let mob = numerical_radius_default(&operator_mobius(&s, alpha)?)?;
    Ok(SchwarzPickChain { on_t, on_shift, mobius_shift_power: mob.powi(m as i32), order: m })
}

/// `ω₂(f(T)) ≤ ω₂(f(S_n))`.
pub fn functional_calculus_check(t: &NilpotentContraction, f: &AnalyticSelfMap) -> Result<InequalityReport> {
    let lhs = numerical_radius_default(&polynomial_apply(t.matrix(), f)?)?;
    let rhs = numerical_radius_default(&polynomial_apply(&shift_adjoint_matrix(t.order()), f)?)?;
    Ok(InequalityReport::new(lhs, rhs))
}

/// `ω₂(T) ≤ ‖T‖ cos(π/(n+1))`.
pub fn haagerup_harpe_check(t: &NilpotentContraction) -> Result<InequalityReport> {
    let lhs = numerical_radius_default(t.matrix())?;
    let rhs = t.norm() * (PI / (t.order() as f64 + 1.0)).cos();
    Ok(InequalityReport::new(lhs, rhs))
}
