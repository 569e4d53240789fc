//! Angles between model subspaces `H(φ₁)`, `H(φ₂)` of the Hardy space and
//! radius estimates for products of single-zero factors.
//!
//! The angle is the smallest principal angle: its cosine is the largest
//! singular value of the cross-Gram matrix `(⟨e_k^{(1)}, e_l^{(2)}⟩)` of the
//! two Takenaka bases, computed from truncated Taylor coefficients.
//!
//! For single-zero factors the sine of the angle is bounded below by
//! `F = |(α₁ − α₂)/(1 − ᾱ₁α₂)|^{2n₁n₂}`. For `φ = φ₁⋯φ_p` with
//! `δ = max_i ω₂(S(φ_i))` and `ρ = max_{i≠j} cos θ_ij`,
//!
//! `ω₂(S(φ)) ≤ G(ρ, δ) = (δ + ρ(p − 1))/(1 − ρ(p − 1))` when
//! `ρ < (1 − δ)/(2(p − 1))`.
//!
//! In practice this hypothesis is never met for single-zero factors:
//! `cos θ ≥ ((1 − |α₁|²)(1 − |α₂|²))^{1/2}/|1 − ᾱ₁α₂|`, which already
//! exceeds `(1 − δ)/2`. [`GEstimate::applicable`] reports it honestly.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::blaschke::{default_truncation, takenaka_taylor, BlaschkeProduct};
use crate::error::{Error, Result};
use crate::linalg::{self, inner, ComplexMatrix};
use crate::radius_formula::radius_single_zero;

/// Largest tail energy accepted for a truncated basis vector.
pub const GRAM_TAIL_TOL: f64 = 1e-10;
/// Zeros closer than this are treated as shared.
pub const COMMON_ZERO_TOL: f64 = 1e-12;

/// Truncated Taylor coefficients of each Takenaka basis vector.
pub fn takenaka_basis(phi: &BlaschkeProduct, n_terms: usize) -> Result<Vec<Vec<Complex64>>> {
    (1..=phi.degree())
        .map(|k| {
            let s = takenaka_taylor(phi, k, n_terms)?;
            if s.truncation_error_bound >= GRAM_TAIL_TOL {
                return Err(Error::TruncationInsufficient { terms: n_terms, tail: s.truncation_error_bound });
            }
            Ok(s.coeffs)
        })
        .collect()
}

/// Truncation long enough for both bases.
pub fn auto_truncation(phi1: &BlaschkeProduct, phi2: &BlaschkeProduct) -> Result<usize> {
    Ok(default_truncation(phi1, GRAM_TAIL_TOL)?.max(default_truncation(phi2, GRAM_TAIL_TOL)?))
}

/// `G_kl = ⟨e_k^{(1)}, e_l^{(2)}⟩ = Σ_m c_m^{(1,k)} conj(c_m^{(2,l)})` on
/// `n_terms` coefficients (auto-sized when `None`).
pub fn cross_gram(phi1: &BlaschkeProduct, phi2: &BlaschkeProduct, n_terms: Option<usize>) -> Result<ComplexMatrix> {
    let n = match n_terms {
        Some(n) => n,
        None => auto_truncation(phi1, phi2)?,
    };
    let b1 = takenaka_basis(phi1, n)?;
    let b2 = takenaka_basis(phi2, n)?;
    Ok(ComplexMatrix::from_fn(b1.len(), b2.len(), |k, l| inner(&b1[k], &b2[l])))
}

/// Angle between two model subspaces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleReport {
    pub cos_angle: f64,
    pub sin_angle: f64,
    /// `F(φ₁, φ₂)` when both products have a single zero.
    pub f_lower_bound: Option<f64>,
    pub truncation: usize,
}

impl AngleReport {
    /// `sin θ ≥ F − tol`; vacuously true when `F` is unavailable.
    pub fn satisfies_f_bound(&self, tol: f64) -> bool {
        self.f_lower_bound.map_or(true, |f| self.sin_angle >= f - tol)
    }
}

fn shared_zero(phi1: &BlaschkeProduct, phi2: &BlaschkeProduct) -> Option<Complex64> {
    let z2 = phi2.distinct_zeros();
    phi1.distinct_zeros()
        .into_iter()
        .map(|(a, _)| a)
        .find(|a| z2.iter().any(|(b, _)| (a - b).norm() < COMMON_ZERO_TOL))
}

pub fn subspace_cos_angle(phi1: &BlaschkeProduct, phi2: &BlaschkeProduct) -> Result<AngleReport> {
    if let Some(z) = shared_zero(phi1, phi2) {
        return Err(Error::CommonZero { re: z.re, im: z.im });
    }
    let truncation = auto_truncation(phi1, phi2)?;
    let g = cross_gram(phi1, phi2, Some(truncation))?;
    let cos_angle = linalg::singular_values(&g)?[0].clamp(0.0, 1.0);
    let sin_angle = (1.0 - cos_angle * cos_angle).sqrt();
    let f_lower_bound = f_bound(phi1, phi2).ok();
    Ok(AngleReport { cos_angle, sin_angle, f_lower_bound, truncation })
}

/// `F(φ₁, φ₂) = |(α₁ − α₂)/(1 − ᾱ₁α₂)|^{2n₁n₂}` for single-zero products.
pub fn f_bound(phi1: &BlaschkeProduct, phi2: &BlaschkeProduct) -> Result<f64> {
    let (a1, n1) = phi1.as_single_zero().ok_or(Error::NotSingleZero)?;
    let (a2, n2) = phi2.as_single_zero().ok_or(Error::NotSingleZero)?;
    let d = ((a1 - a2) / (Complex64::new(1.0, 0.0) - a1.conj() * a2)).norm();
    Ok(d.powi(2 * (n1 * n2) as i32))
}

/// `(δ + ρ(p − 1))/(1 − ρ(p − 1))` with no applicability guard.
pub fn g_value(rho: f64, delta: f64, p: usize) -> f64 {
    let q = rho * (p as f64 - 1.0);
    (delta + q) / (1.0 - q)
}

/// `ρ < (1 − δ)/(2(p − 1))`.
pub fn g_applicable(rho: f64, delta: f64, p: usize) -> bool {
    rho < (1.0 - delta) / (2.0 * (p as f64 - 1.0))
}

/// `G(ρ, δ)` when applicable.
pub fn g_bound(rho: f64, delta: f64, p: usize) -> Option<f64> {
    g_applicable(rho, delta, p).then(|| g_value(rho, delta, p))
}

/// How `ρ` is obtained in [`g_estimate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RhoSource {
    /// Largest computed `cos θ_ij`.
    #[default]
    Numeric,
    /// Largest `(1 − F_ij)^{1/2}`, an upper bound for `cos θ_ij`.
    FProxy,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GEstimate {
    pub rho: f64,
    pub delta: f64,
    pub p: usize,
    pub applicable: bool,
    pub bound: Option<f64>,
    pub source: RhoSource,
}

fn check_factors(factors: &[BlaschkeProduct]) -> Result<Vec<(Complex64, usize)>> {
    if factors.len() < 2 {
        return Err(Error::TooFewFactors { min: 2, got: factors.len() });
    }
    let zeros = factors.iter().map(|f| f.as_single_zero().ok_or(Error::NotSingleZero)).collect::<Result<Vec<_>>>()?;
    for i in 0..zeros.len() {
        for j in i + 1..zeros.len() {
            if (zeros[i].0 - zeros[j].0).norm() < COMMON_ZERO_TOL {
                return Err(Error::DuplicateZero { first: i, second: j });
            }
        }
    }
    Ok(zeros)
}

/// `δ`, `ρ` and `G(ρ, δ)` for a product of single-zero factors.
pub fn g_estimate(factors: &[BlaschkeProduct], source: RhoSource) -> Result<GEstimate> {
    let zeros = check_factors(factors)?;
    let p = factors.len();
    let mut delta = 0.0f64;
    for &(a, n) in &zeros {
        delta = delta.max(radius_single_zero(a, n)?);
    }
    let mut rho = 0.0f64;
    for i in 0..p {
        for j in i + 1..p {
            let c = match source {
                RhoSource::Numeric => subspace_cos_angle(&factors[i], &factors[j])?.cos_angle,
                RhoSource::FProxy => (1.0 - f_bound(&factors[i], &factors[j])?).sqrt(),
            };
            rho = rho.max(c);
        }
    }
    let bound = g_bound(rho, delta, p);
    Ok(GEstimate { rho, delta, p, applicable: bound.is_some(), bound, source })
}

/// Two-factor bound written directly in the zeros:
/// `(δ + (1 − F)^{1/2})/(1 − (1 − F)^{1/2})`, `F = |(α₁ − α₂)/(1 − ᾱ₁α₂)|^{2n₁n₂}`.
pub fn pair_bound(a1: Complex64, n1: usize, a2: Complex64, n2: usize, delta: f64) -> f64 {
    let ratio = ((a1 - a2) / (Complex64::new(1.0, 0.0) - a1.conj() * a2)).norm();
    let s = (1.0 - ratio.powi(2 * (n1 * n2) as i32)).sqrt();
    (delta + s) / (1.0 - s)
}

/// `J − I`: zero diagonal, ones elsewhere.
pub fn ones_off_diagonal(n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |r, c| Complex64::new(if r == c { 0.0 } else { 1.0 }, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eig;
    use crate::numerical_range::numerical_radius_default;
    use core::f64::consts::TAU;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn single(a: Complex64, n: usize) -> BlaschkeProduct {
        BlaschkeProduct::single_zero(a, n).unwrap()
    }

    /// `|⟨k̂_α, k̂_β⟩|` for normalised Szegő kernels.
    fn kernel_cos(a: Complex64, b: Complex64) -> f64 {
        ((1.0 - a.norm_sqr()) * (1.0 - b.norm_sqr())).sqrt() / (c(1.0, 0.0) - a.conj() * b).norm()
    }

    #[test]
    fn gram_examples() {
        let z3 = BlaschkeProduct::monomial(3).unwrap();
        assert!(cross_gram(&z3, &z3, None).unwrap().max_abs_diff(&ComplexMatrix::identity(3)) < 1e-14);
        let a = c(0.4, -0.3);
        let g = cross_gram(&BlaschkeProduct::monomial(1).unwrap(), &single(a, 1), None).unwrap();
        assert!((g[(0, 0)] - c((1.0 - a.norm_sqr()).sqrt(), 0.0)).norm() < 1e-14);
        assert!(matches!(cross_gram(&single(c(0.9, 0.0), 1), &z3, Some(10)), Err(Error::TruncationInsufficient { .. })));
    }

    #[test]
    fn angle_examples() {
        let a = c(0.6, 0.0);
        let r = subspace_cos_angle(&BlaschkeProduct::monomial(1).unwrap(), &single(a, 1)).unwrap();
        assert!((r.cos_angle - 0.8).abs() < 1e-12);
        assert!((r.f_lower_bound.unwrap() - 0.36).abs() < 1e-15);
        assert!(r.satisfies_f_bound(1e-6));

        let r = subspace_cos_angle(&single(c(0.1, 0.0), 1), &single(c(-0.1, 0.0), 1)).unwrap();
        let f = (0.2f64 / 1.01).powi(2);
        assert!((r.f_lower_bound.unwrap() - f).abs() < 1e-15);
        assert!(r.sin_angle >= f);
        assert!((r.cos_angle - kernel_cos(c(0.1, 0.0), c(-0.1, 0.0))).abs() < 1e-12);

        let same = single(c(0.2, 0.3), 2);
        assert!(matches!(subspace_cos_angle(&same, &single(c(0.2, 0.3), 1)), Err(Error::CommonZero { .. })));
    }

    #[test]
    fn f_bound_examples() {
        let a = single(c(0.3, 0.1), 2);
        assert_eq!(f_bound(&a, &single(c(0.3, 0.1), 1)).unwrap(), 0.0);
        let z = BlaschkeProduct::monomial(1).unwrap();
        assert!((f_bound(&z, &single(c(0.5, 0.0), 1)).unwrap() - 0.25).abs() < 1e-16);
        let z2 = BlaschkeProduct::monomial(2).unwrap();
        assert!((f_bound(&z2, &single(c(0.5, 0.0), 1)).unwrap() - 0.0625).abs() < 1e-16);
        let two = BlaschkeProduct::from_zeros(&[c(0.1, 0.0), c(0.2, 0.0)]).unwrap();
        assert!(matches!(f_bound(&two, &z), Err(Error::NotSingleZero)));
    }

    #[test]
    fn g_estimate_examples() {
        let fs = [single(c(0.05, 0.0), 1), single(c(-0.05, 0.0), 1)];
        let e = g_estimate(&fs, RhoSource::Numeric).unwrap();
        assert!((e.delta - 0.05).abs() < 1e-12);
        assert!((e.rho - kernel_cos(c(0.05, 0.0), c(-0.05, 0.0))).abs() < 1e-12);
        assert_eq!(e.applicable, e.bound.is_some());
        assert!(!e.applicable);

        let (a1, a2) = (c(0.3, 0.2), c(-0.5, 0.1));
        let fs = [single(a1, 2), single(a2, 1)];
        let e = g_estimate(&fs, RhoSource::FProxy).unwrap();
        let direct = pair_bound(a1, 2, a2, 1, e.delta);
        assert!((g_value(e.rho, e.delta, 2) - direct).abs() < 1e-12);
        assert!(g_bound(0.9, 0.5, 2).is_none());
        assert!((g_bound(0.1, 0.5, 2).unwrap() - 0.6 / 0.9).abs() < 1e-15);

        assert!(matches!(g_estimate(&fs[..1], RhoSource::Numeric), Err(Error::TooFewFactors { .. })));
        let dup = [single(a1, 1), single(a2, 1), single(a1, 2)];
        assert!(matches!(g_estimate(&dup, RhoSource::Numeric), Err(Error::DuplicateZero { first: 0, second: 2 })));
    }

    #[test]
    fn pairing_identity() {
        let xs = [0.3, -1.2, 2.5, 0.0, 4.25, -0.7];
        for p in 2..=xs.len() {
            let mut lhs = 0.0;
            for i in 0..p {
                for j in i + 1..p {
                    lhs += xs[i] + xs[j];
                }
            }
            let rhs = (p as f64 - 1.0) * xs[..p].iter().sum::<f64>();
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn ones_off_diagonal_spectrum() {
        for n in 2..9 {
            let e = hermitian_eig(&ones_off_diagonal(n)).unwrap();
            for &v in &e.values()[..n - 1] {
                assert!((v + 1.0).abs() < 1e-10);
            }
            assert!((e.largest() - (n as f64 - 1.0)).abs() < 1e-10);
            let (delta, rho) = (0.4, 0.05);
            let a = ones_off_diagonal(n).scale_real(rho).shift_diagonal(c(delta, 0.0));
            let w = numerical_radius_default(&a).unwrap();
            assert!((w - (delta + rho * (n as f64 - 1.0))).abs() < 1e-10);
        }
    }

    #[test]
    fn bound_tends_to_delta_as_zeros_separate() {
        let mut prev_rho = f64::INFINITY;
        let mut prev_excess = f64::INFINITY;
        for j in 1..10 {
            let r = 0.1 * j as f64;
            let fs = [single(c(r, 0.0), 1), single(c(-r, 0.0), 1)];
            let e = g_estimate(&fs, RhoSource::Numeric).unwrap();
            let excess = g_value(e.rho, e.delta, 2) - e.delta;
            assert!(e.rho < prev_rho && excess < prev_excess);
            prev_rho = e.rho;
            prev_excess = excess;
        }
    }

    /// Coefficient vector of `Σ_i f_i` and the pieces, with `S*` acting by
    /// dropping the constant term.
    fn inner_product_bound_holds(factors: &[BlaschkeProduct], weights: &[Vec<Complex64>]) -> bool {
        let phi = factors.iter().skip(1).fold(factors[0].clone(), |acc, f| acc.product(f));
        let n = default_truncation(&phi, GRAM_TAIL_TOL).unwrap();
        let pieces: Vec<Vec<Complex64>> = factors
            .iter()
            .zip(weights)
            .map(|(f, w)| {
                let basis = takenaka_basis(f, n).unwrap();
                (0..n).map(|m| basis.iter().zip(w).map(|(b, &c)| b[m] * c).sum()).collect()
            })
            .collect();
        let total: Vec<Complex64> = (0..n).map(|m| pieces.iter().map(|p| p[m]).sum()).collect();
        let lhs = inner(&total[1..], &total[..n - 1]).norm();
        let est = g_estimate(factors, RhoSource::Numeric).unwrap();
        let norms: Vec<f64> = pieces.iter().map(|p| linalg::vec_norm(p)).collect();
        let diag: f64 = norms.iter().map(|x| x * x).sum();
        let mut cross = 0.0;
        for i in 0..norms.len() {
            for j in 0..norms.len() {
                if i != j {
                    cross += norms[i] * norms[j];
                }
            }
        }
        lhs <= est.delta * diag + est.rho * cross + 1e-10
    }

    fn zero_strategy() -> impl Strategy<Value = (Complex64, usize)> {
        (0.0f64..0.7, 0.0f64..TAU, 1usize..=3).prop_map(|(r, t, n)| (Complex64::from_polar(r, t), n))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn sine_dominates_f((a1, n1) in zero_strategy(), (a2, n2) in zero_strategy()) {
            prop_assume!((a1 - a2).norm() > 1e-3);
            let r = subspace_cos_angle(&single(a1, n1), &single(a2, n2)).unwrap();
            prop_assert!(r.satisfies_f_bound(1e-6), "{:?}", r);
            prop_assert!(r.cos_angle <= (1.0 - r.f_lower_bound.unwrap()).sqrt() + 1e-10);
            prop_assert!(r.cos_angle >= kernel_cos(a1, a2) - 1e-10);
            if n1 == 1 && n2 == 1 {
                prop_assert!((r.cos_angle - kernel_cos(a1, a2)).abs() < 1e-10);
            }
        }

        #[test]
        fn hypothesis_and_bound(zs in proptest::collection::vec(zero_strategy(), 2..4)) {
            for i in 0..zs.len() {
                for j in i + 1..zs.len() {
                    prop_assume!((zs[i].0 - zs[j].0).norm() > 1e-3);
                }
            }
            let fs: Vec<_> = zs.iter().map(|&(a, n)| single(a, n)).collect();
            let e = g_estimate(&fs, RhoSource::Numeric).unwrap();
            if let Some(b) = e.bound {
                let phi = fs.iter().skip(1).fold(fs[0].clone(), |acc, f| acc.product(f));
                let m = crate::model_operator::compress_shift_adjoint(&phi);
                prop_assert!(numerical_radius_default(m.matrix()).unwrap() <= b + 1e-8);
                prop_assert!(b < 1.0);
            }
        }

        #[test]
        fn cross_term_estimate(zs in proptest::collection::vec((0.0f64..0.6, 0.0f64..TAU), 2..4),
                               seeds in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 3)) {
            for i in 0..zs.len() {
                for j in i + 1..zs.len() {
                    prop_assume!((Complex64::from_polar(zs[i].0, zs[i].1) - Complex64::from_polar(zs[j].0, zs[j].1)).norm() > 1e-2);
                }
            }
            let fs: Vec<_> = zs.iter().map(|&(r, t)| single(Complex64::from_polar(r, t), 1)).collect();
            let weights: Vec<Vec<Complex64>> = (0..fs.len()).map(|i| alloc::vec![c(seeds[i].0, seeds[i].1)]).collect();
            prop_assert!(inner_product_bound_holds(&fs, &weights));
        }
    }
}
