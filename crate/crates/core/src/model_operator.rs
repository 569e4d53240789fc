//! Matrices of the compressed shift `S(φ)` and its adjoint in the Takenaka
//! basis, and the characteristic determinant `D_n(λ, θ)` of
//! `Re(e^{−iθ} S*(φ_{−α}))`.
//!
//! We store `S*(φ)` (upper triangular, diagonal `ᾱ_l`) and expose `S(φ)` as
//! its conjugate transpose. `W(S(φ))` is the reflection of `W(S*(φ))` in the
//! real axis, so the two share a numerical radius.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::blaschke::BlaschkeProduct;
use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix};

/// `S*(φ)` in the Takenaka basis together with its symbol `φ`.
#[derive(Debug, Clone)]
pub struct ModelOperator {
    phi: BlaschkeProduct,
    matrix: ComplexMatrix,
}

impl ModelOperator {
    pub fn phi(&self) -> &BlaschkeProduct {
        &self.phi
    }

    /// The matrix of `S*(φ)`.
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// The matrix of `S(φ) = S*(φ)†`.
    pub fn compressed_shift(&self) -> ComplexMatrix {
        self.matrix.adjoint()
    }

    pub fn degree(&self) -> usize {
        self.matrix.rows()
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn operator_norm(&self) -> Result<f64> {
        linalg::operator_norm(&self.matrix)
    }

    /// Second largest eigenvalue of `I − M†M`; zero (numerically) for
    /// members of `Υ_n`, whose defect has rank one.
    pub fn defect_second_eigenvalue(&self) -> Result<f64> {
        second_defect_eigenvalue(&self.matrix)
    }
}

/// Second largest eigenvalue of `I − T†T` (0 for `n = 1`).
pub fn second_defect_eigenvalue(t: &ComplexMatrix) -> Result<f64> {
    let n = t.require_square()?;
    if n == 1 {
        return Ok(0.0);
    }
    let defect = &ComplexMatrix::identity(n) - &(&t.adjoint() * t);
    let eig = linalg::hermitian_eig(&defect.hermitian_part())?;
    Ok(eig.values()[n - 2])
}

/// `S_n`: ones on the subdiagonal, `S_n e_j = e_{j+1}`.
pub fn shift_matrix(n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |r, c| {
        if r == c + 1 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }
    })
}

/// `S_n*`: ones on the superdiagonal.
pub fn shift_adjoint_matrix(n: usize) -> ComplexMatrix {
    shift_matrix(n).adjoint()
}

/// Matrix of `S*(φ)` in the Takenaka basis `{e_1, …, e_n}`:
///
/// * `a_ll = ᾱ_l`
/// * `a_{l,l+1} = σ_l σ_{l+1}`
/// * `a_lk = σ_l σ_k ∏_{l<j<k} (−α_j)` for `k > l + 1`
///
/// with `σ_k = (1 − |α_k|²)^{1/2}` and zeros flattened in factor order.
pub fn compress_shift_adjoint(phi: &BlaschkeProduct) -> ModelOperator {
    let zeros = phi.zeros();
    let sigma: Vec<f64> = zeros.iter().map(|a| (1.0 - a.norm_sqr()).sqrt()).collect();
    let n = zeros.len();
    let mut m = ComplexMatrix::zeros(n, n);
    for l in 0..n {
        m[(l, l)] = zeros[l].conj();
        let mut prod = Complex64::new(1.0, 0.0);
        for k in l + 1..n {
            if k > l + 1 {
                prod *= -zeros[k - 1];
            }
            m[(l, k)] = prod * (sigma[l] * sigma[k]);
        }
    }
    ModelOperator { phi: phi.clone(), matrix: m }
}

/// The single-zero matrix of `S*(φ_α)`, `φ_α = ((z − α)/(1 − ᾱz))^n`:
/// upper-triangular Toeplitz with diagonal `ᾱ`, first superdiagonal
/// `σ = 1 − |α|²` and `k`-th superdiagonal `σ(−α)^{k−1}`.
pub fn single_zero_matrix(alpha: Complex64, n: usize) -> Result<ModelOperator> {
    let phi = BlaschkeProduct::single_zero(alpha, n)?;
    let sigma = 1.0 - alpha.norm_sqr();
    let mut diag = Vec::with_capacity(n);
    diag.push(alpha.conj());
    let mut p = Complex64::new(sigma, 0.0);
    for _ in 1..n {
        diag.push(p);
        p *= -alpha;
    }
    let matrix = ComplexMatrix::from_fn(n, n, |r, c| if c >= r { diag[c - r] } else { Complex64::new(0.0, 0.0) });
    Ok(ModelOperator { phi, matrix })
}

/// `(S_n* + ᾱI)(I + αS_n*)^{−1}`, which equals [`single_zero_matrix`].
pub fn mobius_of_shift(alpha: Complex64, n: usize) -> Result<ComplexMatrix> {
    let r = alpha.norm();
    if !(r < 1.0) {
        return Err(Error::AlphaOutOfRange { modulus: r });
    }
    if n == 0 {
        return Err(Error::EmptyProduct);
    }
    let s = shift_adjoint_matrix(n);
    let num = s.shift_diagonal(alpha.conj());
    let den = s.scale(alpha).shift_diagonal(Complex64::new(1.0, 0.0));
    // X = num · den^{-1}  ⇔  den^T X^T = num^T
    let xt = linalg::solve(&den.transpose(), &num.transpose())?;
    Ok(xt.transpose())
}

/// Evaluate `φ(T) = ∏ (T − α_j I)(I − ᾱ_j T)^{−1}`.
pub fn blaschke_of_matrix(phi: &BlaschkeProduct, t: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = t.require_square()?;
    let id = ComplexMatrix::identity(n);
    let mut acc = id.clone();
    for a in phi.zeros() {
        let num = t.shift_diagonal(-a);
        let den = &id - &t.scale(a.conj());
        // num and den commute, so num · den^{-1} = den^{-1} · num
        let factor = linalg::solve(&den, &num)?;
        acc = &acc * &factor;
    }
    Ok(acc)
}

fn check_real_alpha(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange { modulus: alpha })
    }
}

/// `D_n(λ, θ) = det(Re(e^{−iθ} S*(φ_{−α})) − λI_n)` by the three-term
/// recurrence
///
/// `D_n = (−2α cos θ − λ(1 + α²)) D_{n−1} − |σ/2·e^{iθ} + α² cos θ + αλ|² D_{n−2}`
///
/// with `D_0 = 1`, `D_1 = −α cos θ − λ`, `σ = 1 − α²`.
///
/// The zero of the underlying product sits at `−α` with `α ∈ [0, 1)`.
pub fn char_det_recurrence(alpha: f64, lambda: f64, theta: f64, n: usize) -> Result<f64> {
    check_real_alpha(alpha)?;
    let (b, c2) = recurrence_coefficients(alpha, lambda, theta);
    let d1 = -alpha * theta.cos() - lambda;
    if n == 0 {
        return Ok(1.0);
    }
    let (mut prev, mut cur) = (1.0, d1);
    for _ in 2..=n {
        let next = b * cur - c2 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

fn recurrence_coefficients(alpha: f64, lambda: f64, theta: f64) -> (f64, f64) {
    let (s, c) = theta.sin_cos();
    let sigma = 1.0 - alpha * alpha;
    let b = -2.0 * alpha * c - lambda * (1.0 + alpha * alpha);
    let w = Complex64::new(0.5 * sigma * c + alpha * alpha * c + alpha * lambda, 0.5 * sigma * s);
    (b, w.norm_sqr())
}

/// Closed form `D_n = A ρ₁ⁿ + B ρ₂ⁿ`, valid for `|λ| < 1`:
///
/// `ρ_{1,2} = (−2α cos θ − λ(1 + α²) ∓ i(1 − α²)(1 − λ²)^{1/2})/2`,
/// `A = ((1 − λ²)^{1/2} − iλ)/(2(1 − λ²)^{1/2})`, `B = Ā`.
pub fn char_det_closed_form(alpha: f64, lambda: f64, theta: f64, n: usize) -> Result<f64> {
    check_real_alpha(alpha)?;
    if lambda.abs() >= 1.0 - 1e-9 {
        return Err(Error::LambdaOnBoundary { lambda });
    }
    let s = (1.0 - lambda * lambda).sqrt();
    let b = -2.0 * alpha * theta.cos() - lambda * (1.0 + alpha * alpha);
    let im = (1.0 - alpha * alpha) * s;
    let rho1 = Complex64::new(0.5 * b, -0.5 * im);
    let rho2 = rho1.conj();
    let a = Complex64::new(s, -lambda) / (2.0 * s);
    let d = a * rho1.powu(n as u32) + a.conj() * rho2.powu(n as u32);
    Ok(d.re)
}

/// `D_n(λ, θ)` through the closed form, falling back to the recurrence when
/// `|λ| ≥ 1 − 1e−9`.
pub fn char_det(alpha: f64, lambda: f64, theta: f64, n: usize) -> Result<f64> {
    match char_det_closed_form(alpha, lambda, theta, n) {
        Err(Error::LambdaOnBoundary { .. }) => char_det_recurrence(alpha, lambda, theta, n),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Matrix entries `<S* e_k, e_l>` from Taylor coefficients: the backward
    /// shift drops the constant term.
    fn matrix_from_taylor(phi: &BlaschkeProduct) -> ComplexMatrix {
        let terms = crate::blaschke::default_truncation(phi, 1e-13).unwrap();
        let basis: Vec<Vec<Complex64>> = (1..=phi.degree())
            .map(|k| crate::blaschke::takenaka_taylor(phi, k, terms).unwrap().coeffs)
            .collect();
        let n = basis.len();
        ComplexMatrix::from_fn(n, n, |l, k| {
            let shifted = &basis[k][1..];
            crate::linalg::inner(shifted, &basis[l][..terms - 1])
        })
    }

    #[test]
    fn monomial_gives_shift_adjoint() {
        let m = compress_shift_adjoint(&BlaschkeProduct::monomial(4).unwrap());
        assert_eq!(m.matrix(), &shift_adjoint_matrix(4));
        assert_eq!(m.compressed_shift(), shift_matrix(4));
    }

    #[test]
    fn scalar_case() {
        let a = c(0.3, -0.4);
        let m = compress_shift_adjoint(&BlaschkeProduct::single_zero(a, 1).unwrap());
        assert_eq!(m.matrix()[(0, 0)], a.conj());
    }

    #[test]
    fn single_zero_examples() {
        assert_eq!(single_zero_matrix(c(0.0, 0.0), 3).unwrap().matrix(), &shift_adjoint_matrix(3));
        let m2 = single_zero_matrix(c(0.5, 0.0), 2).unwrap();
        let want = ComplexMatrix::from_real_rows(&[&[0.5, 0.75], &[0.0, 0.5]]).unwrap();
        assert!(m2.matrix().max_abs_diff(&want) < 1e-16);
        let m3 = single_zero_matrix(c(0.5, 0.0), 3).unwrap();
        assert!((m3.matrix()[(0, 2)] - c(-0.375, 0.0)).norm() < 1e-16);
        assert!(matches!(single_zero_matrix(c(0.6, 0.8), 2), Err(Error::AlphaOutOfRange { .. })));
    }

    #[test]
    fn general_construction_matches_single_zero() {
        for &a in &[c(0.5, 0.0), c(-0.2, 0.6), c(0.0, -0.7)] {
            let g = compress_shift_adjoint(&BlaschkeProduct::single_zero(a, 3).unwrap());
            let s = single_zero_matrix(a, 3).unwrap();
            assert!(g.matrix().max_abs_diff(s.matrix()) < 1e-14);
        }
    }

    #[test]
    fn mobius_identity() {
        assert!(mobius_of_shift(c(0.0, 0.0), 4).unwrap().max_abs_diff(&shift_adjoint_matrix(4)) < 1e-15);
        for &(a, n) in &[(c(0.5, 0.0), 4), (c(0.3, -0.5), 6), (c(-0.8, 0.1), 5)] {
            let m = mobius_of_shift(a, n).unwrap();
            assert!(m.max_abs_diff(single_zero_matrix(a, n).unwrap().matrix()) < 1e-12);
        }
        let scalar = mobius_of_shift(c(0.0, 0.3), 1).unwrap();
        assert!((scalar[(0, 0)] - c(0.0, -0.3)).norm() < 1e-16);
    }

    #[test]
    fn takenaka_matrix_matches_backward_shift_oracle() {
        let phi = BlaschkeProduct::new(alloc::vec![(c(0.3, 0.2), 2), (c(-0.5, 0.1), 1), (c(0.0, 0.6), 1)]).unwrap();
        let oracle = matrix_from_taylor(&phi);
        let m = compress_shift_adjoint(&phi);
        assert!(m.matrix().max_abs_diff(&oracle) < 1e-12);
    }

    #[test]
    fn char_det_examples() {
        assert!((char_det_recurrence(0.5, 0.0, 0.0, 1).unwrap() + 0.5).abs() < 1e-16);
        assert!((char_det_recurrence(0.0, 0.0, 0.0, 2).unwrap() + 0.25).abs() < 1e-16);
        assert_eq!(char_det_closed_form(0.3, 0.2, 1.0, 0).unwrap(), 1.0);
        let d1 = char_det_closed_form(0.3, 0.2, 1.0, 1).unwrap();
        assert!((d1 - (-0.3 * 1.0f64.cos() - 0.2)).abs() < 1e-15);
        let r = char_det_recurrence(0.3, 0.5, 2.0, 6).unwrap();
        let cf = char_det_closed_form(0.3, 0.5, 2.0, 6).unwrap();
        assert!((r - cf).abs() <= 1e-10 * r.abs().max(1e-300));
        assert!(matches!(char_det_closed_form(0.3, 1.0, 0.0, 3), Err(Error::LambdaOnBoundary { .. })));
        assert!((char_det(0.3, 1.0, 0.0, 3).unwrap() - char_det_recurrence(0.3, 1.0, 0.0, 3).unwrap()).abs() == 0.0);
    }

    fn det_via_eigen(alpha: f64, lambda: f64, theta: f64, n: usize) -> f64 {
        let m = single_zero_matrix(c(-alpha, 0.0), n).unwrap();
        let h = m.matrix().rotated_hermitian_part(theta);
        let e = crate::linalg::hermitian_eig(&h).unwrap();
        e.values().iter().map(|v| v - lambda).product()
    }

    #[test]
    fn char_det_matches_dense_determinant() {
        let d = det_via_eigen(0.5, 0.3, 1.0, 5);
        let r = char_det_recurrence(0.5, 0.3, 1.0, 5).unwrap();
        assert!((d - r).abs() < 1e-10);
    }

    #[test]
    fn minimal_function_annihilates() {
        let phi = BlaschkeProduct::new(alloc::vec![(c(0.4, 0.1), 2), (c(-0.3, -0.6), 1), (c(0.7, 0.0), 2)]).unwrap();
        let s = compress_shift_adjoint(&phi).compressed_shift();
        let z = blaschke_of_matrix(&phi, &s).unwrap();
        assert!(crate::linalg::operator_norm(&z).unwrap() < 1e-8);
    }

    fn product_strategy() -> impl Strategy<Value = BlaschkeProduct> {
        proptest::collection::vec((0.0f64..0.8, 0.0f64..core::f64::consts::TAU, 1usize..3), 1..5)
            .prop_filter("degree at most 8", |fs| fs.iter().map(|f| f.2).sum::<usize>() <= 8)
            .prop_map(|fs| {
                BlaschkeProduct::new(fs.into_iter().map(|(r, t, m)| (Complex64::from_polar(r, t), m)).collect()).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn model_operator_in_upsilon(phi in product_strategy()) {
            let m = compress_shift_adjoint(&phi);
            prop_assert!(m.operator_norm().unwrap() <= 1.0 + 1e-10);
            prop_assert!(m.defect_second_eigenvalue().unwrap().abs() < 1e-8);
            let z = blaschke_of_matrix(&phi, &m.compressed_shift()).unwrap();
            prop_assert!(crate::linalg::operator_norm(&z).unwrap() <= 1e-8);
        }

        #[test]
        fn radius_ignores_zero_order(phi in product_strategy()) {
            let mut rev = phi.factors().to_vec();
            rev.reverse();
            let psi = BlaschkeProduct::new(rev).unwrap();
            let a = crate::numerical_range::numerical_radius_default(&compress_shift_adjoint(&phi).compressed_shift()).unwrap();
            let b = crate::numerical_range::numerical_radius_default(&compress_shift_adjoint(&psi).compressed_shift()).unwrap();
            prop_assert!((a - b).abs() < 1e-9);
        }

        #[test]
        fn recurrence_vanishes_at_eigenvalues(alpha in 0.0f64..0.95, theta in 0.0f64..core::f64::consts::TAU, n in 1usize..10) {
            let m = single_zero_matrix(c(-alpha, 0.0), n).unwrap();
            let e = crate::linalg::hermitian_eig(&m.matrix().rotated_hermitian_part(theta)).unwrap();
            for &lam in e.values() {
                prop_assert!(char_det_recurrence(alpha, lam, theta, n).unwrap().abs() < 1e-8);
            }
        }

        #[test]
        fn three_way_char_det(alpha in 0.0f64..0.95, lambda in -0.99f64..0.99, theta in 0.0f64..core::f64::consts::TAU, n in 0usize..12) {
            let r = char_det_recurrence(alpha, lambda, theta, n).unwrap();
            let cf = char_det_closed_form(alpha, lambda, theta, n).unwrap();
            let scale = r.abs().max(1e-12);
            prop_assert!((r - cf).abs() <= 1e-10 * scale.max(1.0));
            if n >= 1 {
                let d = det_via_eigen(alpha, lambda, theta, n);
                prop_assert!((r - d).abs() <= 1e-10 * scale.max(1.0));
            }
        }
    }
}
