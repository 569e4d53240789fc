//! Kac–Murdock–Szegő matrices `K_n(α) = (α^{|r−s|})` and the angles
//! `t_1 < … < t_n` at which their eigenvalues sample the Poisson kernel.
//!
//! With `x_k = kπ/(n+1)` the angles interlace as
//! `0 < t_1 ≤ x_1 < t_2 ≤ x_2 < … < t_n ≤ x_n`. Each `t_k` is a zero of
//!
//! * `C(t) = cos((n+1)t/2) − α cos((n−1)t/2)` when `k` is odd,
//! * `S(t) = sin((n+1)t/2) − α sin((n−1)t/2)` when `k` is even,
//!
//! and is located by bisection on `(x_{k−1}, x_k]`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::blaschke::{poisson_kernel, symbol_h};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::optimize::bisect;

const ROOT_TOL: f64 = 1e-13;

fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange { modulus: alpha })
    }
}

fn check_t(t: f64) -> Result<()> {
    if t > 0.0 && t < PI {
        Ok(())
    } else {
        Err(Error::TOutOfRange { t })
    }
}

/// `K_n(α)`: real symmetric Toeplitz with entries `α^{|r−s|}`.
pub fn kms_matrix(alpha: f64, n: usize) -> Result<ComplexMatrix> {
    check_alpha(alpha)?;
    let powers: Vec<f64> = (0..n).scan(1.0, |p, _| {
        let cur = *p;
        *p *= alpha;
        Some(cur)
    })
    .collect();
    Ok(ComplexMatrix::from_fn(n, n, |r, c| Complex64::new(powers[r.abs_diff(c)], 0.0)))
}

/// `p_n(cos t) = (sin(n+1)t − 2α sin nt + α² sin(n−1)t)/sin t`.
pub fn p_n_eval(alpha: f64, n: usize, t: f64) -> Result<f64> {
    check_t(t)?;
    let nf = n as f64;
    let num = ((nf + 1.0) * t).sin() - 2.0 * alpha * (nf * t).sin() + alpha * alpha * ((nf - 1.0) * t).sin();
    Ok(num / t.sin())
}

/// Factored form `(2/sin t)·S(t)·C(t)` of [`p_n_eval`].
pub fn p_n_factored(alpha: f64, n: usize, t: f64) -> Result<f64> {
    check_t(t)?;
    Ok(2.0 / t.sin() * parity_sin(alpha, n, t) * parity_cos(alpha, n, t))
}

fn parity_cos(alpha: f64, n: usize, t: f64) -> f64 {
    let nf = n as f64;
    (0.5 * (nf + 1.0) * t).cos() - alpha * (0.5 * (nf - 1.0) * t).cos()
}

fn parity_sin(alpha: f64, n: usize, t: f64) -> f64 {
    let nf = n as f64;
    (0.5 * (nf + 1.0) * t).sin() - alpha * (0.5 * (nf - 1.0) * t).sin()
}

/// The equation whose zero in `(x_{k−1}, x_k]` is `t_k`.
pub fn parity_equation(alpha: f64, n: usize, k: usize, t: f64) -> f64 {
    if k % 2 == 1 {
        parity_cos(alpha, n, t)
    } else {
        parity_sin(alpha, n, t)
    }
}

/// `x_k = kπ/(n+1)`.
pub fn grid_point(n: usize, k: usize) -> f64 {
    k as f64 * PI / (n as f64 + 1.0)
}

/// `t_k` for `1 ≤ k ≤ n`.
pub fn solve_root(alpha: f64, n: usize, k: usize) -> Result<f64> {
    check_alpha(alpha)?;
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let (low, high) = (grid_point(n, k - 1), grid_point(n, k));
    if alpha == 0.0 {
        return Ok(high);
    }
    bisect(|t| parity_equation(alpha, n, k, t), low, high, ROOT_TOL)
        .filter(|&t| t > low)
        .ok_or(Error::BracketFailure { k, low, high })
}

/// All angles `t_1 < … < t_n` with their brackets `(x_{k−1}, x_k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct KmsRootSystem {
    alpha: f64,
    n: usize,
    roots: Vec<f64>,
    brackets: Vec<(f64, f64)>,
}

impl KmsRootSystem {
    pub fn new(alpha: f64, n: usize) -> Result<Self> {
        check_alpha(alpha)?;
        let roots = (1..=n).map(|k| solve_root(alpha, n, k)).collect::<Result<Vec<_>>>()?;
        let brackets = (1..=n).map(|k| (grid_point(n, k - 1), grid_point(n, k))).collect();
        Ok(Self { alpha, n, roots, brackets })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> &[f64] {
        &self.roots
    }

    pub fn brackets(&self) -> &[(f64, f64)] {
        &self.brackets
    }

    /// `t_n`, the root that fixes the numerical radius.
    pub fn last(&self) -> Option<f64> {
        self.roots.last().copied()
    }
}

/// Eigenvalues `P_α(e^{it_k})` of `K_n(α)`, descending.
pub fn kms_eigenvalues(alpha: f64, n: usize) -> Result<Vec<f64>> {
    let sys = KmsRootSystem::new(alpha, n)?;
    sys.roots().iter().map(|&t| poisson_kernel(alpha, t)).collect()
}

/// Spectrum `h(t_k)` of `Re(S*(φ_{−α}))`, descending. At `α = 0` this is
/// `cos(kπ/(n+1))`.
pub fn real_part_spectrum(alpha: f64, n: usize) -> Result<Vec<f64>> {
    let sys = KmsRootSystem::new(alpha, n)?;
    sys.roots().iter().map(|&t| symbol_h(alpha, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eig;
    use crate::model_operator::single_zero_matrix;
    use proptest::prelude::*;

    fn dense_spectrum_desc(m: &ComplexMatrix) -> Vec<f64> {
        let mut v = hermitian_eig(m).unwrap().values().to_vec();
        v.reverse();
        v
    }

    #[test]
    fn kms_matrix_examples() {
        assert_eq!(kms_matrix(0.0, 3).unwrap(), ComplexMatrix::identity(3));
        let k2 = kms_matrix(0.5, 2).unwrap();
        assert_eq!(k2, ComplexMatrix::from_real_rows(&[&[1.0, 0.5], &[0.5, 1.0]]).unwrap());
        assert_eq!(kms_matrix(0.5, 3).unwrap()[(0, 2)].re, 0.25);
        assert!(matches!(kms_matrix(1.0, 2), Err(Error::AlphaOutOfRange { .. })));
    }

    #[test]
    fn p_n_examples() {
        let n = 5;
        for k in 1..=n {
            let x = grid_point(n, k);
            assert!(p_n_eval(0.0, n, x).unwrap().abs() < 1e-12);
        }
        let alpha = 0.4;
        for k in 1..=n {
            let x = grid_point(n, k);
            let want = if k % 2 == 0 { 1.0 } else { -1.0 } * 2.0 * alpha * (1.0 - alpha * x.cos());
            let got = p_n_eval(alpha, n, x).unwrap();
            assert!((got - want).abs() < 1e-12, "k={k}: {got} vs {want}");
            assert_eq!(got.signum(), want.signum());
        }
        assert!(matches!(p_n_eval(0.3, 3, 0.0), Err(Error::TOutOfRange { .. })));
        assert!(matches!(p_n_factored(0.3, 3, PI), Err(Error::TOutOfRange { .. })));
    }

    #[test]
    fn root_examples() {
        for k in 1..=4 {
            assert_eq!(solve_root(0.0, 4, k).unwrap(), grid_point(4, k));
        }
        for &a in &[0.1, 0.5, 0.9] {
            let t2 = solve_root(a, 2, 2).unwrap();
            assert!((t2.cos() - (a - 1.0) / 2.0).abs() < 1e-12);
            let t3 = solve_root(a, 3, 3).unwrap();
            assert!((t3.cos() - (a - (a * a + 8.0).sqrt()) / 4.0).abs() < 1e-12);
        }
        assert!(matches!(solve_root(0.5, 3, 4), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn eigenvalue_examples() {
        assert!(kms_eigenvalues(0.0, 4).unwrap().iter().all(|&v| (v - 1.0).abs() < 1e-15));
        let e = kms_eigenvalues(0.5, 2).unwrap();
        assert!((e[0] - 1.5).abs() < 1e-12 && (e[1] - 0.5).abs() < 1e-12);
        let dense = dense_spectrum_desc(&kms_matrix(0.5, 5).unwrap());
        for (a, b) in kms_eigenvalues(0.5, 5).unwrap().iter().zip(&dense) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn real_part_examples() {
        let s = real_part_spectrum(0.0, 4).unwrap();
        for (k, v) in s.iter().enumerate() {
            assert!((v - grid_point(4, k + 1).cos()).abs() < 1e-15);
        }
        let s = real_part_spectrum(0.5, 2).unwrap();
        let m = single_zero_matrix(Complex64::new(-0.5, 0.0), 2).unwrap();
        let dense = dense_spectrum_desc(&m.matrix().hermitian_part());
        assert!((s[1] - dense[1]).abs() < 1e-12);
        assert!((s[0] - dense[0]).abs() < 1e-12);
    }

    #[test]
    fn affine_relation_with_kms() {
        for &a in &[0.2, 0.5, 0.85] {
            for n in 1..7 {
                let re = single_zero_matrix(Complex64::new(-a, 0.0), n).unwrap().matrix().hermitian_part();
                let k = kms_matrix(a, n).unwrap();
                let shift = (1.0 + a * a) / (1.0 - a * a);
                let rhs = k.shift_diagonal(Complex64::new(-shift, 0.0)).scale_real((1.0 - a * a) / (2.0 * a));
                assert!(re.max_abs_diff(&rhs) < 1e-12);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn roots_interlace_with_grid(alpha in 0.0f64..0.99, n in 1usize..=30) {
            let sys = KmsRootSystem::new(alpha, n).unwrap();
            for (k, (&t, &(lo, hi))) in sys.roots().iter().zip(sys.brackets()).enumerate() {
                prop_assert!(lo < t && t <= hi);
                prop_assert!(parity_equation(alpha, n, k + 1, t).abs() < 1e-11);
                prop_assert!(p_n_eval(alpha, n, t).unwrap().abs() < 1e-9);
            }
            prop_assert!(sys.roots().windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn factored_form_agrees(alpha in 0.0f64..0.99, n in 1usize..40, t in 0.01f64..3.13) {
            let a = p_n_eval(alpha, n, t).unwrap();
            let b = p_n_factored(alpha, n, t).unwrap();
            prop_assert!((a - b).abs() <= 1e-11 * a.abs().max(1.0));
        }

        #[test]
        fn kms_spectrum_matches_dense(alpha in 0.01f64..0.95, n in 1usize..=12) {
            let e = kms_eigenvalues(alpha, n).unwrap();
            let dense = dense_spectrum_desc(&kms_matrix(alpha, n).unwrap());
            let (lo, hi) = ((1.0 - alpha) / (1.0 + alpha), (1.0 + alpha) / (1.0 - alpha));
            for (a, b) in e.iter().zip(&dense) {
                prop_assert!((a - b).abs() < 1e-9);
                prop_assert!(*a > lo && *a < hi);
            }
            prop_assert!(e.windows(2).all(|w| w[0] > w[1]));
        }

        #[test]
        fn real_part_spectrum_matches_dense(alpha in 0.0f64..0.95, n in 1usize..=12) {
            let s = real_part_spectrum(alpha, n).unwrap();
            let m = single_zero_matrix(Complex64::new(-alpha, 0.0), n).unwrap();
            let dense = dense_spectrum_desc(&m.matrix().hermitian_part());
            for (a, b) in s.iter().zip(&dense) {
                prop_assert!((a - b).abs() < 1e-9);
            }
        }
    }
}
