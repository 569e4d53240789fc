//! Finite Blaschke products, the Poisson kernel, and Taylor expansions of
//! the Takenaka basis of the model space `H(φ)`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// `φ(z) = ∏ ((z − α_j)/(1 − ᾱ_j z))^{m_j}` with every `|α_j| < 1`.
///
/// Factor order is kept as given: the Takenaka basis (and hence the matrix
/// of `S*(φ)`) depends on it, while the model space does not.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct {
    factors: Vec<(Complex64, usize)>,
}

impl BlaschkeProduct {
    pub fn new(factors: Vec<(Complex64, usize)>) -> Result<Self> {
        if factors.is_empty() || factors.iter().any(|&(_, m)| m == 0) {
            return Err(Error::EmptyProduct);
        }
        for &(a, _) in &factors {
            let r = a.norm();
            if !(r < 1.0) {
                return Err(Error::AlphaOutOfRange { modulus: r });
            }
        }
        Ok(Self { factors })
    }

    /// `((z − α)/(1 − ᾱz))^n`.
    pub fn single_zero(alpha: Complex64, n: usize) -> Result<Self> {
        Self::new(vec![(alpha, n)])
    }

    /// `zⁿ`.
    pub fn monomial(n: usize) -> Result<Self> {
        Self::new(vec![(Complex64::new(0.0, 0.0), n)])
    }

    /// Build from a flat zero list, merging consecutive repeats.
    pub fn from_zeros(zeros: &[Complex64]) -> Result<Self> {
        let mut factors: Vec<(Complex64, usize)> = Vec::new();
        for &z in zeros {
            match factors.last_mut() {
                Some((a, m)) if *a == z => *m += 1,
                _ => factors.push((z, 1)),
            }
        }
        Self::new(factors)
    }

    pub fn factors(&self) -> &[(Complex64, usize)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|&(_, m)| m).sum()
    }

    /// Zeros repeated by multiplicity, in factor order.
    pub fn zeros(&self) -> Vec<Complex64> {
        self.factors.iter().flat_map(|&(a, m)| core::iter::repeat(a).take(m)).collect()
    }

    /// Distinct zeros with their total multiplicity, in first-seen order.
    pub fn distinct_zeros(&self) -> Vec<(Complex64, usize)> {
        let mut out: Vec<(Complex64, usize)> = Vec::new();
        for &(a, m) in &self.factors {
            match out.iter_mut().find(|(b, _)| *b == a) {
                Some((_, k)) => *k += m,
                None => out.push((a, m)),
            }
        }
        out
    }

    /// `Some((α, n))` when the product has exactly one distinct zero.
    pub fn as_single_zero(&self) -> Option<(Complex64, usize)> {
        match self.distinct_zeros().as_slice() {
            [(a, n)] => Some((*a, *n)),
            _ => None,
        }
    }

    pub fn max_zero_modulus(&self) -> f64 {
        self.factors.iter().map(|(a, _)| a.norm()).fold(0.0, f64::max)
    }

    /// Product `φ·ψ` with `ψ`'s factors appended.
    pub fn product(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Self { factors }
    }

    /// `φ(z)`. Poles lie outside the closed disc so any `|z| ≤ 1` is safe.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        self.factors.iter().fold(one, |acc, &(a, m)| {
            let f = (z - a) / (one - a.conj() * z);
            acc * f.powu(m as u32)
        })
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange { modulus: alpha })
    }
}

/// `P_α(e^{it}) = (1 − α²)/|1 − α e^{it}|²` for `0 ≤ α < 1`.
pub fn poisson_kernel(alpha: f64, t: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok((1.0 - alpha * alpha) / (1.0 - 2.0 * alpha * t.cos() + alpha * alpha))
}

/// Symbol of `Re(S*(φ_{−α}))`:
/// `h(t) = ((1 + α²)cos t − 2α)/(1 − 2α cos t + α²)`.
pub fn symbol_h(alpha: f64, t: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let c = t.cos();
    Ok(((1.0 + alpha * alpha) * c - 2.0 * alpha) / (1.0 - 2.0 * alpha * c + alpha * alpha))
}

/// Truncated Taylor expansion `Σ_{m<N} c_m z^m`.
#[derive(Debug, Clone)]
pub struct TaylorSeries {
    pub coeffs: Vec<Complex64>,
    /// Upper bound on the discarded tail energy `Σ_{m≥N} |c_m|²`, from a
    /// nonnegative majorant series.
    pub truncation_error_bound: f64,
}

impl TaylorSeries {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Σ |c_m|²` over the retained coefficients.
    pub fn energy(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }
}

/// Hard cap on the number of Taylor terms.
pub const MAX_TERMS: usize = 100_000;
/// Zeros closer than this to the circle are refused for series work.
pub const MAX_ZERO_MODULUS: f64 = 0.999;

/// Taylor coefficients of the Takenaka vector
/// `e_k(z) = σ_k/(1 − ᾱ_k z) · ∏_{j<k} (z − α_j)/(1 − ᾱ_j z)`
/// up to `z^{N−1}`, zeros taken in flattened order.
pub fn takenaka_taylor(phi: &BlaschkeProduct, k: usize, n_terms: usize) -> Result<TaylorSeries> {
    let zeros = phi.zeros();
    if k == 0 || k > zeros.len() {
        return Err(Error::IndexOutOfRange { index: k, max: zeros.len() });
    }
    let n_terms = n_terms.max(1);
    let mut x = vec![Complex64::new(0.0, 0.0); n_terms];
    x[0] = Complex64::new(1.0, 0.0);
    let mut y = vec![Complex64::new(0.0, 0.0); n_terms];
    // multiply by (z − α)/(1 − ᾱz): y_m = ᾱ y_{m−1} + x_{m−1} − α x_m
    for &a in &zeros[..k - 1] {
        let ac = a.conj();
        y[0] = -a * x[0];
        for m in 1..n_terms {
            y[m] = ac * y[m - 1] + x[m - 1] - a * x[m];
        }
        core::mem::swap(&mut x, &mut y);
    }
    // multiply by σ_k/(1 − ᾱ_k z): y_m = ᾱ_k y_{m−1} + x_m
    let ak = zeros[k - 1];
    let sigma = (1.0 - ak.norm_sqr()).sqrt();
    y[0] = x[0];
    for m in 1..n_terms {
        y[m] = ak.conj() * y[m - 1] + x[m];
    }
    for v in y.iter_mut() {
        *v *= sigma;
    }
    let rho = zeros[..k].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let bound = tail_energy_bound(rho, sigma, k, n_terms);
    Ok(TaylorSeries { coeffs: y, truncation_error_bound: bound })
}

/// Tail energy bound for `e_k` truncated at `N` terms.
///
/// Coefficientwise `|e_k| ≪ σ (1 + (1−ρ)z)^{k−1} / (1 − ρz)^k`; writing
/// `a_m` for the majorant coefficients, `a_{m+1}/a_m ≤ ρ(m+1)/(m−k+2)` for
/// `m ≥ k−1`, so the tail is at most `a_N² / (1 − r²)` with `r` that ratio
/// at `m = N`.
fn tail_energy_bound(rho: f64, sigma: f64, k: usize, n: usize) -> f64 {
    if n < k {
        return f64::INFINITY;
    }
    let ratio = rho * (n as f64 + 1.0) / ((n + 2 - k) as f64);
    if ratio >= 1.0 {
        return f64::INFINITY;
    }
    let km1 = k - 1;
    let mut a_n = 0.0;
    let mut binom_small = 1.0; // C(k−1, i)
    for i in 0..=km1.min(n) {
        let j = n - i;
        // C(j + k − 1, k − 1)
        let mut big = 1.0;
        for s in 1..=km1 {
            big *= (j + s) as f64 / s as f64;
        }
        a_n += binom_small * (1.0 - rho).powi(i as i32) * big * rho.powi(j as i32);
        binom_small *= (km1 - i) as f64 / (i + 1) as f64;
    }
    a_n *= sigma;
    a_n * a_n / (1.0 - ratio * ratio)
}

/// Truncation order for the Takenaka expansions of `φ`: the smallest power
/// of two (times the seed order) with `ρ_max^N < 1e−14` and every basis
/// vector's tail below `tail_tol` in norm.
pub fn default_truncation(phi: &BlaschkeProduct, tail_tol: f64) -> Result<usize> {
    let rho = phi.max_zero_modulus();
    if rho > MAX_ZERO_MODULUS {
        return Err(Error::TruncationTooLong { cap: MAX_TERMS, rho_max: rho });
    }
    let n = phi.degree();
    let mut terms = if rho == 0.0 {
        n + 1
    } else {
        ((1e-14f64).ln() / rho.ln()).ceil() as usize + n + 1
    };
    let zeros = phi.zeros();
    loop {
        let worst = (1..=n)
            .map(|k| {
                let r = zeros[..k].iter().map(|a| a.norm()).fold(0.0, f64::max);
                let s = (1.0 - zeros[k - 1].norm_sqr()).sqrt();
                tail_energy_bound(r, s, k, terms)
            })
            .fold(0.0, f64::max);
        if worst.sqrt() < tail_tol {
            return Ok(terms);
        }
        if terms >= MAX_TERMS {
            return Err(Error::TruncationTooLong { cap: MAX_TERMS, rho_max: rho });
        }
        terms = (terms * 2).min(MAX_TERMS);
    }
}
