//! Rank-one unitary dilations of class `Υ_n` matrices and the inscribed
//! `(n+1)`-gons they produce.
//!
//! For `T ∈ Υ_n` write `I − T†T = d d†` and `I − TT† = d_* d_*†`. Every
//! `(n+1)×(n+1)` unitary with top-left block `T` is, up to the phase of the
//! border, of the form
//!
//! ```text
//! U(φ) = [ T            d_*        ]
//!        [ e^{iφ} d†    e^{iφ} c₀  ]      c₀ = −(d† T† d_*)/‖d‖²
//! ```
//!
//! and its eigenvalues are the vertices of a polygon inscribed in the unit
//! circle whose edges are tangent to `∂W(T)`.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{self, hermitian_eig, inner, vec_norm, ComplexMatrix};
use crate::numerical_range::{boundary, support_function};
use crate::optimize::golden_min;

/// Second-eigenvalue threshold for a defect operator to count as rank one.
pub const RANK_ONE_TOL: f64 = 1e-8;
/// Largest `|det(U − λI)|` accepted for a placed vertex.
pub const PHASE_RESIDUAL_TOL: f64 = 1e-8;
/// Half-width of the band in which edge violations certify tangency.
pub const CIRCUMSCRIPTION_TOL: f64 = 1e-6;

const PHASE_SEEDS: usize = 64;

fn rank_one_factor(defect: &ComplexMatrix) -> Result<Vec<Complex64>> {
    let n = defect.rows();
    let eig = hermitian_eig(&defect.hermitian_part())?;
    if n > 1 {
        let second = eig.values()[n - 2];
        if second.abs() >= RANK_ONE_TOL {
            return Err(Error::NotRankOne { second });
        }
    }
    let mu = eig.largest().max(0.0);
    let mut u = eig.vector(n - 1);
    if let Some(first) = u.iter().find(|z| z.norm() > 1e-12).copied() {
        let phase = first.conj() / first.norm();
        for z in &mut u {
            *z *= phase;
        }
    }
    let s = mu.sqrt();
    Ok(u.into_iter().map(|z| z * s).collect())
}

/// `(d, d_*)` with `d d† = I − T†T` and `d_* d_*† = I − TT†`. The phase of
/// each is fixed by making its first nonzero component real and positive.
pub fn defect_vectors(t: &ComplexMatrix) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    let n = t.require_square()?;
    let id = ComplexMatrix::identity(n);
    let d = rank_one_factor(&(&id - &(&t.adjoint() * t)))?;
    let d_star = rank_one_factor(&(&id - &(t * &t.adjoint())))?;
    Ok((d, d_star))
}

/// `c₀ = −(d† T† d_*)/‖d‖²`.
fn corner(t: &ComplexMatrix, d: &[Complex64], d_star: &[Complex64]) -> Complex64 {
    let td = t.adjoint().mul_vec(d_star);
    -inner(&td, d) / vec_norm(d).powi(2)
}

fn assemble(t: &ComplexMatrix, d: &[Complex64], d_star: &[Complex64], c0: Complex64, phase: f64) -> ComplexMatrix {
    let n = t.rows();
    let e = Complex64::from_polar(1.0, phase);
    ComplexMatrix::from_fn(n + 1, n + 1, |r, c| match (r < n, c < n) {
        (true, true) => t[(r, c)],
        (true, false) => d_star[r],
        (false, true) => e * d[c].conj(),
        (false, false) => e * c0,
    })
}

/// The unitary dilation `U(phase)` of `T`.
pub fn unitary_dilation(t: &ComplexMatrix, phase: f64) -> Result<ComplexMatrix> {
    let (d, d_star) = defect_vectors(t)?;
    let c0 = corner(t, &d, &d_star);
    Ok(assemble(t, &d, &d_star, c0, phase))
}

fn sort_by_argument(v: &mut [Complex64]) {
    v.sort_by(|a, b| a.arg().rem_euclid(TAU).total_cmp(&b.arg().rem_euclid(TAU)));
}

fn rayleigh_spectrum(u: &ComplexMatrix, h: &ComplexMatrix) -> Result<(Vec<Complex64>, f64)> {
    let eig = hermitian_eig(&h.hermitian_part())?;
    let mut worst = 0.0f64;
    let mut values = Vec::with_capacity(u.rows());
    for k in 0..u.rows() {
        let v = eig.vector(k);
        let uv = u.mul_vec(&v);
        let mu = inner(&uv, &v);
        let res: Vec<Complex64> = uv.iter().zip(&v).map(|(a, b)| a - mu * b).collect();
        worst = worst.max(vec_norm(&res));
        values.push(mu);
    }
    Ok((values, worst))
}

/// Eigenvalues of a unitary matrix sorted by argument in `[0, 2π)`.
///
/// Eigenvectors come from `Re(U)`; when two eigenvalues share a real part
/// the Cayley transform `−i(e^{iψ} + U)(e^{iψ} − U)^{−1}` is diagonalised
/// instead, with `ψ` placed in the widest gap of the spectrum.
pub fn unitary_eigenvalues(u: &ComplexMatrix) -> Result<Vec<Complex64>> {
    let n = u.require_square()?;
    let re = u.hermitian_part();
    let (mut values, residual) = rayleigh_spectrum(u, &re)?;
    if residual < 1e-10 {
        sort_by_argument(&mut values);
        return Ok(values);
    }
    let re_eig = hermitian_eig(&re)?;
    let mut angles: Vec<f64> = re_eig
        .values()
        .iter()
        .flat_map(|&x| {
            let a = x.clamp(-1.0, 1.0).acos();
            [a, TAU - a]
        })
        .collect();
    angles.sort_by(f64::total_cmp);
    let mut psi = 0.0;
    let mut widest = -1.0;
    for (j, &a) in angles.iter().enumerate() {
        let next = if j + 1 < angles.len() { angles[j + 1] } else { angles[0] + TAU };
        if next - a > widest {
            widest = next - a;
            psi = 0.5 * (a + next);
        }
    }
    let e = Complex64::from_polar(1.0, psi);
    let id = ComplexMatrix::identity(n);
    let plus = &id.scale(e) + u;
    let minus = &id.scale(e) - u;
    let cayley = linalg::solve(&minus.transpose(), &plus.transpose())?.transpose().scale(Complex64::new(0.0, -1.0));
    let (mut values, _) = rayleigh_spectrum(u, &cayley)?;
    sort_by_argument(&mut values);
    Ok(values)
}

/// The polygon spanned by the eigenvalues of a unitary dilation.
#[derive(Debug, Clone, PartialEq)]
pub struct PonceletPolygon {
    vertices: Vec<Complex64>,
    source_vertex: Complex64,
    phase: f64,
}

impl PonceletPolygon {
    /// Polygon from arbitrary vertices, sorted by argument.
    pub fn from_vertices(mut vertices: Vec<Complex64>, source_vertex: Complex64, phase: f64) -> Self {
        sort_by_argument(&mut vertices);
        Self { vertices, source_vertex, phase }
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn source_vertex(&self) -> Complex64 {
        self.source_vertex
    }

    /// Dilation phase that produced this polygon.
    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn min_vertex_gap(&self) -> f64 {
        let mut gap = f64::INFINITY;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                gap = gap.min((a - b).norm());
            }
        }
        gap
    }

    /// Distance from the source vertex to the nearest vertex.
    pub fn source_distance(&self) -> f64 {
        self.vertices.iter().map(|v| (v - self.source_vertex).norm()).fold(f64::INFINITY, f64::min)
    }

    pub fn max_modulus_error(&self) -> f64 {
        self.vertices.iter().map(|v| (v.norm() - 1.0).abs()).fold(0.0, f64::max)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            vertices: self.vertices.iter().map(|v| v * factor).collect(),
            source_vertex: self.source_vertex * factor,
            phase: self.phase,
        }
    }

    /// Outward unit normals and offsets `(ν_j, c_j)` of the edge lines
    /// `Re(ν̄ z) = c`, for counter-clockwise vertices.
    pub fn edge_lines(&self) -> Vec<(Complex64, f64)> {
        let m = self.vertices.len();
        (0..m)
            .map(|j| {
                let a = self.vertices[j];
                let b = self.vertices[(j + 1) % m];
                let e = b - a;
                let normal = Complex64::new(0.0, -1.0) * e / e.norm();
                (normal, (normal.conj() * a).re)
            })
            .collect()
    }
}

/// Phase `φ` with `λ ∈ σ(U(φ))`, from the Schur complement
/// `e^{iφ} = λ / (c₀ − d†(T − λI)^{−1} d_*)`.
pub fn dilation_phase_for_vertex(t: &ComplexMatrix, lambda: Complex64) -> Result<f64> {
    let (d, d_star) = defect_vectors(t)?;
    let c0 = corner(t, &d, &d_star);
    analytic_phase(t, &d, &d_star, c0, lambda)
}

fn analytic_phase(t: &ComplexMatrix, d: &[Complex64], d_star: &[Complex64], c0: Complex64, lambda: Complex64) -> Result<f64> {
    let n = t.rows();
    let shifted = t.shift_diagonal(-lambda);
    let rhs = ComplexMatrix::new(n, 1, d_star.to_vec())?;
    let x = linalg::solve(&shifted, &rhs)?;
    let denom = c0 - inner(x.as_slice(), d);
    Ok((lambda / denom).arg().rem_euclid(TAU))
}

fn phase_residual(t: &ComplexMatrix, d: &[Complex64], d_star: &[Complex64], c0: Complex64, lambda: Complex64, phase: f64) -> f64 {
    let u = assemble(t, d, d_star, c0, phase).shift_diagonal(-lambda);
    linalg::determinant(&u).map(|z| z.norm()).unwrap_or(0.0)
}

/// The unique inscribed `(n+1)`-gon with vertex `λ` (`|λ| = 1`) whose edges
/// are tangent to `∂W(T)`.
///
/// The dilation phase is located by golden-section search on
/// `|det(U(φ) − λI)|` seeded with 64 samples, and compared against the
/// Schur-complement solution; the better of the two is kept.
pub fn poncelet_polygon(t: &ComplexMatrix, lambda: Complex64) -> Result<PonceletPolygon> {
    let lambda = lambda / lambda.norm();
    let (d, d_star) = defect_vectors(t)?;
    let c0 = corner(t, &d, &d_star);
    let resid = |phase: f64| phase_residual(t, &d, &d_star, c0, lambda, phase);

    let h = TAU / PHASE_SEEDS as f64;
    let (mut seed, mut seed_val) = (0.0, f64::INFINITY);
    for j in 0..PHASE_SEEDS {
        let v = resid(j as f64 * h);
        if v < seed_val {
            seed_val = v;
            seed = j as f64 * h;
        }
    }
    let (mut phase, mut best) = golden_min(resid, seed - h, seed + h, 1e-14);
    if let Ok(p) = analytic_phase(t, &d, &d_star, c0, lambda) {
        let r = resid(p);
        if r < best {
            phase = p;
            best = r;
        }
    }
    if !(best < PHASE_RESIDUAL_TOL) {
        return Err(Error::PhaseSearchFailure { residual: best });
    }
    let phase = phase.rem_euclid(TAU);
    let u = assemble(t, &d, &d_star, c0, phase);
    let vertices = unitary_eigenvalues(&u)?;
    let polygon = PonceletPolygon::from_vertices(vertices, lambda, phase);
    let miss = polygon.source_distance();
    if miss > 1e-8 {
        return Err(Error::PhaseSearchFailure { residual: miss });
    }
    Ok(polygon)
}

/// Outcome of testing a polygon for tangency to `∂W(T)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircumscriptionReport {
    /// Largest `λ(ν_j) − c_j` over edges; positive values mean `W(T)` crosses
    /// the edge line.
    pub max_violation: f64,
    /// Smallest `λ(ν_j) − c_j`; strongly negative values mean an edge misses
    /// `W(T)`.
    pub min_violation: f64,
    /// Largest signed excursion of the sampled boundary outside the polygon.
    pub boundary_excursion: f64,
}

impl CircumscriptionReport {
    pub fn boundary_inside(&self) -> bool {
        self.boundary_excursion <= CIRCUMSCRIPTION_TOL
    }

    /// Every edge is tangent within tolerance and the boundary stays inside.
    pub fn certified(&self) -> bool {
        self.max_violation.abs() <= CIRCUMSCRIPTION_TOL
            && self.min_violation.abs() <= CIRCUMSCRIPTION_TOL
            && self.boundary_inside()
    }
}

/// Compare each edge line of `polygon` with the support function of `T`
/// and check the sampled boundary of `W(T)` lies inside.
pub fn circumscription_check(polygon: &PonceletPolygon, t: &ComplexMatrix, grid_size: usize) -> Result<CircumscriptionReport> {
    let b = boundary(t, grid_size)?;
    circumscription_check_with_boundary(polygon, t, &b.points)
}

/// [`circumscription_check`] against precomputed boundary points.
pub fn circumscription_check_with_boundary(
    polygon: &PonceletPolygon,
    t: &ComplexMatrix,
    points: &[(f64, f64)],
) -> Result<CircumscriptionReport> {
    let lines = polygon.edge_lines();
    let mut max_violation = f64::NEG_INFINITY;
    let mut min_violation = f64::INFINITY;
    for &(normal, offset) in &lines {
        let v = support_function(t, normal.arg())? - offset;
        max_violation = max_violation.max(v);
        min_violation = min_violation.min(v);
    }
    let mut boundary_excursion = f64::NEG_INFINITY;
    for &(x, y) in points {
        let z = Complex64::new(x, y);
        for &(normal, offset) in &lines {
            boundary_excursion = boundary_excursion.max((normal.conj() * z).re - offset);
        }
    }
    Ok(CircumscriptionReport { max_violation, min_violation, boundary_excursion })
}
