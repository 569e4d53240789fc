//! Compressed shifts of finite Blaschke products.
//!
//! This crate builds the matrix of the model operator `S*(φ)` in the
//! Takenaka basis, computes numerical ranges and numerical radii by
//! independent routes (support function, Hermitian norm sweep, explicit
//! root-based formulas), and provides numerical certificates for a family
//! of operator inequalities:
//!
//! * the explicit radius of `S(φ)` when `φ` has a single zero,
//! * the Poncelet circumscription property of class `Υ_n` matrices,
//! * a sharpened Schwarz–Pick inequality for nilpotent contractions,
//! * angle estimates between model subspaces.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! parallel orchestration live in the `numrange` companion crate.
//!
//! ```
//! use numrange_core::{model_operator, numerical_range, radius_formula};
//! use num_complex::Complex64;
//!
//! let alpha = Complex64::new(0.5, 0.0);
//! let m = model_operator::single_zero_matrix(alpha, 2).unwrap();
//! let eig = numerical_range::numerical_radius_default(m.matrix()).unwrap();
//! let formula = radius_formula::radius_single_zero(alpha, 2).unwrap();
//! assert!((eig - 0.875).abs() < 1e-10);
//! assert!((formula - 0.875).abs() < 1e-12);
//! ```

#![no_std]
#![deny(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod optimize;

pub mod blaschke;
pub mod dilation;
pub mod inequalities;
pub mod kms;
pub mod linalg;
pub mod model_operator;
pub mod numerical_range;
pub mod radius_formula;
pub mod subspace;

pub use blaschke::BlaschkeProduct;
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, HermitianEig};
pub use num_complex::Complex64;
