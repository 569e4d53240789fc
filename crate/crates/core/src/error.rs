use thiserror::Error;

/// Errors raised by the numerical kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix dimensions must be at least 1x1")]
    EmptyMatrix,
    #[error("matrix is not Hermitian (asymmetry {asymmetry:e})")]
    NonHermitian { asymmetry: f64 },
    #[error("matrix is singular to working precision (pivot {pivot:e})")]
    Singular { pivot: f64 },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("parameter alpha out of range: |alpha| = {modulus}")]
    AlphaOutOfRange { modulus: f64 },
    #[error("Blaschke product must have positive degree and nonzero multiplicities")]
    EmptyProduct,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("Taylor truncation needs more than {cap} terms (max |zero| = {rho_max})")]
    TruncationTooLong { cap: usize, rho_max: f64 },
    #[error("truncation of {terms} terms leaves tail {tail:e}")]
    TruncationInsufficient { terms: usize, tail: f64 },
    #[error("lambda = {lambda} too close to the closed-form singularity |lambda| = 1")]
    LambdaOnBoundary { lambda: f64 },
    #[error("t = {t} outside the open interval (0, pi)")]
    TOutOfRange { t: f64 },
    #[error("parity equation does not change sign on bracket ({low}, {high}] for k = {k}")]
    BracketFailure { k: usize, low: f64, high: f64 },
    #[error("closed form available only for degrees 2, 3, 4 (got {degree})")]
    UnsupportedDegree { degree: usize },
    #[error("defect operator is not rank one (second eigenvalue {second:e})")]
    NotRankOne { second: f64 },
    #[error("no dilation phase places the vertex in the spectrum (residual {residual:e})")]
    PhaseSearchFailure { residual: f64 },
    #[error("map is constant; vanishing order undefined")]
    ConstantMap,
    #[error("polynomial is not a self-map of the disc (boundary sup {sup})")]
    SelfMapViolation { sup: f64 },
    #[error("matrix is not nilpotent of order {order} (residual {residual:e})")]
    NotNilpotent { order: usize, residual: f64 },
    #[error("matrix is not a contraction (norm {norm})")]
    NotContraction { norm: f64 },
    #[error("grid size {got} below minimum {min}")]
    GridTooSmall { got: usize, min: usize },
    #[error("products share the zero {re}{im:+}i")]
    CommonZero { re: f64, im: f64 },
    #[error("product has more than one distinct zero")]
    NotSingleZero,
    #[error("factors {first} and {second} share a zero")]
    DuplicateZero { first: usize, second: usize },
    #[error("need at least {min} factors, got {got}")]
    TooFewFactors { min: usize, got: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
