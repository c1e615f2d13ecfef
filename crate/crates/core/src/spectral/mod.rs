//! Fourier representation of scalar fields on the 2π-periodic torus and the
//! operators of the dissipative SQG equation.

mod field;
mod grid;
mod ops;
mod transform;

use thiserror::Error;

pub use field::{PhysicalField, SpectralField};
pub use grid::GridSpec;
pub use ops::{
    check_alpha, dealias, derivative_x, derivative_y, fractional_laplacian, fractional_symbol, inv_sqrt_laplacian,
    neg_laplacian, nonlinear_term, spectral_divergence, velocity_from_theta, velocity_nodes,
};
pub(crate) use transform::inverse_unchecked;
pub use transform::{forward_transform, inverse_transform, SYMMETRY_TOLERANCE};

pub use rustfft::num_complex::Complex64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("grid {nx}x{ny} invalid: both sizes must be even and at least 4")]
    InvalidGrid { nx: usize, ny: usize },
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },
    #[error("fields live on different grids ({left:?} vs {right:?})")]
    GridMismatch { left: GridSpec, right: GridSpec },
    #[error("Hermitian symmetry defect {defect:e} exceeds tolerance")]
    SymmetryViolation { defect: f64 },
    #[error("fractional order alpha = {alpha} outside [0, 1)")]
    Domain { alpha: f64 },
}
