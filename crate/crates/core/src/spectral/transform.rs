use std::cell::RefCell;

use rustfft::num_complex::Complex64;
use rustfft::{FftDirection, FftPlanner};

use super::{GridSpec, PhysicalField, SpectralError, SpectralField};

/// Hermitian defect above which a coefficient set is treated as corrupted.
pub const SYMMETRY_TOLERANCE: f64 = 1e-8;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// Unnormalised 2-D FFT in place over a row-major `nx × ny` buffer.
pub(crate) fn fft2_in_place(grid: GridSpec, data: &mut [Complex64], direction: FftDirection) {
    let (nx, ny) = (grid.nx(), grid.ny());
    debug_assert_eq!(data.len(), nx * ny);
    let (row_fft, col_fft) = PLANNER.with(|p| {
        let mut p = p.borrow_mut();
        (p.plan_fft(nx, direction), p.plan_fft(ny, direction))
    });

    // rows are contiguous; rustfft handles the batch in one call
    row_fft.process(data);

    let mut columns = vec![Complex64::new(0.0, 0.0); nx * ny];
    for j in 0..ny {
        for i in 0..nx {
            columns[i * ny + j] = data[j * nx + i];
        }
    }
    col_fft.process(&mut columns);
    for i in 0..nx {
        for j in 0..ny {
            data[j * nx + i] = columns[i * ny + j];
        }
    }
}

/// Physical values to Fourier coefficients, with the `1/(nx·ny)` factor
/// applied here so that `sin x` has coefficients `∓i/2` at `kx = ±1`.
pub fn forward_transform(f: &PhysicalField) -> SpectralField {
    let grid = f.grid();
    let mut data: Vec<Complex64> = f.values().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft2_in_place(grid, &mut data, FftDirection::Forward);
    let norm = 1.0 / grid.len() as f64;
    for c in data.iter_mut() {
        *c *= norm;
    }
    SpectralField::from_coefficients(grid, data).expect("length matches grid")
}

/// Fourier coefficients back to real node values.
///
/// The real part of the inverse FFT equals the inverse of the Hermitian
/// symmetrisation of `s`, so the imaginary residue is simply dropped once
/// the defect has been checked.
pub fn inverse_transform(s: &SpectralField) -> Result<PhysicalField, SpectralError> {
    let scale = s.max_abs().max(1.0);
    let defect = s.hermitian_defect() / scale;
    if defect > SYMMETRY_TOLERANCE {
        return Err(SpectralError::SymmetryViolation { defect });
    }
    Ok(inverse_unchecked(s))
}

pub(crate) fn inverse_unchecked(s: &SpectralField) -> PhysicalField {
    let grid = s.grid();
    let mut data = s.coefficients().to_vec();
    fft2_in_place(grid, &mut data, FftDirection::Inverse);
    PhysicalField::from_raw(grid, data.into_iter().map(|c| c.re).collect())
}

/// Inverts two real-valued spectral fields with a single complex FFT by
/// packing them as `a + i b`.
pub(crate) fn inverse_pair(a: &SpectralField, b: &SpectralField) -> (Vec<f64>, Vec<f64>) {
    let grid = a.grid();
    let i = Complex64::new(0.0, 1.0);
    let mut data: Vec<Complex64> = a
        .coefficients()
        .iter()
        .zip(b.coefficients())
        .map(|(x, y)| x + i * y)
        .collect();
    fft2_in_place(grid, &mut data, FftDirection::Inverse);
    data.into_iter().map(|c| (c.re, c.im)).unzip()
}
