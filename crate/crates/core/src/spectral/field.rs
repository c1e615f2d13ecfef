use rustfft::num_complex::Complex64;

use super::{GridSpec, SpectralError};

/// Real node values of a scalar field, row-major with `y` outer.
#[derive(Debug, Clone, PartialEq)]
pub struct PhysicalField {
    grid: GridSpec,
    values: Vec<f64>,
}

impl PhysicalField {
    pub fn new(grid: GridSpec, values: Vec<f64>) -> Result<Self, SpectralError> {
        if values.len() != grid.len() {
            return Err(SpectralError::LengthMismatch {
                expected: grid.len(),
                got: values.len(),
            });
        }
        if let Some(idx) = values.iter().position(|v| !v.is_finite()) {
            return Err(SpectralError::NonFinite { index: idx });
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: GridSpec) -> Self {
        Self {
            grid,
            values: vec![0.0; grid.len()],
        }
    }

    /// Samples `f(x, y)` at every node.
    pub fn from_fn(grid: GridSpec, f: impl Fn(f64, f64) -> f64) -> Self {
        let values = grid.nodes().map(|(_, _, x, y)| f(x, y)).collect();
        Self { grid, values }
    }

    pub(crate) fn from_raw(grid: GridSpec, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), grid.len());
        Self { grid, values }
    }

    #[inline]
    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    #[inline]
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.values[self.grid.index(i, j)]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Root-mean-square over the nodes (the continuous L2 norm divided by 2π).
    pub fn l2(&self) -> f64 {
        (self.values.iter().map(|v| v * v).sum::<f64>() / self.values.len() as f64).sqrt()
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            grid: self.grid,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    /// Pointwise `self - other`.
    pub fn sub(&self, other: &Self) -> Result<Self, SpectralError> {
        check_grid(self.grid, other.grid)?;
        Ok(Self {
            grid: self.grid,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, SpectralError> {
        check_grid(self.grid, other.grid)?;
        Ok(Self {
            grid: self.grid,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }
}

/// Fourier coefficients over the full wavenumber set of a grid.
///
/// Storage follows FFT ordering: slot `(i, j)` holds wavenumber
/// `(grid.kx(i), grid.ky(j))`. The field represents
/// `θ(x, y) = Σ c_k exp(i (kx x + ky y))`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralField {
    grid: GridSpec,
    coeffs: Vec<Complex64>,
}

impl SpectralField {
    pub fn zeros(grid: GridSpec) -> Self {
        Self {
            grid,
            coeffs: vec![Complex64::new(0.0, 0.0); grid.len()],
        }
    }

    pub fn from_coefficients(grid: GridSpec, coeffs: Vec<Complex64>) -> Result<Self, SpectralError> {
        if coeffs.len() != grid.len() {
            return Err(SpectralError::LengthMismatch {
                expected: grid.len(),
                got: coeffs.len(),
            });
        }
        Ok(Self { grid, coeffs })
    }

    #[inline]
    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    #[inline]
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coeffs
    }

    #[inline]
    pub fn coefficients_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    /// Coefficient of wavenumber `(kx, ky)`; out-of-range wavenumbers alias.
    #[inline]
    pub fn get(&self, kx: i64, ky: i64) -> Complex64 {
        self.coeffs[self.grid.index(self.grid.x_slot(kx), self.grid.y_slot(ky))]
    }

    #[inline]
    pub fn set(&mut self, kx: i64, ky: i64, value: Complex64) {
        let idx = self.grid.index(self.grid.x_slot(kx), self.grid.y_slot(ky));
        self.coeffs[idx] = value;
    }

    /// Iterates `(kx, ky, coefficient)` in storage order.
    pub fn modes(&self) -> impl Iterator<Item = (i64, i64, Complex64)> + '_ {
        let g = self.grid;
        (0..g.ny()).flat_map(move |j| (0..g.nx()).map(move |i| (g.kx(i), g.ky(j), self.coeffs[g.index(i, j)])))
    }

    /// Multiplies each coefficient by a real symbol of its wavenumber.
    pub fn map_symbol(&self, symbol: impl Fn(i64, i64) -> f64) -> Self {
        let g = self.grid;
        let mut out = self.clone();
        for j in 0..g.ny() {
            let ky = g.ky(j);
            for i in 0..g.nx() {
                out.coeffs[g.index(i, j)] *= symbol(g.kx(i), ky);
            }
        }
        out
    }

    /// Largest `|c(k) - conj(c(-k))|` over all wavenumbers.
    pub fn hermitian_defect(&self) -> f64 {
        let g = self.grid;
        let mut defect: f64 = 0.0;
        for j in 0..g.ny() {
            let jm = (g.ny() - j) % g.ny();
            for i in 0..g.nx() {
                let im = (g.nx() - i) % g.nx();
                let a = self.coeffs[g.index(i, j)];
                let b = self.coeffs[g.index(im, jm)].conj();
                defect = defect.max((a - b).norm());
            }
        }
        defect
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.norm()))
    }

    /// `Σ |c_k|²`, equal to the mean square of the physical field.
    pub fn energy(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            grid: self.grid,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SpectralError> {
        check_grid(self.grid, other.grid)?;
        Ok(Self {
            grid: self.grid,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SpectralError> {
        check_grid(self.grid, other.grid)?;
        Ok(Self {
            grid: self.grid,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }
}

pub(crate) fn check_grid(a: GridSpec, b: GridSpec) -> Result<(), SpectralError> {
    if a != b {
        return Err(SpectralError::GridMismatch { left: a, right: b });
    }
    Ok(())
}
