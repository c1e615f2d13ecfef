use std::f64::consts::PI;

use super::SpectralError;

/// Uniform node layout on the periodic square `[0, 2π) × [0, 2π)`.
///
/// Both resolutions must be even and at least 4. Fields store node values
/// row-major with `y` as the outer index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridSpec {
    nx: usize,
    ny: usize,
}

impl GridSpec {
    pub fn new(nx: usize, ny: usize) -> Result<Self, SpectralError> {
        for n in [nx, ny] {
            if n < 4 || n % 2 != 0 {
                return Err(SpectralError::InvalidGrid { nx, ny });
            }
        }
        Ok(Self { nx, ny })
    }

    pub fn square(n: usize) -> Result<Self, SpectralError> {
        Self::new(n, n)
    }

    #[inline]
    pub fn nx(&self) -> usize {
        self.nx
    }

    #[inline]
    pub fn ny(&self) -> usize {
        self.ny
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }

    #[inline]
    pub fn x(&self, i: usize) -> f64 {
        2.0 * PI * i as f64 / self.nx as f64
    }

    #[inline]
    pub fn y(&self, j: usize) -> f64 {
        2.0 * PI * j as f64 / self.ny as f64
    }

    /// Integer wavenumber stored at FFT index `i` along x, in `[-nx/2, nx/2)`.
    #[inline]
    pub fn kx(&self, i: usize) -> i64 {
        signed_wavenumber(i, self.nx)
    }

    #[inline]
    pub fn ky(&self, j: usize) -> i64 {
        signed_wavenumber(j, self.ny)
    }

    /// FFT storage index of wavenumber `k` along x; wavenumbers outside the
    /// representable range wrap (alias) modulo `nx`.
    #[inline]
    pub fn x_slot(&self, k: i64) -> usize {
        k.rem_euclid(self.nx as i64) as usize
    }

    #[inline]
    pub fn y_slot(&self, k: i64) -> usize {
        k.rem_euclid(self.ny as i64) as usize
    }

    /// Whether `(kx, ky)` lies in the stored range `[-n/2, n/2)` on both axes.
    pub fn contains_mode(&self, kx: i64, ky: i64) -> bool {
        let hx = (self.nx / 2) as i64;
        let hy = (self.ny / 2) as i64;
        (-hx..hx).contains(&kx) && (-hy..hy).contains(&ky)
    }

    /// Largest wavenumber kept by the 2/3 rule along x (`|kx| <= nx/3`).
    #[inline]
    pub fn dealias_cutoff_x(&self) -> i64 {
        (self.nx / 3) as i64
    }

    #[inline]
    pub fn dealias_cutoff_y(&self) -> i64 {
        (self.ny / 3) as i64
    }

    /// Iterates `(i, j, x, y)` over all nodes in storage order.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize, f64, f64)> + '_ {
        (0..self.ny).flat_map(move |j| (0..self.nx).map(move |i| (i, j, self.x(i), self.y(j))))
    }
}

#[inline]
fn signed_wavenumber(i: usize, n: usize) -> i64 {
    if i < n / 2 {
        i as i64
    } else {
        i as i64 - n as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_odd_and_small() {
        assert!(GridSpec::new(5, 8).is_err());
        assert!(GridSpec::new(8, 2).is_err());
        assert!(GridSpec::new(0, 0).is_err());
        assert!(GridSpec::new(4, 6).is_ok());
    }

    #[test]
    fn wavenumber_layout() {
        let g = GridSpec::new(8, 6).unwrap();
        let kx: Vec<i64> = (0..8).map(|i| g.kx(i)).collect();
        assert_eq!(kx, vec![0, 1, 2, 3, -4, -3, -2, -1]);
        let ky: Vec<i64> = (0..6).map(|j| g.ky(j)).collect();
        assert_eq!(ky, vec![0, 1, 2, -3, -2, -1]);
        for i in 0..8 {
            assert_eq!(g.x_slot(g.kx(i)), i);
        }
        assert!(g.contains_mode(-4, 2));
        assert!(!g.contains_mode(4, 0));
    }

    #[test]
    fn node_coordinates() {
        let g = GridSpec::square(4).unwrap();
        assert_eq!(g.x(0), 0.0);
        assert!((g.x(1) - PI / 2.0).abs() < 1e-15);
        assert!((g.y(3) - 3.0 * PI / 2.0).abs() < 1e-15);
        assert_eq!(g.nodes().count(), 16);
    }
}
