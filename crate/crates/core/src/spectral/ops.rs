//! Diagonal Fourier multipliers and the pseudo-spectral advection term.

use rustfft::num_complex::Complex64;

use super::transform::{forward_transform, inverse_pair};
use super::{GridSpec, PhysicalField, SpectralError, SpectralField};

/// Symbol `|k|^{2α}` of `(-Δ)^α`. The zero mode is 1 at `α = 0` so that
/// `(-Δ)^0` is the identity, and 0 otherwise.
#[inline]
pub fn fractional_symbol(kx: i64, ky: i64, alpha: f64) -> f64 {
    let k2 = (kx * kx + ky * ky) as f64;
    if alpha == 0.0 {
        1.0
    } else {
        k2.powf(alpha)
    }
}

pub fn check_alpha(alpha: f64) -> Result<(), SpectralError> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(SpectralError::Domain { alpha });
    }
    Ok(())
}

pub fn fractional_laplacian(s: &SpectralField, alpha: f64) -> Result<SpectralField, SpectralError> {
    check_alpha(alpha)?;
    Ok(s.map_symbol(|kx, ky| fractional_symbol(kx, ky, alpha)))
}

/// `(-Δ)^{-1/2}`, mapping the mean to zero.
pub fn inv_sqrt_laplacian(s: &SpectralField) -> SpectralField {
    s.map_symbol(|kx, ky| {
        if kx == 0 && ky == 0 {
            0.0
        } else {
            1.0 / ((kx * kx + ky * ky) as f64).sqrt()
        }
    })
}

/// `-Δ` as the symbol `|k|²`.
pub fn neg_laplacian(s: &SpectralField) -> SpectralField {
    s.map_symbol(|kx, ky| (kx * kx + ky * ky) as f64)
}

#[inline]
fn times_ik(c: Complex64, k: f64) -> Complex64 {
    Complex64::new(-k * c.im, k * c.re)
}

fn derivative(s: &SpectralField, along_x: bool) -> SpectralField {
    let g = s.grid();
    let (nyq_x, nyq_y) = (-((g.nx() / 2) as i64), -((g.ny() / 2) as i64));
    let mut out = s.clone();
    let data = out.coefficients_mut();
    for j in 0..g.ny() {
        let ky = g.ky(j);
        for i in 0..g.nx() {
            let kx = g.kx(i);
            // odd derivatives of the unpaired Nyquist mode are not real; drop them
            let k = if along_x {
                if kx == nyq_x {
                    0
                } else {
                    kx
                }
            } else if ky == nyq_y {
                0
            } else {
                ky
            };
            let idx = g.index(i, j);
            data[idx] = times_ik(data[idx], k as f64);
        }
    }
    out
}

pub fn derivative_x(s: &SpectralField) -> SpectralField {
    derivative(s, true)
}

pub fn derivative_y(s: &SpectralField) -> SpectralField {
    derivative(s, false)
}

/// Velocity `(u, v) = (∂_y ψ, -∂_x ψ)` with `ψ = (-Δ)^{-1/2} θ`.
pub fn velocity_from_theta(s: &SpectralField) -> (SpectralField, SpectralField) {
    let psi = inv_sqrt_laplacian(s);
    let u = derivative_y(&psi);
    let v = derivative_x(&psi).scaled(-1.0);
    (u, v)
}

/// `∂_x u + ∂_y v` in spectral space.
pub fn spectral_divergence(u: &SpectralField, v: &SpectralField) -> Result<SpectralField, SpectralError> {
    derivative_x(u).add(&derivative_y(v))
}

/// Zeroes every coefficient with `|kx| > nx/3` or `|ky| > ny/3`.
pub fn dealias(s: &SpectralField) -> SpectralField {
    let g = s.grid();
    let (cx, cy) = (g.dealias_cutoff_x(), g.dealias_cutoff_y());
    let mut out = s.clone();
    let data = out.coefficients_mut();
    for j in 0..g.ny() {
        let ky = g.ky(j);
        for i in 0..g.nx() {
            if g.kx(i).abs() > cx || ky.abs() > cy {
                data[g.index(i, j)] = Complex64::new(0.0, 0.0);
            }
        }
    }
    out
}

/// Node values of the velocity field.
pub fn velocity_nodes(s: &SpectralField) -> (PhysicalField, PhysicalField) {
    let g = s.grid();
    let (u, v) = velocity_from_theta(s);
    let (u, v) = inverse_pair(&u, &v);
    (PhysicalField::from_raw(g, u), PhysicalField::from_raw(g, v))
}

/// Pseudo-spectral `u·∇θ`.
///
/// The four factors are brought to the grid with two packed complex FFTs,
/// multiplied pointwise, and transformed back. With `dealias` the 2/3 rule is
/// applied to the input and to the result. The mean of the advection term of
/// a divergence-free velocity vanishes, so the zero mode is set to 0.
pub fn nonlinear_term(s: &SpectralField, dealias_on: bool) -> SpectralField {
    let g: GridSpec = s.grid();
    let theta = if dealias_on { dealias(s) } else { s.clone() };
    let (u, v) = velocity_from_theta(&theta);
    let tx = derivative_x(&theta);
    let ty = derivative_y(&theta);

    let (u, v) = inverse_pair(&u, &v);
    let (tx, ty) = inverse_pair(&tx, &ty);
    let product: Vec<f64> = (0..g.len()).map(|k| u[k] * tx[k] + v[k] * ty[k]).collect();

    let mut out = forward_transform(&PhysicalField::from_raw(g, product));
    out.set(0, 0, Complex64::new(0.0, 0.0));
    if dealias_on {
        dealias(&out)
    } else {
        out
    }
}
