//! Spectral toolkit for the dissipative surface quasi-geostrophic equation
//!
//! ```text
//! ∂tθ + u·∇θ + κ(-Δ)^α θ = 0,   u = (∂y, -∂x)(-Δ)^{-1/2} θ
//! ```
//!
//! on `[0, 2π)²`, with closed-form quasi-stationary solutions used as
//! oracles for a pseudo-spectral integrator.

pub mod exact;
pub mod integrator;
pub mod io;
pub mod spectral;
pub mod verify;
