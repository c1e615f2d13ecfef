//! Random valid closed-form solutions shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use sqg::exact::{EigenmodeSolution, ExactSolution, Mode, UnidirectionalSolution};

/// `(n, m, k)` with `n² + m² = k²` and every wavenumber ≤ 16.
pub const TRIPLES: [(i64, i64, i64); 6] = [(3, 4, 5), (4, 3, 5), (6, 8, 10), (8, 6, 10), (5, 12, 13), (12, 5, 13)];

/// Largest wavenumber the generators produce; 64² grids resolve it with
/// the 4x margin the residual check asks for.
pub const MAX_WAVENUMBER: i64 = 16;

fn nonzero(rng: &mut impl Rng, max: i64) -> i64 {
    let v = rng.gen_range(1..=max);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

fn coefficients(rng: &mut impl Rng) -> [f64; 4] {
    std::array::from_fn(|_| rng.gen_range(-1.0..1.0))
}

pub fn random_eigenmode(rng: &mut impl Rng, kappa: f64, alpha: f64) -> EigenmodeSolution {
    let mut c = [0.0; 8];
    let (n, m, k) = match rng.gen_range(0..3) {
        0 => {
            c[..4].copy_from_slice(&coefficients(rng));
            (nonzero(rng, 8), nonzero(rng, 8), rng.gen_range(0..=5))
        }
        1 => {
            c[4..].copy_from_slice(&coefficients(rng));
            (nonzero(rng, 8), nonzero(rng, 8), nonzero(rng, 12))
        }
        _ => {
            c[..4].copy_from_slice(&coefficients(rng));
            c[4..].copy_from_slice(&coefficients(rng));
            let (n, m, k) = TRIPLES[rng.gen_range(0..TRIPLES.len())];
            let sn = if rng.gen_bool(0.5) { -1 } else { 1 };
            let sm = if rng.gen_bool(0.5) { -1 } else { 1 };
            (sn * n, sm * m, k)
        }
    };
    EigenmodeSolution::new(c, n, m, k, kappa, alpha)
}

pub fn random_unidirectional(rng: &mut impl Rng, kappa: f64, alpha: f64) -> UnidirectionalSolution {
    let (n, m) = loop {
        let (n, m) = (rng.gen_range(-3..=3i64), rng.gen_range(-3..=3i64));
        if (n, m) != (0, 0) {
            break (n, m);
        }
    };
    let kmax = MAX_WAVENUMBER / n.abs().max(m.abs());
    let mut ks: Vec<i64> = (1..=kmax).collect();
    let count = rng.gen_range(1..=ks.len().min(4));
    let mut modes = Vec::new();
    for _ in 0..count {
        let k = ks.swap_remove(rng.gen_range(0..ks.len()));
        modes.push(Mode::new(k, rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    }
    UnidirectionalSolution::new(n, m, modes, kappa, alpha)
}

/// Alternates between the two families.
pub fn random_solutions(rng: &mut impl Rng, count: usize, kappa: f64, alpha: f64) -> Vec<ExactSolution> {
    (0..count)
        .map(|i| {
            if i % 2 == 0 {
                random_eigenmode(rng, kappa, alpha).into()
            } else {
                random_unidirectional(rng, kappa, alpha).into()
            }
        })
        .collect()
}
