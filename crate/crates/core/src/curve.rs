//! Floating-point evaluation of the knot and of its braid strands.

use std::f64::consts::PI;

/// A point of `K(N,q,p,φ)` in `R³`:
/// `((2 + sin qt) cos Nt, (2 + sin qt) sin Nt, cos p(t+φ))`.
pub fn knot_point(n: u64, q: u64, p: u64, phi: f64, t: f64) -> [f64; 3] {
    let rho = 2.0 + (q as f64 * t).sin();
    let theta = n as f64 * t;
    [
        rho * theta.cos(),
        rho * theta.sin(),
        (p as f64 * (t + phi)).cos(),
    ]
}

/// `samples` points on `[0, 2π]`, both endpoints included.
pub fn sample_knot(n: u64, q: u64, p: u64, phi: f64, samples: usize) -> Vec<(f64, [f64; 3])> {
    let last = samples.max(2) - 1;
    (0..=last)
        .map(|j| {
            let t = 2.0 * PI * j as f64 / last as f64;
            (t, knot_point(n, q, p, phi, t))
        })
        .collect()
}

/// The `N` strands `ψ_k(t) = (sin 2πq(t+k)/N, cos 2πp(t+k+φ)/N)` of the braid over a unit
/// parameter interval.
#[derive(Debug, Clone, Copy)]
pub struct Strands {
    pub n: u64,
    pub q: u64,
    pub p: u64,
    pub phi: f64,
}

impl Strands {
    pub fn new(n: u64, q: u64, p: u64, phi: f64) -> Self {
        Strands { n, q, p, phi }
    }

    fn y_arg(&self, k: usize, t: f64) -> f64 {
        2.0 * PI * self.q as f64 / self.n as f64 * (t + k as f64)
    }

    /// Height in the braid shadow, `ψ_k⁽¹⁾`.
    pub fn y(&self, k: usize, t: f64) -> f64 {
        self.y_arg(k, t).sin()
    }

    pub fn dy(&self, k: usize, t: f64) -> f64 {
        2.0 * PI * self.q as f64 / self.n as f64 * self.y_arg(k, t).cos()
    }

    /// Depth coordinate `ψ_k⁽²⁾`, which decides over/under.
    pub fn z(&self, k: usize, t: f64) -> f64 {
        (2.0 * PI * self.p as f64 / self.n as f64 * (t + k as f64 + self.phi)).cos()
    }
}
