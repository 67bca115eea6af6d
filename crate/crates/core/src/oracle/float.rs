//! Numerical crossing detection on the strand functions.
//!
//! Nothing here uses the integer crossing formulas: roots of `ψ_k⁽¹⁾ − ψ_l⁽¹⁾` are bracketed on a
//! sample grid and bisected, the generator index is the number of strands above the crossing
//! plus one, and the sign is that of `(ψ_k⁽²⁾ − ψ_l⁽²⁾)(ψ_l⁽¹⁾′ − ψ_k⁽¹⁾′)`.

use crate::braid::{BraidWord, Letter, Sign};
use crate::curve::Strands;
use crate::symbolic::check_coprime;
use crate::{Error, Result};

pub const DEFAULT_SAMPLES_PER_QN: usize = 16;

// irrational grid offset so that exact crossing values never land on a sample point
const GRID_OFFSET: f64 = 0.381_966_011_250_105_1;
const ROOT_TOL: f64 = 1e-13;
const DEDUP_TOL: f64 = 1e-9;
const GROUP_TOL: f64 = 1e-7;
const TANGENCY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatCrossing {
    pub t: f64,
    /// Strand pair, `k > l`.
    pub k: usize,
    pub l: usize,
    /// Height of the crossing point.
    pub y: f64,
    pub gen_index: usize,
    pub sign: Sign,
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let lo_pos = f(lo) > 0.0;
    while hi - lo > ROOT_TOL {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (f(mid) > 0.0) == lo_pos {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// All crossings with `t ∈ (η, 1+η]`, ordered by `t`; crossings at the same value (within
/// `1e-7`) are ordered by generator index.
pub fn detect_crossings_float(
    n: u64,
    q: u64,
    p: u64,
    phi: f64,
    eta: f64,
    samples: usize,
) -> Result<Vec<FloatCrossing>> {
    check_coprime(n, q, p)?;
    if samples == 0 {
        return Err(Error::InvalidParams("samples must be positive".into()));
    }
    let strands = Strands::new(n, q, p, phi);
    let nn = n as usize;
    let h = 1.0 / samples as f64;
    let mut found = Vec::new();

    for k in 0..nn {
        for l in 0..k {
            let f = |t: f64| strands.y(k, t) - strands.y(l, t);
            let mut roots: Vec<f64> = Vec::new();
            for j in 0..=samples {
                let a = eta + (j as f64 + GRID_OFFSET - 1.0) * h;
                let b = a + h;
                if (f(a) > 0.0) == (f(b) > 0.0) {
                    continue;
                }
                let t = bisect(f, a, b);
                if roots.last().is_some_and(|&r| (t - r).abs() < DEDUP_TOL) {
                    continue;
                }
                if t <= eta + DEDUP_TOL || t > 1.0 + eta + DEDUP_TOL {
                    continue;
                }
                roots.push(t);
            }
            for t in roots {
                let dz = strands.z(k, t) - strands.z(l, t);
                if dz.abs() < TANGENCY_TOL {
                    return Err(Error::CriticalPhase(format!(
                        "strands {k} and {l} of K({n},{q},{p}) meet in depth at t = {t:.12} (phi = {phi})"
                    )));
                }
                let y = 0.5 * (strands.y(k, t) + strands.y(l, t));
                let above = (0..nn)
                    .filter(|&j| j != k && j != l && strands.y(j, t) > y)
                    .count();
                let slope = strands.dy(l, t) - strands.dy(k, t);
                let sign = if dz * slope > 0.0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                found.push(FloatCrossing {
                    t,
                    k,
                    l,
                    y,
                    gen_index: above + 1,
                    sign,
                });
            }
        }
    }

    found.sort_by(|a, b| a.t.total_cmp(&b.t));
    let mut out = Vec::with_capacity(found.len());
    let mut group: Vec<FloatCrossing> = Vec::new();
    for c in found {
        if group.first().is_some_and(|g| c.t - g.t > GROUP_TOL) {
            group.sort_by_key(|g| g.gen_index);
            out.append(&mut group);
        }
        group.push(c);
    }
    group.sort_by_key(|g| g.gen_index);
    out.append(&mut group);
    Ok(out)
}

/// The braid read off the sampled strands over `(η, 1+η]`.
pub fn detect_braid_float(
    n: u64,
    q: u64,
    p: u64,
    phi: f64,
    eta: f64,
    samples: usize,
) -> Result<BraidWord> {
    let letters = detect_crossings_float(n, q, p, phi, eta, samples)?
        .iter()
        .map(|c| Letter::new(c.gen_index, c.sign))
        .collect();
    BraidWord::new(n as usize, letters)
}

/// Samples used when the caller does not choose: `16·q·N`.
pub fn default_samples(n: u64, q: u64) -> usize {
    DEFAULT_SAMPLES_PER_QN * (q * n) as usize
}
