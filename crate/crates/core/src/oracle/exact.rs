//! Exact enumeration of the crossings of the braid shadow.
//!
//! Strand `k` sits at height `sin 2πq(t+k)/N`. Two strands `k > l` meet at
//! `t = −(k+l)/2 + N(2m+1)/(4q)`, so every crossing value lies in one residue class modulo
//! `1/(2q)`. Each value is solved for `(m, s = k+l)`, and the events above it are read off with
//! rational arithmetic only: the generator index from `qd ≡ w (mod 2N)`, the sign from floors.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::braid::{BraidWord, Letter, Sign};
use crate::symbolic::{bezout_coefficients, check_coprime};
use crate::{Error, Result};

/// Phase `φ` of the strand functions and the offset `η` of the window `(η, 1+η]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhaseSpec {
    #[serde(serialize_with = "ser_rat")]
    pub phi: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub eta: BigRational,
}

fn ser_rat<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rat(r))
}

/// One crossing of the braid shadow.
///
/// When the value carries two `(m, s)` pairs, `m` and `s` are those of the first pair and
/// events coming from the second pair record `d̃ = N − d` in `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingEvent {
    #[serde(serialize_with = "ser_rat")]
    pub t: BigRational,
    pub m: i64,
    pub s: i64,
    pub d: i64,
    pub gen_index: usize,
    pub sign: Sign,
}

impl CrossingEvent {
    pub fn letter(&self) -> Letter {
        Letter::new(self.gen_index, self.sign)
    }
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn fmt_rat(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn rem_rat(r: &BigRational, m: &BigRational) -> BigRational {
    r - m * (r / m).floor()
}

/// `σ(r) = (−1)^⌊r⌋`
fn sigma(r: &BigRational) -> Sign {
    if r.floor().to_integer().is_even() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("crossing data fits in i64")
}

fn slot_step(q: u64) -> BigRational {
    rat(1, 2 * q as i64)
}

/// `N/(4q)` reduced modulo `1/(2q)`: the residue class of all crossing values.
fn class_offset(n: u64, q: u64) -> BigRational {
    rem_rat(&rat(n as i64, 4 * q as i64), &slot_step(q))
}

/// An integer solution `(m, s)` of `t = −s/2 + N(2m+1)/(4q)` with the least `s ≥ 1`.
fn first_pair(t: &BigRational, n: u64, q: u64) -> Option<(i64, i64)> {
    let (ni, qi) = (n as i64, q as i64);
    let x = t * BigRational::from_integer(BigInt::from(4 * qi));
    if !x.is_integer() {
        return None;
    }
    // x = N + 2j, and we need j + qs ≡ 0 (mod N)
    let diff = x.to_integer() - BigInt::from(ni);
    if diff.is_odd() {
        return None;
    }
    let j: BigInt = diff / 2;
    let j_mod = to_i64(&j.mod_floor(&BigInt::from(ni)));
    let q_inv = qi.extended_gcd(&ni).x.rem_euclid(ni);
    let mut s = (-j_mod * q_inv).rem_euclid(ni);
    if s == 0 {
        s = ni;
    }
    let m = (j + BigInt::from(qi * s)) / BigInt::from(ni);
    Some((to_i64(&m), s))
}

/// The pairs `(m, s)` with `1 ≤ s ≤ 2N−3` solving the crossing equation at `t`, by
/// increasing `s`. Two pairs differ by `(q, N)`.
pub fn resolve_ms(t: &BigRational, n: u64, q: u64) -> Result<Vec<(i64, i64)>> {
    let not_crossing = || Error::NotACrossingValue(fmt_rat(t));
    let (m, s) = first_pair(t, n, q).ok_or_else(not_crossing)?;
    let (ni, qi) = (n as i64, q as i64);
    let pairs: Vec<_> = [(m, s), (m + qi, s + ni)]
        .into_iter()
        .filter(|&(_, s)| s <= 2 * ni - 3)
        .collect();
    if pairs.is_empty() {
        return Err(not_crossing());
    }
    Ok(pairs)
}

/// Which of the two generator parities sits above a slot of the class. Only well defined
/// for odd `q`; `0` means even generators.
fn slot_parity(t: &BigRational, n: u64, q: u64) -> i64 {
    let (m, s) = first_pair(t, n, q).expect("slot lies in the crossing class");
    (s + n as i64 * m).rem_euclid(2)
}

/// The first class member strictly above `eta`.
fn first_slot(n: u64, q: u64, eta: &BigRational) -> BigRational {
    let step = slot_step(q);
    let mut first = eta + rem_rat(&(class_offset(n, q) - eta), &step);
    if &first == eta {
        first += &step;
    }
    first
}

/// The `2q` class members in `(η, 1+η]`. For `N = 2` only every other one is a crossing.
fn slots(n: u64, q: u64, eta: &BigRational) -> Vec<BigRational> {
    let step = slot_step(q);
    let first = first_slot(n, q, eta);
    (0..2 * q as i64)
        .map(|j| &first + &step * BigRational::from_integer(j.into()))
        .collect()
}

/// The class shifted by a quarter step, moved one more step for odd `q` when needed so the
/// window opens on the even-generator slot.
fn window_eta(n: u64, q: u64, open_on_even: bool) -> BigRational {
    let step = slot_step(q);
    let mut eta = rem_rat(&(class_offset(n, q) + rat(1, 4 * q as i64)), &step);
    if open_on_even && q % 2 == 1 && slot_parity(&first_slot(n, q, &eta), n, q) == 1 {
        eta += step;
    }
    eta
}

/// The crossing values in `(η, 1+η]`, sorted. There are `2q` of them, except for `N = 2`
/// where only `q` class members carry a crossing.
pub fn crossing_values(n: u64, q: u64, spec: &PhaseSpec) -> Result<Vec<BigRational>> {
    check_coprime(n, q, 1)?;
    Ok(slots(n, q, &spec.eta)
        .into_iter()
        .filter(|t| resolve_ms(t, n, q).is_ok())
        .collect())
}

/// The default phase and window. For `gcd(q,p) = d` with `q/d` odd both are the base
/// triple's values divided by `d`, so the word comes out as an exact `d`-th power.
pub fn default_phase(n: u64, q: u64, p: u64) -> Result<PhaseSpec> {
    check_coprime(n, q, p)?;
    let d = q.gcd(&p);
    let (qt, pt) = (q / d, p / d);
    let ni = n as i64;
    if qt % 2 == 1 {
        let eta = window_eta(n, qt, true);
        let (m1, _) = first_pair(&first_slot(n, qt, &eta), n, qt).expect("slot lies in the class");
        let a = bezout_coefficients(n, qt)?.a;
        let (qi, pi) = (qt as i64, pt as i64);
        let phi = rat(ni * (4 * a - 2 * m1 - 1), 4 * qi) + rat(ni, 8 * pi * qi);
        let scale = BigRational::from_integer(BigInt::from(d));
        return Ok(PhaseSpec {
            phi: phi / &scale,
            eta: eta / &scale,
        });
    }
    let eta = window_eta(n, q, false);
    let (m1, _) = first_pair(&first_slot(n, q, &eta), n, q).expect("slot lies in the class");
    let (qi, pi) = (q as i64, p as i64);
    let phi = rat(-ni * (2 * m1 + 1), 4 * qi) + rat(d as i64 * ni, 8 * pi * qi);
    Ok(PhaseSpec { phi, eta })
}

/// Whether some crossing sits exactly where two strands also meet in depth.
pub fn is_critical_phase(n: u64, q: u64, p: u64, phi: &BigRational) -> bool {
    // pm/q ranges over (g/q)Z, g = gcd(p,q)
    let g = q.gcd(&p) as i64;
    let x = rat(p as i64, 2 * q as i64) + phi * rat(2 * p as i64, n as i64);
    (x * rat(q as i64, g)).is_integer()
}

/// `count` phases `φ + N/(16pq) + j·N/(8p)` around the default `φ`, sharing its window.
/// With `gcd(q,p) = 1` they sit strictly between critical phases; otherwise any that lands on
/// one is nudged by `N/(64pq)`.
pub fn sample_phases(n: u64, q: u64, p: u64, count: usize) -> Result<Vec<PhaseSpec>> {
    let base = default_phase(n, q, p)?;
    let (ni, qi, pi) = (n as i64, q as i64, p as i64);
    let mut out = Vec::with_capacity(count);
    for j in 0..count as i64 {
        let mut phi = &base.phi + rat(ni, 16 * pi * qi) + rat(j * ni, 8 * pi);
        while is_critical_phase(n, q, p, &phi) {
            phi += rat(ni, 64 * pi * qi);
        }
        out.push(PhaseSpec {
            phi,
            eta: base.eta.clone(),
        });
    }
    Ok(out)
}

fn phase_argument(q: u64, p: u64, n: u64, phi: &BigRational, m: i64) -> BigRational {
    let (qi, pi) = (q as i64, p as i64);
    rat(pi * m, qi) + rat(pi, 2 * qi) + phi * rat(2 * pi, n as i64)
}

/// The floor product `(−1)^m σ(pm/q + p/(2q) + 2pφ/N) σ(qd/N) σ(pd/N)` is the negative of the
/// geometric sign of `(ψ_k⁽²⁾ − ψ_l⁽²⁾)(ψ_l⁽¹⁾′ − ψ_k⁽¹⁾′)`; return the geometric one.
fn crossing_sign(n: u64, q: u64, p: u64, phi: &BigRational, m: i64, d: i64) -> Result<Sign> {
    let arg = phase_argument(q, p, n, phi, m);
    if arg.is_integer() {
        return Err(Error::CriticalPhase(format!(
            "phi = {} puts a crossing of K({n},{q},{p}) at a depth tie",
            fmt_rat(phi)
        )));
    }
    let ni = n as i64;
    let printed = Sign::parity(m)
        * sigma(&arg)
        * sigma(&rat(q as i64 * d, ni))
        * sigma(&rat(p as i64 * d, ni));
    Ok(-printed)
}

/// `i = |w|` for even `m` and `N − |w|` for odd `m`, where `qd ≡ w (mod 2N)`, `−N < w < N`.
fn generator_index(n: u64, q: u64, m: i64, d: i64) -> usize {
    let two_n = 2 * n as i64;
    let mut w = (q as i64 * d).rem_euclid(two_n);
    if w >= n as i64 {
        w -= two_n;
    }
    let i = if m.rem_euclid(2) == 0 {
        w.abs()
    } else {
        n as i64 - w.abs()
    };
    i as usize
}

/// The events above one crossing value, by ascending generator index.
pub fn crossings_at_value(
    t: &BigRational,
    n: u64,
    q: u64,
    p: u64,
    spec: &PhaseSpec,
) -> Result<Vec<CrossingEvent>> {
    check_coprime(n, q, p)?;
    let pairs = resolve_ms(t, n, q)?;
    let (m0, s0) = pairs[0];
    let ni = n as i64;
    let mut events = Vec::new();
    for (idx, &(_, s)) in pairs.iter().enumerate() {
        for l in 0..ni {
            let k = s - l;
            if k <= l || k >= ni {
                continue;
            }
            let d = if idx == 0 { k - l } else { ni - (k - l) };
            events.push(CrossingEvent {
                t: t.clone(),
                m: m0,
                s: s0,
                d,
                gen_index: generator_index(n, q, m0, d),
                sign: crossing_sign(n, q, p, &spec.phi, m0, d)?,
            });
        }
    }
    events.sort_by_key(|e| e.gen_index);
    Ok(events)
}

/// All events in the window, sorted by `t` and then generator index.
pub fn enumerate_events(n: u64, q: u64, p: u64, spec: &PhaseSpec) -> Result<Vec<CrossingEvent>> {
    let mut out = Vec::new();
    for t in crossing_values(n, q, spec)? {
        out.extend(crossings_at_value(&t, n, q, p, spec)?);
    }
    Ok(out)
}

pub fn enumerate_braid(n: u64, q: u64, p: u64, spec: &PhaseSpec) -> Result<BraidWord> {
    let letters = enumerate_events(n, q, p, spec)?
        .iter()
        .map(CrossingEvent::letter)
        .collect();
    BraidWord::new(n as usize, letters)
}

/// One line per event: `t=<num>/<den> m=<m> s=<s> d=<d> i=<i> sign=<±1>`.
pub fn dump_events(events: &[CrossingEvent]) -> String {
    let mut sorted: Vec<&CrossingEvent> = events.iter().collect();
    sorted.sort_by(|a, b| a.t.cmp(&b.t).then(a.gen_index.cmp(&b.gen_index)));
    let mut out = String::new();
    for e in sorted {
        let _ = writeln!(
            out,
            "t={} m={} s={} d={} i={} sign={}",
            fmt_rat(&e.t),
            e.m,
            e.s,
            e.d,
            e.gen_index,
            e.sign
        );
    }
    out
}
