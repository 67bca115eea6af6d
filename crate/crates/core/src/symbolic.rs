//! Closed-form construction of `B(N,q,p)` and arithmetic classification of `K(N,q,p)`.
//!
//! For `q` odd and `gcd(p,q) = 1`, pick `A`, `B` with `2NA + Bq = 1` and set
//!
//! * `ε(i) = (−1)^⌊pBi/N⌋` for `1 ≤ i ≤ N−1`,
//! * `α = ∏ σ_{2i}^{ε(2i)}`, `β = ∏ σ_{2i+1}^{ε(2i+1)}`,
//! * `λ(k) = (−1)^⌊2Apk/q⌋` for `k ∉ {q, 2q}`,
//!
//! and the braid is `Q·α·Q⁻¹·β` with `Q = α^{λ(1)} β^{λ(2)} ⋯ β^{λ(q−1)}`. The `k`-th of the
//! `2q` blocks belongs to the `k`-th crossing value. Floors are taken toward −∞.
//!
//! Block letters are always listed in ascending generator index; the letters of one block
//! commute, so `α^{−1}` is written as `α` with negated exponents rather than reversed.

use num_integer::Integer;
use num_rational::Ratio;

use crate::braid::{BraidWord, Letter, Sign};
use crate::{Error, Result};

/// `(N, q, p)` together with the reduction to a primitive triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidParams {
    pub n: u64,
    pub q: u64,
    pub p: u64,
    /// `gcd(q, p)`
    pub d: u64,
    /// `q/d`, or `p/d` when the pair was swapped; always odd.
    pub base_q: u64,
    /// `p/d`, or `q/d` when the pair was swapped.
    pub base_p: u64,
    /// Whether `q/d` was even and the pair was exchanged.
    pub swapped: bool,
}

impl BraidParams {
    /// The primitive triple `(N, base_q, base_p)` whose `d`-th power gives this braid.
    pub fn base(&self) -> BraidParams {
        BraidParams {
            n: self.n,
            q: self.base_q,
            p: self.base_p,
            d: 1,
            base_q: self.base_q,
            base_p: self.base_p,
            swapped: false,
        }
    }

    /// `(d·base_q, d·base_p)`: the raw pair in the orientation the closed form uses.
    pub fn oriented(&self) -> (u64, u64) {
        (self.d * self.base_q, self.d * self.base_p)
    }
}

pub(crate) fn check_coprime(n: u64, q: u64, p: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("N = {n} must be at least 2")));
    }
    if q == 0 || p == 0 {
        return Err(Error::InvalidParams("q and p must be positive".into()));
    }
    for (name, x) in [("q", q), ("p", p)] {
        let g = n.gcd(&x);
        if g != 1 {
            return Err(Error::GcdViolation {
                a_name: "N",
                a: n,
                b_name: name,
                b: x,
                gcd: g,
            });
        }
    }
    Ok(())
}

pub fn normalize_params(n: u64, q: u64, p: u64) -> Result<BraidParams> {
    check_coprime(n, q, p)?;
    let d = q.gcd(&p);
    let (qt, pt) = (q / d, p / d);
    let swapped = qt % 2 == 0;
    let (base_q, base_p) = if swapped { (pt, qt) } else { (qt, pt) };
    Ok(BraidParams {
        n,
        q,
        p,
        d,
        base_q,
        base_p,
        swapped,
    })
}

/// A solution of `2·N·A + B·q = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BezoutPair {
    pub a: i64,
    pub b: i64,
}

/// The solution with `B ∈ (−2N, 2N)` of least `|B|`, ties going to positive `B`.
pub fn bezout_coefficients(n: u64, q: u64) -> Result<BezoutPair> {
    let two_n = 2 * n as i64;
    let q = q as i64;
    let eg = two_n.extended_gcd(&q);
    if eg.gcd != 1 {
        return Err(Error::GcdViolation {
            a_name: "2N",
            a: two_n as u64,
            b_name: "q",
            b: q as u64,
            gcd: eg.gcd as u64,
        });
    }
    let low = eg.y.rem_euclid(two_n);
    let high = low - two_n;
    let b = if low.abs() <= high.abs() { low } else { high };
    let a = (1 - b * q) / two_n;
    debug_assert_eq!(two_n * a + b * q, 1);
    Ok(BezoutPair { a, b })
}

impl BezoutPair {
    /// Another solution `(A + q·j, B − 2N·j)`.
    pub fn shifted(&self, n: u64, q: u64, j: i64) -> BezoutPair {
        BezoutPair {
            a: self.a + q as i64 * j,
            b: self.b - 2 * n as i64 * j,
        }
    }
}

/// `ε(i) = (−1)^⌊pBi/N⌋`, evaluated on the primitive base of `params`.
pub fn epsilon_sign(params: &BraidParams, bezout: &BezoutPair, i: u64) -> Result<Sign> {
    let n = params.n;
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            range: format!("[1, {}]", n - 1),
        });
    }
    let num = params.base_p as i64 * bezout.b * i as i64;
    Ok(Sign::parity(Integer::div_floor(&num, &(n as i64))))
}

/// `λ(k) = (−1)^⌊2Apk/q⌋` for `1 ≤ k ≤ 2q`, `k ∉ {q, 2q}`, on the primitive base.
pub fn lambda_sign(params: &BraidParams, bezout: &BezoutPair, k: u64) -> Result<Sign> {
    let q = params.base_q;
    if k == 0 || k > 2 * q || k.is_multiple_of(q) {
        return Err(Error::IndexOutOfRange {
            index: k as i64,
            range: format!("[1, {}] without {q} and {}", 2 * q, 2 * q),
        });
    }
    let num = 2 * bezout.a * params.base_p as i64 * k as i64;
    Ok(Sign::parity(Integer::div_floor(&num, &(q as i64))))
}

/// `(α, β)`: the even-index and odd-index generators with exponents `ε(i)`.
pub fn alpha_beta_blocks(
    params: &BraidParams,
    bezout: &BezoutPair,
) -> Result<(BraidWord, BraidWord)> {
    let n = params.n as usize;
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    for i in 1..n {
        let l = Letter::new(i, epsilon_sign(params, bezout, i as u64)?);
        if i % 2 == 0 {
            alpha.push(l);
        } else {
            beta.push(l);
        }
    }
    Ok((BraidWord::new(n, alpha)?, BraidWord::new(n, beta)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Alpha,
    Beta,
}

impl BlockKind {
    pub fn symbol(self) -> &'static str {
        match self {
            BlockKind::Alpha => "a",
            BlockKind::Beta => "b",
        }
    }
}

/// `α^{±1}` or `β^{±1}` sitting above one crossing value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub kind: BlockKind,
    pub exponent: Sign,
}

/// The closed-form braid of a primitive triple, kept in block form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremBraid {
    pub params: BraidParams,
    pub bezout: BezoutPair,
    pub alpha: BraidWord,
    pub beta: BraidWord,
    pub blocks: Vec<Block>,
}

impl TheoremBraid {
    pub fn block_word(&self, block: Block) -> Vec<Letter> {
        let src = match block.kind {
            BlockKind::Alpha => &self.alpha,
            BlockKind::Beta => &self.beta,
        };
        src.letters()
            .iter()
            .map(|l| Letter::new(l.index, l.sign * block.exponent))
            .collect()
    }

    pub fn word(&self) -> BraidWord {
        let letters = self
            .blocks
            .iter()
            .flat_map(|&b| self.block_word(b))
            .collect();
        BraidWord::new(self.params.n as usize, letters).expect("block letters are in range")
    }

    /// Compact block notation, e.g. `a b^-1 a b`.
    pub fn block_string(&self) -> String {
        self.blocks
            .iter()
            .map(|b| match b.exponent {
                Sign::Plus => b.kind.symbol().to_string(),
                Sign::Minus => format!("{}^-1", b.kind.symbol()),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// `Q·α·Q⁻¹·β` for a primitive triple (`d = 1`, `q` odd).
pub fn main_theorem_braid(params: &BraidParams) -> Result<TheoremBraid> {
    if params.d != 1 {
        return Err(Error::NotPrimitive(params.d));
    }
    let q = params.base_q;
    if q.is_multiple_of(2) {
        return Err(Error::EvenQ(q));
    }
    let bezout = bezout_coefficients(params.n, q)?;
    let (alpha, beta) = alpha_beta_blocks(params, &bezout)?;

    let kind_at = |k: u64| {
        if k % 2 == 1 {
            BlockKind::Alpha
        } else {
            BlockKind::Beta
        }
    };
    let mut q_part = Vec::with_capacity(q as usize - 1);
    for k in 1..q {
        q_part.push(Block {
            kind: kind_at(k),
            exponent: lambda_sign(params, &bezout, k)?,
        });
    }
    let mut blocks = Vec::with_capacity(2 * q as usize);
    blocks.extend_from_slice(&q_part);
    blocks.push(Block {
        kind: BlockKind::Alpha,
        exponent: Sign::Plus,
    });
    blocks.extend(q_part.iter().rev().map(|b| Block {
        kind: b.kind,
        exponent: -b.exponent,
    }));
    blocks.push(Block {
        kind: BlockKind::Beta,
        exponent: Sign::Plus,
    });

    Ok(TheoremBraid {
        params: *params,
        bezout,
        alpha,
        beta,
        blocks,
    })
}

/// `B(N,q,p) = B(N,q̃,p̃)^d`, with `(q̃,p̃)` swapped when `q̃` is even.
pub fn lissajous_braid(n: u64, q: u64, p: u64) -> Result<BraidWord> {
    let params = normalize_params(n, q, p)?;
    Ok(main_theorem_braid(&params.base())?
        .word()
        .power(params.d as usize))
}

/// `A (BA)^{(q−1)/2} (B⁻¹A⁻¹)^{(q−1)/2} B⁻¹` with `A`, `B` the positive even and odd
/// generators; a second description of the `p = q + N` braid.
pub fn trivial_family_braid(n: u64, q: u64) -> Result<BraidWord> {
    if q.is_multiple_of(2) {
        return Err(Error::EvenQ(q));
    }
    check_coprime(n, q, 1)?;
    let n = n as usize;
    let evens = BraidWord::new(n, (2..n).step_by(2).map(Letter::pos).collect())?;
    let odds = BraidWord::new(n, (1..n).step_by(2).map(Letter::pos).collect())?;
    let half = (q as usize - 1) / 2;
    let ba = odds.compose(&evens)?;
    let ba_bar = odds.inverse().compose(&evens.inverse())?;
    let word = evens
        .compose(&ba.power(half))?
        .compose(&ba_bar.power(half))?
        .compose(&odds.inverse())?;
    Ok(word)
}

/// Which of the four unknotted families a triple falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrivialFamily {
    /// `p = q + N`
    QPlusN,
    /// `p = 1`
    POne,
    /// `p = 2Nq + 1`
    TwoNqPlusOne,
    /// `p = 2Nq − 1`
    TwoNqMinusOne,
}

impl TrivialFamily {
    pub fn label(self) -> &'static str {
        match self {
            TrivialFamily::QPlusN => "q+N",
            TrivialFamily::POne => "p=1",
            TrivialFamily::TwoNqPlusOne => "2Nq+1",
            TrivialFamily::TwoNqMinusOne => "2Nq-1",
        }
    }
}

/// Matches `(q, p)` and `(p, q)` against the families directly, then modulo `p ↦ 2Nq ± p`.
pub fn trivial_family(n: u64, q: u64, p: u64) -> Option<TrivialFamily> {
    let orders = [(q, p), (p, q)];
    for &(a, b) in &orders {
        let m = 2 * n * a;
        if b == a + n {
            return Some(TrivialFamily::QPlusN);
        }
        if b == 1 {
            return Some(TrivialFamily::POne);
        }
        if b == m + 1 {
            return Some(TrivialFamily::TwoNqPlusOne);
        }
        if b + 1 == m {
            return Some(TrivialFamily::TwoNqMinusOne);
        }
    }
    for &(a, b) in &orders {
        let m = 2 * n * a;
        let r = b % m;
        let s = (a + n) % m;
        if r == s || (r + s).is_multiple_of(m) {
            return Some(TrivialFamily::QPlusN);
        }
        if r == 1 {
            return Some(TrivialFamily::TwoNqPlusOne);
        }
        if r + 1 == m {
            return Some(TrivialFamily::TwoNqMinusOne);
        }
    }
    None
}

/// Arithmetic facts about `K(N,q,p)`; nothing here evaluates an invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub params: BraidParams,
    /// `gcd(q,p) = 1`
    pub ribbon: bool,
    pub periodic_d: u64,
    /// `(N−1)(d−1)/2`, an upper bound for the 4-genus.
    pub genus_bound: Ratio<i64>,
    /// `p̃ ± q̃ ≡ 0 (mod 2N)`
    pub quasipositive_case: bool,
    pub exact_genus: Option<Ratio<i64>>,
    /// `p` and `q` of different parity: positive strongly amphicheiral.
    pub amphicheiral: bool,
    pub trivial_family: Option<TrivialFamily>,
}

pub fn is_quasipositive_case(params: &BraidParams) -> bool {
    let m = 2 * params.n;
    let (a, b) = (params.base_q, params.base_p);
    (a + b) % m == 0 || a.abs_diff(b) % m == 0
}

pub fn classify(n: u64, q: u64, p: u64) -> Result<Classification> {
    let params = normalize_params(n, q, p)?;
    let genus_bound = Ratio::new((n as i64 - 1) * (params.d as i64 - 1), 2);
    let quasipositive_case = is_quasipositive_case(&params);
    Ok(Classification {
        params,
        ribbon: params.d == 1,
        periodic_d: params.d,
        genus_bound,
        quasipositive_case,
        exact_genus: quasipositive_case.then_some(genus_bound),
        amphicheiral: (q + p) % 2 == 1,
        trivial_family: trivial_family(n, q, p),
    })
}
