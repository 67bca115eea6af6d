//! Braid words over the Artin generators `σ₁ … σ_{n−1}`.
//!
//! Generator indices are 1-based (`σ_i` exchanges the strands at 0-based positions `i−1`
//! and `i`). Words are read left to right: the leftmost letter acts first, and
//! [`BraidWord::permutation`] follows the same convention, so
//! `permutation(a·b) == permutation(a).then(&permutation(b))`.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A sign `±1`, used for generator exponents and crossing signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^n`.
    pub fn parity(n: i64) -> Sign {
        if n.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// One letter `σ_index^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Self {
        Letter { index, sign }
    }

    pub fn pos(index: usize) -> Self {
        Letter::new(index, Sign::Plus)
    }

    pub fn neg(index: usize) -> Self {
        Letter::new(index, Sign::Minus)
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.index, -self.sign)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "s{}", self.index),
            Sign::Minus => write!(f, "s{}^-1", self.index),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let bad = || Error::BadToken(token.to_string());
        let body = token.strip_prefix('s').ok_or_else(bad)?;
        let (digits, sign) = match body.strip_suffix("^-1") {
            Some(d) => (d, Sign::Minus),
            None => (body, Sign::Plus),
        };
        if digits.is_empty()
            || !digits.bytes().all(|b| b.is_ascii_digit())
            || digits.starts_with('0')
        {
            return Err(bad());
        }
        let index = digits.parse().map_err(|_| bad())?;
        Ok(Letter::new(index, sign))
    }
}

/// A braid word on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::GeneratorOutOfRange {
                index: bad.index,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0, "a braid needs at least one strand");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Parses the text form on a known number of strands.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Letter>>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Negates every exponent; the closure becomes the mirror image.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| l.inverse()).collect(),
        }
    }

    pub fn power(&self, d: usize) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.repeat(d),
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.to_i64()).sum()
    }

    pub fn permutation(&self) -> Permutation {
        let mut position: Vec<usize> = (0..self.strands).collect();
        // occupant[j] = strand currently at position j
        let mut occupant: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            let (a, b) = (l.index - 1, l.index);
            occupant.swap(a, b);
            position[occupant[a]] = a;
            position[occupant[b]] = b;
        }
        Permutation { images: position }
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` / `σ_i⁻¹ σ_i` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top == l.inverse() => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// Reflects the strand order top-to-bottom: `σ_i ↦ σ_{n−i}`.
    pub fn flip_positions(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .map(|l| Letter::new(self.strands - l.index, l.sign))
                .collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A permutation of `{0,…,n−1}`; `images[j]` is where the strand starting at position `j`
/// ends up.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::InvalidParams(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Apply `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.len(), next.len(), "permutation size mismatch");
        Permutation {
            images: self.images.iter().map(|&x| next.images[x]).collect(),
        }
    }

    pub fn pow(&self, d: usize) -> Permutation {
        (0..d).fold(Permutation::identity(self.len()), |acc, _| acc.then(self))
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut cycles = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        cycles
    }

    pub fn is_full_cycle(&self) -> bool {
        self.cycle_count() == 1
    }
}
