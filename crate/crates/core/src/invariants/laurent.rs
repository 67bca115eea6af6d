use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// The formal variable of a [`LaurentPoly`]: `A` for the bracket, `t` for Jones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variable {
    A,
    T,
}

impl Variable {
    pub fn name(self) -> char {
        match self {
            Variable::A => 'A',
            Variable::T => 't',
        }
    }
}

/// A Laurent polynomial with integer coefficients. Zero coefficients are never stored, so
/// structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Variable,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Variable) -> Self {
        LaurentPoly {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: Variable) -> Self {
        Self::monomial(var, 1, 0)
    }

    pub fn monomial(var: Variable, coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms(var: Variable, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Substitutes `x ↦ 1/x`.
    pub fn invert(&self) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitutes `x ↦ x^k` for `k ≠ 0`.
    pub fn scale_exponents(&self, k: i64) -> Self {
        assert!(k != 0);
        LaurentPoly {
            var: self.var,
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e * k, c.clone()))
                .collect(),
        }
    }

    /// Re-tags the variable without touching the coefficients.
    pub fn with_var(mut self, var: Variable) -> Self {
        self.var = var;
        self
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.var), |acc, _| &acc * self)
    }

    /// `p(x) == p(1/x)`
    pub fn is_palindromic(&self) -> bool {
        *self == self.invert()
    }

    /// Evaluates at an integer point (only meaningful for `x = ±1`, where negative powers stay
    /// integral).
    pub fn eval_unit(&self, x: i64) -> BigInt {
        assert!(x == 1 || x == -1);
        self.terms
            .iter()
            .map(|(&e, c)| {
                if x == -1 && e.rem_euclid(2) == 1 {
                    -c.clone()
                } else {
                    c.clone()
                }
            })
            .sum()
    }

    /// Parses the text form, e.g. `t^-2 - t^-1 + 1 - t + t^2` or `-3*A^5 + 2`.
    pub fn parse(var: Variable, text: &str) -> Result<Self> {
        let bad = || Error::BadPolynomial(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let x = var.name();
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);

        let mut poly = Self::zero(var);
        for piece in pieces {
            let (negative, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coeff, exp) = match body.find(x) {
                None => (parse_digits(body).ok_or_else(bad)?, 0),
                Some(pos) => {
                    let coeff = if pos == 0 {
                        BigInt::one()
                    } else {
                        let c = body[..pos].strip_suffix('*').ok_or_else(bad)?;
                        parse_digits(c).ok_or_else(bad)?
                    };
                    let rest = &body[pos + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        let e = rest.strip_prefix('^').ok_or_else(bad)?;
                        e.parse::<i64>().map_err(|_| bad())?
                    };
                    (coeff, exp)
                }
            };
            poly.add_term(exp, if negative { -coeff } else { coeff });
        }
        Ok(poly)
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let x = self.var.name();
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                write!(f, "{x}")?;
            } else {
                write!(f, "{x}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.var, rhs.var);
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.var, rhs.var);
        let mut out = LaurentPoly::zero(self.var);
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl std::ops::AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        debug_assert_eq!(self.var, rhs.var);
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}
