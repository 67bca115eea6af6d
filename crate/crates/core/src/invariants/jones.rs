use num_rational::Ratio;

use super::laurent::{LaurentPoly, Variable};
use super::temperley_lieb::TLVector;
use crate::braid::BraidWord;
use crate::{Error, Result};

/// Above this many strands the state space (Catalan growth) is refused by default.
pub const DEFAULT_STRAND_LIMIT: usize = 10;

pub fn closure_component_count(w: &BraidWord) -> usize {
    w.permutation().cycle_count()
}

/// Kauffman bracket of the closure, normalized so a single circle is 1.
pub fn kauffman_bracket(w: &BraidWord) -> Result<LaurentPoly> {
    kauffman_bracket_limited(w, DEFAULT_STRAND_LIMIT)
}

pub fn kauffman_bracket_limited(w: &BraidWord, limit: usize) -> Result<LaurentPoly> {
    if w.strands() > limit {
        return Err(Error::StrandLimit {
            strands: w.strands(),
            limit,
        });
    }
    let v = w
        .letters()
        .iter()
        .fold(TLVector::identity(w.strands()), |v, &l| v.apply(l));
    Ok(v.trace())
}

/// `(−A³)^{−w}·⟨w⟩` with `w` the exponent sum: an isotopy invariant in `A`, defined for links too.
pub fn normalized_bracket(w: &BraidWord) -> Result<LaurentPoly> {
    normalized_bracket_limited(w, DEFAULT_STRAND_LIMIT)
}

pub fn normalized_bracket_limited(w: &BraidWord, limit: usize) -> Result<LaurentPoly> {
    let writhe = w.exponent_sum();
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    Ok(kauffman_bracket_limited(w, limit)?.shift(-3 * writhe)
        * LaurentPoly::monomial(Variable::A, sign, 0))
}

/// Rewrites the normalized bracket of a knot in `t = A⁻⁴`.
pub fn bracket_to_jones(f: &LaurentPoly) -> Result<LaurentPoly> {
    let mut terms = Vec::new();
    for (e, c) in f.terms() {
        if e % 4 != 0 {
            return Err(Error::NonIntegerExponent(e));
        }
        terms.push((-e / 4, c.clone()));
    }
    let mut v = LaurentPoly::zero(Variable::T);
    for (e, c) in terms {
        v += &LaurentPoly::monomial(Variable::T, c, e);
    }
    Ok(v)
}

pub fn jones_polynomial(w: &BraidWord) -> Result<LaurentPoly> {
    jones_polynomial_limited(w, DEFAULT_STRAND_LIMIT)
}

pub fn jones_polynomial_limited(w: &BraidWord, limit: usize) -> Result<LaurentPoly> {
    let components = closure_component_count(w);
    if components != 1 {
        return Err(Error::MultiComponent(components));
    }
    bracket_to_jones(&normalized_bracket_limited(w, limit)?)
}

pub fn is_palindromic(v: &LaurentPoly) -> bool {
    v.is_palindromic()
}

/// `g₄ = (1 − n + k)/2` for the closure of an `n`-strand braid that is a product of `k`
/// conjugates of positive generators.
pub fn rudolph_genus(strands: i64, factors: i64) -> Result<Ratio<i64>> {
    let num = 1 - strands + factors;
    if num % 2 != 0 || num < 0 {
        return Err(Error::NonIntegerGenus { strands, factors });
    }
    Ok(Ratio::from_integer(num / 2))
}
