//! Unreduced Burau representation, used to decide equality of 3-strand braids (it is faithful
//! there) when two words differ letter by letter.

use super::laurent::{LaurentPoly, Variable};
use crate::braid::{BraidWord, Sign};
use crate::{Error, Result};

pub type Matrix = Vec<Vec<LaurentPoly>>;

pub fn burau_matrix(w: &BraidWord) -> Matrix {
    let n = w.strands();
    let zero = LaurentPoly::zero(Variable::T);
    let one = LaurentPoly::one(Variable::T);
    let tt = LaurentPoly::monomial(Variable::T, 1, 1);
    let t_inv = LaurentPoly::monomial(Variable::T, 1, -1);
    let mut m: Matrix = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { one.clone() } else { zero.clone() })
                .collect()
        })
        .collect();
    // right multiplication by the generator only mixes columns i-1 and i
    for l in w.letters() {
        let (a, b) = (l.index - 1, l.index);
        for row in m.iter_mut() {
            let (ca, cb) = (row[a].clone(), row[b].clone());
            match l.sign {
                Sign::Plus => {
                    row[a] = &(&(&one - &tt) * &ca) + &cb;
                    row[b] = &tt * &ca;
                }
                Sign::Minus => {
                    row[a] = &t_inv * &cb;
                    row[b] = &ca + &(&(&one - &t_inv) * &cb);
                }
            }
        }
    }
    m
}

pub fn burau_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(burau_matrix(a) == burau_matrix(b))
}
