//! Temperley–Lieb states for bracket evaluation.
//!
//! A state on `n` strands is a crossingless matching of `2n` points: the left ends `0..n` and
//! the right ends `n..2n` of the partial braid, both numbered top to bottom.

use std::collections::BTreeMap;
use std::fmt;

use super::laurent::{LaurentPoly, Variable};
use crate::braid::{Letter, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    partner: Vec<u16>,
}

impl PlanarMatching {
    pub fn identity(n: usize) -> Self {
        let mut partner = vec![0u16; 2 * n];
        for j in 0..n {
            partner[j] = (n + j) as u16;
            partner[n + j] = j as u16;
        }
        PlanarMatching { partner }
    }

    /// Builds from a partner table; `None` if it is not a non-crossing perfect matching.
    pub fn from_partners(partner: Vec<usize>) -> Option<Self> {
        let len = partner.len();
        if !len.is_multiple_of(2)
            || partner
                .iter()
                .enumerate()
                .any(|(a, &b)| b >= len || b == a || partner[b] != a)
        {
            return None;
        }
        let m = PlanarMatching {
            partner: partner.into_iter().map(|x| x as u16).collect(),
        };
        m.is_non_crossing().then_some(m)
    }

    pub fn strands(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, point: usize) -> usize {
        self.partner[point] as usize
    }

    /// Position of a point when walking the boundary: down the left side, up the right.
    fn boundary_position(&self, point: usize) -> usize {
        let n = self.strands();
        if point < n {
            point
        } else {
            3 * n - 1 - point
        }
    }

    fn boundary_point(&self, pos: usize) -> usize {
        // the walk is an involution on 0..2n
        self.boundary_position(pos)
    }

    pub fn is_non_crossing(&self) -> bool {
        let arcs: Vec<(usize, usize)> = (0..self.partner.len())
            .filter(|&a| a < self.partner(a))
            .map(|a| {
                let (x, y) = (
                    self.boundary_position(a),
                    self.boundary_position(self.partner(a)),
                );
                (x.min(y), x.max(y))
            })
            .collect();
        arcs.iter()
            .all(|&(a, b)| arcs.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }

    /// Balanced-parenthesis word along the boundary walk.
    pub fn nesting(&self) -> String {
        (0..self.partner.len())
            .map(|pos| {
                let pt = self.boundary_point(pos);
                if self.boundary_position(self.partner(pt)) > pos {
                    '('
                } else {
                    ')'
                }
            })
            .collect()
    }

    /// Applies the cap-cup `e_i` (1-based) on the right; returns the new state and whether
    /// a closed loop was cut off.
    pub fn cap_cup(&self, i: usize) -> (PlanarMatching, bool) {
        let n = self.strands();
        let (r1, r2) = (n + i - 1, n + i);
        let (a, b) = (self.partner(r1), self.partner(r2));
        let mut partner = self.partner.clone();
        let closed = a == r2;
        if !closed {
            partner[a] = b as u16;
            partner[b] = a as u16;
        }
        partner[r1] = r2 as u16;
        partner[r2] = r1 as u16;
        (PlanarMatching { partner }, closed)
    }

    /// Loops formed when every right end is joined back to its left end.
    pub fn closure_loops(&self) -> usize {
        let n = self.strands();
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut pt = start;
            loop {
                seen[pt] = true;
                let other = self.partner(pt);
                seen[other] = true;
                // closure arc to the opposite side
                pt = if other < n { other + n } else { other - n };
                if seen[pt] {
                    break;
                }
            }
        }
        loops
    }
}

impl fmt::Display for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.nesting())
    }
}

/// Every crossingless matching on `2n` points, in nesting-word order.
pub fn all_matchings(n: usize) -> Vec<PlanarMatching> {
    fn dyck(open: usize, close: usize, n: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if cur.len() == 2 * n {
            out.push(cur.clone());
            return;
        }
        if open < n {
            cur.push(true);
            dyck(open + 1, close, n, cur, out);
            cur.pop();
        }
        if close < open {
            cur.push(false);
            dyck(open, close + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut words = Vec::new();
    dyck(0, 0, n, &mut Vec::new(), &mut words);
    let walk = |pos: usize| if pos < n { pos } else { 3 * n - 1 - pos };
    words
        .into_iter()
        .map(|w| {
            let mut partner = vec![0usize; 2 * n];
            let mut stack = Vec::new();
            for (pos, open) in w.into_iter().enumerate() {
                if open {
                    stack.push(pos);
                } else {
                    let o = stack.pop().expect("balanced word");
                    partner[walk(o)] = walk(pos);
                    partner[walk(pos)] = walk(o);
                }
            }
            PlanarMatching::from_partners(partner).expect("Dyck words give planar matchings")
        })
        .collect()
}

/// A linear combination of states with coefficients in `Z[A, A⁻¹]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TLVector {
    strands: usize,
    terms: BTreeMap<PlanarMatching, LaurentPoly>,
}

impl TLVector {
    pub fn identity(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(PlanarMatching::identity(n), LaurentPoly::one(Variable::A));
        TLVector { strands: n, terms }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarMatching, &LaurentPoly)> {
        self.terms.iter()
    }

    fn add(&mut self, m: PlanarMatching, c: LaurentPoly) {
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None if !c.is_zero() => {
                self.terms.insert(m, c);
            }
            None => {}
        }
    }

    /// Multiplies on the right by `A^{±1}·1 + A^{∓1}·e_i`.
    pub fn apply(&self, letter: Letter) -> TLVector {
        let e = match letter.sign {
            Sign::Plus => 1,
            Sign::Minus => -1,
        };
        let delta = loop_value();
        let mut out = TLVector {
            strands: self.strands,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            out.add(m.clone(), c.shift(e));
            let (m2, closed) = m.cap_cup(letter.index);
            let c2 = c.shift(-e);
            out.add(m2, if closed { &c2 * &delta } else { c2 });
        }
        out
    }

    /// `Σ c·δ^{loops − 1}` over the closed-up states, so a single circle counts as 1.
    pub fn trace(&self) -> LaurentPoly {
        let delta = loop_value();
        let mut total = LaurentPoly::zero(Variable::A);
        for (m, c) in &self.terms {
            let loops = m.closure_loops();
            total += &(c * &delta.pow(loops as u32 - 1));
        }
        total
    }
}

/// `δ = −A² − A⁻²`
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms(Variable::A, [(2, -1), (-2, -1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn catalan(n: usize) -> usize {
        (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
    }

    #[test]
    fn catalan_counts() {
        for n in 0..=7 {
            let all = all_matchings(n);
            assert_eq!(all.len(), catalan(n), "n = {n}");
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(PlanarMatching::is_non_crossing));
        }
    }

    #[test]
    fn identity_is_planar_and_closes_to_n_loops() {
        for n in 1..6 {
            let id = PlanarMatching::identity(n);
            assert!(id.is_non_crossing());
            assert_eq!(id.closure_loops(), n);
            assert!(all_matchings(n).contains(&id));
        }
    }

    #[test]
    fn crossing_matching_is_rejected() {
        // left 0 to right 3, left 1 to right 2 crosses on 2 strands
        assert!(PlanarMatching::from_partners(vec![3, 2, 1, 0]).is_none());
        assert!(PlanarMatching::from_partners(vec![2, 3, 0, 1]).is_some());
        assert!(PlanarMatching::from_partners(vec![1, 0, 3]).is_none());
    }

    #[test]
    fn cap_cup_relations() {
        let id = PlanarMatching::identity(3);
        let (e1, closed) = id.cap_cup(1);
        assert!(!closed);
        let (e1e1, closed) = e1.cap_cup(1);
        assert!(closed);
        assert_eq!(e1e1, e1);
        // e1 e2 e1 = e1
        let (e12, _) = e1.cap_cup(2);
        let (e121, closed) = e12.cap_cup(1);
        assert!(!closed);
        assert_eq!(e121, e1);
        assert_eq!(e1.closure_loops(), 2);
    }

    #[test]
    fn reachable_states_stay_planar() {
        let all: BTreeSet<_> = all_matchings(5).into_iter().collect();
        let mut frontier = vec![PlanarMatching::identity(5)];
        let mut seen = BTreeSet::new();
        while let Some(m) = frontier.pop() {
            if !seen.insert(m.clone()) {
                continue;
            }
            assert!(all.contains(&m));
            for i in 1..5 {
                frontier.push(m.cap_cup(i).0);
            }
        }
        assert_eq!(seen.len(), all.len());
    }

    #[test]
    fn single_crossing_closes_to_a_kink() {
        let v = TLVector::identity(2).apply(Letter::pos(1));
        assert_eq!(v.trace(), LaurentPoly::monomial(Variable::A, -1, 3));
        let v = TLVector::identity(2).apply(Letter::neg(1));
        assert_eq!(v.trace(), LaurentPoly::monomial(Variable::A, -1, -3));
    }
}
