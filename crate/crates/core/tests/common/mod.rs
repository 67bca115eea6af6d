#![allow(dead_code)]

use lissatoric::invariants::{LaurentPoly, Variable};
use lissatoric::{BraidWord, Letter, Sign};
use num_integer::gcd;
use rand::Rng;

/// Kauffman bracket of the braid closure by summing over all `2^c` smoothings.
///
/// Strand segment `(level, pos)` sits between crossings `level - 1` and `level`; level `c`
/// is glued back to level 0 by the closure. At a crossing on positions `a, a+1` the
/// A-smoothing of a positive letter keeps the strands running through, the B-smoothing
/// turns them back into a cap and a cup; a negative letter swaps the two.
pub fn brute_force_bracket(w: &BraidWord) -> LaurentPoly {
    let n = w.strands();
    let c = w.len();
    assert!(c <= 16, "state sum is exponential");
    let node = |level: usize, pos: usize| (level % c.max(1)) * n + pos;
    let delta = LaurentPoly::from_terms(Variable::A, [(2, -1), (-2, -1)]);
    let mut total = LaurentPoly::zero(Variable::A);
    let slots = c.max(1) * n;
    for state in 0u32..(1 << c) {
        let mut uf = UnionFind::new(slots);
        let mut a_count = 0i64;
        for (j, l) in w.letters().iter().enumerate() {
            let a = l.index - 1;
            for pos in 0..n {
                if pos != a && pos != a + 1 {
                    uf.union(node(j, pos), node(j + 1, pos));
                }
            }
            let a_smoothing = state >> j & 1 == 0;
            if a_smoothing {
                a_count += 1;
            }
            let through = a_smoothing == (l.sign == Sign::Plus);
            if through {
                uf.union(node(j, a), node(j + 1, a));
                uf.union(node(j, a + 1), node(j + 1, a + 1));
            } else {
                uf.union(node(j, a), node(j, a + 1));
                uf.union(node(j + 1, a), node(j + 1, a + 1));
            }
        }
        let loops = uf.count();
        let b_count = c as i64 - a_count;
        let term =
            LaurentPoly::monomial(Variable::A, 1, a_count - b_count) * delta.pow(loops as u32 - 1);
        total += &term;
    }
    total
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn count(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.find(x) == x)
            .count()
    }
}

pub fn random_word(rng: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let sign = if rng.gen_bool(0.5) {
                Sign::Plus
            } else {
                Sign::Minus
            };
            Letter::new(rng.gen_range(1..n), sign)
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

/// `(N, q, p)` with `gcd(N,q) = gcd(N,p) = 1`.
pub fn coprime_grid(n_max: u64, qp_max: u64) -> Vec<(u64, u64, u64)> {
    let mut v = Vec::new();
    for n in 2..=n_max {
        for q in 1..=qp_max {
            for p in 1..=qp_max {
                if gcd(n, q) == 1 && gcd(n, p) == 1 {
                    v.push((n, q, p));
                }
            }
        }
    }
    v
}

pub fn word(n: usize, text: &str) -> BraidWord {
    BraidWord::parse(n, text).unwrap()
}

/// Letters of one block commute, so its inverse keeps the ascending order.
pub fn block_inverse(b: &BraidWord) -> BraidWord {
    BraidWord::new(
        b.strands(),
        b.letters().iter().map(|l| l.inverse()).collect(),
    )
    .unwrap()
}

/// Expands `Q·x·Q⁻¹·y` with `Q` given block by block.
pub fn conjugate_form(q: &[BraidWord], x: &BraidWord, y: &BraidWord) -> BraidWord {
    let n = x.strands();
    let mut out = BraidWord::identity(n);
    for b in q {
        out = out.compose(b).unwrap();
    }
    out = out.compose(x).unwrap();
    for b in q.iter().rev() {
        out = out.compose(&block_inverse(b)).unwrap();
    }
    out.compose(y).unwrap()
}

fn letters(n: usize, text: &str) -> Vec<BraidWord> {
    text.split_whitespace().map(|t| word(n, t)).collect()
}

/// The reference words for the ten worked examples, with `Q` expanded.
#[allow(clippy::vec_init_then_push)]
pub fn golden_words() -> Vec<((u64, u64, u64), BraidWord)> {
    let w3 = |s: &str| word(3, s);
    let q3 = |s: &str| letters(3, s);
    let mut v = Vec::new();
    v.push((
        (3, 4, 5),
        conjugate_form(&q3("s2 s1^-1 s2^-1 s1"), &w3("s2^-1"), &w3("s1")),
    ));
    v.push((
        (3, 4, 7),
        conjugate_form(
            &q3("s2^-1 s1^-1 s2^-1 s2^-1 s1^-1 s2^-1"),
            &w3("s2"),
            &w3("s1^-1"),
        ),
    ));
    v.push((
        (3, 4, 10),
        conjugate_form(&q3("s2 s1 s2 s1"), &w3("s2"), &w3("s1^-1")).power(2),
    ));
    v.push((
        (3, 5, 7),
        conjugate_form(&q3("s2^-1 s1 s2^-1 s1"), &w3("s2^-1"), &w3("s1^-1")),
    ));
    v.push(((3, 5, 10), w3("s2^-1 s1").power(5)));
    v.push((
        (3, 7, 8),
        conjugate_form(&q3("s2 s1^-1 s2 s1 s2^-1 s1"), &w3("s2^-1"), &w3("s1")),
    ));
    v.push((
        (3, 7, 19),
        conjugate_form(&q3("s2 s1^-1 s2^-1 s1 s2 s1^-1"), &w3("s2"), &w3("s1")),
    ));
    {
        let (a, b) = (word(4, "s2^-1"), word(4, "s1 s3"));
        let q = [block_inverse(&a), block_inverse(&b), a.clone(), b.clone()];
        v.push(((4, 5, 7), conjugate_form(&q, &a, &b)));
    }
    {
        let (a, b) = (word(4, "s2"), word(4, "s1 s3"));
        let q = [a.clone(), b.clone(), block_inverse(&a), block_inverse(&b)];
        v.push(((4, 5, 13), conjugate_form(&q, &a, &b)));
    }
    {
        let (a, b) = (word(5, "s2 s4^-1"), word(5, "s1^-1 s3"));
        let q = [block_inverse(&a), b.clone()];
        v.push(((5, 6, 22), conjugate_form(&q, &a, &b).power(2)));
    }
    v
}
