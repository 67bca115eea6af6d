mod common;

use common::{brute_force_bracket, coprime_grid, random_word};
use lissatoric::invariants::{
    closure_component_count, jones_polynomial, kauffman_bracket, normalized_bracket,
};
use lissatoric::oracle::{
    compare_up_to_mirror, default_phase, default_samples, detect_braid_float, enumerate_braid,
    Comparison,
};
use lissatoric::symbolic::lissajous_braid;
use lissatoric::{BraidWord, Letter, Sign};
use num_integer::gcd;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        prop::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(move |v| {
            let letters = v
                .into_iter()
                .map(|(i, pos)| Letter::new(i, if pos { Sign::Plus } else { Sign::Minus }))
                .collect();
            BraidWord::new(n, letters).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transfer_matches_state_sum(w in arb_word(5, 10)) {
        prop_assert_eq!(kauffman_bracket(&w).unwrap(), brute_force_bracket(&w));
    }

    #[test]
    fn mirror_inverts_bracket(w in arb_word(5, 14)) {
        prop_assert_eq!(kauffman_bracket(&w.mirror()).unwrap(), kauffman_bracket(&w).unwrap().invert());
    }

    #[test]
    fn normalized_bracket_is_conjugation_and_reduction_invariant(
        w in arb_word(4, 14),
        g in arb_word(4, 4),
    ) {
        prop_assume!(w.strands() == g.strands());
        let f = normalized_bracket(&w).unwrap();
        let moved = g.compose(&w).unwrap().compose(&g.inverse()).unwrap();
        prop_assert_eq!(&normalized_bracket(&moved).unwrap(), &f);
        prop_assert_eq!(&normalized_bracket(&w.free_reduce()).unwrap(), &f);
    }

    #[test]
    fn jones_of_mirror(w in arb_word(5, 14)) {
        prop_assume!(closure_component_count(&w) == 1);
        let v = jones_polynomial(&w).unwrap();
        prop_assert_eq!(jones_polynomial(&w.mirror()).unwrap(), v.invert());
    }
}

#[test]
fn trefoil_state_sum() {
    let w = BraidWord::parse(2, "s1 s1 s1").unwrap();
    assert_eq!(kauffman_bracket(&w).unwrap(), brute_force_bracket(&w));
}

#[test]
fn seeded_words_up_to_twelve_crossings() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let w = random_word(&mut rng, 6, 12);
        assert_eq!(
            kauffman_bracket(&w).unwrap(),
            brute_force_bracket(&w),
            "{w}"
        );
    }
}

#[test]
fn float_matches_exact_on_random_tuples() {
    let grid = coprime_grid(6, 13);
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..40 {
        let (n, q, p) = grid[rand::Rng::gen_range(&mut rng, 0..grid.len())];
        let spec = default_phase(n, q, p).unwrap();
        let exact = enumerate_braid(n, q, p, &spec).unwrap();
        let float = detect_braid_float(
            n,
            q,
            p,
            spec.phi.to_f64().unwrap(),
            spec.eta.to_f64().unwrap(),
            default_samples(n, q),
        )
        .unwrap();
        assert_eq!(exact, float, "{n} {q} {p}");
        assert_eq!(float.len() as u64, q * (n - 1));
    }
}

#[test]
fn raw_enumeration_of_periodic_knots() {
    // q/d even: the raw path is only comparable through invariants
    let spec = default_phase(3, 4, 10).unwrap();
    let raw = enumerate_braid(3, 4, 10, &spec).unwrap();
    assert_eq!(raw.len(), 8);
    let sym = lissajous_braid(3, 4, 10).unwrap();
    let v = compare_up_to_mirror(&sym, &raw).unwrap();
    assert!(v <= Comparison::JonesMirrorEqual, "{v}");

    for (n, q, p) in coprime_grid(5, 12) {
        let d = gcd(q, p);
        if d == 1 || n > 4 {
            continue;
        }
        let raw = enumerate_braid(n, q, p, &default_phase(n, q, p).unwrap()).unwrap();
        let sym = lissajous_braid(n, q, p).unwrap();
        if closure_component_count(&raw) != 1 || closure_component_count(&sym) != 1 {
            continue;
        }
        let (a, b) = (
            jones_polynomial(&raw).unwrap(),
            jones_polynomial(&sym).unwrap(),
        );
        assert!(a == b || a == b.invert(), "{n} {q} {p}");
    }
}
