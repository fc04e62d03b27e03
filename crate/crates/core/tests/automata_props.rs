mod common;

use std::collections::{BTreeSet, HashSet, VecDeque};

use proptest::prelude::*;

use apfilter::automata::json::{dfa_from_json, dfa_to_json, nfa_from_json, nfa_to_json};
use apfilter::automata::{Dfa, Word};
use apfilter::grammar::{thm2_grammar, zero_n_one_n_grammar, Cfg};
use common::{arb_dfa, arb_nfa, config};

/// Shortest word telling states `p` and `q` apart, by search over pairs.
fn distinguisher(d: &Dfa, p: usize, q: usize) -> Option<Word> {
    let mut seen = HashSet::from([(p, q)]);
    let mut queue = VecDeque::from([(p, q, Word::empty())]);
    while let Some((x, y, w)) = queue.pop_front() {
        if d.is_accepting(x) != d.is_accepting(y) {
            return Some(w);
        }
        for c in d.alphabet().symbols() {
            let next = (d.step(x, c), d.step(y, c));
            if seen.insert(next) {
                let mut w2 = w.clone();
                w2.0.push(c);
                queue.push_back((next.0, next.1, w2));
            }
        }
    }
    None
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn minimize_preserves_acceptance(d in arb_dfa(5, 1, 3)) {
        let m = d.minimize();
        for w in d.alphabet().words_up_to(8) {
            prop_assert_eq!(m.accepts(&w).unwrap(), d.accepts(&w).unwrap());
        }
    }

    #[test]
    fn determinize_preserves_acceptance(n in arb_nfa(4, 3)) {
        let d = n.determinize();
        for w in n.alphabet().words_up_to(8) {
            prop_assert_eq!(d.accepts(&w).unwrap(), n.accepts(&w).unwrap());
        }
    }

    #[test]
    fn enumerate_matches_membership(d in arb_dfa(5, 1, 3), max_len in 0usize..=6) {
        let listed: Vec<Word> = d.enumerate_accepted(max_len);
        let filtered: Vec<Word> = d.alphabet().words_up_to(max_len).filter(|w| d.accepts(w).unwrap()).collect();
        let a: BTreeSet<_> = listed.iter().cloned().collect();
        let b: BTreeSet<_> = filtered.into_iter().collect();
        prop_assert_eq!(listed.len(), a.len());
        prop_assert_eq!(a, b);
        prop_assert!(listed.windows(2).all(|p| apfilter::automata::shortlex(&p[0], &p[1]).is_lt()));
    }

    #[test]
    fn minimal_states_are_pairwise_distinguishable(d in arb_dfa(6, 1, 3)) {
        let m = d.minimize();
        for p in 0..m.state_count() {
            for q in p + 1..m.state_count() {
                prop_assert!(distinguisher(&m, p, q).is_some(), "states {} and {} agree", p, q);
            }
        }
        prop_assert_eq!(m.reachable_states().len(), m.state_count());
        prop_assert_eq!(m.minimize(), m);
    }

    #[test]
    fn equivalence_is_an_equivalence(x in arb_dfa(3, 2, 2), y in arb_dfa(3, 2, 2), z in arb_dfa(3, 2, 2)) {
        let eq = |a: &Dfa, b: &Dfa| a.equivalent(b).unwrap();
        prop_assert!(eq(&x, &x));
        prop_assert_eq!(eq(&x, &y), eq(&y, &x));
        if eq(&x, &y) && eq(&y, &z) {
            prop_assert!(eq(&x, &z));
        }
        // agreement with comparison of all words up to the product size
        let brute = x.alphabet().words_up_to(9).all(|w| x.accepts(&w).unwrap() == y.accepts(&w).unwrap());
        prop_assert_eq!(eq(&x, &y), brute);
        prop_assert_eq!(eq(&x, &y), x.minimize() == y.minimize());
        if let Some(w) = x.find_difference(&y).unwrap() {
            prop_assert_ne!(x.accepts(&w).unwrap(), y.accepts(&w).unwrap());
        }
    }

    #[test]
    fn dfa_json_round_trip(d in arb_dfa(5, 1, 3)) {
        prop_assert_eq!(dfa_from_json(&dfa_to_json(&d)).unwrap(), d);
    }

    #[test]
    fn nfa_json_round_trip(n in arb_nfa(4, 3)) {
        prop_assert_eq!(nfa_from_json(&nfa_to_json(&n)).unwrap(), n);
    }
}

#[test]
fn cfg_json_round_trip() {
    for g in [thm2_grammar(), zero_n_one_n_grammar()] {
        for h in [g.clone(), g.to_cnf()] {
            assert_eq!(Cfg::from_json(&h.to_json()).unwrap(), h);
        }
    }
}
