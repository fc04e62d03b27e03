#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use apfilter::automata::{Alphabet, Dfa, Nfa, Word};
use apfilter::diag::{self, StepOrder, DEFAULT_EXHAUSTIVE_BUDGET};
use apfilter::filtration::{filtered_language_oracle, ArithFilter, Construction, Filterable};
use apfilter::fixtures::DEFAULT_SEED;

pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(DEFAULT_SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn letters(k: usize) -> Alphabet {
    Alphabet::new(('a'..='z').take(k).map(String::from)).unwrap()
}

pub fn arb_dfa(max_states: usize, min_letters: usize, max_letters: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states, min_letters..=max_letters)
        .prop_flat_map(|(n, k)| {
            (
                Just(k),
                prop::collection::vec(prop::collection::vec(0..n, k), n),
                prop::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(k, delta, acc)| {
            let accepting: Vec<usize> = (0..acc.len()).filter(|&q| acc[q]).collect();
            Dfa::new(letters(k), 0, accepting, delta).unwrap()
        })
}

pub fn arb_nfa(max_states: usize, max_letters: usize) -> impl Strategy<Value = Nfa> {
    (1..=max_states, 1..=max_letters)
        .prop_flat_map(|(n, k)| {
            (
                Just(k),
                prop::collection::vec(0..n, 0..=2),
                prop::collection::vec(any::<bool>(), n),
                prop::collection::vec(prop::collection::vec(prop::collection::vec(0..n, 0..=2), k), n),
            )
        })
        .prop_map(|(k, initial, acc, delta)| {
            let accepting: Vec<usize> = (0..acc.len()).filter(|&q| acc[q]).collect();
            Nfa::new(letters(k), initial, accepting, delta).unwrap()
        })
}

pub fn arb_word(k: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..k as u32, 0..=max_len).prop_map(|v| v.into_iter().map(apfilter::Symbol).collect())
}

/// Compares the filtered automaton against the source-word oracle.
pub fn construction_agrees(d: &Dfa, f: &ArithFilter, construction: Construction, max_len: usize) -> Result<(), String> {
    let built = Filterable::new(d).build_with(f, construction);
    let got: BTreeSet<Word> = built.enumerate_accepted(max_len).into_iter().collect();
    let want = filtered_language_oracle(d, f, max_len).map_err(|e| e.to_string())?;
    if got == want {
        Ok(())
    } else {
        let w = got.symmetric_difference(&want).next().unwrap();
        Err(format!("filter {f}: disagreement on {}", d.alphabet().display(w)))
    }
}

/// Compares the diag automaton with the matrix oracle and, for `t ≤ 3`,
/// with full enumeration of square words.
pub fn diag_agrees(d: &Dfa, order: StepOrder, max_t: usize) -> Result<(), String> {
    let nfa = diag::build_diag_nfa_with(d, order);
    for t in 1..=max_t {
        let listed = (t <= 3).then(|| diag::diag_oracle_exhaustive(d, t, DEFAULT_EXHAUSTIVE_BUDGET).unwrap());
        for w in d.alphabet().words_of_length(t) {
            let by_nfa = nfa.accepts(&w).unwrap();
            let by_matrix = diag::diag_oracle_accepts(d, &w).unwrap();
            if by_nfa != by_matrix || listed.as_ref().is_some_and(|l| l.contains(&w) != by_nfa) {
                return Err(format!("diagonal {}: automaton {by_nfa}, matrix {by_matrix}", d.alphabet().display(&w)));
            }
        }
    }
    Ok(())
}
