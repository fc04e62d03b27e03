mod common;

use proptest::prelude::*;

use apfilter::automata::{Alphabet, Word};
use apfilter::diag::{build_diag_automaton, build_diag_nfa, diag_word, StepOrder};
use apfilter::Symbol;
use common::{arb_dfa, config, diag_agrees};

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn three_oracles_agree(d in arb_dfa(4, 1, 2)) {
        if let Err(msg) = diag_agrees(&d, StepOrder::GapBeforeLetter, 4) {
            prop_assert!(false, "{}", msg);
        }
    }

    #[test]
    fn diagonal_positions(n in 1usize..=9, k in 1usize..=4, seed in any::<u64>()) {
        let x: Word = (0..n * n).map(|i| Symbol(((seed >> (i % 61)) as usize % k) as u32)).collect();
        let y = diag_word(&x).unwrap();
        prop_assert_eq!(y.len(), n);
        for (j, &c) in y.iter().enumerate() {
            prop_assert_eq!(c, x.symbols()[j * (n + 1)]);
        }
        let ones = Word(vec![Symbol(0); n * n]);
        prop_assert_eq!(diag_word(&ones).unwrap(), Word(vec![Symbol(0); n]));
        if n > 1 {
            prop_assert!(diag_word(&Word(vec![Symbol(0); n * n - 1])).is_err());
        }
    }

    #[test]
    fn diag_language_is_regular(d in arb_dfa(4, 1, 2)) {
        let auto = build_diag_automaton(&d, StepOrder::GapBeforeLetter);
        let det = auto.nfa.determinize();
        // states are (vector, power, guess) triples, so this bound is finite
        let n = d.state_count();
        prop_assert!(auto.nfa.state_count() <= 1 + (1 << n) * auto.orbit_len * auto.orbit_len);
        for w in d.alphabet().words_up_to(5) {
            prop_assert_eq!(det.accepts(&w).unwrap(), auto.nfa.accepts(&w).unwrap());
        }
    }

    #[test]
    fn empty_word_never_accepted(d in arb_dfa(5, 1, 3)) {
        prop_assert!(!build_diag_nfa(&d).accepts(&Word::empty()).unwrap());
        prop_assert!(!build_diag_nfa(&d).determinize().accepts(&Word::empty()).unwrap());
    }
}

#[test]
fn one_letter_alphabet() {
    let s = Alphabet::from_chars("z").unwrap();
    for n in 1..=6 {
        let x = s.parse_word(&"z".repeat(n * n)).unwrap();
        assert_eq!(s.render(&diag_word(&x).unwrap()), "z".repeat(n));
    }
}
