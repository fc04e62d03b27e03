//! Small named automata and seeded random automaton pools.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::{Alphabet, Dfa, Symbol};

/// Default seed for every random pool used by the verification harness.
pub const DEFAULT_SEED: u64 = 0x5eed_2013;

/// `(ab)*` over `{a, b}`: states 0 and 1 plus the dead state 2.
pub fn ab_star() -> Dfa {
    let s = Alphabet::from_chars("ab").unwrap();
    let (a, b) = (Symbol(0), Symbol(1));
    Dfa::from_partial(s, 2, 0, [0], [(0, a, 1), (1, b, 0)]).unwrap()
}

/// `0*1` over `{0, 1}`.
pub fn zeros_then_one() -> Dfa {
    let s = Alphabet::from_chars("01").unwrap();
    let (zero, one) = (Symbol(0), Symbol(1));
    Dfa::from_partial(s, 2, 0, [1], [(0, zero, 0), (0, one, 1)]).unwrap()
}

/// `a*` over `{a, b}`.
pub fn a_star() -> Dfa {
    let s = Alphabet::from_chars("ab").unwrap();
    Dfa::from_partial(s, 1, 0, [0], [(0, Symbol(0), 0)]).unwrap()
}

/// `b*` over `{a, b}`.
pub fn b_star() -> Dfa {
    let s = Alphabet::from_chars("ab").unwrap();
    Dfa::from_partial(s, 1, 0, [0], [(0, Symbol(1), 0)]).unwrap()
}

/// Uniformly random complete DFA with `states` states over the first
/// `letters` lowercase letters; each state accepts with probability 1/2.
pub fn random_dfa(rng: &mut impl Rng, states: usize, letters: usize) -> Dfa {
    let names: Vec<String> = ('a'..='z').take(letters).map(String::from).collect();
    let alphabet = Alphabet::new(names).unwrap();
    let delta = (0..states)
        .map(|_| (0..letters).map(|_| rng.gen_range(0..states)).collect())
        .collect();
    let accepting: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    Dfa::new(alphabet, 0, accepting, delta).unwrap()
}

/// `count` random DFAs with between 1 and `max_states` states and an alphabet
/// size drawn from `letters`, reproducible from `seed`.
pub fn random_pool(
    seed: u64,
    count: usize,
    max_states: usize,
    letters: std::ops::RangeInclusive<usize>,
) -> Vec<Dfa> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_states);
            let k = rng.gen_range(letters.clone());
            random_dfa(&mut rng, n, k)
        })
        .collect()
}
