//! The diagonal of square-length words and an NFA for `diag(L)`.
//!
//! A word of length `t²` laid out row by row in a `t × t` array has its
//! diagonal at indices `0, t+1, 2(t+1), …`. Between consecutive diagonal
//! letters sit exactly `t` free letters, so `diag(L)` is accepted by guessing
//! `W = M^t` up front, inserting `W` between consecutive letters and counting
//! letters with a running power `V` of `M` until `V = W`.

use std::collections::{BTreeSet, HashMap};

use crate::automata::{Dfa, Nfa, Word};
use crate::boolmat::{BoolMatrix, BoolVector, Incidence};
use crate::error::{Error, Result};

/// Default cap on `|Σ|^{t²}` for [`diag_oracle_exhaustive`].
pub const DEFAULT_EXHAUSTIVE_BUDGET: u128 = 1 << 20;

/// Side length `t` of a word of length `t²`, `t ≥ 1`.
pub fn square_side(len: usize) -> Result<usize> {
    let t = len.isqrt();
    if len == 0 || t * t != len {
        return Err(Error::NotPerfectSquare(len));
    }
    Ok(t)
}

pub fn diag_word(w: &Word) -> Result<Word> {
    let t = square_side(w.len())?;
    Ok(w.symbols().iter().step_by(t + 1).copied().collect())
}

/// Where the gap matrix goes in the per-letter update of `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StepOrder {
    /// `v ← v · W · M_a`: the gap sits between consecutive diagonal letters.
    #[default]
    GapBeforeLetter,
    /// `v ← v · M_a · W`: the gap follows each letter after the first.
    GapAfterLetter,
}

/// A non-initial state of the diag automaton. The running power `V` and the
/// guess `W` are stored as positions in the power orbit of `M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagState {
    pub v: BoolVector,
    pub power: usize,
    pub guess: usize,
}

/// The diag NFA together with the meaning of each of its states. State 0 is
/// the initial state; `states[i - 1]` describes state `i`.
#[derive(Debug, Clone)]
pub struct DiagAutomaton {
    pub nfa: Nfa,
    pub states: Vec<DiagState>,
    pub orbit_len: usize,
}

pub fn build_diag_nfa(d: &Dfa) -> Nfa {
    build_diag_automaton(d, StepOrder::GapBeforeLetter).nfa
}

pub fn build_diag_nfa_with(d: &Dfa, order: StepOrder) -> Nfa {
    build_diag_automaton(d, order).nfa
}

pub fn build_diag_automaton(d: &Dfa, order: StepOrder) -> DiagAutomaton {
    let inc = Incidence::of(d);
    let orbit = &inc.orbit;
    let k = d.alphabet().len();
    // moves[g][c] is the matrix applied to v when reading c under guess g
    let moves: Vec<Vec<BoolMatrix>> = orbit
        .powers
        .iter()
        .map(|w| {
            inc.letters
                .iter()
                .map(|mc| match order {
                    StepOrder::GapBeforeLetter => w * mc,
                    StepOrder::GapAfterLetter => mc * w,
                })
                .collect()
        })
        .collect();
    let start = BoolVector::unit(inc.dim(), d.start());
    let first_power = orbit.successor(0);

    let mut index: HashMap<DiagState, usize> = HashMap::new();
    let mut states: Vec<DiagState> = Vec::new();
    let mut intern = |s: DiagState, states: &mut Vec<DiagState>| -> usize {
        *index.entry(s).or_insert_with_key(|s| {
            states.push(s.clone());
            states.len()
        })
    };

    let initial_row: Vec<Vec<usize>> = inc
        .letters
        .iter()
        .map(|mc| {
            let v = &start * mc;
            (0..orbit.len())
                .map(|guess| {
                    let s = DiagState {
                        v: v.clone(),
                        power: first_power,
                        guess,
                    };
                    intern(s, &mut states)
                })
                .collect()
        })
        .collect();
    let mut delta = vec![initial_row];
    let mut i = 0;
    while i < states.len() {
        let s = states[i].clone();
        i += 1;
        let row = (0..k)
            .map(|c| {
                let next = DiagState {
                    v: &s.v * &moves[s.guess][c],
                    power: orbit.successor(s.power),
                    guess: s.guess,
                };
                vec![intern(next, &mut states)]
            })
            .collect();
        delta.push(row);
    }
    let accepting: Vec<usize> = states
        .iter()
        .enumerate()
        .filter(|(_, s)| s.power == s.guess && s.v.dot(&inc.finals).unwrap())
        .map(|(i, _)| i + 1)
        .collect();
    let nfa = Nfa::new(d.alphabet().clone(), [0], accepting, delta).expect("diag automaton is well formed");
    DiagAutomaton {
        nfa,
        states,
        orbit_len: orbit.len(),
    }
}

/// Whether some `x ∈ L` with `|x| = |w|²` has diagonal `w`, by multiplying
/// `M^t` between consecutive letters of `w`.
pub fn diag_oracle_accepts(d: &Dfa, w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::NotPerfectSquare(0));
    }
    w.check(d.alphabet())?;
    let inc = Incidence::of(d);
    let t = w.len();
    let gap = inc.orbit.power_small(t);
    let mut v = BoolVector::unit(inc.dim(), d.start());
    for (j, &c) in w.iter().enumerate() {
        v = &v * &inc.letters[c.index()];
        if j + 1 < t {
            v = &v * gap;
        }
    }
    v.dot(&inc.finals)
}

/// `{diag(x) : x ∈ Σ^{t²} ∩ L}` by listing every word of length `t²`.
pub fn diag_oracle_exhaustive(d: &Dfa, t: usize, budget: u128) -> Result<BTreeSet<Word>> {
    let k = d.alphabet().len() as u128;
    let needed = (t as u32)
        .checked_mul(t as u32)
        .and_then(|e| k.checked_pow(e))
        .unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut out = BTreeSet::new();
    for x in d.alphabet().words_of_length(t * t) {
        if d.accepts(&x)? {
            out.insert(diag_word(&x)?);
        }
    }
    Ok(out)
}
