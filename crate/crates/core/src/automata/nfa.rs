use std::collections::HashMap;

use super::{Alphabet, Dfa, Word};
use crate::error::{Error, Result};

/// ε-free nondeterministic automaton. Transition targets and the initial set
/// are kept as sorted, deduplicated state lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    initial: Vec<usize>,
    accepting: Vec<bool>,
    delta: Vec<Vec<usize>>,
}

impl Nfa {
    /// `delta[q][c]` lists the successors of `q` on symbol `c`.
    pub fn new(
        alphabet: Alphabet,
        initial: impl IntoIterator<Item = usize>,
        accepting: impl IntoIterator<Item = usize>,
        delta: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let n = delta.len();
        let k = alphabet.len();
        let in_range = |q: usize, what: &str| {
            if q < n {
                Ok(q)
            } else {
                Err(Error::InvalidAutomaton(format!("{what} state {q} out of range")))
            }
        };
        let initial = normalize(initial.into_iter().map(|q| in_range(q, "initial")).collect::<Result<_>>()?);
        let mut acc = vec![false; n];
        for q in accepting {
            acc[in_range(q, "accepting")?] = true;
        }
        let mut flat = Vec::with_capacity(n * k);
        for (q, row) in delta.into_iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidAutomaton(format!(
                    "state {q} has {} transition sets, expected {k}",
                    row.len()
                )));
            }
            for targets in row {
                let targets = targets
                    .into_iter()
                    .map(|t| in_range(t, "target"))
                    .collect::<Result<Vec<_>>>()?;
                flat.push(normalize(targets));
            }
        }
        Ok(Nfa {
            alphabet,
            initial,
            accepting: acc,
            delta: flat,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> &[usize] {
        &self.initial
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter_map(|(q, &a)| a.then_some(q))
    }

    pub fn successors(&self, q: usize, c: super::Symbol) -> &[usize] {
        &self.delta[q * self.alphabet.len() + c.index()]
    }

    fn step_set(&self, set: &[usize], c: super::Symbol) -> Vec<usize> {
        let mut mark = vec![false; self.state_count()];
        for &q in set {
            for &t in self.successors(q, c) {
                mark[t] = true;
            }
        }
        mark.iter()
            .enumerate()
            .filter_map(|(q, &m)| m.then_some(q))
            .collect()
    }

    pub fn accepts(&self, w: &Word) -> Result<bool> {
        w.check(&self.alphabet)?;
        let set = w
            .iter()
            .fold(self.initial.clone(), |set, &c| self.step_set(&set, c));
        Ok(set.iter().any(|&q| self.accepting[q]))
    }

    /// Subset construction over the subsets reachable from the initial set.
    /// The empty subset, when reached, is the dead state.
    pub fn determinize(&self) -> Dfa {
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut subsets = vec![self.initial.clone()];
        index.insert(self.initial.clone(), 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            let current = subsets[i].clone();
            i += 1;
            let mut row = Vec::with_capacity(self.alphabet.len());
            for c in self.alphabet.symbols() {
                let next = self.step_set(&current, c);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        index.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                row.push(id);
            }
            delta.push(row);
        }
        let accepting = subsets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.iter().any(|&q| self.accepting[q]))
            .map(|(i, _)| i);
        Dfa::new(self.alphabet.clone(), 0, accepting, delta).expect("subset automaton is well formed")
    }
}

fn normalize(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}
