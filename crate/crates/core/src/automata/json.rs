//! JSON interchange for automata.
//!
//! ```json
//! {"alphabet": ["a","b"], "states": 3, "start": 0, "accepting": [0],
//!  "delta": {"0": {"a": 1}, "1": {"b": 0}}}
//! ```
//!
//! Omitted DFA transitions go to an implicit dead state appended with index
//! `states`. The NFA form has `initial` (a list) instead of `start`, and the
//! delta values are lists of target states.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::{Alphabet, Dfa, Nfa};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DfaFile {
    alphabet: Vec<String>,
    states: usize,
    start: usize,
    accepting: Vec<usize>,
    #[serde(default)]
    delta: IndexMap<String, IndexMap<String, usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NfaFile {
    alphabet: Vec<String>,
    states: usize,
    initial: Vec<usize>,
    accepting: Vec<usize>,
    #[serde(default)]
    delta: IndexMap<String, IndexMap<String, Vec<usize>>>,
}

pub(crate) fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn state_key(key: &str, states: usize) -> Result<usize> {
    let q: usize = key
        .parse()
        .map_err(|_| Error::Parse(format!("state key `{key}` is not a non-negative integer")))?;
    if q >= states {
        return Err(Error::InvalidAutomaton(format!("state {q} out of range")));
    }
    Ok(q)
}

pub fn dfa_from_json(text: &str) -> Result<Dfa> {
    let file: DfaFile = serde_json::from_str(text).map_err(parse_err)?;
    let alphabet = Alphabet::new(file.alphabet)?;
    let mut transitions = Vec::new();
    for (from, row) in &file.delta {
        let from = state_key(from, file.states)?;
        for (name, &to) in row {
            transitions.push((from, alphabet.symbol(name)?, to));
        }
    }
    Dfa::from_partial(alphabet, file.states, file.start, file.accepting, transitions)
}

pub fn dfa_to_json(d: &Dfa) -> String {
    let alphabet = d.alphabet();
    let delta = (0..d.state_count())
        .map(|q| {
            let row = alphabet
                .symbols()
                .map(|c| (alphabet.name(c).to_string(), d.step(q, c)))
                .collect();
            (q.to_string(), row)
        })
        .collect();
    let file = DfaFile {
        alphabet: alphabet.names().to_vec(),
        states: d.state_count(),
        start: d.start(),
        accepting: d.accepting_states().collect(),
        delta,
    };
    serde_json::to_string_pretty(&file).expect("automaton serializes")
}

pub fn nfa_from_json(text: &str) -> Result<Nfa> {
    let file: NfaFile = serde_json::from_str(text).map_err(parse_err)?;
    let alphabet = Alphabet::new(file.alphabet)?;
    let mut delta = vec![vec![Vec::new(); alphabet.len()]; file.states];
    for (from, row) in &file.delta {
        let from = state_key(from, file.states)?;
        for (name, targets) in row {
            let c = alphabet.symbol(name)?;
            delta[from][c.index()].extend(targets.iter().copied());
        }
    }
    Nfa::new(alphabet, file.initial, file.accepting, delta)
}

pub fn nfa_to_json(n: &Nfa) -> String {
    let alphabet = n.alphabet();
    let delta = (0..n.state_count())
        .filter_map(|q| {
            let row: IndexMap<String, Vec<usize>> = alphabet
                .symbols()
                .filter(|&c| !n.successors(q, c).is_empty())
                .map(|c| (alphabet.name(c).to_string(), n.successors(q, c).to_vec()))
                .collect();
            (!row.is_empty()).then(|| (q.to_string(), row))
        })
        .collect();
    let file = NfaFile {
        alphabet: alphabet.names().to_vec(),
        states: n.state_count(),
        initial: n.initial().to_vec(),
        accepting: n.accepting_states().collect(),
        delta,
    };
    serde_json::to_string_pretty(&file).expect("automaton serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn documented_example_parses_with_dead_state() {
        let text = r#"{"alphabet": ["a","b"], "states": 3, "start": 0, "accepting": [0],
                       "delta": {"0": {"a": 1}, "1": {"b": 0}}}"#;
        let d = dfa_from_json(text).unwrap();
        // states 0..3 are declared, the implicit dead state is index 3
        assert_eq!(d.state_count(), 4);
        assert!(d.equivalent(&fixtures::ab_star()).unwrap());
    }

    #[test]
    fn round_trip_is_identity() {
        let d = fixtures::ab_star();
        assert_eq!(dfa_from_json(&dfa_to_json(&d)).unwrap(), d);
        let n = fixtures::ab_star().to_nfa();
        assert_eq!(nfa_from_json(&nfa_to_json(&n)).unwrap(), n);
    }

    #[test]
    fn errors_carry_position() {
        let err = dfa_from_json("{\"alphabet\": [\"a\"],\n \"states\": }").unwrap_err();
        match err {
            Error::Parse(msg) => assert!(msg.contains("line 2"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            dfa_from_json(r#"{"alphabet":["a"],"states":1,"start":0,"accepting":[],"delta":{"0":{"z":0}}}"#),
            Err(Error::UnknownSymbol(_))
        ));
    }
}
