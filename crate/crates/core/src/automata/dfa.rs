use std::collections::{HashMap, VecDeque};

use super::{Alphabet, Nfa, Symbol, Word};
use crate::error::{Error, Result};

/// Complete deterministic finite automaton.
///
/// Equality is structural. After [`Dfa::minimize`] states are numbered in
/// breadth-first discovery order from the start state, so two minimized
/// automata are equal exactly when their languages are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    accepting: Vec<bool>,
    start: usize,
    // row-major: delta[q * |Σ| + c]
    delta: Vec<usize>,
}

impl Dfa {
    /// Builds a DFA from a full transition table `delta[q][c]`.
    pub fn new(
        alphabet: Alphabet,
        start: usize,
        accepting: impl IntoIterator<Item = usize>,
        delta: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = delta.len();
        if n == 0 {
            return Err(Error::InvalidAutomaton("no states".into()));
        }
        if start >= n {
            return Err(Error::InvalidAutomaton(format!("start state {start} out of range")));
        }
        let k = alphabet.len();
        let mut flat = Vec::with_capacity(n * k);
        for (q, row) in delta.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidAutomaton(format!(
                    "state {q} has {} transitions, expected {k}",
                    row.len()
                )));
            }
            for &t in row {
                if t >= n {
                    return Err(Error::InvalidAutomaton(format!("transition target {t} out of range")));
                }
                flat.push(t);
            }
        }
        let mut acc = vec![false; n];
        for q in accepting {
            if q >= n {
                return Err(Error::InvalidAutomaton(format!("accepting state {q} out of range")));
            }
            acc[q] = true;
        }
        Ok(Dfa {
            alphabet,
            accepting: acc,
            start,
            delta: flat,
        })
    }

    /// Builds a DFA from a possibly partial transition list. If any
    /// transition is missing, a dead state with index `states` is appended and
    /// every missing transition goes there.
    pub fn from_partial(
        alphabet: Alphabet,
        states: usize,
        start: usize,
        accepting: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, Symbol, usize)>,
    ) -> Result<Self> {
        if states == 0 {
            return Err(Error::InvalidAutomaton("no states".into()));
        }
        let k = alphabet.len();
        let mut table: Vec<Vec<Option<usize>>> = vec![vec![None; k]; states];
        for (from, sym, to) in transitions {
            alphabet.check(sym)?;
            if from >= states || to >= states {
                return Err(Error::InvalidAutomaton(format!(
                    "transition {from} -> {to} out of range"
                )));
            }
            let slot = &mut table[from][sym.index()];
            if slot.is_some_and(|t| t != to) {
                return Err(Error::InvalidAutomaton(format!(
                    "state {from} has two transitions on `{}`",
                    alphabet.name(sym)
                )));
            }
            *slot = Some(to);
        }
        let partial = table.iter().flatten().any(Option::is_none);
        let dead = states;
        let mut delta: Vec<Vec<usize>> = table
            .into_iter()
            .map(|row| row.into_iter().map(|t| t.unwrap_or(dead)).collect())
            .collect();
        if partial {
            delta.push(vec![dead; k]);
        }
        Dfa::new(alphabet, start, accepting, delta)
    }

    /// One-state automaton accepting `Σ*`.
    pub fn universal(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa {
            alphabet,
            accepting: vec![true],
            start: 0,
            delta: vec![0; k],
        }
    }

    /// One-state automaton accepting nothing.
    pub fn empty(alphabet: Alphabet) -> Self {
        let mut d = Dfa::universal(alphabet);
        d.accepting[0] = false;
        d
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn start(&self) -> usize {
        self.start
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

    #[inline]
    pub fn step(&self, q: usize, c: Symbol) -> usize {
        self.delta[q * self.alphabet.len() + c.index()]
    }

    /// State reached from `from` after reading `w`.
    pub fn run_from(&self, from: usize, w: &Word) -> Result<usize> {
        w.check(&self.alphabet)?;
        Ok(w.iter().fold(from, |q, &c| self.step(q, c)))
    }

    pub fn accepts(&self, w: &Word) -> Result<bool> {
        self.run_from(self.start, w).map(|q| self.accepting[q])
    }

    pub fn complement(&self) -> Dfa {
        let mut d = self.clone();
        d.accepting.iter_mut().for_each(|a| *a = !*a);
        d
    }

    /// States reachable from the start, in breadth-first order.
    pub fn reachable_states(&self) -> Vec<usize> {
        let n = self.state_count();
        let mut seen = vec![false; n];
        let mut order = vec![self.start];
        seen[self.start] = true;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            i += 1;
            for c in self.alphabet.symbols() {
                let t = self.step(q, c);
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
        }
        order
    }

    pub fn is_empty(&self) -> bool {
        !self.reachable_states().iter().any(|&q| self.accepting[q])
    }

    /// Product automaton for the intersection, restricted to reachable pairs.
    pub fn intersect(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, |x, y| x && y)
    }

    pub fn product(&self, other: &Dfa, accept: impl Fn(bool, bool) -> bool) -> Result<Dfa> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs = vec![(self.start, other.start)];
        index.insert(pairs[0], 0);
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            i += 1;
            let row = self
                .alphabet
                .symbols()
                .map(|c| {
                    let next = (self.step(p, c), other.step(q, c));
                    *index.entry(next).or_insert_with(|| {
                        pairs.push(next);
                        pairs.len() - 1
                    })
                })
                .collect();
            delta.push(row);
        }
        let accepting: Vec<usize> = pairs
            .iter()
            .enumerate()
            .filter(|(_, &(p, q))| accept(self.accepting[p], other.accepting[q]))
            .map(|(i, _)| i)
            .collect();
        Dfa::new(self.alphabet.clone(), 0, accepting, delta)
    }

    /// Canonical minimal complete DFA. Unreachable states are dropped,
    /// equivalent states merged by partition refinement, and the result is
    /// renumbered breadth-first from the start state in alphabet order.
    pub fn minimize(&self) -> Dfa {
        let reach = self.reachable_states();
        let n = self.state_count();
        let k = self.alphabet.len();
        let mut local = vec![usize::MAX; n];
        for (i, &q) in reach.iter().enumerate() {
            local[q] = i;
        }
        let succ: Vec<Vec<usize>> = reach
            .iter()
            .map(|&q| self.alphabet.symbols().map(|c| local[self.step(q, c)]).collect())
            .collect();

        let mut class: Vec<usize> = reach.iter().map(|&q| self.accepting[q] as usize).collect();
        let mut classes = count_distinct(&class);
        loop {
            let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let refined: Vec<usize> = (0..reach.len())
                .map(|i| {
                    let key = (class[i], succ[i].iter().map(|&j| class[j]).collect());
                    let next = ids.len();
                    *ids.entry(key).or_insert(next)
                })
                .collect();
            let count = ids.len();
            class = refined;
            if count == classes {
                break;
            }
            classes = count;
        }

        // breadth-first renumbering of the quotient
        let mut number = vec![usize::MAX; classes];
        let mut rep: Vec<usize> = Vec::with_capacity(classes);
        number[class[0]] = 0;
        rep.push(0);
        let mut i = 0;
        while i < rep.len() {
            let r = rep[i];
            i += 1;
            for c in 0..k {
                let t = class[succ[r][c]];
                if number[t] == usize::MAX {
                    number[t] = rep.len();
                    // any member of the class will do; pick the first one seen
                    rep.push(succ[r][c]);
                }
            }
        }
        let delta: Vec<Vec<usize>> = rep
            .iter()
            .map(|&r| (0..k).map(|c| number[class[succ[r][c]]]).collect())
            .collect();
        let accepting = rep
            .iter()
            .enumerate()
            .filter(|(_, &r)| self.accepting[reach[r]])
            .map(|(i, _)| i);
        Dfa::new(self.alphabet.clone(), 0, accepting, delta).expect("quotient is well formed")
    }

    pub fn equivalent(&self, other: &Dfa) -> Result<bool> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.minimize() == other.minimize())
    }

    /// A shortest word on which the two automata disagree, if any.
    pub fn find_difference(&self, other: &Dfa) -> Result<Option<Word>> {
        let xor = self.product(other, |x, y| x != y)?;
        Ok(xor.shortest_word())
    }

    /// Length of a shortest accepted word.
    pub fn shortest_word_length(&self) -> Option<usize> {
        self.shortest_word().map(|w| w.len())
    }

    /// A shortest accepted word, least in alphabet order among those.
    pub fn shortest_word(&self) -> Option<Word> {
        let n = self.state_count();
        let mut parent: Vec<Option<(usize, Symbol)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([self.start]);
        seen[self.start] = true;
        while let Some(q) = queue.pop_front() {
            if self.accepting[q] {
                let mut w = Vec::new();
                let mut cur = q;
                while let Some((p, c)) = parent[cur] {
                    w.push(c);
                    cur = p;
                }
                w.reverse();
                return Some(Word(w));
            }
            for c in self.alphabet.symbols() {
                let t = self.step(q, c);
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((q, c));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    /// For each state, the length of a shortest word leading to acceptance.
    fn distance_to_accept(&self) -> Vec<Option<usize>> {
        let n = self.state_count();
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
        for q in 0..n {
            for c in self.alphabet.symbols() {
                rev[self.step(q, c)].push(q);
            }
        }
        let mut dist = vec![None; n];
        let mut queue = VecDeque::new();
        for q in self.accepting_states() {
            dist[q] = Some(0);
            queue.push_back(q);
        }
        while let Some(q) = queue.pop_front() {
            let d = dist[q].unwrap();
            for &p in &rev[q] {
                if dist[p].is_none() {
                    dist[p] = Some(d + 1);
                    queue.push_back(p);
                }
            }
        }
        dist
    }

    /// All accepted words of length at most `max_len`, length first then
    /// lexicographic in alphabet order.
    pub fn enumerate_accepted(&self, max_len: usize) -> Vec<Word> {
        let dist = self.distance_to_accept();
        let viable = |q: usize, budget: usize| dist[q].is_some_and(|d| d <= budget);
        let mut out = Vec::new();
        if !viable(self.start, max_len) {
            return out;
        }
        let mut level: Vec<(Vec<Symbol>, usize)> = vec![(Vec::new(), self.start)];
        for len in 0..=max_len {
            let mut next = Vec::new();
            for (w, q) in &level {
                if self.accepting[*q] {
                    out.push(Word(w.clone()));
                }
                if len == max_len {
                    continue;
                }
                for c in self.alphabet.symbols() {
                    let t = self.step(*q, c);
                    if viable(t, max_len - len - 1) {
                        let mut v = w.clone();
                        v.push(c);
                        next.push((v, t));
                    }
                }
            }
            level = next;
        }
        out
    }

    pub fn to_nfa(&self) -> Nfa {
        let delta = (0..self.state_count())
            .map(|q| self.alphabet.symbols().map(|c| vec![self.step(q, c)]).collect())
            .collect();
        Nfa::new(
            self.alphabet.clone(),
            [self.start],
            self.accepting_states(),
            delta,
        )
        .expect("a DFA is a valid NFA")
    }
}

fn count_distinct(v: &[usize]) -> usize {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn ab_star_runs() {
        let d = fixtures::ab_star();
        let s = d.alphabet().clone();
        assert!(d.accepts(&s.parse_word("abab").unwrap()).unwrap());
        assert!(!d.accepts(&s.parse_word("aba").unwrap()).unwrap());
        assert!(d.accepts(&Word::empty()).unwrap());
    }

    #[test]
    fn out_of_alphabet_symbol_is_an_error() {
        let d = fixtures::ab_star();
        assert!(d.accepts(&Word(vec![Symbol(5)])).is_err());
    }

    #[test]
    fn partial_table_gets_dead_state() {
        let d = fixtures::ab_star();
        assert_eq!(d.state_count(), 3);
        assert!(!d.is_accepting(2));
        assert_eq!(d.step(2, Symbol(0)), 2);
    }

    #[test]
    fn conflicting_transitions_rejected() {
        let s = Alphabet::from_chars("a").unwrap();
        let r = Dfa::from_partial(s, 2, 0, [], [(0, Symbol(0), 1), (0, Symbol(0), 0)]);
        assert!(r.is_err());
    }

    #[test]
    fn minimize_is_idempotent_and_canonical() {
        let d = fixtures::ab_star();
        let m = d.minimize();
        assert_eq!(m.minimize(), m);
        // a differently shaped automaton for (ab)*: two accepting copies
        let s = d.alphabet().clone();
        let a = s.symbol("a").unwrap();
        let b = s.symbol("b").unwrap();
        let other = Dfa::from_partial(
            s,
            4,
            0,
            [0, 2],
            [(0, a, 1), (1, b, 2), (2, a, 3), (3, b, 0)],
        )
        .unwrap();
        assert_ne!(other, d);
        assert_eq!(other.minimize(), m);
    }

    #[test]
    fn unreachable_accepting_state_minimizes_to_dead() {
        let s = Alphabet::from_chars("ab").unwrap();
        let d = Dfa::new(s.clone(), 0, [1], vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(d.minimize(), Dfa::empty(s));
    }

    #[test]
    fn intersection_and_emptiness() {
        let d = fixtures::ab_star();
        let s = d.alphabet().clone();
        assert!(d.intersect(&Dfa::universal(s.clone())).unwrap().equivalent(&d).unwrap());
        assert!(d.intersect(&Dfa::empty(s.clone())).unwrap().is_empty());
        assert!(d.intersect(&d.complement()).unwrap().is_empty());
        assert!(!d.is_empty());
        let other = Alphabet::from_chars("xy").unwrap();
        assert_eq!(d.intersect(&Dfa::empty(other)), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn one_star_two_star_meets_two_star_three_star() {
        let s = Alphabet::from_chars("123").unwrap();
        let [one, two, three] = [0, 1, 2].map(Symbol);
        let d12 = Dfa::from_partial(s.clone(), 2, 0, [0, 1], [(0, one, 0), (0, two, 1), (1, two, 1)])
            .unwrap();
        let d23 =
            Dfa::from_partial(s.clone(), 2, 0, [0, 1], [(0, two, 0), (0, three, 1), (1, three, 1)])
                .unwrap();
        let d2 = Dfa::from_partial(s.clone(), 1, 0, [0], [(0, two, 0)]).unwrap();
        let meet = d12.intersect(&d23).unwrap();
        // frozen by enumerating all 364 words of length <= 5
        let expected: Vec<Word> = (0..=5).map(|n| Word(vec![two; n])).collect();
        let brute: Vec<Word> = s
            .words_up_to(5)
            .filter(|w| d12.accepts(w).unwrap() && d23.accepts(w).unwrap())
            .collect();
        assert_eq!(brute, expected);
        assert_eq!(meet.enumerate_accepted(5), expected);
        assert!(meet.equivalent(&d2).unwrap());
    }

    #[test]
    fn equivalence_and_witness() {
        let d = fixtures::ab_star();
        let s = d.alphabet().clone();
        let [a, b] = [Symbol(0), Symbol(1)];
        // (ab)*ab
        let plus = Dfa::from_partial(s.clone(), 3, 0, [2], [(0, a, 1), (1, b, 2), (2, a, 1)]).unwrap();
        assert!(!d.equivalent(&plus).unwrap());
        // exhaustive check to length 4: (ab)*ab = (ab)+, so only ε separates them
        let diffs: Vec<String> = s
            .words_up_to(4)
            .filter(|w| d.accepts(w).unwrap() != plus.accepts(w).unwrap())
            .map(|w| s.render(&w))
            .collect();
        assert_eq!(diffs, [""]);
        assert_eq!(d.find_difference(&plus).unwrap(), Some(Word::empty()));
        assert!(d.equivalent(&d).unwrap());
        assert!(d.to_nfa().determinize().equivalent(&d).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let d = fixtures::ab_star();
        let s = d.alphabet().clone();
        let words: Vec<String> = d.enumerate_accepted(5).iter().map(|w| s.render(w)).collect();
        assert_eq!(words, ["", "ab", "abab"].map(String::from));
        assert!(Dfa::empty(s).enumerate_accepted(5).is_empty());

        let z = fixtures::zeros_then_one();
        let s = z.alphabet().clone();
        let words: Vec<String> = z.enumerate_accepted(3).iter().map(|w| s.render(w)).collect();
        assert_eq!(words, ["1", "01", "001"].map(String::from));
    }

    #[test]
    fn shortest_lengths() {
        assert_eq!(fixtures::ab_star().shortest_word_length(), Some(0));
        assert_eq!(fixtures::zeros_then_one().shortest_word_length(), Some(1));
        let s = Alphabet::from_chars("a").unwrap();
        assert_eq!(Dfa::empty(s).shortest_word_length(), None);
    }
}
