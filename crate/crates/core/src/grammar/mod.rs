//! Context-free grammars: Chomsky normal form, CYK membership and bounded
//! enumeration, plus the structural predicates in [`patterns`].

pub mod patterns;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::automata::{json::parse_err, Alphabet, Symbol, Word};
use crate::error::{Error, Result};

/// A grammar symbol: terminal or nonterminal index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GSym {
    T(Symbol),
    N(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cfg {
    terminals: Alphabet,
    nonterminals: Vec<String>,
    start: usize,
    /// `rules[A]` lists the right-hand sides of `A`; `[]` is ε.
    rules: Vec<Vec<Vec<GSym>>>,
}

impl Cfg {
    /// Builds a grammar from symbol names. A right-hand-side token is a
    /// terminal if it names one, otherwise it must be a declared nonterminal.
    pub fn new<S: AsRef<str>>(
        terminals: Alphabet,
        nonterminals: &[S],
        start: &str,
        rules: &[(&str, Vec<Vec<&str>>)],
    ) -> Result<Self> {
        let nonterminals: Vec<String> = nonterminals.iter().map(|s| s.as_ref().to_string()).collect();
        let mut by_lhs = vec![Vec::new(); nonterminals.len()];
        for (lhs, rhss) in rules {
            let a = find_nonterminal(&nonterminals, lhs)?;
            for rhs in rhss {
                let syms = rhs
                    .iter()
                    .map(|tok| resolve(&terminals, &nonterminals, tok))
                    .collect::<Result<Vec<_>>>()?;
                by_lhs[a].push(syms);
            }
        }
        let start = find_nonterminal(&nonterminals, start)?;
        Cfg::from_parts(terminals, nonterminals, start, by_lhs)
    }

    pub fn from_parts(
        terminals: Alphabet,
        nonterminals: Vec<String>,
        start: usize,
        rules: Vec<Vec<Vec<GSym>>>,
    ) -> Result<Self> {
        if nonterminals.is_empty() {
            return Err(Error::InvalidGrammar("no nonterminals".into()));
        }
        for (i, name) in nonterminals.iter().enumerate() {
            if nonterminals[..i].contains(name) {
                return Err(Error::InvalidGrammar(format!("duplicate nonterminal `{name}`")));
            }
            if terminals.names().contains(name) {
                return Err(Error::InvalidGrammar(format!("`{name}` is both terminal and nonterminal")));
            }
        }
        if start >= nonterminals.len() || rules.len() != nonterminals.len() {
            return Err(Error::InvalidGrammar("start or rule table out of range".into()));
        }
        for rhs in rules.iter().flatten() {
            for &s in rhs {
                match s {
                    GSym::T(t) => terminals.check(t)?,
                    GSym::N(n) if n >= nonterminals.len() => {
                        return Err(Error::InvalidGrammar(format!("nonterminal index {n} out of range")))
                    }
                    GSym::N(_) => {}
                }
            }
        }
        Ok(Cfg {
            terminals,
            nonterminals,
            start,
            rules,
        })
    }

    pub fn terminals(&self) -> &Alphabet {
        &self.terminals
    }

    pub fn nonterminals(&self) -> &[String] {
        &self.nonterminals
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn rules(&self) -> &[Vec<Vec<GSym>>] {
        &self.rules
    }

    pub fn rule_count(&self) -> usize {
        self.rules.iter().map(Vec::len).sum()
    }

    /// Whether every rule is `A → BC`, `A → t`, or `S → ε` with the start
    /// symbol never on a right-hand side.
    pub fn is_cnf(&self) -> bool {
        self.rules.iter().enumerate().all(|(a, rhss)| {
            rhss.iter().all(|rhs| match rhs.as_slice() {
                [] => a == self.start,
                [GSym::T(_)] => true,
                [GSym::N(b), GSym::N(c)] => *b != self.start && *c != self.start,
                _ => false,
            })
        })
    }

    fn fresh_name(&self, base: &str) -> String {
        let taken = |n: &str| self.nonterminals.iter().any(|x| x == n) || self.terminals.names().iter().any(|x| x == n);
        if !taken(base) {
            return base.to_string();
        }
        (1..).map(|i| format!("{base}{i}")).find(|n| !taken(n)).unwrap()
    }

    fn add_nonterminal(&mut self, base: &str) -> usize {
        let name = self.fresh_name(base);
        self.nonterminals.push(name);
        self.rules.push(Vec::new());
        self.nonterminals.len() - 1
    }

    /// Nonterminals that derive ε.
    pub fn nullable(&self) -> Vec<bool> {
        let mut nullable = vec![false; self.nonterminals.len()];
        let mut changed = true;
        while changed {
            changed = false;
            for (a, rhss) in self.rules.iter().enumerate() {
                if nullable[a] {
                    continue;
                }
                let derives_eps = rhss
                    .iter()
                    .any(|rhs| rhs.iter().all(|s| matches!(s, GSym::N(b) if nullable[*b])));
                if derives_eps {
                    nullable[a] = true;
                    changed = true;
                }
            }
        }
        nullable
    }

    /// Length of a shortest terminal word derivable from each nonterminal;
    /// `None` for unproductive ones.
    pub fn min_yield(&self) -> Vec<Option<usize>> {
        let mut best: Vec<Option<usize>> = vec![None; self.nonterminals.len()];
        let mut changed = true;
        while changed {
            changed = false;
            for (a, rhss) in self.rules.iter().enumerate() {
                for rhs in rhss {
                    let len = rhs.iter().try_fold(0usize, |acc, s| match s {
                        GSym::T(_) => Some(acc + 1),
                        GSym::N(b) => best[*b].map(|l| acc + l),
                    });
                    if let Some(len) = len {
                        if best[a].is_none_or(|cur| len < cur) {
                            best[a] = Some(len);
                            changed = true;
                        }
                    }
                }
            }
        }
        best
    }

    /// Weakly equivalent grammar in Chomsky normal form. Grammars already in
    /// that form are returned unchanged.
    pub fn to_cnf(&self) -> Cfg {
        if self.is_cnf() {
            return self.clone();
        }
        let mut g = self.clone();

        // fresh start symbol
        let old_start = g.start;
        let s0 = g.add_nonterminal(&format!("{}0", g.nonterminals[old_start]));
        g.rules[s0].push(vec![GSym::N(old_start)]);
        g.start = s0;

        // terminals inside long right-hand sides get their own nonterminal
        let mut term_nt: HashMap<Symbol, usize> = HashMap::new();
        for a in 0..g.rules.len() {
            for r in 0..g.rules[a].len() {
                if g.rules[a][r].len() < 2 {
                    continue;
                }
                for i in 0..g.rules[a][r].len() {
                    if let GSym::T(t) = g.rules[a][r][i] {
                        let n = match term_nt.get(&t) {
                            Some(&n) => n,
                            None => {
                                let base = format!("T_{}", g.terminals.name(t));
                                let n = g.add_nonterminal(&base);
                                g.rules[n].push(vec![GSym::T(t)]);
                                term_nt.insert(t, n);
                                n
                            }
                        };
                        g.rules[a][r][i] = GSym::N(n);
                    }
                }
            }
        }

        // binarize
        for a in 0..g.rules.len() {
            let mut r = 0;
            while r < g.rules[a].len() {
                if g.rules[a][r].len() > 2 {
                    let rhs = std::mem::take(&mut g.rules[a][r]);
                    let mut lhs = a;
                    let mut slot = Some(r);
                    for (i, &head) in rhs[..rhs.len() - 2].iter().enumerate() {
                        let base = format!("{}_{}", g.nonterminals[a], i + 1);
                        let next = g.add_nonterminal(&base);
                        let pair = vec![head, GSym::N(next)];
                        match slot.take() {
                            Some(r) => g.rules[lhs][r] = pair,
                            None => g.rules[lhs].push(pair),
                        }
                        lhs = next;
                    }
                    g.rules[lhs].push(rhs[rhs.len() - 2..].to_vec());
                }
                r += 1;
            }
        }

        // drop ε-rules, adding the variants that skip nullable symbols
        let nullable = g.nullable();
        for rhss in g.rules.iter_mut() {
            let mut extra = Vec::new();
            for rhs in rhss.iter() {
                if let [x, y] = rhs.as_slice() {
                    if matches!(y, GSym::N(b) if nullable[*b]) {
                        extra.push(vec![*x]);
                    }
                    if matches!(x, GSym::N(b) if nullable[*b]) {
                        extra.push(vec![*y]);
                    }
                }
            }
            rhss.extend(extra);
            rhss.retain(|rhs| !rhs.is_empty());
        }

        // replace unit rules by the non-unit rules they reach
        let n = g.rules.len();
        let unit_closure: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                let mut seen = vec![false; n];
                let mut queue = VecDeque::from([a]);
                seen[a] = true;
                while let Some(b) = queue.pop_front() {
                    for rhs in &g.rules[b] {
                        if let [GSym::N(c)] = rhs.as_slice() {
                            if !seen[*c] {
                                seen[*c] = true;
                                queue.push_back(*c);
                            }
                        }
                    }
                }
                (0..n).filter(|&b| seen[b]).collect()
            })
            .collect();
        let mut rules: Vec<Vec<Vec<GSym>>> = vec![Vec::new(); n];
        for a in 0..n {
            let mut seen: HashSet<Vec<GSym>> = HashSet::new();
            for &b in &unit_closure[a] {
                for rhs in &g.rules[b] {
                    if !matches!(rhs.as_slice(), [GSym::N(_)]) && seen.insert(rhs.clone()) {
                        rules[a].push(rhs.clone());
                    }
                }
            }
        }
        if nullable[old_start] {
            rules[s0].push(Vec::new());
        }
        g.rules = rules;
        debug_assert!(g.is_cnf());
        g
    }

    /// Whether `w` is generated by the grammar.
    pub fn cyk_accepts(&self, w: &Word) -> Result<bool> {
        Cyk::new(self).accepts(w)
    }

    /// Every generated word of length at most `max_len`, found by leftmost
    /// derivation over sentential forms whose shortest possible yield still
    /// fits. Grammars with ε-rules are first put in normal form so that
    /// sentential forms stay bounded.
    pub fn enumerate_words(&self, max_len: usize) -> BTreeSet<Word> {
        let has_eps = self.rules.iter().flatten().any(Vec::is_empty);
        let g = if has_eps { self.to_cnf() } else { self.clone() };
        let min = g.min_yield();
        let mut out = BTreeSet::new();
        if min[g.start].is_none_or(|l| l > max_len) {
            return out;
        }
        let yield_len = |form: &[GSym]| -> Option<usize> {
            form.iter().try_fold(0usize, |acc, s| match s {
                GSym::T(_) => Some(acc + 1),
                GSym::N(b) => min[*b].map(|l| acc + l),
            })
        };
        let mut seen: HashSet<Vec<GSym>> = HashSet::new();
        let mut queue: VecDeque<Vec<GSym>> = VecDeque::from([vec![GSym::N(g.start)]]);
        while let Some(form) = queue.pop_front() {
            let Some(i) = form.iter().position(|s| matches!(s, GSym::N(_))) else {
                out.insert(
                    form.iter()
                        .map(|s| match s {
                            GSym::T(t) => *t,
                            GSym::N(_) => unreachable!(),
                        })
                        .collect(),
                );
                continue;
            };
            let GSym::N(a) = form[i] else { unreachable!() };
            for rhs in &g.rules[a] {
                let mut next = Vec::with_capacity(form.len() + rhs.len());
                next.extend_from_slice(&form[..i]);
                next.extend_from_slice(rhs);
                next.extend_from_slice(&form[i + 1..]);
                if yield_len(&next).is_some_and(|l| l <= max_len) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let name = |s: &GSym| match s {
            GSym::T(t) => self.terminals.name(*t).to_string(),
            GSym::N(n) => self.nonterminals[*n].clone(),
        };
        let rules = self
            .nonterminals
            .iter()
            .zip(&self.rules)
            .filter(|(_, rhss)| !rhss.is_empty())
            .map(|(a, rhss)| (a.clone(), rhss.iter().map(|rhs| rhs.iter().map(name).collect()).collect()))
            .collect();
        let file = CfgFile {
            terminals: self.terminals.names().to_vec(),
            nonterminals: self.nonterminals.clone(),
            start: self.nonterminals[self.start].clone(),
            rules,
        };
        serde_json::to_string_pretty(&file).expect("grammar serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: CfgFile = serde_json::from_str(text).map_err(parse_err)?;
        let terminals = Alphabet::new(file.terminals)?;
        let mut rules = vec![Vec::new(); file.nonterminals.len()];
        for (lhs, rhss) in &file.rules {
            let a = find_nonterminal(&file.nonterminals, lhs)?;
            for rhs in rhss {
                let syms = rhs
                    .iter()
                    .map(|tok| resolve(&terminals, &file.nonterminals, tok))
                    .collect::<Result<Vec<_>>>()?;
                rules[a].push(syms);
            }
        }
        let start = find_nonterminal(&file.nonterminals, &file.start)?;
        Cfg::from_parts(terminals, file.nonterminals, start, rules)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CfgFile {
    terminals: Vec<String>,
    nonterminals: Vec<String>,
    start: String,
    rules: IndexMap<String, Vec<Vec<String>>>,
}

fn find_nonterminal(nonterminals: &[String], name: &str) -> Result<usize> {
    nonterminals
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Error::InvalidGrammar(format!("undeclared nonterminal `{name}`")))
}

fn resolve(terminals: &Alphabet, nonterminals: &[String], tok: &str) -> Result<GSym> {
    if let Ok(t) = terminals.symbol(tok) {
        return Ok(GSym::T(t));
    }
    nonterminals
        .iter()
        .position(|n| n == tok)
        .map(GSym::N)
        .ok_or_else(|| Error::InvalidGrammar(format!("undeclared symbol `{tok}`")))
}

/// CYK recogniser over the normal form of a grammar.
#[derive(Debug, Clone)]
pub struct Cyk {
    cnf: Cfg,
    /// `by_terminal[t]`: nonterminals with a rule `A → t`.
    by_terminal: Vec<Vec<usize>>,
    /// `by_left[B]`: pairs `(C, A)` for rules `A → BC`.
    by_left: Vec<Vec<(usize, usize)>>,
    accepts_empty: bool,
}

impl Cyk {
    pub fn new(g: &Cfg) -> Self {
        let cnf = g.to_cnf();
        let n = cnf.nonterminals.len();
        let mut by_terminal = vec![Vec::new(); cnf.terminals.len()];
        let mut by_left = vec![Vec::new(); n];
        let mut accepts_empty = false;
        for (a, rhss) in cnf.rules.iter().enumerate() {
            for rhs in rhss {
                match rhs.as_slice() {
                    [] => accepts_empty = true,
                    [GSym::T(t)] => by_terminal[t.index()].push(a),
                    [GSym::N(b), GSym::N(c)] => by_left[*b].push((*c, a)),
                    _ => unreachable!("grammar is in normal form"),
                }
            }
        }
        Cyk {
            cnf,
            by_terminal,
            by_left,
            accepts_empty,
        }
    }

    pub fn grammar(&self) -> &Cfg {
        &self.cnf
    }

    pub fn accepts(&self, w: &Word) -> Result<bool> {
        w.check(&self.cnf.terminals)?;
        let len = w.len();
        if len == 0 {
            return Ok(self.accepts_empty);
        }
        let n = self.cnf.nonterminals.len();
        let words = n.div_ceil(64);
        // cell (i, l) holds the nonterminals deriving w[i..i+l] as a bitset
        let cell = |i: usize, l: usize| (i * len + (l - 1)) * words;
        let mut table = vec![0u64; len * len * words];
        let has = |table: &[u64], at: usize, a: usize| table[at + a / 64] >> (a % 64) & 1 == 1;
        for (i, &c) in w.iter().enumerate() {
            for &a in &self.by_terminal[c.index()] {
                table[cell(i, 1) + a / 64] |= 1 << (a % 64);
            }
        }
        for l in 2..=len {
            for i in 0..=len - l {
                let target = cell(i, l);
                for split in 1..l {
                    let (left, right) = (cell(i, split), cell(i + split, l - split));
                    for b in 0..n {
                        if !has(&table, left, b) {
                            continue;
                        }
                        for &(c, a) in &self.by_left[b] {
                            if has(&table, right, c) {
                                table[target + a / 64] |= 1 << (a % 64);
                            }
                        }
                    }
                }
            }
        }
        Ok(has(&table, cell(0, len), self.cnf.start))
    }
}

/// `S → 10AB, A → 0AB | 2, B → 0B | 03`, generating `{1 0ⁿ 2 (0⁺3)ⁿ : n ≥ 1}`.
pub fn thm2_grammar() -> Cfg {
    Cfg::new(
        Alphabet::from_chars("0123").unwrap(),
        &["S", "A", "B"],
        "S",
        &[
            ("S", vec![vec!["1", "0", "A", "B"]]),
            ("A", vec![vec!["0", "A", "B"], vec!["2"]]),
            ("B", vec![vec!["0", "B"], vec!["0", "3"]]),
        ],
    )
    .unwrap()
}

/// `S → 0S1 | ε`, generating `{0ⁿ1ⁿ : n ≥ 0}`.
pub fn zero_n_one_n_grammar() -> Cfg {
    Cfg::new(
        Alphabet::from_chars("01").unwrap(),
        &["S"],
        "S",
        &[("S", vec![vec!["0", "S", "1"], vec![]])],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(g: &Cfg, max: usize) -> Vec<String> {
        let mut ws: Vec<Word> = g.enumerate_words(max).into_iter().collect();
        ws.sort_by(crate::automata::shortlex);
        ws.iter().map(|w| g.terminals().render(w)).collect()
    }

    #[test]
    fn thm2_membership() {
        let g = thm2_grammar();
        let s = g.terminals().clone();
        assert!(g.cyk_accepts(&s.parse_word("10203").unwrap()).unwrap());
        assert!(!g.cyk_accepts(&s.parse_word("1023").unwrap()).unwrap());
        assert!(!g.cyk_accepts(&Word::empty()).unwrap());
        assert!(g.cyk_accepts(&Word(vec![Symbol(9)])).is_err());
    }

    #[test]
    fn zero_n_one_n_membership() {
        let g = zero_n_one_n_grammar();
        let s = g.terminals().clone();
        assert!(g.cyk_accepts(&s.parse_word("0011").unwrap()).unwrap());
        assert!(!g.cyk_accepts(&s.parse_word("011").unwrap()).unwrap());
        assert!(g.cyk_accepts(&Word::empty()).unwrap());
    }

    #[test]
    fn cnf_is_idempotent() {
        for g in [thm2_grammar(), zero_n_one_n_grammar()] {
            let cnf = g.to_cnf();
            assert!(cnf.is_cnf());
            assert_eq!(cnf.to_cnf(), cnf);
        }
    }

    #[test]
    fn epsilon_only_grammar() {
        let g = Cfg::new(Alphabet::from_chars("a").unwrap(), &["S"], "S", &[("S", vec![vec![]])]).unwrap();
        let cnf = g.to_cnf();
        assert!(cnf.nullable()[cnf.start()]);
        assert!(g.cyk_accepts(&Word::empty()).unwrap());
        assert!(!g.cyk_accepts(&Word(vec![Symbol(0)])).unwrap());
        assert_eq!(words(&g, 3), [""]);
    }

    #[test]
    fn undeclared_symbols_rejected() {
        let r = Cfg::new(Alphabet::from_chars("a").unwrap(), &["S"], "S", &[("S", vec![vec!["X"]])]);
        assert!(matches!(r, Err(Error::InvalidGrammar(_))));
        let r = Cfg::new(Alphabet::from_chars("a").unwrap(), &["S"], "T", &[]);
        assert!(matches!(r, Err(Error::InvalidGrammar(_))));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(words(&zero_n_one_n_grammar(), 4), ["", "01", "0011"]);
        assert_eq!(words(&thm2_grammar(), 5), ["10203"]);
        let empty = Cfg::new(Alphabet::from_chars("a").unwrap(), &["S"], "S", &[("S", vec![vec!["a", "S"]])]).unwrap();
        assert!(empty.enumerate_words(6).is_empty());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"terminals": ["0","1","2","3"], "nonterminals": ["S","A","B"], "start": "S",
            "rules": {"S": [["1","0","A","B"]], "A": [["0","A","B"],["2"]], "B": [["0","B"],["0","3"]]}}"#;
        let g = Cfg::from_json(text).unwrap();
        assert_eq!(g, thm2_grammar());
        assert_eq!(Cfg::from_json(&g.to_json()).unwrap(), g);
        let cnf = g.to_cnf();
        assert_eq!(Cfg::from_json(&cnf.to_json()).unwrap(), cnf);
    }
}
