//! Direct parsers and generators for the three built-in languages
//!
//! - `{1 0ⁿ 2 (0⁺ 3)ⁿ : n ≥ 1}` over `0123`,
//! - `{0ⁿ 1ⁿ : n ≥ 0}` over `01`,
//! - the three-block language over `abcdefghij0` whose blocks read
//!   `x₀ 0^{3m+1} x₁ (0⁺ x₂)^{m−2} 0⁺` with `m ≥ 3`, followed by a final `j`.
//!
//! None of these go through a grammar.

use std::fmt;

use crate::automata::{Alphabet, Symbol, Word};
use crate::diag::square_side;
use crate::error::{Error, Result};

pub fn thm2_alphabet() -> Alphabet {
    Alphabet::from_chars("0123").unwrap()
}

pub fn zero_one_alphabet() -> Alphabet {
    Alphabet::from_chars("01").unwrap()
}

pub fn thm5_alphabet() -> Alphabet {
    Alphabet::from_chars("abcdefghij0").unwrap()
}

const ZERO5: Symbol = Symbol(10);
const BLOCKS: [[Symbol; 3]; 3] = [
    [Symbol(0), Symbol(1), Symbol(2)],
    [Symbol(3), Symbol(4), Symbol(5)],
    [Symbol(6), Symbol(7), Symbol(8)],
];
const END5: Symbol = Symbol(9);

/// Length of the run of `zero` starting at `i`.
fn run(w: &[Symbol], i: usize, zero: Symbol) -> usize {
    w[i..].iter().take_while(|&&c| c == zero).count()
}

pub fn in_thm2(w: &Word) -> bool {
    let (zero, one, two, three) = (Symbol(0), Symbol(1), Symbol(2), Symbol(3));
    let w = w.symbols();
    if w.first() != Some(&one) {
        return false;
    }
    let n = run(w, 1, zero);
    if n == 0 || w.get(1 + n) != Some(&two) {
        return false;
    }
    let mut i = n + 2;
    for _ in 0..n {
        let z = run(w, i, zero);
        if z == 0 || w.get(i + z) != Some(&three) {
            return false;
        }
        i += z + 1;
    }
    i == w.len()
}

pub fn in_0n1n(w: &Word) -> bool {
    let w = w.symbols();
    let n = run(w, 0, Symbol(0));
    w.len() == 2 * n && w[n..].iter().all(|&c| c == Symbol(1))
}

/// Every word of `{1 0ⁿ 2 (0⁺ 3)ⁿ}` of length at most `max_len`, built from
/// its parameters.
pub fn thm2_words(max_len: usize) -> Vec<Word> {
    fn runs(n: usize, budget: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let rest = n - prefix.len() - 1;
        for z in 1..=budget.saturating_sub(rest) {
            prefix.push(z);
            runs(n, budget - z, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut n = 1;
    // shortest member with parameter n has length 3n + 2
    while 3 * n + 2 <= max_len {
        let mut all = Vec::new();
        runs(n, max_len - 2 - 2 * n, &mut Vec::new(), &mut all);
        for zs in all {
            let mut w = vec![Symbol(1)];
            w.extend(std::iter::repeat_n(Symbol(0), n));
            w.push(Symbol(2));
            for z in zs {
                w.extend(std::iter::repeat_n(Symbol(0), z));
                w.push(Symbol(3));
            }
            out.push(Word(w));
        }
        n += 1;
    }
    out.sort_by(crate::automata::shortlex);
    out
}

/// Parses `x₀ 0^{3m+1} x₁ (0⁺ x₂)^{m−2} 0⁺` from `i`, returning `m` and the
/// end position.
fn parse_block(w: &[Symbol], mut i: usize, letters: [Symbol; 3]) -> Option<(usize, usize)> {
    if w.get(i) != Some(&letters[0]) {
        return None;
    }
    let z = run(w, i + 1, ZERO5);
    if z < 10 || z % 3 != 1 {
        return None;
    }
    let m = (z - 1) / 3;
    i += 1 + z;
    if w.get(i) != Some(&letters[1]) {
        return None;
    }
    i += 1;
    for _ in 0..m - 2 {
        let z = run(w, i, ZERO5);
        if z == 0 || w.get(i + z) != Some(&letters[2]) {
            return None;
        }
        i += z + 1;
    }
    let z = run(w, i, ZERO5);
    if z == 0 {
        return None;
    }
    Some((m, i + z))
}

/// The parameters `(m, n, p)` of `w` if it lies in the three-block language.
pub fn thm5_params(w: &Word) -> Option<(usize, usize, usize)> {
    let w = w.symbols();
    let (m, i) = parse_block(w, 0, BLOCKS[0])?;
    let (n, i) = parse_block(w, i, BLOCKS[1])?;
    let (p, i) = parse_block(w, i, BLOCKS[2])?;
    (w.get(i) == Some(&END5) && i + 1 == w.len()).then_some((m, n, p))
}

pub fn in_thm5(w: &Word) -> bool {
    thm5_params(w).is_some()
}

/// Membership by trying every split `w = w₁w₂w₃` against the three block
/// languages separately.
pub fn in_thm5_by_split(w: &Word) -> bool {
    let w = w.symbols();
    let whole = |part: &[Symbol], letters| parse_block(part, 0, letters).is_some_and(|(_, end)| end == part.len());
    let Some((&last, body)) = w.split_last() else {
        return false;
    };
    if last != END5 {
        return false;
    }
    (0..=body.len()).any(|i| {
        whole(&body[..i], BLOCKS[0]) && (i..=body.len()).any(|j| whole(&body[i..j], BLOCKS[1]) && whole(&body[j..], BLOCKS[2]))
    })
}

/// The member with `m = n = p = t + 2` and every zero run of length
/// `3m + 1`. It has length `(3t + 7)²` and diagonal `ab cᵗ de fᵗ gh iᵗ j`.
pub fn thm5_witness(t: usize) -> Word {
    let m = t + 2;
    let z = 3 * m + 1;
    let zeros = || std::iter::repeat_n(ZERO5, z);
    let mut w = Vec::new();
    for letters in BLOCKS {
        w.push(letters[0]);
        w.extend(zeros());
        w.push(letters[1]);
        for _ in 0..m - 2 {
            w.extend(zeros());
            w.push(letters[2]);
        }
        w.extend(zeros());
    }
    w.push(END5);
    Word(w)
}

/// One position of a [`DiagPattern`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slot {
    Any,
    OneOf(Vec<Symbol>),
}

impl Slot {
    pub fn matches(&self, c: Symbol) -> bool {
        match self {
            Slot::Any => true,
            Slot::OneOf(set) => set.contains(&c),
        }
    }
}

/// A constraint on the diagonal: one slot per diagonal position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagPattern {
    slots: Vec<Slot>,
}

impl DiagPattern {
    pub fn new(slots: Vec<Slot>) -> Self {
        DiagPattern { slots }
    }

    pub fn exact(w: &Word) -> Self {
        DiagPattern {
            slots: w.iter().map(|&c| Slot::OneOf(vec![c])).collect(),
        }
    }

    /// Single-character symbol names, `?` for any letter, `[..]` for a set.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self> {
        let mut slots = Vec::new();
        let mut chars = text.chars();
        while let Some(ch) = chars.next() {
            match ch {
                '?' => slots.push(Slot::Any),
                '[' => {
                    let mut set = Vec::new();
                    loop {
                        match chars.next() {
                            Some(']') => break,
                            Some(c) => set.push(alphabet.symbol(&c.to_string())?),
                            None => return Err(Error::InvalidPattern(format!("unclosed `[` in `{text}`"))),
                        }
                    }
                    if set.is_empty() {
                        return Err(Error::InvalidPattern(format!("empty set in `{text}`")));
                    }
                    slots.push(Slot::OneOf(set));
                }
                c => slots.push(Slot::OneOf(vec![alphabet.symbol(&c.to_string())?])),
            }
        }
        Ok(DiagPattern { slots })
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn matches(&self, w: &Word) -> bool {
        w.len() == self.slots.len() && self.slots.iter().zip(w.iter()).all(|(s, &c)| s.matches(c))
    }
}

impl fmt::Display for DiagPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = thm5_alphabet();
        for slot in &self.slots {
            match slot {
                Slot::Any => f.write_str("?")?,
                Slot::OneOf(set) if set.len() == 1 => f.write_str(names.name(set[0]))?,
                Slot::OneOf(set) => {
                    f.write_str("[")?;
                    for &c in set {
                        f.write_str(names.name(c))?;
                    }
                    f.write_str("]")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Item {
    Lit(Symbol),
    Zeros(usize),
    /// A `0⁺` run of free length.
    Var,
}

fn plan(m: usize, n: usize, p: usize) -> Vec<Item> {
    let mut items = Vec::new();
    for (letters, k) in BLOCKS.iter().zip([m, n, p]) {
        items.push(Item::Lit(letters[0]));
        items.push(Item::Zeros(3 * k + 1));
        items.push(Item::Lit(letters[1]));
        for _ in 0..k - 2 {
            items.push(Item::Var);
            items.push(Item::Lit(letters[2]));
        }
        items.push(Item::Var);
    }
    items.push(Item::Lit(END5));
    items
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    item: usize,
    pos: usize,
    value: usize,
    max: usize,
}

/// Iterator returned by [`enumerate_thm5_by_length`].
#[derive(Debug, Clone)]
pub struct Thm5Words {
    total: usize,
    /// `(t + 1, pattern)` when pruning against a diagonal pattern
    filter: Option<(usize, DiagPattern)>,
    triples: std::vec::IntoIter<(usize, usize, usize)>,
    items: Vec<Item>,
    /// fixed length and number of free runs from each item onward
    fixed_from: Vec<usize>,
    vars_from: Vec<usize>,
    stack: Vec<Frame>,
    buf: Vec<Symbol>,
    item: usize,
    descending: bool,
}

/// Every member of the three-block language of length `total`, optionally
/// pruned to those whose diagonal fits `pattern`. With a pattern, `total`
/// must be `t²` with `t` the pattern length.
pub fn enumerate_thm5_by_length(total: usize, pattern: Option<&DiagPattern>) -> Result<Thm5Words> {
    let filter = match pattern {
        None => None,
        Some(pat) => {
            let t = square_side(total)?;
            if pat.len() != t {
                return Err(Error::InvalidPattern(format!(
                    "pattern has {} positions, words of length {total} have diagonals of length {t}",
                    pat.len()
                )));
            }
            Some((t + 1, pat.clone()))
        }
    };
    let mut triples = Vec::new();
    for m in 3.. {
        if 5 * (m + 6) + 1 > total {
            break;
        }
        for n in 3.. {
            if 5 * (m + n + 3) + 1 > total {
                break;
            }
            for p in 3.. {
                if 5 * (m + n + p) + 1 > total {
                    break;
                }
                triples.push((m, n, p));
            }
        }
    }
    Ok(Thm5Words {
        total,
        filter,
        triples: triples.into_iter(),
        items: Vec::new(),
        fixed_from: Vec::new(),
        vars_from: Vec::new(),
        stack: Vec::new(),
        buf: Vec::with_capacity(total),
        item: 0,
        descending: false,
    })
}

impl Thm5Words {
    fn fits(&self, pos: usize, c: Symbol) -> bool {
        match &self.filter {
            Some((stride, pat)) if pos.is_multiple_of(*stride) => pat.slots[pos / stride].matches(c),
            _ => true,
        }
    }

    fn zeros_fit(&self, pos: usize, len: usize) -> bool {
        match &self.filter {
            None => true,
            Some((stride, pat)) => {
                let first = pos.div_ceil(*stride);
                (first..)
                    .take_while(|k| k * stride < pos + len)
                    .all(|k| pat.slots[k].matches(ZERO5))
            }
        }
    }

    fn load(&mut self, (m, n, p): (usize, usize, usize)) {
        self.items = plan(m, n, p);
        let len = self.items.len();
        self.fixed_from = vec![0; len + 1];
        self.vars_from = vec![0; len + 1];
        for i in (0..len).rev() {
            let (fixed, var) = match self.items[i] {
                Item::Lit(_) => (1, 0),
                Item::Zeros(k) => (k, 0),
                Item::Var => (0, 1),
            };
            self.fixed_from[i] = self.fixed_from[i + 1] + fixed;
            self.vars_from[i] = self.vars_from[i + 1] + var;
        }
        self.stack.clear();
        self.buf.clear();
        self.item = 0;
        self.descending = self.fixed_from[0] + self.vars_from[0] <= self.total;
    }

    /// Places items from `self.item` on; true when a whole word is built.
    fn descend(&mut self) -> bool {
        while self.item < self.items.len() {
            let pos = self.buf.len();
            match self.items[self.item] {
                Item::Lit(c) => {
                    if !self.fits(pos, c) {
                        return false;
                    }
                    self.buf.push(c);
                }
                Item::Zeros(k) => {
                    if !self.zeros_fit(pos, k) {
                        return false;
                    }
                    self.buf.extend(std::iter::repeat_n(ZERO5, k));
                }
                Item::Var => {
                    let room = self.total - pos - self.fixed_from[self.item + 1];
                    let later = self.vars_from[self.item + 1];
                    if room < later + 1 {
                        return false;
                    }
                    let max = room - later;
                    let min = if later == 0 { max } else { 1 };
                    if !self.zeros_fit(pos, min) {
                        return false;
                    }
                    self.stack.push(Frame {
                        item: self.item,
                        pos,
                        value: min,
                        max,
                    });
                    self.buf.extend(std::iter::repeat_n(ZERO5, min));
                }
            }
            self.item += 1;
        }
        true
    }

    /// Lengthens the innermost free run that can still grow.
    fn backtrack(&mut self) -> bool {
        while let Some(top) = self.stack.last_mut() {
            top.value += 1;
            let end = top.pos + top.value;
            let (pos, value, item) = (top.pos, top.value, top.item);
            if value > top.max || !self.zeros_fit(end - 1, 1) {
                // a longer run covers the same failing position
                self.stack.pop();
                continue;
            }
            self.buf.truncate(pos);
            self.buf.extend(std::iter::repeat_n(ZERO5, value));
            self.item = item + 1;
            return true;
        }
        false
    }
}

impl Iterator for Thm5Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            if self.descending {
                if self.descend() {
                    debug_assert_eq!(self.buf.len(), self.total);
                    let w = Word(self.buf.clone());
                    self.descending = self.backtrack();
                    return Some(w);
                }
                self.descending = self.backtrack();
                continue;
            }
            let triple = self.triples.next()?;
            self.load(triple);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w2(s: &str) -> Word {
        thm2_alphabet().parse_word(s).unwrap()
    }

    fn w5(s: &str) -> Word {
        thm5_alphabet().parse_word(s).unwrap()
    }

    /// Expands `0^k` shorthand written as `0{k}`.
    fn expand(s: &str) -> String {
        let mut out = String::new();
        let mut rest = s;
        while let Some(i) = rest.find('{') {
            let j = rest.find('}').unwrap();
            let k: usize = rest[i + 1..j].parse().unwrap();
            out.push_str(&rest[..i - 1]);
            out.push_str(&"0".repeat(k));
            rest = &rest[j + 1..];
        }
        out + rest
    }

    #[test]
    fn thm2_examples() {
        assert!(in_thm2(&w2("10203")));
        assert!(in_thm2(&w2("100200303")));
        assert!(!in_thm2(&w2("1203")));
        assert!(!in_thm2(&w2("1023")));
        assert!(!in_thm2(&w2("1020303")));
        assert!(!in_thm2(&Word::empty()));
    }

    #[test]
    fn zero_one_examples() {
        let s = zero_one_alphabet();
        assert!(in_0n1n(&Word::empty()));
        assert!(in_0n1n(&s.parse_word("0011").unwrap()));
        assert!(!in_0n1n(&s.parse_word("011").unwrap()));
        assert!(!in_0n1n(&s.parse_word("0101").unwrap()));
    }

    #[test]
    fn thm2_generator_agrees_with_parser() {
        let s = thm2_alphabet();
        let generated = thm2_words(10);
        let parsed: Vec<Word> = s.words_up_to(10).filter(in_thm2).collect();
        assert_eq!(generated, parsed);
        assert_eq!(s.render(&generated[0]), "10203");
    }

    #[test]
    fn minimal_thm5_member() {
        let w = w5(&expand("a0{10}b0c0d0{10}e0f0g0{10}h0i0j"));
        assert_eq!(w.len(), 46);
        assert_eq!(thm5_params(&w), Some((3, 3, 3)));
        assert!(in_thm5_by_split(&w));
        // first run must be 3m + 1 with m ≥ 3
        let short = w5(&expand("a0{7}b0d0{10}e0f0g0{10}h0i0j"));
        assert!(!in_thm5(&short) && !in_thm5_by_split(&short));
        let wrong = w5(&expand("a0{11}b0c0d0{10}e0f0g0{10}h0i0j"));
        assert!(!in_thm5(&wrong) && !in_thm5_by_split(&wrong));
    }

    #[test]
    fn witnesses() {
        let s = thm5_alphabet();
        for (t, side, diag) in [(1, 10, "abcdefghij"), (2, 13, "abccdeffghiij")] {
            let w = thm5_witness(t);
            assert_eq!(w.len(), side * side);
            assert_eq!(thm5_params(&w), Some((t + 2, t + 2, t + 2)));
            assert_eq!(s.render(&crate::diag::diag_word(&w).unwrap()), diag);
        }
    }

    #[test]
    fn enumerator_at_minimum_length() {
        let all: Vec<Word> = enumerate_thm5_by_length(46, None).unwrap().collect();
        assert_eq!(all, [w5(&expand("a0{10}b0c0d0{10}e0f0g0{10}h0i0j"))]);
        assert_eq!(enumerate_thm5_by_length(45, None).unwrap().count(), 0);
        // one extra zero goes into any of the six free runs
        let next: Vec<Word> = enumerate_thm5_by_length(47, None).unwrap().collect();
        assert_eq!(next.len(), 6);
        assert!(next.iter().all(in_thm5));
    }

    #[test]
    fn pattern_pruning() {
        let s = thm5_alphabet();
        let exact = DiagPattern::exact(&w5("abcdefghij"));
        let hits: Vec<Word> = enumerate_thm5_by_length(100, Some(&exact)).unwrap().collect();
        assert!(hits.contains(&thm5_witness(1)));
        assert!(hits.iter().all(|w| in_thm5(w) && exact.matches(&crate::diag::diag_word(w).unwrap())));

        let pat = DiagPattern::parse(&s, "ab?de?gh?j").unwrap();
        assert_eq!(pat.to_string(), "ab?de?gh?j");
        let any: Vec<Word> = enumerate_thm5_by_length(100, Some(&pat)).unwrap().collect();
        assert!(any.len() > hits.len());
        assert!(any.iter().all(|w| pat.matches(&crate::diag::diag_word(w).unwrap())));

        assert_eq!(
            enumerate_thm5_by_length(99, Some(&pat)).err(),
            Some(Error::NotPerfectSquare(99))
        );
        assert!(matches!(
            enumerate_thm5_by_length(121, Some(&pat)),
            Err(Error::InvalidPattern(_))
        ));
    }

    #[test]
    fn pattern_parsing() {
        let s = thm5_alphabet();
        let p = DiagPattern::parse(&s, "a[cf]?").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.to_string(), "a[cf]?");
        assert!(DiagPattern::parse(&s, "a[cf").is_err());
        assert!(DiagPattern::parse(&s, "a[]").is_err());
        assert!(DiagPattern::parse(&s, "z").is_err());
    }
}
