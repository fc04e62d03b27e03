//! Finite automata over small indexed alphabets.
//!
//! Symbols are indices into an [`Alphabet`]; words are sequences of symbols.
//! Every [`Dfa`] is complete, so the boolean matrix machinery in
//! [`crate::boolmat`] can always assume a total transition function.

mod dfa;
pub mod json;
mod nfa;

use std::fmt;

use crate::error::{Error, Result};

pub use dfa::Dfa;
pub use nfa::Nfa;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u32);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Ordered set of distinct symbol names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidAlphabet("empty symbol name".into()));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol `{name}`")));
            }
        }
        Ok(Alphabet { names })
    }

    /// Alphabet of single-character symbols, in the given order.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Alphabet::new(chars.chars().map(String::from))
    }

    /// The distinct characters of `text`, in order of first appearance.
    pub fn implied_by(text: &str) -> Result<Self> {
        let mut seen = String::new();
        for c in text.chars() {
            if !seen.contains(c) {
                seen.push(c);
            }
        }
        Alphabet::from_chars(&seen)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, sym: Symbol) -> &str {
        &self.names[sym.index()]
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + Clone {
        (0..self.names.len() as u32).map(Symbol)
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Symbol(i as u32))
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn check(&self, sym: Symbol) -> Result<()> {
        if sym.index() < self.len() {
            Ok(())
        } else {
            Err(Error::SymbolOutOfRange {
                index: sym.index(),
                size: self.len(),
            })
        }
    }

    /// Parses a word written as a string of single-character symbol names.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut buf = [0u8; 4];
        text.chars()
            .map(|c| self.symbol(c.encode_utf8(&mut buf)))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn word_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Word> {
        names
            .iter()
            .map(|n| self.symbol(n.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    fn single_char(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Renders a word; symbol names are concatenated when they are all single
    /// characters and space separated otherwise.
    pub fn render(&self, word: &Word) -> String {
        let parts = word.iter().map(|&s| self.name(s));
        if self.single_char() {
            parts.collect()
        } else {
            parts.collect::<Vec<_>>().join(" ")
        }
    }

    /// Like [`Alphabet::render`], but the empty word is shown as `(empty)`.
    pub fn display(&self, word: &Word) -> String {
        if word.is_empty() {
            "(empty)".to_string()
        } else {
            self.render(word)
        }
    }

    /// All words of exactly `len` symbols, in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> WordsOfLength {
        WordsOfLength {
            k: self.len() as u32,
            next: Some(vec![Symbol(0); len]),
        }
    }

    /// All words of length at most `max_len`, length first then lexicographic.
    pub fn words_up_to(&self, max_len: usize) -> impl Iterator<Item = Word> + '_ {
        (0..=max_len).flat_map(move |len| self.words_of_length(len))
    }
}

/// Lexicographic odometer over `Σ^len`.
#[derive(Debug, Clone)]
pub struct WordsOfLength {
    k: u32,
    next: Option<Vec<Symbol>>,
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i].0 + 1 < self.k {
                succ[i].0 += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = Symbol(0);
        }
        Some(Word(current))
    }
}

/// A finite word; the empty sequence is ε.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.0.iter()
    }

    pub fn check(&self, alphabet: &Alphabet) -> Result<()> {
        self.0.iter().try_for_each(|&s| alphabet.check(s))
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<T: IntoIterator<Item = Symbol>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Symbol;
    type IntoIter = std::slice::Iter<'a, Symbol>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.0.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Length-then-lexicographic comparison, the order used for every word listing.
pub fn shortlex(a: &Word, b: &Word) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_rejects_duplicates_and_empty() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::from_chars("aba").is_err());
        assert!(Alphabet::from_chars("ab").is_ok());
    }

    #[test]
    fn words_of_length_counts() {
        let sigma = Alphabet::from_chars("abc").unwrap();
        assert_eq!(sigma.words_of_length(0).count(), 1);
        assert_eq!(sigma.words_of_length(3).count(), 27);
        let words: Vec<String> = sigma
            .words_of_length(2)
            .map(|w| sigma.render(&w))
            .take(4)
            .collect();
        assert_eq!(words, ["aa", "ab", "ac", "ba"]);
        assert_eq!(sigma.words_up_to(2).count(), 13);
    }

    #[test]
    fn parse_and_render() {
        let sigma = Alphabet::from_chars("ab").unwrap();
        let w = sigma.parse_word("abba").unwrap();
        assert_eq!(sigma.render(&w), "abba");
        assert_eq!(sigma.display(&Word::empty()), "(empty)");
        assert_eq!(sigma.parse_word("abc"), Err(Error::UnknownSymbol("c".into())));
        let multi = Alphabet::new(["x1", "y"]).unwrap();
        let w = multi.word_from_names(&["x1", "y"]).unwrap();
        assert_eq!(multi.render(&w), "x1 y");
    }
}
