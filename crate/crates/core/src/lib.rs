//! Filtering formal languages by arithmetic progressions.
//!
//! Given a word `w = a₀a₁⋯aₙ` and a progression `s(i) = a·i + b`, the filtered
//! word keeps the letters at indices `b, a+b, 2a+b, …`. Lifted to languages
//! this gives `L_{a,b}`. For a regular `L` the crate builds a DFA for every
//! `L_{a,b}` from boolean incidence matrices and enumerates the finitely many
//! distinct results per progression family. It also implements the `diag`
//! operation on square-length words and an NFA for `diag(L)`, context-free
//! grammar tooling for the counterexample languages, and a verification
//! harness that checks each construction against brute-force oracles.
//!
//! ```
//! use apfilter::{automata::Alphabet, filtration::{filter_word, ArithFilter}};
//!
//! let sigma = Alphabet::from_chars("theorm").unwrap();
//! let w = sigma.parse_word("theorem").unwrap();
//! let even = filter_word(&w, &ArithFilter::new(2, 0).unwrap());
//! assert_eq!(sigma.render(&even), "term");
//! ```

pub mod automata;
pub mod boolmat;
pub mod diag;
pub mod error;
pub mod filtration;
pub mod fixtures;
pub mod grammar;
pub mod verify;

pub use automata::{Alphabet, Dfa, Nfa, Symbol, Word};
pub use boolmat::{BoolMatrix, BoolVector, PowerOrbit};
pub use error::{Error, Result};
