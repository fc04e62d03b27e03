//! Filtering words and regular languages by arithmetic progressions.
//!
//! For a complete DFA with incidence matrices `M_c` and `M = ⋁ M_c`, the
//! filtered language `L_{a,b}` is recognised by an automaton whose states are
//! a fresh start state plus boolean row vectors over the source states:
//!
//! * from the start state, `c` leads to `e₀ · M^b · M_c`;
//! * from a vector `q`, `c` leads to `q · M^{a-1} · M_c`;
//! * `q` accepts iff `q · M^i · f = 1` for some `0 ≤ i < a`;
//! * the start state accepts iff `L` has a word of length at most `b`.
//!
//! Only vectors reachable from the start state are materialised. Everything
//! the construction reads from `(a, b)` is captured by a
//! [`FiltrationSignature`], and since powers of `M` are eventually periodic
//! there are finitely many signatures, hence finitely many languages.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::automata::{Dfa, Symbol, Word};
use crate::boolmat::{BoolMatrix, BoolVector, Incidence};
use crate::error::{Error, Result};

/// The progression `s(i) = step·i + offset` with `step ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArithFilter {
    step: BigUint,
    offset: BigUint,
}

impl ArithFilter {
    pub fn new(step: u64, offset: u64) -> Result<Self> {
        ArithFilter::from_big(BigUint::from(step), BigUint::from(offset))
    }

    pub fn from_big(step: BigUint, offset: BigUint) -> Result<Self> {
        if step.is_zero() {
            return Err(Error::InvalidFilter("step must be at least 1".into()));
        }
        Ok(ArithFilter { step, offset })
    }

    /// Parses decimal step and offset of any size.
    pub fn parse(step: &str, offset: &str) -> Result<Self> {
        let num = |s: &str| {
            BigUint::from_str(s).map_err(|_| Error::InvalidFilter(format!("`{s}` is not a non-negative integer")))
        };
        ArithFilter::from_big(num(step)?, num(offset)?)
    }

    pub fn step(&self) -> &BigUint {
        &self.step
    }

    pub fn offset(&self) -> &BigUint {
        &self.offset
    }

    /// Step and offset as machine integers, when they fit.
    pub fn small(&self) -> Option<(usize, usize)> {
        Some((self.step.to_usize()?, self.offset.to_usize()?))
    }
}

impl fmt::Display for ArithFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.step, self.offset)
    }
}

/// The four progression families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FilterFamily {
    /// `b = 0`
    Weak,
    /// `0 ≤ b < a`
    Ordinary,
    /// any `a ≥ 1, b ≥ 0`
    Strong,
    /// `a = 1`
    Shift,
}

impl FilterFamily {
    pub const ALL: [FilterFamily; 4] = [
        FilterFamily::Weak,
        FilterFamily::Ordinary,
        FilterFamily::Strong,
        FilterFamily::Shift,
    ];

    pub fn admits(self, f: &ArithFilter) -> bool {
        match self {
            FilterFamily::Weak => f.offset.is_zero(),
            FilterFamily::Ordinary => f.offset < f.step,
            FilterFamily::Strong => true,
            FilterFamily::Shift => f.step.is_one(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FilterFamily::Weak => "weak",
            FilterFamily::Ordinary => "ordinary",
            FilterFamily::Strong => "strong",
            FilterFamily::Shift => "shift",
        }
    }
}

impl FromStr for FilterFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FilterFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}` (expected weak, ordinary, strong or shift)")))
    }
}

impl fmt::Display for FilterFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Letters of `w` at indices `b, a+b, 2a+b, …` below `|w|`.
pub fn filter_word(w: &Word, f: &ArithFilter) -> Word {
    let n = w.len();
    let Some(b) = f.offset.to_usize().filter(|&b| b < n) else {
        return Word::empty();
    };
    let a = f.step.to_usize().unwrap_or(usize::MAX);
    w.symbols()[b..].iter().step_by(a).copied().collect()
}

/// Letters of `w` at the indices of a strictly increasing sequence. The
/// supplied prefix must reach at least `|w| - 1`.
pub fn filter_word_general(w: &Word, s: impl IntoIterator<Item = usize>) -> Result<Word> {
    let n = w.len();
    let mut out = Vec::new();
    let mut last: Option<usize> = None;
    for (i, idx) in s.into_iter().enumerate() {
        if last.is_some_and(|l| idx <= l) {
            return Err(Error::NotIncreasing(i));
        }
        last = Some(idx);
        if idx >= n {
            return Ok(Word(out));
        }
        out.push(w.symbols()[idx]);
    }
    match last {
        Some(l) if l + 1 >= n => Ok(Word(out)),
        None if n == 0 => Ok(Word(out)),
        _ => Err(Error::SequenceTooShort {
            last: last.unwrap_or(0),
            len: n,
        }),
    }
}

/// Everything the filtered automaton depends on for a given `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiltrationSignature {
    /// `M^{a-1}`
    pub step_matrix: BoolMatrix,
    /// `⋁_{0≤i<a} M^i`
    pub accept_or: BoolMatrix,
    /// Row of the start state in `M^b`.
    pub start_row: BoolVector,
    /// Whether `L` has a word of length at most `b`.
    pub eps_in: bool,
}

impl FiltrationSignature {
    fn compute(inc: &Incidence, start: usize, shortest: Option<usize>, f: &ArithFilter) -> Self {
        let orbit = &inc.orbit;
        let step_matrix = orbit.power(&(&f.step - 1u32)).clone();
        let upto = f.step.to_usize().map_or(orbit.len(), |a| a.min(orbit.len()));
        let accept_or = orbit.powers[..upto]
            .iter()
            .fold(BoolMatrix::zeros(inc.dim()), |acc, p| acc.or(p));
        let start_row = orbit.power(&f.offset).row(start);
        let eps_in = shortest.is_some_and(|l| BigUint::from(l) <= f.offset);
        FiltrationSignature {
            step_matrix,
            accept_or,
            start_row,
            eps_in,
        }
    }
}

pub fn signature(d: &Dfa, f: &ArithFilter) -> FiltrationSignature {
    FiltrationSignature::compute(&Incidence::of(d), d.start(), d.shortest_word_length(), f)
}

/// Which version of the filtered-automaton construction to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Construction {
    #[default]
    Faithful,
    /// Never accept in the start state, i.e. forget the words of `L` no
    /// longer than the offset.
    IgnoreShortWords,
}

/// Source automaton data shared across many filters.
#[derive(Debug, Clone)]
pub struct Filterable<'a> {
    dfa: &'a Dfa,
    inc: Incidence,
    shortest: Option<usize>,
}

impl<'a> Filterable<'a> {
    pub fn new(dfa: &'a Dfa) -> Self {
        Filterable {
            dfa,
            inc: Incidence::of(dfa),
            shortest: dfa.shortest_word_length(),
        }
    }

    pub fn incidence(&self) -> &Incidence {
        &self.inc
    }

    pub fn signature(&self, f: &ArithFilter) -> FiltrationSignature {
        FiltrationSignature::compute(&self.inc, self.dfa.start(), self.shortest, f)
    }

    pub fn build(&self, f: &ArithFilter) -> Dfa {
        self.build_with(f, Construction::Faithful)
    }

    pub fn build_with(&self, f: &ArithFilter, construction: Construction) -> Dfa {
        let sig = self.signature(f);
        let letters = &self.inc.letters;
        let moves: Vec<BoolMatrix> = letters.iter().map(|mc| &sig.step_matrix * mc).collect();
        let accept_col = sig.accept_or.apply(&self.inc.finals);

        // state 0 is the dedicated start state; vectors get indices from 1
        let mut index: HashMap<BoolVector, usize> = HashMap::new();
        let mut vectors: Vec<BoolVector> = Vec::new();
        let mut intern = |v: BoolVector, vectors: &mut Vec<BoolVector>| -> usize {
            *index.entry(v).or_insert_with_key(|v| {
                vectors.push(v.clone());
                vectors.len()
            })
        };
        let start_row: Vec<usize> = letters
            .iter()
            .map(|mc| intern(&sig.start_row * mc, &mut vectors))
            .collect();
        let mut delta = vec![start_row];
        let mut i = 0;
        while i < vectors.len() {
            let q = vectors[i].clone();
            i += 1;
            let row = moves.iter().map(|m| intern(&q * m, &mut vectors)).collect();
            delta.push(row);
        }

        let n = self.inc.dim();
        if n < 63 {
            assert!(delta.len() as u64 <= (1u64 << n) + 1, "filtered automaton exceeds 2^n + 1 states");
        }

        let start_accepts = sig.eps_in && construction == Construction::Faithful;
        let accepting = std::iter::once(0)
            .filter(|_| start_accepts)
            .chain(
                vectors
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.dot(&accept_col).unwrap())
                    .map(|(i, _)| i + 1),
            );
        Dfa::new(self.dfa.alphabet().clone(), 0, accepting, delta).expect("filtered automaton is well formed")
    }
}

/// DFA for `L_{a,b}`, before minimization.
pub fn build_filtered_dfa(d: &Dfa, f: &ArithFilter) -> Dfa {
    Filterable::new(d).build(f)
}

pub fn build_filtered_dfa_with(d: &Dfa, f: &ArithFilter, construction: Construction) -> Dfa {
    Filterable::new(d).build_with(f, construction)
}

/// `{w[s] : w ∈ L, |w| ≤ a·max_len + b}` cut to length `max_len`, computed
/// by running the source automaton over every source word and keeping the
/// letters at filter positions. Runs that agree on position, state and
/// output so far are explored once.
pub fn filtered_language_oracle(d: &Dfa, f: &ArithFilter, max_len: usize) -> Result<BTreeSet<Word>> {
    let (a, b) = small_filter(f)?;
    let limit = a * max_len + b;
    let mut results = BTreeSet::new();
    let mut seen: HashSet<(usize, usize, Vec<Symbol>)> = HashSet::new();
    let mut stack = vec![(0usize, d.start(), Vec::new())];
    while let Some((pos, q, out)) = stack.pop() {
        if d.is_accepting(q) {
            results.insert(Word(out.clone()));
        }
        if pos == limit {
            continue;
        }
        let kept = pos >= b && (pos - b) % a == 0;
        for c in d.alphabet().symbols() {
            let mut next = out.clone();
            if kept {
                if next.len() == max_len {
                    continue;
                }
                next.push(c);
            }
            let config = (pos + 1, d.step(q, c), next);
            if seen.insert(config.clone()) {
                stack.push(config);
            }
        }
    }
    Ok(results)
}

/// Literal version of [`filtered_language_oracle`]: lists every accepted
/// source word up to length `a·max_len + b` and filters each one.
pub fn filtered_language_brute_force(d: &Dfa, f: &ArithFilter, max_len: usize) -> Result<BTreeSet<Word>> {
    let (a, b) = small_filter(f)?;
    Ok(d.enumerate_accepted(a * max_len + b)
        .iter()
        .map(|w| filter_word(w, f))
        .filter(|w| w.len() <= max_len)
        .collect())
}

fn small_filter(f: &ArithFilter) -> Result<(usize, usize)> {
    f.small()
        .filter(|&(a, b)| a.checked_mul(64).and_then(|x| x.checked_add(b)).is_some())
        .ok_or_else(|| Error::InvalidFilter(format!("{f} is too large for explicit enumeration")))
}

/// Bounds of the `(a, b)` window in which every signature occurs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureWindow {
    /// Pre-period of the powers of `M`.
    pub index: usize,
    /// Period of the powers of `M`.
    pub period: usize,
    /// Shortest accepted length, 0 for the empty language.
    pub shortest: usize,
}

impl SignatureWindow {
    /// Values of `a - 1` below this give pairwise different `(M^{a-1}, ⋁_{i<a} M^i)`.
    fn step_threshold(&self) -> usize {
        self.index + self.period - 1
    }

    fn offset_threshold(&self) -> usize {
        self.index.max(self.shortest)
    }

    /// Largest step worth trying: `a - 1 < index + 2·period - 1`.
    pub fn max_step(&self) -> usize {
        self.step_threshold() + self.period
    }

    pub fn max_offset(&self) -> usize {
        self.offset_threshold() + self.period - 1
    }

    /// Classes of `a` with equal step data: `(least member, periodic)`.
    fn step_classes(&self) -> impl Iterator<Item = (usize, bool)> {
        let t = self.step_threshold();
        (1..=self.max_step()).map(move |a| (a, a > t))
    }

    /// Least members of the classes of `b` with equal offset data.
    fn offset_classes(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.max_offset()
    }

    /// Least member of a class pair admitted by `family`, if any.
    fn representative(&self, family: FilterFamily, a: (usize, bool), b0: usize) -> Option<(usize, usize)> {
        let p = self.period;
        let (a0, a_periodic) = a;
        match family {
            FilterFamily::Strong => Some((a0, b0)),
            FilterFamily::Weak => (b0 == 0).then_some((a0, 0)),
            FilterFamily::Shift => (a0 == 1).then_some((1, b0)),
            FilterFamily::Ordinary => {
                if b0 < a0 {
                    Some((a0, b0))
                } else if a_periodic {
                    let k = (b0 + 1 - a0).div_ceil(p);
                    Some((a0 + k * p, b0))
                } else {
                    None
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct AtlasEntry {
    pub filter: ArithFilter,
    /// Canonical minimal DFA of the filtered language.
    pub dfa: Dfa,
}

/// The distinct filtered languages of one automaton over one family.
#[derive(Debug, Clone)]
pub struct FiltrationAtlas {
    pub family: FilterFamily,
    pub window: SignatureWindow,
    pub entries: Vec<AtlasEntry>,
}

impl FiltrationAtlas {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry whose canonical DFA equals `canonical`.
    pub fn lookup(&self, canonical: &Dfa) -> Option<&AtlasEntry> {
        self.entries.iter().find(|e| &e.dfa == canonical)
    }
}

/// Every distinct `L_{a,b}` for `(a, b)` in `family`, each with its least
/// representative filter. Candidates cover one member of every class of
/// equal signatures, so nothing outside the window can add a language.
pub fn enumerate_distinct_filtrations(d: &Dfa, family: FilterFamily) -> FiltrationAtlas {
    let src = Filterable::new(d);
    let orbit = &src.inc.orbit;
    let window = SignatureWindow {
        index: orbit.index,
        period: orbit.period,
        shortest: src.shortest.unwrap_or(0),
    };
    let mut reps: Vec<(usize, usize)> = window
        .step_classes()
        .flat_map(|a| window.offset_classes().map(move |b| (a, b)))
        .filter_map(|(a, b)| window.representative(family, a, b))
        .collect();
    reps.sort_unstable();
    reps.dedup();

    let mut seen: HashSet<Dfa> = HashSet::new();
    let mut entries = Vec::new();
    for (a, b) in reps {
        let f = ArithFilter::new(a as u64, b as u64).unwrap();
        let dfa = src.build(&f).minimize();
        if seen.insert(dfa.clone()) {
            entries.push(AtlasEntry { filter: f, dfa });
        }
    }
    FiltrationAtlas {
        family,
        window,
        entries,
    }
}
