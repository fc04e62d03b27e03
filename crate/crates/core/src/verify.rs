//! Reproducible checks of the five results, collected into a report.
//!
//! Every check runs against independent oracles at small sizes: filtered
//! automata against direct enumeration of source words, the diag automaton
//! against matrix products and full enumeration of square words, grammar
//! enumeration against structural parsers.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::automata::{Alphabet, Symbol, Word};
use crate::diag::{self, StepOrder, DEFAULT_EXHAUSTIVE_BUDGET};
use crate::error::{Error, Result};
use crate::filtration::{
    enumerate_distinct_filtrations, filter_word, filtered_language_oracle, ArithFilter, Construction, FilterFamily,
    Filterable, FiltrationAtlas,
};
use crate::fixtures::{random_pool, DEFAULT_SEED};
use crate::grammar::patterns::{
    enumerate_thm5_by_length, in_0n1n, in_thm2, in_thm5, in_thm5_by_split, thm2_words, thm5_alphabet, thm5_witness,
    DiagPattern,
};
use crate::grammar::{thm2_grammar, zero_n_one_n_grammar};

/// Default cap on candidates drawn from the three-block enumerator.
pub const DEFAULT_THM5_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
}

impl Claim {
    pub const ALL: [Claim; 5] = [Claim::Thm1, Claim::Thm2, Claim::Thm3, Claim::Thm4, Claim::Thm5];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Thm1 => "thm1",
            Claim::Thm2 => "thm2",
            Claim::Thm3 => "thm3",
            Claim::Thm4 => "thm4",
            Claim::Thm5 => "thm5",
        }
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown claim `{s}`")))
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimRecord {
    pub claim: Claim,
    pub params: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub details: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Output length bound for the construction/oracle comparison.
    pub max_len: usize,
    /// Also run the `|y| = 169` diagonal search.
    pub deep: bool,
    /// Cap on candidates drawn from the three-block enumerator.
    pub budget: u64,
    pub construction: Construction,
    pub step_order: StepOrder,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: DEFAULT_SEED,
            max_len: 7,
            deep: false,
            budget: DEFAULT_THM5_BUDGET,
            construction: Construction::Faithful,
            step_order: StepOrder::GapBeforeLetter,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub records: Vec<ClaimRecord>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.outcome == Outcome::Pass)
    }

    pub fn any_fail(&self) -> bool {
        self.records.iter().any(|r| r.outcome == Outcome::Fail)
    }

    pub fn record(&self, claim: Claim) -> Option<&ClaimRecord> {
        self.records.iter().find(|r| r.claim == claim)
    }

    pub fn to_table(&self, timings: bool) -> String {
        let mut out = String::new();
        writeln!(out, "seed {}", self.seed).unwrap();
        for r in &self.records {
            writeln!(out, "{:<5} {:<7} {}", r.claim.id(), r.outcome.to_string(), r.params).unwrap();
            for d in &r.details {
                writeln!(out, "      {d}").unwrap();
            }
            for n in &r.notes {
                writeln!(out, "      note: {n}").unwrap();
            }
            if let Some(w) = &r.witness {
                writeln!(out, "      witness: {w}").unwrap();
            }
            if timings {
                writeln!(out, "      elapsed: {:.3}s", r.elapsed.as_secs_f64()).unwrap();
            }
        }
        let passed = self.records.iter().filter(|r| r.outcome == Outcome::Pass).count();
        let verdict = if self.any_fail() {
            "FAIL"
        } else if self.all_pass() {
            "PASS"
        } else {
            "INCOMPLETE"
        };
        writeln!(out, "RESULT: {verdict} ({passed}/{} claims passed)", self.records.len()).unwrap();
        out
    }

    pub fn to_json(&self, timings: bool) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            #[serde(flatten)]
            record: &'a ClaimRecord,
            #[serde(skip_serializing_if = "Option::is_none")]
            elapsed_ms: Option<u128>,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            seed: u64,
            all_pass: bool,
            records: Vec<Row<'a>>,
        }
        let doc = Doc {
            seed: self.seed,
            all_pass: self.all_pass(),
            records: self
                .records
                .iter()
                .map(|record| Row {
                    record,
                    elapsed_ms: timings.then_some(record.elapsed.as_millis()),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
    }
}

/// Runs each distinct claim once, in claim order.
pub fn verify(claims: &[Claim], cfg: &VerifyConfig) -> VerificationReport {
    let mut claims = claims.to_vec();
    claims.sort();
    claims.dedup();
    VerificationReport {
        seed: cfg.seed,
        records: claims.into_iter().map(|c| verify_claim(c, cfg)).collect(),
    }
}

pub fn verify_claim(claim: Claim, cfg: &VerifyConfig) -> ClaimRecord {
    let started = Instant::now();
    let mut log = Log::default();
    let (params, result) = match claim {
        Claim::Thm1 => (
            format!(
                "50 DFAs (<=5 states, <=3 letters), a in 1..=4, b in 0..=4, words up to length {}; atlases of 20 DFAs x 4 families",
                cfg.max_len
            ),
            thm1(cfg, &mut log),
        ),
        Claim::Thm2 => (
            "a in 2..=5, weak filters (a,0), sources up to length a(a+1)".to_string(),
            thm2(&mut log),
        ),
        Claim::Thm3 => ("b in 0..=6, sources 0^n 1^n with n <= 2b+2".to_string(), thm3(&mut log)),
        Claim::Thm4 => (
            "30 DFAs (<=4 states, 2 letters), three-way for t <= 3, two-way for t = 4".to_string(),
            thm4(cfg, &mut log),
        ),
        Claim::Thm5 => (
            format!(
                "witnesses t = 1, 2; exhaustive |y| = 100{}",
                if cfg.deep { " and 169" } else { "" }
            ),
            thm5(cfg, &mut log),
        ),
    };
    let (outcome, witness) = match result {
        Ok(()) => (Outcome::Pass, None),
        Err(Stop::Fail(w)) => (Outcome::Fail, Some(w)),
        Err(Stop::Skip(w)) => (Outcome::Skipped, Some(w)),
    };
    ClaimRecord {
        claim,
        params,
        outcome,
        witness,
        details: log.details,
        notes: log.notes,
        elapsed: started.elapsed(),
    }
}

#[derive(Default)]
struct Log {
    details: Vec<String>,
    notes: Vec<String>,
}

enum Stop {
    Fail(String),
    Skip(String),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Fail(e.to_string())
    }
}

type Checked = std::result::Result<(), Stop>;

fn fail<T>(msg: String) -> std::result::Result<T, Stop> {
    Err(Stop::Fail(msg))
}

fn show_set(s: &Alphabet, words: &BTreeSet<Word>) -> String {
    let mut ws: Vec<&Word> = words.iter().collect();
    ws.sort_by(|x, y| crate::automata::shortlex(x, y));
    let items: Vec<String> = ws.iter().map(|w| s.display(w)).collect();
    format!("{{{}}}", items.join(", "))
}

fn thm1(cfg: &VerifyConfig, log: &mut Log) -> Checked {
    let pool = random_pool(cfg.seed, 50, 5, 1..=3);
    let mut largest = (0, 0);
    for (i, d) in pool.iter().enumerate() {
        let src = Filterable::new(d);
        let n = d.state_count();
        for a in 1..=4 {
            for b in 0..=4 {
                let f = ArithFilter::new(a, b)?;
                let built = src.build_with(&f, cfg.construction);
                if built.state_count() > (1 << n) + 1 {
                    return fail(format!("dfa #{i}, filter {f}: {} states for n = {n}", built.state_count()));
                }
                if built.state_count() > largest.0 {
                    largest = (built.state_count(), n);
                }
                let got: BTreeSet<Word> = built.enumerate_accepted(cfg.max_len).into_iter().collect();
                let want = filtered_language_oracle(d, &f, cfg.max_len)?;
                if got != want {
                    let s = d.alphabet();
                    let msg = match got.symmetric_difference(&want).next() {
                        Some(w) if got.contains(w) => format!("constructed automaton only: {}", s.display(w)),
                        Some(w) => format!("oracle only: {}", s.display(w)),
                        None => unreachable!(),
                    };
                    return fail(format!("dfa #{i}, filter {f}: {msg}"));
                }
            }
        }
    }
    log.details.push(format!(
        "construction = oracle on {} (DFA, filter) pairs",
        pool.len() * 20
    ));
    log.details.push(format!(
        "state bound 2^n + 1 holds; largest {} states for n = {} (bound {})",
        largest.0,
        largest.1,
        (1usize << largest.1) + 1
    ));

    let pool = random_pool(cfg.seed.wrapping_add(1), 20, 5, 1..=3);
    let mut totals = [0usize; 4];
    let mut checked = 0usize;
    for (i, d) in pool.iter().enumerate() {
        let atlases: Vec<FiltrationAtlas> = FilterFamily::ALL
            .iter()
            .map(|&fam| enumerate_distinct_filtrations(d, fam))
            .collect();
        for (t, atlas) in totals.iter_mut().zip(&atlases) {
            *t += atlas.len();
        }
        let window = atlases[0].window;
        let src = Filterable::new(d);
        let a_max = (2 * window.max_step()).max(2 * (window.index + window.period) + 1);
        let b_max = 2 * (window.max_offset() + 1);
        for a in 1..=a_max {
            for b in 0..=b_max {
                let f = ArithFilter::new(a as u64, b as u64)?;
                let canon = src.build(&f).minimize();
                checked += 1;
                for atlas in &atlases {
                    if atlas.family.admits(&f) && atlas.lookup(&canon).is_none() {
                        return fail(format!("dfa #{i}, {} filter {f}: language missing from atlas", atlas.family));
                    }
                }
            }
        }
        let by = |fam: FilterFamily| &atlases[FilterFamily::ALL.iter().position(|&x| x == fam).unwrap()];
        for (sub, sup) in [
            (FilterFamily::Weak, FilterFamily::Ordinary),
            (FilterFamily::Ordinary, FilterFamily::Strong),
            (FilterFamily::Shift, FilterFamily::Strong),
        ] {
            if let Some(e) = by(sub).entries.iter().find(|e| by(sup).lookup(&e.dfa).is_none()) {
                return fail(format!("dfa #{i}: {sub} language of {} not among {sup} languages", e.filter));
            }
        }
    }
    log.details.push(format!(
        "atlas completeness over {checked} filters in doubled windows"
    ));
    let counts: Vec<String> = FilterFamily::ALL
        .iter()
        .zip(totals)
        .map(|(fam, t)| format!("{fam} {t}"))
        .collect();
    log.details.push(format!("distinct languages summed over 20 DFAs: {}", counts.join(", ")));
    log.details.push("inclusions weak <= ordinary <= strong and shift <= strong hold".to_string());
    Ok(())
}

pub fn is_12_3plus(w: &Word) -> bool {
    let s = w.symbols();
    s.len() >= 3 && s[0] == Symbol(1) && s[1] == Symbol(2) && s[2..].iter().all(|&c| c == Symbol(3))
}

/// `12 3^k`
pub fn twelve_threes(k: usize) -> Word {
    let mut w = vec![Symbol(1), Symbol(2)];
    w.extend(std::iter::repeat_n(Symbol(3), k));
    Word(w)
}

fn thm2(log: &mut Log) -> Checked {
    let g = thm2_grammar();
    let s = g.terminals().clone();
    let mut langs: Vec<BTreeSet<Word>> = Vec::new();
    let mut printed_miss = None;
    for a in 2..=5usize {
        let max = a * (a + 1);
        let sources = g.enumerate_words(max);
        let structural: BTreeSet<Word> = thm2_words(max).into_iter().collect();
        if let Some(w) = sources.symmetric_difference(&structural).next() {
            return fail(format!("a = {a}: grammar and parser disagree on {}", s.display(w)));
        }
        if let Some(w) = sources.iter().find(|w| !in_thm2(w)) {
            return fail(format!("a = {a}: generated word {} fails the parser", s.display(w)));
        }
        let f = ArithFilter::new(a as u64, 0)?;
        let got: BTreeSet<Word> = sources.iter().map(|w| filter_word(w, &f)).filter(is_12_3plus).collect();
        let expected: BTreeSet<Word> = (1..a).map(twelve_threes).collect();
        if got != expected {
            return fail(format!(
                "a = {a}: L ∩ 123+ = {}, expected {}",
                show_set(&s, &got),
                show_set(&s, &expected)
            ));
        }
        if a >= 3 && printed_miss.is_none() {
            let w = sources.iter().find(|w| filter_word(w, &f) == twelve_threes(1)).unwrap();
            printed_miss = Some(format!("a = {a}: {} filters to 123", s.display(w)));
        }
        log.details.push(format!(
            "a = {a}: {} sources, L ∩ 123+ = {}, longest {}",
            sources.len(),
            show_set(&s, &got),
            s.display(&twelve_threes(a - 1))
        ));
        langs.push(got);
    }
    for i in 0..langs.len() {
        for j in i + 1..langs.len() {
            if langs[i] == langs[j] {
                return fail(format!("a = {} and a = {} give the same language", i + 2, j + 2));
            }
        }
    }
    log.details.push("the four restricted languages are pairwise distinct".to_string());
    if let Some(m) = printed_miss {
        log.notes.push(format!("L ∩ 123+ is {{12 3^k : 1 <= k <= a-1}}, not {{12 3^(a-1)}}; {m}"));
    }
    Ok(())
}

fn thm3(log: &mut Log) -> Checked {
    let g = zero_n_one_n_grammar();
    let s = g.terminals().clone();
    let one = Symbol(1);
    let ones = |k: usize| Word(vec![one; k]);
    // 1^k ∈ L_{1,b} iff some x ∈ L of length b + k ends in 1^k
    let member = |b: usize, k: usize| {
        g.enumerate_words(b + k)
            .iter()
            .any(|x| x.len() == b + k && x.symbols()[b..].iter().all(|&c| c == one))
    };
    for b in 0..=6usize {
        let n_max = 2 * b + 2;
        let sources = g.enumerate_words(2 * n_max);
        let expected: BTreeSet<Word> = (0..=n_max)
            .map(|n| Word([vec![Symbol(0); n], vec![one; n]].concat()))
            .collect();
        if sources != expected || !sources.iter().all(in_0n1n) {
            return fail(format!("b = {b}: grammar enumeration differs from 0^n 1^n, n <= {n_max}"));
        }
        let f = ArithFilter::new(1, b as u64)?;
        let longest = sources
            .iter()
            .map(|w| filter_word(w, &f))
            .filter(|w| w.iter().all(|&c| c == one))
            .map(|w| w.len())
            .max();
        if longest != Some(b) {
            return fail(format!("b = {b}: longest word in 1* is {longest:?}, expected 1^{b}"));
        }
        log.details.push(format!("b = {b}: longest word of the form 1* is {}", s.display(&ones(b))));
    }
    for b in 0..=6usize {
        for b2 in b + 1..=6 {
            if !member(b2, b2) || member(b, b2) {
                return fail(format!("b = {b}, {b2}: not separated by {}", s.display(&ones(b2))));
            }
        }
    }
    log.details.push("the seven languages are pairwise separated by 1^max(b, b')".to_string());
    Ok(())
}

fn thm4(cfg: &VerifyConfig, log: &mut Log) -> Checked {
    let pool = random_pool(cfg.seed.wrapping_add(2), 30, 4, 2..=2);
    let mut states = 0;
    for (i, d) in pool.iter().enumerate() {
        let s = d.alphabet();
        let nfa = diag::build_diag_nfa_with(d, cfg.step_order);
        states = states.max(nfa.state_count());
        for t in 1..=4 {
            let exhaustive = if t <= 3 {
                Some(diag::diag_oracle_exhaustive(d, t, DEFAULT_EXHAUSTIVE_BUDGET)?)
            } else {
                None
            };
            for w in s.words_of_length(t) {
                let by_nfa = nfa.accepts(&w)?;
                let by_matrix = diag::diag_oracle_accepts(d, &w)?;
                let by_listing = exhaustive.as_ref().map(|e| e.contains(&w));
                if by_nfa != by_matrix || by_listing.is_some_and(|x| x != by_nfa) {
                    return fail(format!(
                        "dfa #{i}, diagonal {}: automaton {by_nfa}, matrix {by_matrix}, listing {}",
                        s.display(&w),
                        by_listing.map_or("-".to_string(), |x| x.to_string())
                    ));
                }
            }
        }
    }
    log.details.push("automaton = matrix oracle = listing for t <= 3; automaton = matrix oracle for t = 4".to_string());
    log.details.push(format!("largest diag automaton: {states} states"));

    if cfg.step_order == StepOrder::GapBeforeLetter {
        let mut misses = 0;
        let mut example = None;
        for (i, d) in pool.iter().enumerate() {
            let printed = diag::build_diag_nfa_with(d, StepOrder::GapAfterLetter);
            for w in d.alphabet().words_of_length(2) {
                if printed.accepts(&w)? != diag::diag_oracle_accepts(d, &w)? {
                    misses += 1;
                    example.get_or_insert_with(|| format!("dfa #{i}, diagonal {}", d.alphabet().display(&w)));
                    break;
                }
            }
        }
        log.notes.push(match example {
            Some(e) => format!(
                "update v <- v M_a W (gap after the letter) disagrees with the matrix oracle at t = 2 on {misses} of 30 DFAs, first at {e}"
            ),
            None => "update v <- v M_a W agrees with the matrix oracle at t = 2 on this pool".to_string(),
        });
    }
    Ok(())
}

/// `(x, y, z)` if `w` reads `ab c^x de f^y gh i^z j` with `x, y, z ≥ 1`.
fn diag_form(w: &Word) -> Option<(usize, usize, usize)> {
    let w = w.symbols();
    let mut i = 0;
    let mut counts = [0; 3];
    for (k, [x0, x1, x2]) in [[0, 1, 2], [3, 4, 5], [6, 7, 8]].into_iter().enumerate() {
        if w.get(i) != Some(&Symbol(x0)) || w.get(i + 1) != Some(&Symbol(x1)) {
            return None;
        }
        i += 2;
        let run = w[i..].iter().take_while(|&&c| c == Symbol(x2)).count();
        if run == 0 {
            return None;
        }
        counts[k] = run;
        i += run;
    }
    (w.get(i) == Some(&Symbol(9)) && i + 1 == w.len()).then_some((counts[0], counts[1], counts[2]))
}

fn diag_form_word(x: usize, y: usize, z: usize) -> Word {
    let mut w = Vec::new();
    for (k, n) in [x, y, z].into_iter().enumerate() {
        let base = 3 * k as u32;
        w.extend([Symbol(base), Symbol(base + 1)]);
        w.extend(std::iter::repeat_n(Symbol(base + 2), n));
    }
    w.push(Symbol(9));
    Word(w)
}

fn thm5(cfg: &VerifyConfig, log: &mut Log) -> Checked {
    let s = thm5_alphabet();
    for t in 1..=2 {
        let y = thm5_witness(t);
        let x = diag::diag_word(&y)?;
        let expected = diag_form_word(t, t, t);
        if !in_thm5(&y) || !in_thm5_by_split(&y) || x != expected {
            return fail(format!("t = {t}: witness of length {} has diagonal {}", y.len(), s.display(&x)));
        }
        log.details.push(format!("t = {t}: witness with m = n = p = {} has |y| = {}, diagonal {}", t + 2, y.len(), s.display(&x)));
    }

    let mut drawn = 0u64;
    let mut search = |total: usize, patterns: Vec<DiagPattern>| -> std::result::Result<(BTreeSet<Word>, u64), Stop> {
        let mut found = BTreeSet::new();
        let mut count = 0u64;
        for p in &patterns {
            for y in enumerate_thm5_by_length(total, Some(p))? {
                drawn += 1;
                count += 1;
                if drawn > cfg.budget {
                    return Err(Stop::Skip(format!(
                        "candidate budget {} exhausted at |y| = {total}",
                        cfg.budget
                    )));
                }
                let x = diag::diag_word(&y)?;
                if diag_form(&x).is_some() {
                    found.insert(x);
                }
            }
        }
        Ok((found, count))
    };

    let pattern = DiagPattern::parse(&s, "ab?de?gh?j")?;
    let (found, count) = search(100, vec![pattern])?;
    let expected = BTreeSet::from([diag_form_word(1, 1, 1)]);
    if found != expected {
        return fail(format!("|y| = 100: diagonals of the form ab c+ de f+ gh i+ j are {}", show_set(&s, &found)));
    }
    log.details.push(format!(
        "|y| = 100: {count} candidates match ab?de?gh?j on the diagonal; of the form ab c+ de f+ gh i+ j only {}",
        show_set(&s, &found)
    ));

    if cfg.deep {
        // every diagonal of that form with 13 letters has x + y + z = 6
        let patterns = (1..=4)
            .flat_map(|x| (1..=5 - x).map(move |y| (x, y, 6 - x - y)))
            .map(|(x, y, z)| DiagPattern::exact(&diag_form_word(x, y, z)))
            .collect();
        let (found, count) = search(169, patterns)?;
        let expected = BTreeSet::from([diag_form_word(2, 2, 2)]);
        if found != expected {
            return fail(format!("|y| = 169: diagonals of the form ab c+ de f+ gh i+ j are {}", show_set(&s, &found)));
        }
        log.details.push(format!(
            "|y| = 169: {count} candidates over the 10 possible diagonals; only {} occurs",
            show_set(&s, &found)
        ));
    } else {
        log.notes.push("|y| = 169 not run (use --deep)".to_string());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
        }
        assert!("thm6".parse::<Claim>().is_err());
    }

    #[test]
    fn diag_forms() {
        let s = thm5_alphabet();
        assert_eq!(diag_form(&s.parse_word("abcdefghij").unwrap()), Some((1, 1, 1)));
        assert_eq!(diag_form(&s.parse_word("abccdeffghiij").unwrap()), Some((2, 2, 2)));
        assert_eq!(diag_form(&s.parse_word("abdefghij").unwrap()), None);
        assert_eq!(diag_form(&s.parse_word("ab0defghij").unwrap()), None);
        assert_eq!(s.render(&diag_form_word(1, 2, 3)), "abcdeffghiiij");
    }

    #[test]
    fn report_is_deterministic() {
        let cfg = VerifyConfig::default();
        let a = verify(&[Claim::Thm3, Claim::Thm2, Claim::Thm3], &cfg);
        let b = verify(&[Claim::Thm2, Claim::Thm3], &cfg);
        assert_eq!(a.records.len(), 2);
        assert_eq!(a.to_table(false), b.to_table(false));
        assert_eq!(a.to_json(false), b.to_json(false));
        assert!(a.all_pass(), "{}", a.to_table(false));
    }

    #[test]
    fn budget_exhaustion_skips() {
        let cfg = VerifyConfig {
            budget: 10,
            ..VerifyConfig::default()
        };
        let r = verify_claim(Claim::Thm5, &cfg);
        assert_eq!(r.outcome, Outcome::Skipped);
        assert!(r.witness.unwrap().contains("budget 10"));
    }
}
