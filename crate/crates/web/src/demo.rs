use serde_json::json;

use apfilter::automata::json::dfa_from_json;
use apfilter::automata::{Alphabet, Word};
use apfilter::diag::diag_word;
use apfilter::filtration::{self, enumerate_distinct_filtrations, ArithFilter, FilterFamily};

const MAX_WORD: usize = 4096;

fn token(text: &str) -> Result<(Alphabet, Word), String> {
    if text.chars().count() > MAX_WORD {
        return Err(format!("words are limited to {MAX_WORD} letters"));
    }
    if text.is_empty() {
        return Ok((Alphabet::from_chars("_").unwrap(), Word::empty()));
    }
    let s = Alphabet::implied_by(text).map_err(|e| e.to_string())?;
    let w = s.parse_word(text).map_err(|e| e.to_string())?;
    Ok((s, w))
}

pub fn filter_word(word: &str, a: &str, b: &str) -> Result<String, String> {
    let f = ArithFilter::parse(a.trim(), b.trim()).map_err(|e| e.to_string())?;
    let (s, w) = token(word)?;
    let x = filtration::filter_word(&w, &f);
    let kept: Vec<usize> = match f.small() {
        Some((a, b)) => (b..w.len()).step_by(a).collect(),
        None => Vec::new(),
    };
    Ok(json!({ "result": s.render(&x), "kept": kept }).to_string())
}

pub fn diag_grid(word: &str) -> Result<String, String> {
    let (s, w) = token(word)?;
    let x = diag_word(&w).map_err(|e| e.to_string())?;
    let side = x.len();
    let rows: Vec<String> = w
        .symbols()
        .chunks(side)
        .map(|row| s.render(&Word(row.to_vec())))
        .collect();
    Ok(json!({ "side": side, "rows": rows, "diagonal": s.render(&x) }).to_string())
}

pub fn filtration_atlas(dfa_json: &str, family: &str, max_len: usize) -> Result<String, String> {
    let d = dfa_from_json(dfa_json).map_err(|e| e.to_string())?;
    if d.state_count() > 12 {
        return Err("the demo accepts automata with at most 12 states".to_string());
    }
    let family: FilterFamily = family.parse().map_err(|e: apfilter::Error| e.to_string())?;
    let atlas = enumerate_distinct_filtrations(&d, family);
    let s = d.alphabet();
    let entries: Vec<_> = atlas
        .entries
        .iter()
        .map(|e| {
            let sample: Vec<String> = e.dfa.enumerate_accepted(max_len.min(8)).iter().map(|w| s.display(w)).collect();
            json!({
                "a": e.filter.step().to_string(),
                "b": e.filter.offset().to_string(),
                "states": e.dfa.state_count(),
                "sample": sample,
            })
        })
        .collect();
    Ok(json!({
        "family": family.name(),
        "index": atlas.window.index,
        "period": atlas.window.period,
        "distinct": atlas.len(),
        "entries": entries,
    })
    .to_string())
}
