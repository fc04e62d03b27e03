//! Browser bindings. Every export takes and returns plain strings; results
//! are JSON documents and errors are thrown as JS strings.

use wasm_bindgen::prelude::*;

pub mod demo;

fn throw(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

/// `{"result", "kept"}` for WORD filtered by positions a·i + b.
#[wasm_bindgen]
pub fn filter_word(word: &str, a: &str, b: &str) -> Result<String, JsValue> {
    throw(demo::filter_word(word, a, b))
}

/// `{"side", "rows", "diagonal"}` for a word of square length.
#[wasm_bindgen]
pub fn diag_grid(word: &str) -> Result<String, JsValue> {
    throw(demo::diag_grid(word))
}

/// The distinct filtered languages of a DFA over one family of filters.
#[wasm_bindgen]
pub fn filtration_atlas(dfa_json: &str, family: &str, max_len: usize) -> Result<String, JsValue> {
    throw(demo::filtration_atlas(dfa_json, family, max_len))
}
