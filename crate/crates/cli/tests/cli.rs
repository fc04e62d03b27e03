use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use apfilter::automata::json::{dfa_from_json, nfa_from_json};
use apfilter::automata::{Alphabet, Dfa};
use apfilter::filtration::{ArithFilter, Filterable};
use apfilter::fixtures;

const AB_STAR: &str = r#"{"alphabet": ["a","b"], "states": 2, "start": 0, "accepting": [0], "delta": {"0": {"a": 1}, "1": {"b": 0}}}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apfilter")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("apfilter-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn filter_word_examples() {
    for (args, want) in [
        (["theorem", "2", "0"], "term\n"),
        (["theorem", "2", "1"], "hoe\n"),
        (["x", "1", "5"], "(empty)\n"),
    ] {
        let o = run(&[&["filter-word"][..], &args].concat());
        assert!(o.status.success());
        assert_eq!(stdout(&o), want);
    }
    let o = run(&["filter-word", "theorem", "2", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"], "term");
}

#[test]
fn malformed_integers_are_usage_errors() {
    for args in [["theorem", "two", "0"], ["theorem", "2", "-1"], ["theorem", "0", "0"]] {
        let o = run(&[&["filter-word"][..], &args].concat());
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn diag_words() {
    assert_eq!(stdout(&run(&["diag", "absorbent"])), "art\n");
    assert_eq!(stdout(&run(&["diag", "abcd"])), "ad\n");
    let o = run(&["diag", "abc"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("length is not a perfect square"));
}

#[test]
fn filter_lang_writes_minimal_dfa() {
    let input = scratch("ab.json", AB_STAR);
    let out = scratch("ab-2-0.json", "");
    let o = run(&["filter-lang", p(&input), "2", "0", "--out", p(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stderr(&o).contains("states before minimization: 4"));
    assert!(stderr(&o).contains("states after minimization: 2"));
    let got = dfa_from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(got.equivalent(&fixtures::a_star()).unwrap());

    let o = run(&["filter-lang", p(&input), "1", "0"]);
    let copy = dfa_from_json(&stdout(&o)).unwrap();
    assert_eq!(copy, fixtures::ab_star().minimize());
}

#[test]
fn filter_lang_errors() {
    let bad = scratch("bad.json", "{\"alphabet\": [\"a\"],\n \"states\": }");
    let o = run(&["filter-lang", p(&bad), "1", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let missing = std::env::temp_dir().join("apfilter-no-such-file.json");
    assert_eq!(run(&["filter-lang", p(&missing), "1", "0"]).status.code(), Some(3));
    let input = scratch("ab-unwritable.json", AB_STAR);
    let o = run(&["filter-lang", p(&input), "1", "0", "--out", "/nonexistent-dir/x.json"]);
    assert_eq!(o.status.code(), Some(3));
}

fn distinct_count(args: &[&str]) -> usize {
    let o = run(args);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    last.strip_prefix("DISTINCT LANGUAGES: ").unwrap().parse().unwrap()
}

#[test]
fn enumerate_filtrations_counts() {
    let s = Alphabet::from_chars("ab").unwrap();
    let universal = scratch("all.json", &apfilter::automata::json::dfa_to_json(&Dfa::universal(s.clone())));
    let empty = scratch("none.json", &apfilter::automata::json::dfa_to_json(&Dfa::empty(s)));
    assert_eq!(distinct_count(&["enumerate-filtrations", p(&universal), "strong"]), 1);
    assert_eq!(distinct_count(&["enumerate-filtrations", p(&empty), "weak"]), 1);

    // brute-force sweep of shifts well past the orbit of (ab)*
    let d = fixtures::ab_star();
    let src = Filterable::new(&d);
    let mut langs: Vec<Dfa> = (0..20u64)
        .map(|b| src.build(&ArithFilter::new(1, b).unwrap()).minimize())
        .collect();
    langs.sort_by_key(|x| format!("{x:?}"));
    langs.dedup();
    let input = scratch("ab-shift.json", AB_STAR);
    assert_eq!(distinct_count(&["enumerate-filtrations", p(&input), "shift"]), langs.len());

    assert_eq!(run(&["enumerate-filtrations", p(&input), "sideways"]).status.code(), Some(2));
}

#[test]
fn diag_nfa_round_trip() {
    let input = scratch("ab-diag.json", AB_STAR);
    let out = scratch("ab-diag-nfa.json", "");
    let o = run(&["diag-nfa", p(&input), "--out", p(&out)]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("diag automaton states:"));
    let nfa = nfa_from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let s = nfa.alphabet().clone();
    assert!(nfa.accepts(&s.parse_word("ab").unwrap()).unwrap());
    assert!(!nfa.accepts(&s.parse_word("ba").unwrap()).unwrap());
    // a file argument to `diag` does the same
    let o = run(&["diag", p(&input)]);
    assert_eq!(nfa_from_json(&stdout(&o)).unwrap(), nfa);
}

#[test]
fn grammar_files() {
    let g = scratch(
        "thm2.json",
        r#"{"terminals": ["0","1","2","3"], "nonterminals": ["S","A","B"], "start": "S",
            "rules": {"S": [["1","0","A","B"]], "A": [["0","A","B"],["2"]], "B": [["0","B"],["0","3"]]}}"#,
    );
    assert_eq!(stdout(&run(&["grammar", p(&g), "10203"])), "accepted\n");
    assert_eq!(stdout(&run(&["grammar", p(&g), "1023"])), "rejected\n");
    assert_eq!(stdout(&run(&["grammar", p(&g), "--max-len", "8"])), "10203\n102003\n1020003\n10020303\n10200003\n");
    assert_eq!(run(&["grammar", p(&g), "1024"]).status.code(), Some(2));
}

#[test]
fn verify_small_claims() {
    let o = run(&["verify", "thm2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("thm2  PASS"));
    assert!(text.contains("longest 123333"));
    assert!(text.ends_with("RESULT: PASS (1/1 claims passed)\n"));

    let text = stdout(&run(&["verify", "thm3"]));
    for b in 0..=6 {
        let ones = if b == 0 { "(empty)".to_string() } else { "1".repeat(b) };
        assert!(text.contains(&format!("b = {b}: longest word of the form 1* is {ones}\n")));
    }
    assert_eq!(run(&["verify", "thm9"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let a = run(&["verify", "thm1", "--seed", "7"]);
    let b = run(&["verify", "thm1", "--seed", "7"]);
    assert!(a.status.success());
    assert!(stdout(&a).contains("thm1  PASS"));
    assert_eq!(a.stdout, b.stdout);
    let j = run(&["verify", "thm4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&j)).unwrap();
    assert_eq!(v["records"][0]["outcome"], "PASS");
    assert!(v["records"][0].get("elapsed_ms").is_none());
    let t = run(&["verify", "thm4", "--timings"]);
    assert!(stdout(&t).contains("elapsed:"));
}

#[test]
fn verify_budget_skips() {
    let o = run(&["verify", "thm5", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("thm5  SKIPPED"));
    assert!(text.contains("RESULT: INCOMPLETE"));
}
