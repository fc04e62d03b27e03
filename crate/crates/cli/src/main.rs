use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use apfilter::automata::json::{dfa_from_json, dfa_to_json, nfa_to_json};
use apfilter::automata::{Alphabet, Dfa, Word};
use apfilter::diag::{build_diag_nfa, diag_word};
use apfilter::filtration::{enumerate_distinct_filtrations, filter_word, ArithFilter, FilterFamily, Filterable};
use apfilter::fixtures::DEFAULT_SEED;
use apfilter::grammar::Cfg;
use apfilter::verify::{verify, Claim, VerifyConfig, DEFAULT_THM5_BUDGET};

#[derive(Parser)]
#[command(name = "apfilter", version, about = "Arithmetic-progression filters and the diagonal of square words")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Keep the letters of WORD at positions a·i + b
    FilterWord { word: String, a: String, b: String },
    /// Write the minimal DFA of L filtered by (a, b)
    FilterLang {
        dfa: PathBuf,
        a: String,
        b: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the distinct filtered languages over a family of filters
    EnumerateFiltrations {
        dfa: PathBuf,
        family: String,
        /// Longest sample word shown per language
        #[arg(long, default_value_t = 5)]
        max_len: usize,
    },
    /// Diagonal of a square-length word, or the diag NFA of a DFA file
    Diag {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the NFA accepting diag(L) for a DFA file
    DiagNfa {
        dfa: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Membership in, or bounded enumeration of, a grammar file
    Grammar {
        grammar: PathBuf,
        word: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Check one claim (thm1..thm5) or all of them
    Verify {
        claim: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Word length bound for the filtered-language comparison
        #[arg(long, default_value_t = 7)]
        max_len: usize,
        /// Include the |y| = 169 diagonal search
        #[arg(long)]
        deep: bool,
        /// Cap on candidates drawn by the diagonal search
        #[arg(long, default_value_t = DEFAULT_THM5_BUDGET)]
        budget: u64,
        /// Print elapsed time per claim
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Io(String),
    Verify,
}

impl From<apfilter::Error> for Failure {
    fn from(e: apfilter::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write_or_print(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_dfa(path: &Path) -> Result<Dfa, Failure> {
    dfa_from_json(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse_token(text: &str) -> Result<(Alphabet, Word), Failure> {
    if text.is_empty() {
        return Ok((Alphabet::from_chars("_")?, Word::empty()));
    }
    let s = Alphabet::implied_by(text)?;
    let w = s.parse_word(text)?;
    Ok((s, w))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let json = cli.format == Format::Json;
    match cli.command {
        Command::FilterWord { word, a, b } => {
            let f = ArithFilter::parse(&a, &b)?;
            let (s, w) = parse_token(&word)?;
            let x = filter_word(&w, &f);
            if json {
                let doc = json!({ "word": word, "a": a, "b": b, "result": s.render(&x) });
                println!("{doc}");
            } else {
                println!("{}", s.display(&x));
            }
        }
        Command::FilterLang { dfa, a, b, out } => {
            let d = load_dfa(&dfa)?;
            let f = ArithFilter::parse(&a, &b)?;
            let built = Filterable::new(&d).build(&f);
            let min = built.minimize();
            let text = dfa_to_json(&min) + "\n";
            if json {
                let doc = json!({
                    "filter": [a, b],
                    "states_before": built.state_count(),
                    "states_after": min.state_count(),
                });
                eprintln!("{doc}");
            } else {
                eprintln!("states before minimization: {}", built.state_count());
                eprintln!("states after minimization: {}", min.state_count());
            }
            write_or_print(out.as_deref(), &text)?;
        }
        Command::EnumerateFiltrations { dfa, family, max_len } => {
            let d = load_dfa(&dfa)?;
            let family: FilterFamily = family.parse()?;
            let atlas = enumerate_distinct_filtrations(&d, family);
            let s = d.alphabet();
            let rows: Vec<(String, String, usize, Vec<String>)> = atlas
                .entries
                .iter()
                .map(|e| {
                    let words = e.dfa.enumerate_accepted(max_len).iter().map(|w| s.display(w)).collect();
                    (e.filter.step().to_string(), e.filter.offset().to_string(), e.dfa.state_count(), words)
                })
                .collect();
            if json {
                let entries: Vec<_> = rows
                    .iter()
                    .map(|(a, b, n, words)| json!({ "a": a, "b": b, "states": n, "sample": words }))
                    .collect();
                let doc = json!({ "family": family.name(), "distinct": atlas.len(), "entries": entries });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("{:>4} {:>4} {:>6}  sample (length <= {max_len})", "a", "b", "states");
                for (a, b, n, words) in &rows {
                    let mut sample = words.iter().take(8).cloned().collect::<Vec<_>>().join(" ");
                    if words.len() > 8 {
                        sample.push_str(" ...");
                    }
                    if words.is_empty() {
                        sample = "-".to_string();
                    }
                    println!("{a:>4} {b:>4} {n:>6}  {sample}");
                }
                println!("DISTINCT LANGUAGES: {}", atlas.len());
            }
        }
        Command::Diag { input, out } => {
            let path = Path::new(&input);
            if path.is_file() {
                return diag_nfa(path, out.as_deref(), json);
            }
            let (s, w) = parse_token(&input)?;
            let x = diag_word(&w)?;
            if json {
                println!("{}", json!({ "word": input, "diag": s.render(&x) }));
            } else {
                println!("{}", s.display(&x));
            }
        }
        Command::DiagNfa { dfa, out } => diag_nfa(&dfa, out.as_deref(), json)?,
        Command::Grammar { grammar, word, max_len } => {
            let g = Cfg::from_json(&read(&grammar)?).map_err(|e| Failure::Usage(format!("{}: {e}", grammar.display())))?;
            let s = g.terminals();
            match word {
                Some(text) => {
                    let w = s.parse_word(&text)?;
                    let accepted = g.cyk_accepts(&w)?;
                    if json {
                        println!("{}", json!({ "word": text, "accepted": accepted }));
                    } else {
                        println!("{}", if accepted { "accepted" } else { "rejected" });
                    }
                }
                None => {
                    let mut words: Vec<Word> = g.enumerate_words(max_len).into_iter().collect();
                    words.sort_by(apfilter::automata::shortlex);
                    let shown: Vec<String> = words.iter().map(|w| s.display(w)).collect();
                    if json {
                        println!("{}", json!({ "max_len": max_len, "words": shown }));
                    } else {
                        for w in shown {
                            println!("{w}");
                        }
                    }
                }
            }
        }
        Command::Verify {
            claim,
            seed,
            max_len,
            deep,
            budget,
            timings,
            out,
        } => {
            let claims = if claim == "all" {
                Claim::ALL.to_vec()
            } else {
                vec![claim.parse::<Claim>()?]
            };
            let cfg = VerifyConfig {
                seed,
                max_len,
                deep,
                budget,
                ..VerifyConfig::default()
            };
            let report = verify(&claims, &cfg);
            let text = if json {
                report.to_json(timings)
            } else {
                report.to_table(timings)
            };
            write_or_print(out.as_deref(), &text)?;
            if report.any_fail() {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn diag_nfa(path: &Path, out: Option<&Path>, json: bool) -> Outcome {
    let d = load_dfa(path)?;
    let nfa = build_diag_nfa(&d);
    if json {
        eprintln!("{}", json!({ "states": nfa.state_count() }));
    } else {
        eprintln!("diag automaton states: {}", nfa.state_count());
    }
    write_or_print(out, &(nfa_to_json(&nfa) + "\n"))
}
