//! Spelling suggestions ranked by edit distance and word frequency.
//!
//! cargo run --example spelling [WORD...]

use clearread::lexicon::{damerau_levenshtein, spell_suggest, Lexicons};

fn main() {
    let lex = Lexicons::bundled();
    let dict = lex.dictionary.as_ref().expect("bundled dictionary");
    let mut words: Vec<String> = std::env::args().skip(1).collect();
    if words.is_empty() {
        words = ["teh", "recieve", "definately", "acessible", "xqzv"].map(String::from).to_vec();
    }
    for word in &words {
        let suggestions = spell_suggest(dict, lex.frequency.as_ref(), word);
        let top: Vec<String> = suggestions
            .iter()
            .take(5)
            .map(|s| format!("{s} (d={}, rank {})", damerau_levenshtein(word, s), lex.rank(s).map_or("-".into(), |r| r.to_string())))
            .collect();
        if top.is_empty() {
            println!("{word}: no candidates within distance 2");
        } else {
            println!("{word}: {}", top.join(", "));
        }
    }
}
