//! Compares readability before and after fixing.
//!
//! cargo run --example readability

use clearread::engine::{fix, Config};
use clearread::lexicon::Lexicons;
use clearread::metrics::{readability, Metrics};
use clearread::textmodel::Document;

const TEXT: &str = "Individuals with cognitive disabilities may have difficulty remembering things, \
and they may need additional time to comprehend complex instructions. We will subsequently \
disseminate the results to all personnel, and each department will ascertain whether further \
modification is necessary.";

fn show(label: &str, m: &Metrics) {
    println!(
        "{label:<7} words {:>3}  sentences {}  words/sentence {:>5.2}  syllables/word {:.2}  grade {:>5.2}",
        m.words, m.sentences, m.avg_sentence_words, m.avg_syllables_per_word, m.grade_level
    );
}

fn main() {
    let lex = Lexicons::bundled();
    let config = Config::default();
    let before = readability(&Document::new(TEXT), lex, &config).expect("text has words");
    let fixed = match fix(&Document::new(TEXT), &config, lex) {
        Ok(o) => o.text,
        Err(e) => e.outcome().text.clone(),
    };
    let after = readability(&Document::new(&fixed), lex, &config).expect("text has words");
    show("before", &before);
    show("after", &after);
    println!("\n{fixed}");

    // the grade formula on its own
    let cat = readability(&Document::new("The cat sat."), lex, &config).unwrap();
    println!("\n\"The cat sat.\" grade {:.2}", cat.grade_level);
}
