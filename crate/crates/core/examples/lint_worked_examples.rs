//! Lints each worked example from the rule catalogue, once with only its own
//! rule enabled, then its rewritten counterpart.
//!
//! cargo run --example lint_worked_examples

use clearread::engine::{lint, Config};
use clearread::lexicon::Lexicons;
use clearread::rules::RuleCode;
use clearread::textmodel::Document;
use serde::Deserialize;

#[derive(Deserialize)]
struct Example {
    rule: RuleCode,
    text: String,
    clean: String,
    #[allow(dead_code)]
    flagged: Vec<String>,
}

fn main() {
    let examples: Vec<Example> =
        serde_json::from_str(include_str!("../tests/fixtures/worked_examples.json")).expect("fixture parses");
    let lexicons = Lexicons::bundled();
    for ex in &examples {
        let config = Config::default().with_rules([ex.rule]);
        println!("{}", ex.rule);
        for (label, text) in [("before", &ex.text), ("after", &ex.clean)] {
            let result = lint(&Document::new(text), &config, lexicons);
            let hits: Vec<_> = result.violations.iter().map(|v| &text[v.span.range()]).collect();
            println!("  {label:<6} {hits:?}");
            for v in &result.violations {
                println!("         {}", v.message);
            }
        }
    }
}
