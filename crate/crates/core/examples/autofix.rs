//! Runs the fix engine to its fixpoint and shows every applied edit, the
//! residual findings and a unified diff.
//!
//! cargo run --example autofix [FILE]

use clearread::engine::{fix, Config, FixError};
use clearread::lexicon::Lexicons;
use clearread::report::render_diff;
use clearread::textmodel::Document;

const SAMPLE: &str = "u r so gr8 for buying us tix and fud at the theater! tysm!\n\n\
The ice cream was licked by the child. We allocate copious funds to teh project, \
and the committee will commence the evaluation immediately.\n\n\
I don't know nothing! Take this letter to the PO before noon.\n";

fn main() {
    let (name, text) = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).expect("readable input");
            (path, text)
        }
        None => ("sample.txt".to_string(), SAMPLE.to_string()),
    };

    let outcome = match fix(&Document::new(&text), &Config::default(), Lexicons::bundled()) {
        Ok(o) => o,
        Err(FixError::PassLimitExceeded(o)) => {
            eprintln!("pass limit reached; showing the partial result");
            *o
        }
    };

    println!("{} edit(s) over {} pass(es)", outcome.applied.len(), outcome.passes);
    for a in &outcome.applied {
        println!("  pass {} {} {:?} -> {:?}", a.pass, a.rule_code, a.original, a.edit.replacement);
    }
    println!("\nfixed text:\n{}", outcome.text);
    println!("still flagged (no safe fix):");
    for v in &outcome.residual.violations {
        println!("  {} {}", v.rule_code, v.message);
    }
    print!("\n{}", render_diff(&text, &outcome.text, &name));
}
