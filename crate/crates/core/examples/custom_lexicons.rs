//! Loads lexicon tables from a directory instead of the bundled set. Rules
//! whose tables are missing are skipped or lose their fixes, and the lint
//! result says so.
//!
//! cargo run --example custom_lexicons

use clearread::engine::{lint, Config};
use clearread::lexicon::{Lexicons, SlangMap};
use clearread::textmodel::Document;

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    std::fs::write(dir.path().join("slang.tsv"), "# token<TAB>expansion\nbrb\tbe right back\nu\tyou\n").unwrap();
    std::fs::write(dir.path().join("frequency.tsv"), "the\t1\nback\t2\nright\t3\n").unwrap();

    let lex = Lexicons::from_dir(dir.path()).expect("tables parse");
    println!("missing tables: {:?}", lex.missing());

    let text = "brb, u know the drill. We allocate funds.";
    let result = lint(&Document::new(text), &Config::default(), &lex);
    for v in &result.violations {
        println!("{} {:?} {}", v.rule_code, &text[v.span.range()], v.message);
    }
    for d in &result.diagnostics {
        println!("note: {d}");
    }

    // tables also parse from strings and serialise back
    let slang = SlangMap::parse("gr8\tgreat\n").unwrap();
    print!("round trip: {}", slang.to_tsv());
}
