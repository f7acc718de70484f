//! The same lint result as text, JSON and a unified diff of the fixes.
//!
//! cargo run --example report_formats

use clearread::engine::{fix, lint, Config};
use clearread::lexicon::Lexicons;
use clearread::metrics::readability;
use clearread::report::{parse_json, render_diff, render_json, render_text, Report};
use clearread::textmodel::Document;

fn main() {
    let text = "The brown dog was being walked by his owner towards a park, where he would play with other dogs for five hours.\n\n\
u r so gr8 for buying us tix and fud at the theater! tysm!\n";
    let lex = Lexicons::bundled();
    let config = Config::default();
    let doc = Document::new(text);

    let result = lint(&doc, &config, lex);
    let metrics = readability(&doc, lex, &config).unwrap();
    let report = Report::from_lint("doc.txt", text, &result).with_metrics(metrics);

    print!("{}", render_text(&report));
    let json = render_json(&report);
    println!("{json}");
    assert_eq!(render_json(&parse_json(&json).unwrap()), json);

    let fixed = match fix(&doc, &config, lex) {
        Ok(o) => o.text,
        Err(e) => e.outcome().text.clone(),
    };
    print!("{}", render_diff(text, &fixed, "doc.txt"));
}
