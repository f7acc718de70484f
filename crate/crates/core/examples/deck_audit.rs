//! Audits a slide-deck manifest and prints findings as text and JSON.
//!
//! cargo run --example deck_audit [MANIFEST]

use std::path::PathBuf;

use clearread::deck::{audit, AuditConfig, Deck};
use clearread::report::{render_json, render_text, Report};

fn main() {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/deck_seeded.json"));
    let deck = match Deck::load(&path) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let findings = audit(&deck, &AuditConfig::default());
    let report = Report::from_deck("deck.json", &findings);
    print!("{}", render_text(&report));
    println!("{}", render_json(&report));
}
