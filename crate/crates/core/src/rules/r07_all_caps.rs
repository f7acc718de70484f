use super::{capitalize, Edit, RuleCode, Violation};
use crate::engine::Config;
use crate::lexicon::Lexicons;
use crate::textmodel::{Casing, Document, TokenKind};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    Member,
    Bridge,
    Break,
}

fn role(doc: &Document<'_>, lexicons: &Lexicons, i: usize) -> Role {
    let t = &doc.tokens[i];
    match t.kind {
        TokenKind::Whitespace | TokenKind::Number => Role::Bridge,
        TokenKind::Word if t.casing == Casing::Capitalized && t.text.chars().count() == 1 => Role::Bridge,
        TokenKind::Word
            if t.casing == Casing::AllCaps
                && !lexicons.acronyms.as_ref().is_some_and(|a| a.contains(t.text))
                && !lexicons.is_slang(t.text)
                && lexicons.is_known_word(t.text) =>
        {
            Role::Member
        }
        _ => Role::Break,
    }
}

/// Shouting: two or more allcaps dictionary words in a row. Single capital
/// letters ("I", "A") and numbers may sit inside a run.
pub fn check_r07(doc: &Document<'_>, lexicons: &Lexicons, config: &Config) -> Vec<Violation> {
    if lexicons.dictionary.is_none() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for sentence in &doc.sentences {
        let range = sentence.token_range.clone();
        let mut i = range.start;
        while i < range.end {
            if role(doc, lexicons, i) != Role::Member {
                i += 1;
                continue;
            }
            let mut members = vec![i];
            let mut j = i + 1;
            while j < range.end {
                match role(doc, lexicons, j) {
                    Role::Member => members.push(j),
                    Role::Bridge => {}
                    Role::Break => break,
                }
                j += 1;
            }
            let (first, last) = (members[0], *members.last().unwrap());
            i = last + 1;
            if members.len() < 2 {
                continue;
            }
            let span = doc.span(doc.tokens[first].span.start, doc.tokens[last].span.end);
            let mut lowered: String = (first..=last)
                .map(|k| {
                    let t = &doc.tokens[k];
                    if t.is_word() && t.text != "I" { t.text.to_lowercase() } else { t.text.to_string() }
                })
                .collect();
            if doc.starts_clause(first) {
                lowered = capitalize(&lowered);
            }
            let replacement = format!("{}{lowered}{}", config.emphasis_open, config.emphasis_close);
            let shout = &doc.text[span.range()];
            out.push(
                Violation::new(RuleCode::R07, span, format!("all-caps text `{shout}`; use bold or italics for emphasis"))
                    .with_fix(vec![Edit::new(span, replacement)]),
            );
        }
    }
    out
}
