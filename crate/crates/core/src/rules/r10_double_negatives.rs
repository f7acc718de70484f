use super::{capitalize, starts_upper, Edit, RuleCode, Violation};
use crate::engine::Config;
use crate::lexicon::Lexicons;
use crate::textmodel::{Document, Span};

struct Marker {
    span: Span,
    text: String,
}

/// Two or more negations in one clause. Clauses end at sentence ends,
/// semicolons, commas, colons and coordinating conjunctions.
pub fn check_r10(doc: &Document<'_>, lexicons: &Lexicons, _config: &Config) -> Vec<Violation> {
    let fw = &lexicons.function_words;
    let mut out = Vec::new();
    for sentence in &doc.sentences {
        let mut clause: Vec<Marker> = Vec::new();
        let mut clause_start: Option<usize> = None;
        let mut clause_end = 0;
        let range = sentence.token_range.clone();
        let mut i = range.start;
        while i <= range.end {
            let boundary = i == range.end || {
                let t = &doc.tokens[i];
                (t.is_punct(';') || t.is_punct(',') || t.is_punct(':'))
                    || (t.is_word() && fw.coordinators.contains(t.normalized().as_str()))
            };
            if boundary {
                if clause.len() >= 2 {
                    out.push(violation(doc, lexicons, &clause, clause_start.unwrap(), clause_end));
                }
                clause.clear();
                clause_start = None;
                i += 1;
                continue;
            }
            let t = &doc.tokens[i];
            if !t.is_whitespace() {
                clause_start.get_or_insert(t.span.start);
                clause_end = t.span.end;
            }
            if t.is_word() {
                let norm = t.normalized();
                // "no one" reads as a single marker
                if norm == "no" && i + 2 < range.end && doc.tokens[i + 1].text == " " && doc.tokens[i + 2].normalized() == "one" {
                    let end = doc.tokens[i + 2].span.end;
                    clause.push(Marker { span: doc.span(t.span.start, end), text: "no one".into() });
                    clause_end = end;
                    i += 3;
                    continue;
                }
                if fw.is_negative(&norm) {
                    clause.push(Marker { span: t.span, text: norm });
                }
            }
            i += 1;
        }
    }
    out
}

fn violation(doc: &Document<'_>, lexicons: &Lexicons, markers: &[Marker], start: usize, end: usize) -> Violation {
    let fw = &lexicons.function_words;
    let span = doc.span(start, end);
    let list: Vec<String> = markers.iter().map(|m| format!("`{}`", &doc.text[m.span.range()])).collect();
    let mut v = Violation::new(RuleCode::R10, span, format!("double negative ({})", list.join(", ")));
    if let Some(first_verbal) = markers.iter().position(|m| fw.is_verbal_negation(&m.text)) {
        let edits: Vec<Edit> = markers[first_verbal + 1..]
            .iter()
            .filter_map(|m| {
                let positive = fw.negative_to_positive.get(m.text.as_str())?;
                let original = &doc.text[m.span.range()];
                let positive = if starts_upper(original) { capitalize(positive) } else { positive.to_string() };
                Some(Edit::new(m.span, positive))
            })
            .collect();
        if !edits.is_empty() {
            v = v.with_fix(edits);
        }
    }
    v
}
