use super::{is_mid_sentence_capital, RuleCode, Violation};
use crate::engine::Config;
use crate::lexicon::Lexicons;
use crate::textmodel::Document;

/// Runs of mid-sentence capitalized words, at least one of which is not an
/// ordinary dictionary word. Detection only.
pub fn check_r06(doc: &Document<'_>, lexicons: &Lexicons, _config: &Config) -> Vec<Violation> {
    if lexicons.dictionary.is_none() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < doc.tokens.len() {
        if !is_mid_sentence_capital(doc, i) {
            i += 1;
            continue;
        }
        let mut run = vec![i];
        let mut j = i;
        // extend across single spaces
        while j + 2 < doc.tokens.len()
            && doc.tokens[j + 1].text == " "
            && is_mid_sentence_capital(doc, j + 2)
        {
            j += 2;
            run.push(j);
        }
        let unknown = run.iter().any(|&k| {
            let text = doc.tokens[k].text;
            let stem = text.strip_suffix("'s").or_else(|| text.strip_suffix("\u{2019}s")).unwrap_or(text);
            !lexicons.is_known_word(stem)
        });
        if unknown {
            let span = doc.span(doc.tokens[i].span.start, doc.tokens[j].span.end);
            let name = &doc.text[span.range()];
            out.push(Violation::new(
                RuleCode::R06,
                span,
                format!("proper noun `{name}`; a pronoun or general description may read more easily"),
            ));
        }
        i = j + 1;
    }
    out
}
