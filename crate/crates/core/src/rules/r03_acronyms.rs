use std::collections::HashSet;

use super::{capitalize, is_acronym, prev_solid, Edit, RuleCode, Violation};
use crate::engine::Config;
use crate::lexicon::Lexicons;
use crate::textmodel::Document;

/// First use of each acronym must read "<expansion> (<ACRO>)".
pub fn check_r03(doc: &Document<'_>, lexicons: &Lexicons, _config: &Config) -> Vec<Violation> {
    if lexicons.dictionary.is_none() {
        return Vec::new();
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (i, tok) in doc.tokens.iter().enumerate() {
        if !tok.is_word() || !is_acronym(tok.text, lexicons) || !seen.insert(tok.text) {
            continue;
        }
        if introduced(doc, i) {
            continue;
        }
        let expansion = lexicons.acronyms.as_ref().and_then(|a| a.get(tok.text));
        let message = match expansion {
            Some(e) => format!("acronym `{}` is used before it is spelled out; write `{e} ({})`", tok.text, tok.text),
            None => format!("acronym `{}` is used before it is spelled out", tok.text),
        };
        let mut v = Violation::new(RuleCode::R03, tok.span, message);
        if let Some(e) = expansion {
            let e = if doc.starts_clause(i) { capitalize(e) } else { e.to_string() };
            v = v.with_fix(vec![Edit::new(tok.span, format!("{e} ({})", tok.text))]);
        }
        out.push(v);
    }
    out
}

/// `words (ACRO)`: the token sits in parentheses right after a word.
fn introduced(doc: &Document<'_>, i: usize) -> bool {
    let n = doc.tokens.len();
    let Some(open) = prev_solid(doc, i, 0).filter(|&j| j + 1 == i && doc.tokens[j].is_punct('(')) else {
        return false;
    };
    let closed = (i + 1 < n) && doc.tokens[i + 1].is_punct(')');
    let word_before = prev_solid(doc, open, 0).is_some_and(|j| doc.tokens[j].is_word());
    closed && word_before
}
