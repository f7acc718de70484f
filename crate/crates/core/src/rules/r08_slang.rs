use super::{capitalize, starts_upper, Edit, RuleCode, Violation};
use crate::engine::Config;
use crate::lexicon::Lexicons;
use crate::textmodel::Document;

/// Slang and texting shorthand, replaced from the slang table only.
pub fn check_r08(doc: &Document<'_>, lexicons: &Lexicons, _config: &Config) -> Vec<Violation> {
    let Some(slang) = &lexicons.slang else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for (i, tok) in doc.tokens.iter().enumerate() {
        if !tok.is_countable() {
            continue;
        }
        let Some(expansion) = slang.get(tok.text) else { continue };
        let replacement = if starts_upper(tok.text) || doc.starts_clause(i) {
            capitalize(expansion)
        } else {
            expansion.to_string()
        };
        out.push(
            Violation::new(RuleCode::R08, tok.span, format!("slang `{}`; write `{expansion}`", tok.text))
                .with_fix(vec![Edit::new(tok.span, replacement)]),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::testutil::{fixed, flagged, run};
    use super::*;

    const TEXTING: &str = "u r so gr8 for buying us tix and fud at the theater! tysm!";

    #[test]
    fn texting_sentence() {
        assert_eq!(flagged(RuleCode::R08, TEXTING), vec!["u", "r", "gr8", "tix", "fud", "tysm"]);
        assert_eq!(
            fixed(RuleCode::R08, TEXTING),
            "You are so great for buying us tickets and food at the theater! Thank you so much!"
        );
    }

    #[test]
    fn plain_words_pass() {
        assert!(run(RuleCode::R08, "are").is_empty());
    }

    #[test]
    fn capital_u() {
        assert_eq!(fixed(RuleCode::R08, "U said so."), "You said so.");
    }
}
