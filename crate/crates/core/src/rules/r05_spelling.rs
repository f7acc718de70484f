use super::{capitalize, is_mid_sentence_capital, starts_upper, Edit, RuleCode, Violation};
use crate::engine::Config;
use crate::lexicon::{confident_correction, is_acronym_shape, Lexicons};
use crate::textmodel::{Casing, Document};

/// Words missing from the dictionary. Proper nouns, acronyms and slang belong
/// to other rules.
pub fn check_r05(doc: &Document<'_>, lexicons: &Lexicons, _config: &Config) -> Vec<Violation> {
    let Some(dict) = &lexicons.dictionary else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for (i, tok) in doc.tokens.iter().enumerate() {
        if !tok.is_word()
            || tok.casing == Casing::Mixed
            || is_acronym_shape(tok.text)
            || tok.text.chars().any(|c| c.is_numeric() || (c.is_alphabetic() && !c.is_ascii()))
            || is_mid_sentence_capital(doc, i)
            || lexicons.is_slang(tok.text)
            || lexicons.is_known_word(tok.text)
        {
            continue;
        }
        let lower = tok.normalized();
        let correction = confident_correction(dict, lexicons.frequency.as_ref(), &lower, |w| !lexicons.is_slang(w));
        let message = match &correction {
            Some(c) => format!("unknown word `{}`; did you mean `{c}`?", tok.text),
            None => format!("unknown word `{}`", tok.text),
        };
        let mut v = Violation::new(RuleCode::R05, tok.span, message);
        if let Some(c) = correction {
            let c = if starts_upper(tok.text) { capitalize(&c) } else { c };
            v = v.with_fix(vec![Edit::new(tok.span, c)]);
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::testutil::{fixed, flagged, run};
    use super::*;

    #[test]
    fn teh_is_fixed() {
        assert_eq!(flagged(RuleCode::R05, "teh"), vec!["teh"]);
        assert_eq!(fixed(RuleCode::R05, "teh"), "the");
        assert_eq!(fixed(RuleCode::R05, "Teh end."), "The end.");
    }

    #[test]
    fn exemptions() {
        assert!(run(RuleCode::R05, "I like Grammarly a lot.").is_empty());
        assert!(run(RuleCode::R05, "u r so gr8 for buying us tix and fud at the theater! tysm!").is_empty());
        assert!(run(RuleCode::R05, "The XQZV met at 5pm.").is_empty());
        assert!(run(RuleCode::R05, "Don't stop the dog-walking man's song.").is_empty());
    }
}
