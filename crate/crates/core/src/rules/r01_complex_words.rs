use super::{capitalize, is_mid_sentence_capital, starts_upper, Edit, RuleCode, Violation};
use crate::engine::Config;
use crate::lexicon::{simpler_alternative, syllables, Lexicons};
use crate::textmodel::{Casing, Document};

/// Long, uncommon words. Hyphenated compounds are judged part by part.
pub fn check_r01(doc: &Document<'_>, lexicons: &Lexicons, config: &Config) -> Vec<Violation> {
    if lexicons.frequency.is_none() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, tok) in doc.tokens.iter().enumerate() {
        if !tok.is_word()
            || tok.casing == Casing::AllCaps
            || tok.text.chars().any(|c| c.is_ascii_digit())
            || is_mid_sentence_capital(doc, i)
            || lexicons.is_slang(tok.text)
        {
            continue;
        }
        // the stem before any apostrophe carries the judgement
        let stem_len = tok.text.find(['\'', '\u{2019}']).unwrap_or(tok.text.len());
        let mut offset = 0;
        for part in tok.text[..stem_len].split('-') {
            let start = tok.span.start + offset;
            offset += part.len() + 1;
            let Ok(n) = syllables(part) else { continue };
            if n <= config.max_syllables {
                continue;
            }
            if lexicons.rank(part).is_some_and(|r| r <= config.common_rank_cutoff) {
                continue;
            }
            let span = doc.span(start, start + part.len());
            let lower = part.to_lowercase();
            let alt = simpler_alternative(&lower, lexicons);
            let message = match alt {
                Some(a) => format!("`{part}` has {n} syllables and is uncommon; use `{a}`"),
                None => format!("`{part}` has {n} syllables and is uncommon; use a simpler word"),
            };
            let mut v = Violation::new(RuleCode::R01, span, message);
            if let Some(a) = alt {
                let replacement = if starts_upper(part) { capitalize(a) } else { a.to_string() };
                v = v.with_fix(vec![Edit::new(span, replacement)]);
            }
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::testutil::{fixed, flagged, run};
    use super::*;

    #[test]
    fn allocate_becomes_assign() {
        assert_eq!(flagged(RuleCode::R01, "We allocate funds."), vec!["allocate"]);
        assert_eq!(fixed(RuleCode::R01, "We allocate funds."), "We assign funds.");
        assert_eq!(fixed(RuleCode::R01, "Allocate funds."), "Assign funds.");
    }

    #[test]
    fn common_long_words_are_exempt() {
        assert!(run(RuleCode::R01, "I saw it yesterday and will again tomorrow.").is_empty());
    }

    #[test]
    fn no_synonym_means_flag_only() {
        let v = run(RuleCode::R01, "What a sesquipedalian remark.");
        assert_eq!(v.len(), 1);
        assert!(!v[0].fixable());
    }

    #[test]
    fn allocate_and_copious() {
        assert_eq!(fixed(RuleCode::R01, "a plethora"), "a a large number of things");
        assert_eq!(fixed(RuleCode::R01, "a benevolent man"), "a kind man");
    }

    #[test]
    fn proper_nouns_and_short_words_skipped() {
        assert!(run(RuleCode::R01, "We met Sesquipedalian there.").is_empty());
        assert!(run(RuleCode::R01, "The cat sat.").is_empty());
    }
}
