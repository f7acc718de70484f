use super::{capitalize, lowercase_first, Edit, RuleCode, Violation};
use crate::engine::Config;
use crate::lexicon::{FunctionWordLists, Lexicons};
use crate::textmodel::{Casing, Document, Sentence};

/// Subject pronoun for each object pronoun, and back.
const OBJECT_TO_SUBJECT: &[(&str, &str)] = &[("me", "I"), ("us", "we"), ("him", "he"), ("her", "she"), ("them", "they")];

/// Subject heads that are safe to lowercase when they move after the verb.
const DETERMINERS: &[&str] = &[
    "the", "a", "an", "this", "that", "these", "those", "my", "your", "his", "her", "its", "our",
    "their", "some", "every", "each", "all", "both", "many", "few", "several", "any", "no",
];

/// Passive constructions: a be-form, at most one adverb, then a participle.
pub fn check_r04(doc: &Document<'_>, lexicons: &Lexicons, _config: &Config) -> Vec<Violation> {
    let fw = &lexicons.function_words;
    let mut out = Vec::new();
    for sentence in &doc.sentences {
        let words = word_run(doc, sentence);
        for (k, &(be, _)) in words.iter().enumerate() {
            if !fw.is_be_form(&doc.tokens[be].normalized()) {
                continue;
            }
            let Some(m) = match_at(doc, fw, &words, k) else { continue };
            let span = doc.span(doc.tokens[be].span.start, doc.tokens[words[m.participle].0].span.end);
            let phrase = &doc.text[span.range()];
            let mut v = Violation::new(
                RuleCode::R04,
                span,
                format!("passive voice `{phrase}`; name who does the action first"),
            );
            if let Some(edit) = rewrite(doc, lexicons, sentence, &words, k, &m) {
                v = v.with_fix(vec![edit]);
            }
            out.push(v);
        }
    }
    out
}

struct PassiveMatch {
    adverb: Option<usize>,
    participle: usize,
}

/// Word tokens of the sentence with a flag telling whether only whitespace
/// separates each from the previous word.
fn word_run(doc: &Document<'_>, sentence: &Sentence) -> Vec<(usize, bool)> {
    let mut out = Vec::new();
    let mut adjacent = false;
    for i in sentence.token_range.clone() {
        let t = &doc.tokens[i];
        if t.is_word() {
            out.push((i, adjacent));
            adjacent = true;
        } else if !t.is_whitespace() {
            adjacent = false;
        }
    }
    out
}

fn match_at(doc: &Document<'_>, fw: &FunctionWordLists, words: &[(usize, bool)], k: usize) -> Option<PassiveMatch> {
    let text = |w: usize| doc.tokens[words[w].0].normalized();
    let joined = |w: usize| words.get(w).is_some_and(|&(_, adj)| adj);
    let is_participle = |w: usize| fw.past_tense_of_participle(&text(w)).is_some();
    if joined(k + 1) && is_participle(k + 1) {
        return Some(PassiveMatch { adverb: None, participle: k + 1 });
    }
    if joined(k + 1) && joined(k + 2) && fw.is_adverb(&text(k + 1)) && is_participle(k + 2) {
        return Some(PassiveMatch { adverb: Some(k + 1), participle: k + 2 });
    }
    None
}

/// "<Subject> was <verb>ed by <agent>" -> "<Agent> <verb>ed <subject>".
fn rewrite(
    doc: &Document<'_>,
    lexicons: &Lexicons,
    sentence: &Sentence,
    words: &[(usize, bool)],
    k: usize,
    m: &PassiveMatch,
) -> Option<Edit> {
    let fw = &lexicons.function_words;
    let norm = |w: usize| doc.tokens[words[w].0].normalized();
    let first = doc.first_word(sentence)?;
    let subject_start = words.iter().position(|&(i, _)| i == first)?;
    // the be-form chain ("was being") starts the predicate
    let mut chain = k;
    while chain > subject_start && words[chain].1 && fw.is_be_form(&norm(chain - 1)) {
        chain -= 1;
    }
    if chain == subject_start || !words[chain].1 {
        return None;
    }
    #[allow(clippy::needless_range_loop)]
    for w in subject_start..chain {
        let t = norm(w);
        if w > subject_start && !words[w].1 {
            return None;
        }
        if fw.is_be_form(&t) || fw.auxiliaries.contains(t.as_str()) || fw.phrase_boundaries.contains(t.as_str()) || fw.is_negative(&t) {
            return None;
        }
    }
    if m.adverb.is_some_and(|a| norm(a) == "not") {
        return None;
    }
    let by = m.participle + 1;
    if words.get(by).is_none_or(|&(_, adj)| !adj) || norm(by) != "by" {
        return None;
    }
    let agent_start = by + 1;
    let mut agent_end = agent_start;
    while agent_end < words.len() && words[agent_end].1 && !fw.phrase_boundaries.contains(norm(agent_end).as_str()) {
        agent_end += 1;
    }
    if agent_end == agent_start || !words.get(agent_start).is_some_and(|&(_, adj)| adj) {
        return None;
    }
    if (agent_start..agent_end).any(|w| fw.is_be_form(&norm(w)) || fw.auxiliaries.contains(norm(w).as_str())) {
        return None;
    }

    let span_text = |a: usize, b: usize| &doc.text[doc.tokens[words[a].0].span.start..doc.tokens[words[b - 1].0].span.end];
    let verb = fw.past_tense_of_participle(&norm(m.participle))?;
    let agent = pronoun_swap(span_text(agent_start, agent_end), true).unwrap_or_else(|| span_text(agent_start, agent_end).to_string());
    let subject_raw = span_text(subject_start, chain);
    let subject = pronoun_swap(subject_raw, false).unwrap_or_else(|| {
        let head = &doc.tokens[words[subject_start].0];
        let lower = head.normalized();
        let common = DETERMINERS.contains(&lower.as_str()) || fw.is_noun(&lower);
        if head.casing != Casing::Capitalized || !common {
            subject_raw.to_string()
        } else {
            lowercase_first(subject_raw)
        }
    });
    let adverb = m.adverb.map(|a| format!("{} ", doc.tokens[words[a].0].text)).unwrap_or_default();
    let replacement = format!("{} {adverb}{verb} {subject}", capitalize(&agent));
    let start = doc.tokens[words[subject_start].0].span.start;
    let end = doc.tokens[words[agent_end - 1].0].span.end;
    Some(Edit::new(doc.span(start, end), replacement))
}

/// Swaps a lone pronoun between object and subject case.
fn pronoun_swap(text: &str, object_to_subject: bool) -> Option<String> {
    let lower = text.to_lowercase();
    OBJECT_TO_SUBJECT.iter().find_map(|&(obj, subj)| {
        if object_to_subject && lower == obj {
            Some(subj.to_string())
        } else if !object_to_subject && lower == subj.to_lowercase() {
            Some(obj.to_string())
        } else {
            None
        }
    })
}

#[cfg(test)]
mod tests {
    use super::super::testutil::{fixed, flagged, run};
    use super::*;

    #[test]
    fn ice_cream_example() {
        let text = "The ice cream was licked by the child.";
        assert_eq!(flagged(RuleCode::R04, text), vec!["was licked"]);
        assert_eq!(fixed(RuleCode::R04, text), "The child licked the ice cream.");
    }

    #[test]
    fn active_counterpart_is_clean() {
        assert!(run(RuleCode::R04, "The child licked his ice cream.").is_empty());
    }

    #[test]
    fn no_agent_is_flag_only() {
        let v = run(RuleCode::R04, "Mistakes were made.");
        assert_eq!(v.len(), 1);
        assert!(!v[0].fixable());
    }

    #[test]
    fn progressive_passive_with_agent_phrase() {
        let text = "The brown dog was being walked by his owner towards a park.";
        assert_eq!(flagged(RuleCode::R04, text), vec!["being walked"]);
        assert_eq!(fixed(RuleCode::R04, text), "His owner walked the brown dog towards a park.");
    }

    #[test]
    fn pronouns_change_case() {
        assert_eq!(fixed(RuleCode::R04, "She was seen by them."), "They saw her.");
        assert_eq!(fixed(RuleCode::R04, "The cake was quickly eaten by me."), "I quickly ate the cake.");
    }

    #[test]
    fn negation_and_modals_block_the_fix() {
        assert!(!run(RuleCode::R04, "The cake was not eaten by me.")[0].fixable());
        assert!(!run(RuleCode::R04, "The cake will be eaten by me.")[0].fixable());
    }

    #[test]
    fn proper_noun_subject_keeps_case() {
        assert_eq!(fixed(RuleCode::R04, "Tom was helped by the nurse."), "The nurse helped Tom.");
    }
}
