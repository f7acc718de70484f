use super::{Edit, RuleCode, Violation};
use crate::engine::Config;
use crate::lexicon::Lexicons;
use crate::textmodel::{list_marker_len, Document, Sentence};

/// Paragraphs that walk through steps in prose. Each run of consecutive
/// sentences opening with a sequence cue gets numbered.
pub fn check_r09(doc: &Document<'_>, lexicons: &Lexicons, config: &Config) -> Vec<Violation> {
    let fw = &lexicons.function_words;
    let is_step = |s: &Sentence| {
        list_marker_len(doc.sentence_tokens(s)) == 0
            && doc
                .first_word(s)
                .is_some_and(|i| doc.tokens[i].span.start == s.span.start && fw.sequence_cues.contains(doc.tokens[i].normalized().as_str()))
    };
    let mut out = Vec::new();
    for para in &doc.paragraphs {
        let sentences: Vec<&Sentence> = doc
            .sentences
            .iter()
            .filter(|s| para.start <= s.span.start && s.span.end <= para.end)
            .collect();
        let mut k = 0;
        while k < sentences.len() {
            if !is_step(sentences[k]) {
                k += 1;
                continue;
            }
            let mut end = k;
            while end < sentences.len() && is_step(sentences[end]) {
                end += 1;
            }
            let run = &sentences[k..end];
            if run.len() >= config.min_list_steps {
                let span = doc.span(run[0].span.start, run[run.len() - 1].span.end);
                let edits = run
                    .iter()
                    .enumerate()
                    .map(|(n, s)| Edit::new(doc.span(s.span.start, s.span.start), format!("{}. ", n + 1)))
                    .collect();
                out.push(
                    Violation::new(
                        RuleCode::R09,
                        span,
                        format!("{} sequential steps written as prose; use a numbered list", run.len()),
                    )
                    .with_fix(edits),
                );
            }
            k = end;
        }
    }
    out
}
