use super::{capitalize, Edit, RuleCode, Violation};
use crate::engine::Config;
use crate::lexicon::Lexicons;
use crate::textmodel::{list_marker_len, ABBREVIATIONS, word_count, Document, Sentence};

const SPLIT_CONJUNCTIONS: &[&str] = &["and", "but", "so", "or"];

pub fn check_r02(doc: &Document<'_>, _lexicons: &Lexicons, config: &Config) -> Vec<Violation> {
    let mut out = Vec::new();
    for sentence in &doc.sentences {
        let n = word_count(doc, sentence);
        if n <= config.max_sentence_words {
            continue;
        }
        let mut v = Violation::new(
            RuleCode::R02,
            sentence.span,
            format!("sentence has {n} words (max {})", config.max_sentence_words),
        );
        if let Some(edit) = split_edit(doc, sentence, n) {
            v = v.with_fix(vec![edit]);
        }
        out.push(v);
    }
    out
}

/// Replaces ", <conj> <word>" nearest the middle with ". <Word>".
fn split_edit(doc: &Document<'_>, sentence: &Sentence, total: usize) -> Option<Edit> {
    let range = sentence.token_range.clone();
    let toks = &doc.tokens;
    let skip = list_marker_len(doc.sentence_tokens(sentence));
    let mut words_before = 0;
    let mut best: Option<(usize, usize, usize)> = None; // (distance to middle, comma, next word)
    for i in range.start + skip..range.end {
        let t = &toks[i];
        if t.is_countable() {
            words_before += 1;
            continue;
        }
        if !t.is_punct(',') || i + 4 >= range.end {
            continue;
        }
        let (ws1, conj, ws2, next) = (&toks[i + 1], &toks[i + 2], &toks[i + 3], &toks[i + 4]);
        let fits = ws1.is_whitespace()
            && conj.is_word()
            && SPLIT_CONJUNCTIONS.contains(&conj.normalized().as_str())
            && ws2.is_whitespace()
            && next.is_word()
            && next.text.starts_with(char::is_alphabetic);
        let prev = &toks[i - 1];
        let prev_ok = prev.is_countable() && !ABBREVIATIONS.contains(&prev.text);
        // the right side keeps at least one word besides the conjunction
        if fits && prev_ok && words_before >= 1 && words_before + 1 < total {
            let distance = (2 * words_before).abs_diff(total);
            if best.is_none_or(|(d, _, _)| distance < d) {
                best = Some((distance, i, i + 4));
            }
        }
    }
    let (_, comma, next) = best?;
    let span = doc.span(toks[comma].span.start, toks[next].span.end);
    Some(Edit::new(span, format!(". {}", capitalize(toks[next].text))))
}
