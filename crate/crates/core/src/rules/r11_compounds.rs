use super::{RuleCode, Violation};
use crate::engine::Config;
use crate::lexicon::Lexicons;
use crate::textmodel::Document;

fn article(word: &str) -> &'static str {
    if word.starts_with(['a', 'e', 'i', 'o', 'u']) {
        "an"
    } else {
        "a"
    }
}

/// Stacked modifiers that read better reordered ("dog-walking man") or
/// spliced ("two rope parts"). Detection only.
pub fn check_r11(doc: &Document<'_>, lexicons: &Lexicons, _config: &Config) -> Vec<Violation> {
    let fw = &lexicons.function_words;
    let mut out = Vec::new();
    for sentence in &doc.sentences {
        // consecutive words separated by single spaces
        let mut words: Vec<Vec<usize>> = Vec::new();
        for i in sentence.token_range.clone() {
            let t = &doc.tokens[i];
            if t.is_word() {
                let joined = i >= 2 && doc.tokens[i - 1].text == " " && doc.tokens[i - 2].is_word() && !words.is_empty();
                if joined && words.last().unwrap().last() == Some(&(i - 2)) {
                    words.last_mut().unwrap().push(i);
                } else {
                    words.push(vec![i]);
                }
            }
        }
        for group in &words {
            let norm: Vec<String> = group.iter().map(|&i| doc.tokens[i].normalized()).collect();
            reorder(doc, group, &norm, fw, &mut out);
            splice(doc, group, &norm, fw, &mut out);
        }
    }
    out.sort_by_key(|v| v.span.start);
    out
}

fn reorder(
    doc: &Document<'_>,
    group: &[usize],
    norm: &[String],
    fw: &crate::lexicon::FunctionWordLists,
    out: &mut Vec<Violation>,
) {
    for k in 0..group.len().saturating_sub(1) {
        let parts: Vec<&str> = norm[k].split('-').collect();
        let [object, verb] = parts[..] else { continue };
        if verb.len() <= 4 || !verb.ends_with("ing") || object.is_empty() || !fw.is_noun(&norm[k + 1]) {
            continue;
        }
        let head = &norm[k + 1];
        let span = doc.span(doc.tokens[group[k]].span.start, doc.tokens[group[k + 1]].span.end);
        let phrase = &doc.text[span.range()];
        out.push(Violation::new(
            RuleCode::R11,
            span,
            format!("`{phrase}` stacks a verb before its noun; reorder as `{head} who was {verb} {} {object}`", article(object)),
        ));
    }
}

fn splice(
    doc: &Document<'_>,
    group: &[usize],
    norm: &[String],
    fw: &crate::lexicon::FunctionWordLists,
    out: &mut Vec<Violation>,
) {
    let mut k = 0;
    while k < group.len() {
        let cue = fw.number_cues.contains(norm[k].as_str());
        let nouns_from = if cue { k + 1 } else { k };
        let mut end = nouns_from;
        while end < group.len() && fw.is_noun(&norm[end]) && !norm[end].contains('-') {
            end += 1;
        }
        let nouns = end - nouns_from;
        if nouns >= 2 && end - k >= 3 {
            let span = doc.span(doc.tokens[group[k]].span.start, doc.tokens[group[end - 1]].span.end);
            let phrase = &doc.text[span.range()];
            let head = &norm[end - 1];
            let modifiers = norm[nouns_from..end - 1].join(" ");
            out.push(Violation::new(
                RuleCode::R11,
                span,
                format!("`{phrase}` stacks nouns; splice as `{head} of {} {modifiers}`", article(&modifiers)),
            ));
            k = end;
        } else {
            k += 1;
        }
    }
}
