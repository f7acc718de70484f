//! Readability statistics and the Flesch-Kincaid grade.

use serde::{Deserialize, Serialize};

use crate::engine::Config;
use crate::lexicon::{syllables, Lexicons};
use crate::textmodel::{list_marker_len, word_count, Document, TokenKind};

/// Words above this many syllables count as complex.
pub const COMPLEX_SYLLABLES: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metrics {
    pub words: usize,
    pub sentences: usize,
    pub avg_sentence_words: f64,
    pub avg_syllables_per_word: f64,
    pub pct_complex_words: f64,
    /// Absent when no frequency table is loaded.
    pub pct_common_words: Option<f64>,
    pub grade_level: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricsError {
    #[error("document has no words")]
    EmptyDocument,
}

pub fn flesch_kincaid_grade(avg_sentence_words: f64, avg_syllables_per_word: f64) -> f64 {
    0.39 * avg_sentence_words + 11.8 * avg_syllables_per_word - 15.59
}

pub fn readability(doc: &Document<'_>, lexicons: &Lexicons, config: &Config) -> Result<Metrics, MetricsError> {
    let mut syllable_total = 0usize;
    let mut word_tokens = 0usize;
    let mut complex = 0usize;
    let mut common = 0usize;
    for s in &doc.sentences {
        let tokens = doc.sentence_tokens(s);
        for t in &tokens[list_marker_len(tokens)..] {
            if t.kind != TokenKind::Word {
                continue;
            }
            let n = syllables(t.text).unwrap_or(1);
            word_tokens += 1;
            syllable_total += n;
            if n > COMPLEX_SYLLABLES {
                complex += 1;
            }
            if lexicons.rank(t.text).is_some_and(|r| r <= config.common_rank_cutoff) {
                common += 1;
            }
        }
    }
    if word_tokens == 0 {
        return Err(MetricsError::EmptyDocument);
    }
    let words: usize = doc.sentences.iter().map(|s| word_count(doc, s)).sum();
    let sentences = doc.sentences.len();
    let avg_sentence_words = words as f64 / sentences as f64;
    let avg_syllables_per_word = syllable_total as f64 / word_tokens as f64;
    Ok(Metrics {
        words,
        sentences,
        avg_sentence_words,
        avg_syllables_per_word,
        pct_complex_words: complex as f64 / word_tokens as f64,
        pct_common_words: lexicons.frequency.as_ref().map(|_| common as f64 / word_tokens as f64),
        grade_level: flesch_kincaid_grade(avg_sentence_words, avg_syllables_per_word),
    })
}
