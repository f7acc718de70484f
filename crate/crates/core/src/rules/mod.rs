//! Detectors for the plain-language rules R01..R11.
//!
//! Each detector is a pure function of the document, the lexicons and the
//! config. Fixes are lists of [`Edit`]s against the document text.

mod r01_complex_words;
mod r02_long_sentences;
mod r03_acronyms;
mod r04_passive;
mod r05_spelling;
mod r06_proper_nouns;
mod r07_all_caps;
mod r08_slang;
mod r09_lists;
mod r10_double_negatives;
mod r11_compounds;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::Config;
use crate::lexicon::{is_acronym_shape, LexiconKind, Lexicons};
use crate::textmodel::{Casing, Document, Span};

pub use r01_complex_words::check_r01;
pub use r02_long_sentences::check_r02;
pub use r03_acronyms::check_r03;
pub use r04_passive::check_r04;
pub use r05_spelling::check_r05;
pub use r06_proper_nouns::check_r06;
pub use r07_all_caps::check_r07;
pub use r08_slang::check_r08;
pub use r09_lists::check_r09;
pub use r10_double_negatives::check_r10;
pub use r11_compounds::check_r11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum RuleCode {
    R01,
    R02,
    R03,
    R04,
    R05,
    R06,
    R07,
    R08,
    R09,
    R10,
    R11,
}

impl RuleCode {
    pub const ALL: [RuleCode; 11] = [
        RuleCode::R01,
        RuleCode::R02,
        RuleCode::R03,
        RuleCode::R04,
        RuleCode::R05,
        RuleCode::R06,
        RuleCode::R07,
        RuleCode::R08,
        RuleCode::R09,
        RuleCode::R10,
        RuleCode::R11,
    ];

    /// Order in which the fix engine favours conflicting edits. Detection-only
    /// rules are absent.
    pub const FIX_PRIORITY: [RuleCode; 9] = [
        RuleCode::R05,
        RuleCode::R08,
        RuleCode::R01,
        RuleCode::R03,
        RuleCode::R07,
        RuleCode::R04,
        RuleCode::R02,
        RuleCode::R09,
        RuleCode::R10,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleCode::R01 => "R01",
            RuleCode::R02 => "R02",
            RuleCode::R03 => "R03",
            RuleCode::R04 => "R04",
            RuleCode::R05 => "R05",
            RuleCode::R06 => "R06",
            RuleCode::R07 => "R07",
            RuleCode::R08 => "R08",
            RuleCode::R09 => "R09",
            RuleCode::R10 => "R10",
            RuleCode::R11 => "R11",
        }
    }

    pub fn fix_priority(self) -> Option<usize> {
        Self::FIX_PRIORITY.iter().position(|&c| c == self)
    }

    /// Tables without which the rule cannot run at all.
    pub fn required_tables(self) -> &'static [LexiconKind] {
        match self {
            RuleCode::R01 => &[LexiconKind::Frequency],
            RuleCode::R03 | RuleCode::R05 | RuleCode::R06 | RuleCode::R07 => &[LexiconKind::Dictionary],
            RuleCode::R08 => &[LexiconKind::Slang],
            _ => &[],
        }
    }

    /// Tables the rule's fixes draw on; without them the rule is flag-only.
    pub fn fix_tables(self) -> &'static [LexiconKind] {
        match self {
            RuleCode::R01 => &[LexiconKind::Synonyms],
            RuleCode::R03 => &[LexiconKind::Acronyms],
            _ => &[],
        }
    }

    pub fn check(self, doc: &Document<'_>, lexicons: &Lexicons, config: &Config) -> Vec<Violation> {
        match self {
            RuleCode::R01 => check_r01(doc, lexicons, config),
            RuleCode::R02 => check_r02(doc, lexicons, config),
            RuleCode::R03 => check_r03(doc, lexicons, config),
            RuleCode::R04 => check_r04(doc, lexicons, config),
            RuleCode::R05 => check_r05(doc, lexicons, config),
            RuleCode::R06 => check_r06(doc, lexicons, config),
            RuleCode::R07 => check_r07(doc, lexicons, config),
            RuleCode::R08 => check_r08(doc, lexicons, config),
            RuleCode::R09 => check_r09(doc, lexicons, config),
            RuleCode::R10 => check_r10(doc, lexicons, config),
            RuleCode::R11 => check_r11(doc, lexicons, config),
        }
    }
}

impl fmt::Display for RuleCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown rule code `{0}`")]
pub struct UnknownRule(pub String);

impl FromStr for RuleCode {
    type Err = UnknownRule;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase();
        RuleCode::ALL
            .into_iter()
            .find(|c| c.as_str() == upper)
            .ok_or_else(|| UnknownRule(s.to_string()))
    }
}

impl TryFrom<String> for RuleCode {
    type Error = UnknownRule;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<RuleCode> for String {
    fn from(code: RuleCode) -> String {
        code.as_str().to_string()
    }
}

/// Replace the bytes under `span` with `replacement`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edit {
    pub span: Span,
    pub replacement: String,
}

impl Edit {
    pub fn new(span: Span, replacement: impl Into<String>) -> Self {
        Edit { span, replacement: replacement.into() }
    }

    /// Overlap test used for conflict resolution. An insertion that touches
    /// another edit counts as overlapping, since their relative order would
    /// otherwise be ambiguous.
    pub fn conflicts_with(&self, other: &Edit) -> bool {
        let (a, b) = (&self.span, &other.span);
        if a.is_empty() || b.is_empty() {
            a.start <= b.end && b.start <= a.end
        } else {
            a.start < b.end && b.start < a.end
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule_code: RuleCode,
    pub span: Span,
    pub message: String,
    pub fix: Option<Vec<Edit>>,
}

impl Violation {
    pub fn new(rule_code: RuleCode, span: Span, message: impl Into<String>) -> Self {
        Violation { rule_code, span, message: message.into(), fix: None }
    }

    pub fn with_fix(mut self, edits: Vec<Edit>) -> Self {
        self.fix = Some(edits);
        self
    }

    pub fn fixable(&self) -> bool {
        self.fix.as_ref().is_some_and(|f| !f.is_empty())
    }

    /// The text covered by the violation and its edits, as it would read once
    /// the fix is applied.
    pub fn suggestion(&self, text: &str) -> Option<String> {
        let edits = self.fix.as_ref()?;
        let start = edits.iter().map(|e| e.span.start).min()?.min(self.span.start);
        let end = edits.iter().map(|e| e.span.end).max()?.max(self.span.end);
        let mut out = String::new();
        let mut pos = start;
        for e in edits {
            out.push_str(&text[pos..e.span.start]);
            out.push_str(&e.replacement);
            pos = e.span.end;
        }
        out.push_str(&text[pos..end]);
        Some(out)
    }
}

/// Applies non-overlapping edits to `text`, back to front.
pub fn apply_edits(text: &str, edits: &[Edit]) -> String {
    let mut sorted: Vec<&Edit> = edits.iter().collect();
    sorted.sort_by_key(|e| (e.span.start, e.span.end));
    let mut out = text.to_string();
    for e in sorted.into_iter().rev() {
        out.replace_range(e.span.range(), &e.replacement);
    }
    out
}

pub(crate) fn capitalize(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

pub(crate) fn lowercase_first(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_lowercase().chain(chars).collect(),
        None => String::new(),
    }
}

pub(crate) fn starts_upper(s: &str) -> bool {
    s.chars().next().is_some_and(char::is_uppercase)
}

/// Capitalized (or mixed-case starting upper) word that does not open a clause.
pub(crate) fn is_mid_sentence_capital(doc: &Document<'_>, index: usize) -> bool {
    let t = &doc.tokens[index];
    t.is_word()
        && matches!(t.casing, Casing::Capitalized | Casing::Mixed)
        && starts_upper(t.text)
        && !doc.starts_clause(index)
}

/// Allcaps 2-8 letter token that is an acronym for R03: a known acronym, or
/// not an ordinary word or slang.
pub(crate) fn is_acronym(text: &str, lexicons: &Lexicons) -> bool {
    if !is_acronym_shape(text) {
        return false;
    }
    if lexicons.acronyms.as_ref().is_some_and(|a| a.contains(text)) {
        return true;
    }
    lexicons.dictionary.is_some() && !lexicons.is_known_word(text) && !lexicons.is_slang(text)
}

/// Index of the previous non-whitespace token before `i`, bounded by `start`.
pub(crate) fn prev_solid(doc: &Document<'_>, i: usize, start: usize) -> Option<usize> {
    (start..i).rev().find(|&j| !doc.tokens[j].is_whitespace())
}
