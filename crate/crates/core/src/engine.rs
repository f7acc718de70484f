//! Runs the detectors, resolves conflicting fixes and iterates to a fixpoint.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::lexicon::Lexicons;
use crate::rules::{apply_edits, Edit, RuleCode, Violation};
use crate::textmodel::Document;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub enabled_rules: BTreeSet<RuleCode>,
    pub max_sentence_words: usize,
    /// Words with more syllables than this are candidates for R01.
    pub max_syllables: usize,
    pub common_rank_cutoff: u32,
    pub emphasis_open: String,
    pub emphasis_close: String,
    pub max_fix_passes: usize,
    pub min_list_steps: usize,
    pub min_contrast_ratio: f64,
    pub lexicon_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            enabled_rules: RuleCode::ALL.into_iter().collect(),
            max_sentence_words: 10,
            max_syllables: 2,
            common_rank_cutoff: 5000,
            emphasis_open: "**".into(),
            emphasis_close: "**".into(),
            max_fix_passes: 10,
            min_list_steps: 3,
            min_contrast_ratio: 4.5,
            lexicon_dir: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("config: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("config: {field} must be at least {min}")]
    TooSmall { field: &'static str, min: usize },
    #[error("config: min_contrast_ratio must be between 1 and 21")]
    ContrastRange,
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Config {
    /// Strict JSON parse: unknown keys and unknown rule codes are errors.
    pub fn from_json(text: &str) -> Result<Config, ConfigError> {
        let config: Config = serde_json::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.to_path_buf(), source })?;
        let mut config = Self::from_json(&text)?;
        // a relative lexicon_dir is relative to the config file
        if let (Some(dir), Some(parent)) = (&config.lexicon_dir, path.parent()) {
            if dir.is_relative() {
                config.lexicon_dir = Some(parent.join(dir));
            }
        }
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for (field, value) in [
            ("max_sentence_words", self.max_sentence_words),
            ("max_fix_passes", self.max_fix_passes),
            ("max_syllables", self.max_syllables),
            ("min_list_steps", self.min_list_steps),
        ] {
            if value < 1 {
                return Err(ConfigError::TooSmall { field, min: 1 });
            }
        }
        if !(1.0..=21.0).contains(&self.min_contrast_ratio) {
            return Err(ConfigError::ContrastRange);
        }
        Ok(())
    }

    pub fn with_rules(mut self, rules: impl IntoIterator<Item = RuleCode>) -> Config {
        self.enabled_rules = rules.into_iter().collect();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct LintResult {
    pub violations: Vec<Violation>,
    pub counts: BTreeMap<RuleCode, usize>,
    pub diagnostics: Vec<String>,
}

impl LintResult {
    pub fn fixable_count(&self) -> usize {
        self.violations.iter().filter(|v| v.fixable()).count()
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Rules that can run with the loaded tables, plus diagnostics for the rest.
fn active_rules(config: &Config, lexicons: &Lexicons) -> (Vec<RuleCode>, Vec<String>) {
    let missing = lexicons.missing();
    let mut active = Vec::new();
    let mut diagnostics = Vec::new();
    let disabled: Vec<&str> = RuleCode::ALL
        .iter()
        .filter(|c| !config.enabled_rules.contains(c))
        .map(|c| c.as_str())
        .collect();
    if !disabled.is_empty() {
        diagnostics.push(format!("rules disabled by configuration: {}", disabled.join(", ")));
    }
    for &code in &config.enabled_rules {
        if let Some(kind) = code.required_tables().iter().find(|k| missing.contains(k)) {
            diagnostics.push(format!("{code} disabled: {kind} table not loaded"));
            continue;
        }
        if let Some(kind) = code.fix_tables().iter().find(|k| missing.contains(k)) {
            diagnostics.push(format!("{code} fixes unavailable: {kind} table not loaded"));
        }
        active.push(code);
    }
    (active, diagnostics)
}

pub fn lint(doc: &Document<'_>, config: &Config, lexicons: &Lexicons) -> LintResult {
    let (active, diagnostics) = active_rules(config, lexicons);
    let mut violations: Vec<Violation> = active.iter().flat_map(|code| code.check(doc, lexicons, config)).collect();
    violations.sort_by(|a, b| {
        (a.span.start, a.rule_code, a.span.end, &a.message).cmp(&(b.span.start, b.rule_code, b.span.end, &b.message))
    });
    let mut counts = BTreeMap::new();
    for v in &violations {
        *counts.entry(v.rule_code).or_insert(0) += 1;
    }
    LintResult { violations, counts, diagnostics }
}

/// One edit the fixer applied, with the span it replaced in that pass's text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppliedEdit {
    pub pass: usize,
    pub rule_code: RuleCode,
    pub edit: Edit,
    pub original: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixOutcome {
    pub text: String,
    pub applied: Vec<AppliedEdit>,
    pub passes: usize,
    pub residual: LintResult,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FixError {
    #[error("fixable violations remain after {} passes", .0.passes)]
    PassLimitExceeded(Box<FixOutcome>),
}

impl FixError {
    pub fn outcome(&self) -> &FixOutcome {
        match self {
            FixError::PassLimitExceeded(o) => o,
        }
    }
}

/// Picks a conflict-free set of fixes for one pass: higher-priority rules
/// first, then leftmost. A violation's edits are taken together or not at all.
pub fn select_edits(violations: &[Violation]) -> Vec<(RuleCode, Edit)> {
    let mut candidates: Vec<&Violation> = violations
        .iter()
        .filter(|v| v.fixable() && v.rule_code.fix_priority().is_some())
        .collect();
    candidates.sort_by_key(|v| (v.rule_code.fix_priority(), v.span.start, v.span.end));
    let mut accepted: Vec<(RuleCode, Edit)> = Vec::new();
    for v in candidates {
        let edits = v.fix.as_deref().unwrap_or_default();
        let clash = edits
            .iter()
            .any(|e| accepted.iter().any(|(_, a)| a.conflicts_with(e)));
        if !clash {
            accepted.extend(edits.iter().map(|e| (v.rule_code, e.clone())));
        }
    }
    accepted.sort_by_key(|(_, e)| (e.span.start, e.span.end));
    accepted
}

pub fn fix(doc: &Document<'_>, config: &Config, lexicons: &Lexicons) -> Result<FixOutcome, FixError> {
    let mut text = doc.text.to_string();
    let mut applied = Vec::new();
    let mut passes = 0;
    loop {
        let current = Document::new(&text);
        let result = lint(&current, config, lexicons);
        let selected = select_edits(&result.violations);
        if selected.is_empty() {
            return Ok(FixOutcome { text, applied, passes, residual: result });
        }
        if passes == config.max_fix_passes {
            return Err(FixError::PassLimitExceeded(Box::new(FixOutcome { text, applied, passes, residual: result })));
        }
        passes += 1;
        let edits: Vec<Edit> = selected.iter().map(|(_, e)| e.clone()).collect();
        let next = apply_edits(&text, &edits);
        for (rule_code, edit) in selected {
            let original = text[edit.span.range()].to_string();
            applied.push(AppliedEdit { pass: passes, rule_code, edit, original });
        }
        if next == text {
            // edits that change nothing cannot make progress
            let residual = lint(&Document::new(&next), config, lexicons);
            return Err(FixError::PassLimitExceeded(Box::new(FixOutcome { text, applied, passes, residual })));
        }
        text = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lex() -> &'static Lexicons {
        Lexicons::bundled()
    }

    #[test]
    fn empty_document_is_clean() {
        let r = lint(&Document::new(""), &Config::default(), lex());
        assert!(r.violations.is_empty());
        assert!(r.diagnostics.is_empty());
    }

    #[test]
    fn only_r02_on_long_example() {
        let text = "The brown dog was being walked by his owner towards a park, where he would play with other dogs for five hours.";
        let config = Config::default().with_rules([RuleCode::R02]);
        let r = lint(&Document::new(text), &config, lex());
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].rule_code, RuleCode::R02);
    }

    #[test]
    fn slang_sentence_has_no_spelling_hits() {
        let text = "u r so gr8 for buying us tix and fud at the theater! tysm!";
        let r = lint(&Document::new(text), &Config::default(), lex());
        assert_eq!(r.counts.get(&RuleCode::R08), Some(&6));
        assert_eq!(r.counts.get(&RuleCode::R05), None);
    }

    #[test]
    fn teh_fixes_in_one_pass() {
        let out = fix(&Document::new("teh"), &Config::default(), lex()).unwrap();
        assert_eq!(out.text, "the");
        assert_eq!(out.passes, 1);
        assert!(out.residual.violations.is_empty());
    }

    #[test]
    fn clean_text_is_untouched() {
        let out = fix(&Document::new("The cat sat."), &Config::default(), lex()).unwrap();
        assert_eq!(out.text, "The cat sat.");
        assert!(out.applied.is_empty());
        assert_eq!(out.passes, 0);
    }

    #[test]
    fn slang_fix_end_to_end() {
        let text = "u r so gr8 for buying us tix and fud at the theater! tysm!";
        let out = fix(&Document::new(text), &Config::default(), lex()).unwrap();
        assert_eq!(out.text, "You are so great for buying us tickets and food at the theater! Thank you so much!");
        assert!(out.residual.violations.iter().all(|v| v.rule_code != RuleCode::R08));
    }

    #[test]
    fn pass_cap_is_reported() {
        let config = Config { max_fix_passes: 1, ..Config::default() };
        // R07 lowercases, then R01 has a new word to simplify
        let err = fix(&Document::new("We ALLOCATE FUNDS."), &config, lex()).unwrap_err();
        assert_eq!(err.outcome().passes, 1);
        assert!(err.outcome().residual.fixable_count() > 0);
    }

    #[test]
    fn strict_config() {
        assert!(Config::from_json(r#"{"max_sentence_words": 12}"#).is_ok());
        assert!(Config::from_json(r#"{"max_sentence_wrds": 12}"#).is_err());
        assert!(Config::from_json(r#"{"enabled_rules": ["R01", "R99"]}"#).is_err());
        assert!(Config::from_json(r#"{"max_fix_passes": 0}"#).is_err());
    }

    #[test]
    fn missing_tables_are_diagnosed() {
        let lexicons = Lexicons { function_words: lex().function_words.clone(), ..Lexicons::default() };
        let r = lint(&Document::new("teh"), &Config::default(), &lexicons);
        assert!(r.violations.is_empty());
        assert!(r.diagnostics.iter().any(|d| d.starts_with("R05 disabled")));
    }
}
