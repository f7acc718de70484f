//! Text, JSON and unified-diff renderings of lint, score and audit results.

use serde::{Deserialize, Serialize};

use crate::deck::DeckViolation;
use crate::engine::LintResult;
use crate::metrics::Metrics;

pub const SCHEMA_VERSION: &str = "1";
pub const STDIN_NAME: &str = "<stdin>";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema_version: String,
    pub file: String,
    pub violations: Vec<ReportViolation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metrics: Option<Metrics>,
    pub diagnostics: Vec<String>,
}

/// One finding. Prose findings carry line/col and byte offsets; deck findings
/// carry a slide index and element id instead.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportViolation {
    pub code: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub col: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub end: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slide: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element_id: Option<String>,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suggestion: Option<String>,
    pub fixable: bool,
}

impl Report {
    pub fn new(file: impl Into<String>) -> Report {
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            file: file.into(),
            violations: Vec::new(),
            metrics: None,
            diagnostics: Vec::new(),
        }
    }

    /// `text` is the linted source, used to render fix suggestions.
    pub fn from_lint(file: impl Into<String>, text: &str, result: &LintResult) -> Report {
        let mut report = Report::new(file);
        report.violations = result
            .violations
            .iter()
            .map(|v| ReportViolation {
                code: v.rule_code.to_string(),
                line: Some(v.span.line),
                col: Some(v.span.col),
                start: Some(v.span.start),
                end: Some(v.span.end),
                slide: None,
                element_id: None,
                message: v.message.clone(),
                suggestion: v.suggestion(text),
                fixable: v.fixable(),
            })
            .collect();
        report.diagnostics = result.diagnostics.clone();
        report
    }

    pub fn from_deck(file: impl Into<String>, violations: &[DeckViolation]) -> Report {
        let mut report = Report::new(file);
        report.violations = violations
            .iter()
            .map(|v| ReportViolation {
                code: v.check_code.to_string(),
                line: None,
                col: None,
                start: None,
                end: None,
                slide: Some(v.slide_index),
                element_id: v.element_id.clone(),
                message: v.message.clone(),
                suggestion: None,
                fixable: false,
            })
            .collect();
        report
    }

    pub fn with_metrics(mut self, metrics: Metrics) -> Report {
        self.metrics = Some(metrics);
        self
    }
}

/// One line per finding, then a summary line.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    for v in &report.violations {
        match (v.line, v.col, v.slide) {
            (Some(line), Some(col), _) => {
                out.push_str(&format!("{}:{line}:{col}: {} {}\n", report.file, v.code, v.message))
            }
            (_, _, Some(slide)) => out.push_str(&format!("{}: slide {slide}: {} {}\n", report.file, v.code, v.message)),
            _ => out.push_str(&format!("{}: {} {}\n", report.file, v.code, v.message)),
        }
    }
    let n = report.violations.len();
    out.push_str(&format!("{n} violation{}\n", if n == 1 { "" } else { "s" }));
    out
}

/// Readability figures as `name: value` lines.
pub fn render_metrics_text(file: &str, metrics: &Metrics) -> String {
    let pct = |x: f64| format!("{:.1}%", x * 100.0);
    let mut out = format!("{file}:\n");
    out.push_str(&format!("  words: {}\n", metrics.words));
    out.push_str(&format!("  sentences: {}\n", metrics.sentences));
    out.push_str(&format!("  avg sentence words: {:.2}\n", metrics.avg_sentence_words));
    out.push_str(&format!("  avg syllables per word: {:.2}\n", metrics.avg_syllables_per_word));
    out.push_str(&format!("  complex words: {}\n", pct(metrics.pct_complex_words)));
    match metrics.pct_common_words {
        Some(p) => out.push_str(&format!("  common words: {}\n", pct(p))),
        None => out.push_str("  common words: n/a\n"),
    }
    out.push_str(&format!("  grade level: {:.2}\n", metrics.grade_level));
    out
}

/// Canonical single-line JSON.
pub fn render_json(report: &Report) -> String {
    serde_json::to_string(report).expect("report serializes")
}

pub fn parse_json(text: &str) -> Result<Report, serde_json::Error> {
    serde_json::from_str(text)
}

/// Unified diff with three lines of context; empty when nothing changed.
pub fn render_diff(original: &str, fixed: &str, path: &str) -> String {
    if original == fixed {
        return String::new();
    }
    similar::TextDiff::from_lines(original, fixed)
        .unified_diff()
        .context_radius(3)
        .header(path, path)
        .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{lint, Config};
    use crate::lexicon::Lexicons;
    use crate::textmodel::Document;

    #[test]
    fn empty_report() {
        let r = Report::new(STDIN_NAME);
        assert_eq!(render_text(&r), "0 violations\n");
        assert_eq!(render_json(&r), r#"{"schema_version":"1","file":"<stdin>","violations":[],"diagnostics":[]}"#);
    }

    #[test]
    fn r02_line_format() {
        let text = "Hello.\n\nThe brown dog was being walked by his owner towards a park, where he would play with other dogs for five hours.";
        let config = Config::default().with_rules([crate::rules::RuleCode::R02]);
        let result = lint(&Document::new(text), &config, Lexicons::bundled());
        let mut r = Report::from_lint("doc.txt", text, &result);
        r.diagnostics.clear();
        assert_eq!(render_text(&r), "doc.txt:3:1: R02 sentence has 22 words (max 10)\n1 violation\n");
    }

    #[test]
    fn json_round_trips() {
        let text = "u r gr8. The cat sat.";
        let result = lint(&Document::new(text), &Config::default(), Lexicons::bundled());
        let doc = Document::new(text);
        let metrics = crate::metrics::readability(&doc, Lexicons::bundled(), &Config::default()).unwrap();
        let r = Report::from_lint("a.txt", text, &result).with_metrics(metrics);
        let json = render_json(&r);
        assert_eq!(render_json(&parse_json(&json).unwrap()), json);
        assert!(json.contains("\"metrics\":{\"words\":"));
    }

    #[test]
    fn diffs() {
        assert_eq!(render_diff("same\n", "same\n", "f.txt"), "");
        let d = render_diff("a\nteh\nc\n", "a\nthe\nc\n", "f.txt");
        assert!(d.starts_with("--- f.txt\n+++ f.txt\n"));
        assert_eq!(d.lines().filter(|l| l.starts_with('-') && !l.starts_with("---")).count(), 1);
        assert_eq!(d.lines().filter(|l| l.starts_with('+') && !l.starts_with("+++")).count(), 1);
        assert_eq!(d.lines().filter(|l| l.starts_with("@@ ")).count(), 1);
    }
}
