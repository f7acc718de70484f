//! Span-addressed document model: tokens, sentences and paragraphs.
//!
//! Every structure here points back into the source text by byte offset, so
//! detectors can report exact locations and fixes can be expressed as span
//! replacements against the original string.

use std::ops::Range;

/// A byte range in the source text with the 1-based line and column of its start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    /// Column counted in characters, not bytes.
    pub col: usize,
}

impl Span {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn range(&self) -> Range<usize> {
        self.start..self.end
    }

    pub fn contains(&self, other: &Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Word,
    Number,
    Punctuation,
    Whitespace,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Casing {
    Lower,
    Capitalized,
    AllCaps,
    Mixed,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token<'a> {
    pub text: &'a str,
    pub span: Span,
    pub kind: TokenKind,
    pub casing: Casing,
}

impl Token<'_> {
    pub fn is_word(&self) -> bool {
        self.kind == TokenKind::Word
    }

    pub fn is_whitespace(&self) -> bool {
        self.kind == TokenKind::Whitespace
    }

    /// Word or number: the units counted toward sentence length.
    pub fn is_countable(&self) -> bool {
        matches!(self.kind, TokenKind::Word | TokenKind::Number)
    }

    pub fn is_punct(&self, ch: char) -> bool {
        self.kind == TokenKind::Punctuation && self.text.starts_with(ch) && self.text.len() == ch.len_utf8()
    }

    /// Lowercased text with typographic apostrophes folded to ASCII.
    pub fn normalized(&self) -> String {
        normalize_word(self.text)
    }
}

pub fn normalize_word(text: &str) -> String {
    text.chars()
        .map(|c| if c == '\u{2019}' || c == '\u{2018}' { '\'' } else { c })
        .flat_map(char::to_lowercase)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub span: Span,
    pub token_range: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document<'a> {
    pub text: &'a str,
    pub tokens: Vec<Token<'a>>,
    pub sentences: Vec<Sentence>,
    pub paragraphs: Vec<Span>,
    line_starts: Vec<usize>,
}

impl<'a> Document<'a> {
    pub fn new(text: &'a str) -> Self {
        let tokens = tokenize(text);
        let sentences = segment_tokens(text, &tokens);
        let paragraphs = paragraphs(text, &tokens);
        Document {
            text,
            tokens,
            sentences,
            paragraphs,
            line_starts: line_starts(text),
        }
    }

    /// Builds a span for an arbitrary byte range of this document.
    pub fn span(&self, start: usize, end: usize) -> Span {
        let (line, col) = position(self.text, &self.line_starts, start);
        Span { start, end, line, col }
    }

    pub fn sentence_tokens(&self, sentence: &Sentence) -> &[Token<'a>] {
        &self.tokens[sentence.token_range.clone()]
    }

    /// Index of the sentence containing the token, if any.
    pub fn sentence_of_token(&self, index: usize) -> Option<usize> {
        let pos = self
            .sentences
            .partition_point(|s| s.token_range.end <= index);
        self.sentences
            .get(pos)
            .filter(|s| s.token_range.contains(&index))
            .map(|_| pos)
    }

    pub fn paragraph_of(&self, offset: usize) -> Option<&Span> {
        self.paragraphs
            .iter()
            .find(|p| p.start <= offset && offset < p.end.max(p.start + 1))
    }

    /// Index of the first word token in the sentence, skipping list markers and
    /// leading punctuation.
    pub fn first_word(&self, sentence: &Sentence) -> Option<usize> {
        let skip = list_marker_len(self.sentence_tokens(sentence));
        sentence
            .token_range
            .clone()
            .skip(skip)
            .find(|&i| self.tokens[i].is_word())
    }

    /// True when the token opens its sentence or directly follows a sentence
    /// terminator within the same sentence (e.g. `"! tysm"`).
    pub fn starts_clause(&self, index: usize) -> bool {
        let Some(si) = self.sentence_of_token(index) else {
            return false;
        };
        if self.first_word(&self.sentences[si]) == Some(index) {
            return true;
        }
        let start = self.sentences[si].token_range.start;
        let mut i = index;
        while i > start {
            i -= 1;
            let t = &self.tokens[i];
            match t.kind {
                TokenKind::Whitespace => continue,
                TokenKind::Punctuation if is_opening(t.text) => continue,
                TokenKind::Punctuation => return is_terminator(t.text),
                _ => return false,
            }
        }
        false
    }
}

/// Splits text into a lossless token stream.
///
/// Words keep internal apostrophes and hyphens (`Don't`, `dog-walking`),
/// dotted single-letter abbreviations stay together (`U.S`, `e.g`), and digit
/// runs with internal `.` or `,` form one number (`0.4`, `1,000`).
pub fn tokenize(text: &str) -> Vec<Token<'_>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let line_starts = line_starts(text);
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (start, c) = chars[i];
        let mut j = i + 1;
        let kind = if c.is_whitespace() {
            while j < chars.len() && chars[j].1.is_whitespace() {
                j += 1;
            }
            TokenKind::Whitespace
        } else if c.is_alphanumeric() {
            j = scan_alnum(&chars, i);
            let has_letter = chars[i..j].iter().any(|&(_, ch)| ch.is_alphabetic());
            if has_letter {
                TokenKind::Word
            } else {
                TokenKind::Number
            }
        } else if is_punctuation(c) {
            TokenKind::Punctuation
        } else {
            TokenKind::Other
        };
        let end = chars.get(j).map_or(text.len(), |&(b, _)| b);
        let slice = &text[start..end];
        let (line, col) = position(text, &line_starts, start);
        tokens.push(Token {
            text: slice,
            span: Span { start, end, line, col },
            kind,
            casing: casing_of(slice, kind),
        });
        i = j;
    }
    tokens
}

fn is_joiner(c: char) -> bool {
    matches!(c, '\'' | '\u{2019}' | '-' | '\u{2010}' | '\u{2011}')
}

fn scan_alnum(chars: &[(usize, char)], start: usize) -> usize {
    let mut j = start;
    // length of the current alphanumeric segment, used for dotted abbreviations
    let mut segment_len = 0;
    let mut dotted = false;
    while j < chars.len() {
        let c = chars[j].1;
        if c.is_alphanumeric() {
            segment_len += 1;
            j += 1;
            continue;
        }
        let next = chars.get(j + 1).map(|&(_, n)| n);
        let prev = chars[j - 1].1;
        let Some(next) = next else { break };
        if is_joiner(c) && prev.is_alphanumeric() && next.is_alphanumeric() {
            segment_len = 0;
            dotted = false;
            j += 1;
        } else if matches!(c, '.' | ',') && prev.is_ascii_digit() && next.is_ascii_digit() {
            j += 1;
        } else if c == '.'
            && prev.is_alphabetic()
            && segment_len == 1
            && next.is_alphabetic()
            && !chars.get(j + 2).is_some_and(|&(_, n)| n.is_alphabetic())
            && (dotted || j - start == 1)
        {
            // U.S, e.g, i.e: single letters joined by dots
            dotted = true;
            segment_len = 0;
            j += 1;
        } else {
            break;
        }
    }
    j
}

fn is_punctuation(c: char) -> bool {
    c.is_ascii_punctuation()
        || matches!(
            c,
            '\u{2018}' | '\u{2019}' | '\u{201C}' | '\u{201D}' | '\u{2013}' | '\u{2014}' | '\u{2026}' | '\u{2022}'
                | '\u{00AB}' | '\u{00BB}' | '\u{00A1}' | '\u{00BF}'
        )
}

fn casing_of(text: &str, kind: TokenKind) -> Casing {
    if !matches!(kind, TokenKind::Word) {
        return Casing::NotApplicable;
    }
    let letters: Vec<char> = text.chars().filter(|c| c.is_alphabetic()).collect();
    if letters.iter().all(|c| c.is_lowercase()) {
        return Casing::Lower;
    }
    if letters.len() >= 2 && letters.iter().all(|c| c.is_uppercase()) {
        return Casing::AllCaps;
    }
    if letters[0].is_uppercase() && letters[1..].iter().all(|c| c.is_lowercase()) {
        return Casing::Capitalized;
    }
    Casing::Mixed
}

fn line_starts(text: &str) -> Vec<usize> {
    std::iter::once(0)
        .chain(text.match_indices('\n').map(|(i, _)| i + 1))
        .collect()
}

fn position(text: &str, line_starts: &[usize], offset: usize) -> (usize, usize) {
    let line = line_starts.partition_point(|&s| s <= offset);
    let line_start = line_starts[line - 1];
    let col = text[line_start..offset].chars().count() + 1;
    (line, col)
}

pub(crate) const ABBREVIATIONS: &[&str] = &[
    "Dr", "Mr", "Mrs", "Ms", "St", "vs", "etc", "e.g", "i.e", "U.S", "Jr", "Sr", "Prof",
];

pub(crate) fn is_terminator(text: &str) -> bool {
    matches!(text, "." | "!" | "?" | "\u{2026}")
}

fn is_closing(text: &str) -> bool {
    matches!(text, "\"" | "'" | ")" | "]" | "}" | "\u{201D}" | "\u{2019}" | "*" | "_" | "\u{00BB}")
}

fn is_opening(text: &str) -> bool {
    matches!(text, "\"" | "'" | "(" | "[" | "{" | "\u{201C}" | "\u{2018}" | "*" | "_" | "\u{00AB}")
}

fn is_paragraph_break(token: &Token<'_>) -> bool {
    token.is_whitespace() && token.text.matches('\n').count() >= 2
}

/// Number of leading tokens forming a list marker (`1.`, `2)`, `-`, `•`),
/// including the whitespace after it. Zero when the run has no marker.
pub fn list_marker_len(tokens: &[Token<'_>]) -> usize {
    match tokens {
        [n, p, ws, ..]
            if n.kind == TokenKind::Number
                && (p.is_punct('.') || p.is_punct(')'))
                && ws.is_whitespace() =>
        {
            3
        }
        [b, ws, ..] if (b.is_punct('-') || b.is_punct('\u{2022}')) && ws.is_whitespace() => 2,
        _ => 0,
    }
}

/// Whether tokens starting at `i` open a new sentence: optional opening
/// punctuation, then a capitalized word, or a list marker.
fn opens_sentence(tokens: &[Token<'_>], mut i: usize) -> bool {
    if list_marker_len(&tokens[i..]) > 0 {
        return true;
    }
    while i < tokens.len() && tokens[i].kind == TokenKind::Punctuation && is_opening(tokens[i].text) {
        i += 1;
    }
    tokens.get(i).is_some_and(|t| {
        t.is_word() && matches!(t.casing, Casing::Capitalized | Casing::AllCaps)
            || t.is_word() && t.casing == Casing::Mixed && t.text.starts_with(char::is_uppercase)
    })
}

/// Rule-based sentence segmentation over an existing token stream.
pub fn segment_sentences(doc: &Document<'_>) -> Vec<Sentence> {
    segment_tokens(doc.text, &doc.tokens)
}

fn segment_tokens(text: &str, tokens: &[Token<'_>]) -> Vec<Sentence> {
    let line_starts = line_starts(text);
    let mut sentences = Vec::new();
    let mut start: Option<usize> = None;
    let mut i = 0;
    let close = |sentences: &mut Vec<Sentence>, from: usize, to: usize| {
        let first = &tokens[from];
        let last = &tokens[to - 1];
        let (line, col) = position(text, &line_starts, first.span.start);
        sentences.push(Sentence {
            span: Span { start: first.span.start, end: last.span.end, line, col },
            token_range: from..to,
        });
    };
    while i < tokens.len() {
        let tok = &tokens[i];
        if tok.is_whitespace() {
            if is_paragraph_break(tok) {
                if let Some(s) = start.take() {
                    close(&mut sentences, s, i);
                }
            }
            i += 1;
            continue;
        }
        let s = *start.get_or_insert(i);
        if tok.kind == TokenKind::Punctuation && is_terminator(tok.text) {
            if tok.text == "." && suppresses_break(tokens, s, i) {
                i += 1;
                continue;
            }
            let mut end = i + 1;
            while end < tokens.len()
                && tokens[end].kind == TokenKind::Punctuation
                && (is_terminator(tokens[end].text) || is_closing(tokens[end].text))
            {
                end += 1;
            }
            let at_end = end == tokens.len();
            let breaks = at_end
                || (tokens[end].is_whitespace()
                    && (is_paragraph_break(&tokens[end])
                        || end + 1 == tokens.len()
                        || opens_sentence(tokens, end + 1)));
            if breaks {
                close(&mut sentences, s, end);
                start = None;
            }
            i = end;
            continue;
        }
        i += 1;
    }
    if let Some(s) = start {
        // trailing whitespace never belongs to a sentence
        let mut end = tokens.len();
        while end > s && tokens[end - 1].is_whitespace() {
            end -= 1;
        }
        close(&mut sentences, s, end);
    }
    sentences
}

fn suppresses_break(tokens: &[Token<'_>], sentence_start: usize, dot: usize) -> bool {
    if dot == 0 {
        return false;
    }
    let prev = &tokens[dot - 1];
    if prev.is_word() && ABBREVIATIONS.contains(&prev.text) {
        return true;
    }
    // list marker "1." opening the sentence
    prev.kind == TokenKind::Number && dot - 1 == sentence_start
}

/// Counts word and number tokens in the sentence, excluding a leading list marker.
pub fn word_count(doc: &Document<'_>, sentence: &Sentence) -> usize {
    let tokens = doc.sentence_tokens(sentence);
    let skip = list_marker_len(tokens);
    tokens[skip..].iter().filter(|t| t.is_countable()).count()
}

fn paragraphs(text: &str, tokens: &[Token<'_>]) -> Vec<Span> {
    let line_starts = line_starts(text);
    let mut out = Vec::new();
    let mut current: Option<(usize, usize)> = None;
    for tok in tokens {
        if tok.is_whitespace() {
            if is_paragraph_break(tok) {
                if let Some((s, e)) = current.take() {
                    out.push((s, e));
                }
            }
            continue;
        }
        match &mut current {
            Some((_, e)) => *e = tok.span.end,
            None => current = Some((tok.span.start, tok.span.end)),
        }
    }
    out.extend(current);
    out.into_iter()
        .map(|(start, end)| {
            let (line, col) = position(text, &line_starts, start);
            Span { start, end, line, col }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const RULE2: &str = "The brown dog was being walked by his owner towards a park, where he would play with other dogs for five hours.";

    fn kinds(text: &str) -> Vec<(&str, TokenKind, Casing)> {
        tokenize(text).into_iter().map(|t| (t.text, t.kind, t.casing)).collect()
    }

    #[test]
    fn empty_input() {
        assert!(tokenize("").is_empty());
        let doc = Document::new("");
        assert!(doc.sentences.is_empty());
        assert!(doc.paragraphs.is_empty());
    }

    #[test]
    fn contraction_is_one_word() {
        use Casing::*;
        use TokenKind::*;
        assert_eq!(
            kinds("Don't stop!"),
            vec![
                ("Don't", Word, Capitalized),
                (" ", Whitespace, NotApplicable),
                ("stop", Word, Lower),
                ("!", Punctuation, NotApplicable)
            ]
        );
    }

    #[test]
    fn hyphenated_compound_is_one_word() {
        let toks = tokenize("the dog-walking man");
        assert_eq!(toks[2].text, "dog-walking");
        assert_eq!(toks[2].kind, TokenKind::Word);
    }

    #[test]
    fn slash_splits_words() {
        let toks: Vec<_> = tokenize("and/or").into_iter().map(|t| t.text).collect();
        assert_eq!(toks, vec!["and", "/", "or"]);
    }

    #[test]
    fn numbers_with_separators() {
        let toks = tokenize("drive 0.4 miles or 1,000 feet");
        assert_eq!(toks[2].text, "0.4");
        assert_eq!(toks[2].kind, TokenKind::Number);
        assert_eq!(toks[8].text, "1,000");
        let toks = tokenize("reach I-94.");
        assert_eq!(toks[2].text, "I-94");
        assert_eq!(toks[2].kind, TokenKind::Word);
        assert_eq!(toks[3].text, ".");
    }

    #[test]
    fn casing_classes() {
        let c = |s: &str| tokenize(s)[0].casing;
        assert_eq!(c("NASA"), Casing::AllCaps);
        assert_eq!(c("I"), Casing::Capitalized);
        assert_eq!(c("iPhone"), Casing::Mixed);
        assert_eq!(c("gr8"), Casing::Lower);
        assert_eq!(c("42"), Casing::NotApplicable);
    }

    #[test]
    fn dotted_abbreviation() {
        let toks: Vec<_> = tokenize("the U.S. and e.g. this").into_iter().map(|t| t.text).collect();
        assert_eq!(toks, vec!["the", " ", "U.S", ".", " ", "and", " ", "e.g", ".", " ", "this"]);
    }

    #[test]
    fn spans_carry_line_and_column() {
        let toks = tokenize("ab\ncé d");
        let d = toks.iter().find(|t| t.text == "d").unwrap();
        assert_eq!((d.span.line, d.span.col), (2, 4));
    }

    #[test]
    fn two_plain_sentences() {
        let doc = Document::new("Hi. Bye.");
        assert_eq!(doc.sentences.len(), 2);
        assert_eq!(&doc.text[doc.sentences[1].span.range()], "Bye.");
    }

    #[test]
    fn long_example_sentence_is_one() {
        let doc = Document::new(RULE2);
        assert_eq!(doc.sentences.len(), 1);
        assert_eq!(word_count(&doc, &doc.sentences[0]), 22);
    }

    #[test]
    fn abbreviation_suppresses_break() {
        let doc = Document::new("Dr. Smith left.");
        assert_eq!(doc.sentences.len(), 1);
    }

    #[test]
    fn lowercase_after_terminator_does_not_break() {
        let doc = Document::new("u r great! tysm!");
        assert_eq!(doc.sentences.len(), 1);
    }

    #[test]
    fn closing_quote_stays_with_sentence() {
        let doc = Document::new("He said \"stop.\" Then he left.");
        assert_eq!(doc.sentences.len(), 2);
        assert_eq!(&doc.text[doc.sentences[0].span.range()], "He said \"stop.\"");
    }

    #[test]
    fn numbered_list_items_are_sentences() {
        let doc = Document::new("Here are the steps. 1. Turn right. 2. Drive on.");
        let texts: Vec<_> = doc.sentences.iter().map(|s| &doc.text[s.span.range()]).collect();
        assert_eq!(texts, vec!["Here are the steps.", "1. Turn right.", "2. Drive on."]);
        assert_eq!(word_count(&doc, &doc.sentences[1]), 2);
    }

    #[test]
    fn word_counts() {
        let doc = Document::new("Hi.");
        assert_eq!(word_count(&doc, &doc.sentences[0]), 1);
        let doc = Document::new("1 Broadway Street");
        assert_eq!(word_count(&doc, &doc.sentences[0]), 3);
    }

    #[test]
    fn paragraphs_split_on_blank_lines() {
        let doc = Document::new("One. Two\nlines.\n\n  \nThree.\n");
        assert_eq!(doc.paragraphs.len(), 2);
        assert_eq!(&doc.text[doc.paragraphs[0].range()], "One. Two\nlines.");
        assert_eq!(&doc.text[doc.paragraphs[1].range()], "Three.");
        // sentences never cross paragraphs
        let doc = Document::new("no terminator here\n\nNext one");
        assert_eq!(doc.sentences.len(), 2);
    }

    #[test]
    fn clause_start_after_exclamation() {
        let doc = Document::new("at the theater! tysm!");
        let idx = doc.tokens.iter().position(|t| t.text == "tysm").unwrap();
        assert!(doc.starts_clause(idx));
        assert!(doc.starts_clause(0));
        assert!(!doc.starts_clause(2));
    }
}
