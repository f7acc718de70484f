//! Read-only word tables and the primitives built on them.
//!
//! All tables load from UTF-8 TSV, one entry per line, with `#` comment lines
//! and blank lines ignored:
//!
//! | table      | line format              |
//! |------------|--------------------------|
//! | frequency  | `word<TAB>rank`          |
//! | synonyms   | `word<TAB>repl1\|repl2`  |
//! | slang      | `token<TAB>expansion`    |
//! | acronyms   | `ACRO<TAB>expansion`     |
//! | dictionary | `word`                   |
//! | gold       | `word<TAB>syllables`     |

mod function_words;
mod spell;
mod syllables;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

pub use function_words::FunctionWordLists;
pub use spell::{damerau_levenshtein, spell_suggest, MAX_DISTANCE};
pub(crate) use spell::confident_correction;
pub use syllables::syllables;

#[derive(Debug, thiserror::Error)]
pub enum LexiconError {
    #[error("line {0}: malformed entry")]
    MalformedLine(usize),
    #[error("line {line}: {reason}")]
    InvalidEntry { line: usize, reason: String },
    #[error("duplicate key `{0}`")]
    DuplicateKey(String),
    #[error("`{0}` contains no letters")]
    NotAWord(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LexiconKind {
    Frequency,
    Synonyms,
    Slang,
    Acronyms,
    Dictionary,
    SyllableGold,
}

impl LexiconKind {
    /// File name looked up inside a lexicon directory.
    pub fn file_name(self) -> &'static str {
        match self {
            LexiconKind::Frequency => "frequency.tsv",
            LexiconKind::Synonyms => "synonyms.tsv",
            LexiconKind::Slang => "slang.tsv",
            LexiconKind::Acronyms => "acronyms.tsv",
            LexiconKind::Dictionary => "dictionary.txt",
            LexiconKind::SyllableGold => "syllable_gold.tsv",
        }
    }
}

impl fmt::Display for LexiconKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LexiconKind::Frequency => "frequency",
            LexiconKind::Synonyms => "synonyms",
            LexiconKind::Slang => "slang",
            LexiconKind::Acronyms => "acronyms",
            LexiconKind::Dictionary => "dictionary",
            LexiconKind::SyllableGold => "syllable gold list",
        };
        f.write_str(name)
    }
}

/// Yields `(line_number, fields)` for each entry line.
fn table_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.trim().is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split('\t').collect()))
        }
    })
}

fn two_fields<'a>(line: usize, fields: &[&'a str]) -> Result<(&'a str, &'a str), LexiconError> {
    match fields {
        [k, v] if !k.trim().is_empty() && !v.trim().is_empty() => Ok((k.trim(), v.trim())),
        _ => Err(LexiconError::MalformedLine(line)),
    }
}

fn lower(s: &str) -> String {
    crate::textmodel::normalize_word(s)
}

fn read(path: &Path) -> Result<String, LexiconError> {
    std::fs::read_to_string(path).map_err(|source| LexiconError::Io { path: path.to_path_buf(), source })
}

/// Lowercase word -> rank (1 = most frequent).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FrequencyLexicon {
    ranks: HashMap<String, u32>,
}

impl FrequencyLexicon {
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut ranks = HashMap::new();
        for (line, fields) in table_lines(text) {
            let (word, rank) = two_fields(line, &fields)?;
            let rank: u32 = rank.parse().map_err(|_| LexiconError::MalformedLine(line))?;
            if rank == 0 {
                return Err(LexiconError::InvalidEntry { line, reason: "rank must be positive".into() });
            }
            let key = lower(word);
            if ranks.insert(key.clone(), rank).is_some() {
                return Err(LexiconError::DuplicateKey(key));
            }
        }
        Ok(FrequencyLexicon { ranks })
    }

    pub fn load(path: &Path) -> Result<Self, LexiconError> {
        Self::parse(&read(path)?)
    }

    /// Case-insensitive rank lookup.
    pub fn rank(&self, word: &str) -> Option<u32> {
        self.ranks.get(word).or_else(|| self.ranks.get(&lower(word))).copied()
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn to_tsv(&self) -> String {
        let mut rows: Vec<_> = self.ranks.iter().collect();
        rows.sort_by(|a, b| a.1.cmp(b.1).then_with(|| a.0.cmp(b.0)));
        rows.into_iter().map(|(w, r)| format!("{w}\t{r}\n")).collect()
    }
}

/// Lowercase complex word -> replacement phrases, simplest first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SynonymMap {
    entries: BTreeMap<String, Vec<String>>,
}

impl SynonymMap {
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut entries = BTreeMap::new();
        for (line, fields) in table_lines(text) {
            let (word, repls) = two_fields(line, &fields)?;
            let key = lower(word);
            let repls: Vec<String> = repls.split('|').map(|r| r.trim().to_string()).collect();
            if repls.iter().any(|r| r.is_empty()) {
                return Err(LexiconError::MalformedLine(line));
            }
            if repls.iter().any(|r| lower(r) == key) {
                return Err(LexiconError::InvalidEntry { line, reason: format!("`{key}` lists itself as a replacement") });
            }
            if entries.insert(key.clone(), repls).is_some() {
                return Err(LexiconError::DuplicateKey(key));
            }
        }
        Ok(SynonymMap { entries })
    }

    pub fn load(path: &Path) -> Result<Self, LexiconError> {
        Self::parse(&read(path)?)
    }

    pub fn get(&self, word: &str) -> Option<&[String]> {
        self.entries.get(&lower(word)).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[String])> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    pub fn to_tsv(&self) -> String {
        self.entries.iter().map(|(k, v)| format!("{k}\t{}\n", v.join("|"))).collect()
    }
}

/// Lowercase slang token -> plain expansion.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SlangMap {
    entries: BTreeMap<String, String>,
}

impl SlangMap {
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut entries = BTreeMap::new();
        for (line, fields) in table_lines(text) {
            let (token, expansion) = two_fields(line, &fields)?;
            let key = lower(token);
            if entries.insert(key.clone(), expansion.to_string()).is_some() {
                return Err(LexiconError::DuplicateKey(key));
            }
        }
        Ok(SlangMap { entries })
    }

    pub fn load(path: &Path) -> Result<Self, LexiconError> {
        Self::parse(&read(path)?)
    }

    pub fn get(&self, token: &str) -> Option<&str> {
        self.entries.get(&lower(token)).map(String::as_str)
    }

    pub fn contains(&self, token: &str) -> bool {
        self.get(token).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn to_tsv(&self) -> String {
        self.entries.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect()
    }
}

/// Uppercase acronym (2-8 letters) -> canonical expansion.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AcronymMap {
    entries: BTreeMap<String, String>,
}

pub(crate) fn is_acronym_shape(text: &str) -> bool {
    (2..=8).contains(&text.len()) && text.chars().all(|c| c.is_ascii_uppercase())
}

impl AcronymMap {
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut entries = BTreeMap::new();
        for (line, fields) in table_lines(text) {
            let (acro, expansion) = two_fields(line, &fields)?;
            let key = acro.to_uppercase();
            if !is_acronym_shape(&key) {
                return Err(LexiconError::InvalidEntry { line, reason: format!("`{acro}` is not 2-8 letters") });
            }
            if entries.insert(key.clone(), expansion.to_string()).is_some() {
                return Err(LexiconError::DuplicateKey(key));
            }
        }
        Ok(AcronymMap { entries })
    }

    pub fn load(path: &Path) -> Result<Self, LexiconError> {
        Self::parse(&read(path)?)
    }

    pub fn get(&self, acronym: &str) -> Option<&str> {
        self.entries.get(acronym).map(String::as_str)
    }

    pub fn contains(&self, acronym: &str) -> bool {
        self.entries.contains_key(acronym)
    }

    pub fn to_tsv(&self) -> String {
        self.entries.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect()
    }
}

/// Set of known lowercase words, bucketed by length for suggestion search.
#[derive(Debug, Clone, Default)]
pub struct SpellDictionary {
    words: HashSet<String>,
    by_len: Vec<Vec<String>>,
}

impl PartialEq for SpellDictionary {
    fn eq(&self, other: &Self) -> bool {
        self.words == other.words
    }
}

impl SpellDictionary {
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut words = HashSet::new();
        for (line, fields) in table_lines(text) {
            let [word] = fields[..] else {
                return Err(LexiconError::MalformedLine(line));
            };
            let word = lower(word.trim());
            if word.is_empty() || word.contains(char::is_whitespace) {
                return Err(LexiconError::MalformedLine(line));
            }
            if !words.insert(word.clone()) {
                return Err(LexiconError::DuplicateKey(word));
            }
        }
        if words.is_empty() {
            return Err(LexiconError::InvalidEntry { line: 0, reason: "dictionary is empty".into() });
        }
        let mut by_len: Vec<Vec<String>> = Vec::new();
        for w in &words {
            let n = w.chars().count();
            if by_len.len() <= n {
                by_len.resize_with(n + 1, Vec::new);
            }
            by_len[n].push(w.clone());
        }
        for bucket in &mut by_len {
            bucket.sort_unstable();
        }
        Ok(SpellDictionary { words, by_len })
    }

    pub fn load(path: &Path) -> Result<Self, LexiconError> {
        Self::parse(&read(path)?)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub(crate) fn words_with_len(&self, lens: RangeInclusive<usize>) -> impl Iterator<Item = &str> {
        lens.filter_map(|n| self.by_len.get(n))
            .flat_map(|bucket| bucket.iter().map(String::as_str))
    }

    pub fn to_tsv(&self) -> String {
        let sorted: BTreeSet<&String> = self.words.iter().collect();
        sorted.into_iter().map(|w| format!("{w}\n")).collect()
    }
}

/// Reference syllable counts used to measure the heuristic.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SyllableGold {
    pub entries: Vec<(String, usize)>,
}

impl SyllableGold {
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (line, fields) in table_lines(text) {
            let (word, count) = two_fields(line, &fields)?;
            let count: usize = count.parse().map_err(|_| LexiconError::MalformedLine(line))?;
            let key = lower(word);
            if !seen.insert(key.clone()) {
                return Err(LexiconError::DuplicateKey(key));
            }
            out.push((key, count));
        }
        Ok(SyllableGold { entries: out })
    }

    pub fn load(path: &Path) -> Result<Self, LexiconError> {
        Self::parse(&read(path)?)
    }

    /// Fraction of entries on which the heuristic agrees.
    pub fn agreement(&self) -> f64 {
        if self.entries.is_empty() {
            return 0.0;
        }
        let hits = self
            .entries
            .iter()
            .filter(|(w, n)| syllables(w).ok() == Some(*n))
            .count();
        hits as f64 / self.entries.len() as f64
    }

    pub fn to_tsv(&self) -> String {
        self.entries.iter().map(|(w, n)| format!("{w}\t{n}\n")).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LoadedLexicon {
    Frequency(FrequencyLexicon),
    Synonyms(SynonymMap),
    Slang(SlangMap),
    Acronyms(AcronymMap),
    Dictionary(SpellDictionary),
    SyllableGold(SyllableGold),
}

/// Parses one lexicon table of the given kind.
pub fn parse_lexicon(text: &str, kind: LexiconKind) -> Result<LoadedLexicon, LexiconError> {
    Ok(match kind {
        LexiconKind::Frequency => LoadedLexicon::Frequency(FrequencyLexicon::parse(text)?),
        LexiconKind::Synonyms => LoadedLexicon::Synonyms(SynonymMap::parse(text)?),
        LexiconKind::Slang => LoadedLexicon::Slang(SlangMap::parse(text)?),
        LexiconKind::Acronyms => LoadedLexicon::Acronyms(AcronymMap::parse(text)?),
        LexiconKind::Dictionary => LoadedLexicon::Dictionary(SpellDictionary::parse(text)?),
        LexiconKind::SyllableGold => LoadedLexicon::SyllableGold(SyllableGold::parse(text)?),
    })
}

pub fn load_lexicon(path: &Path, kind: LexiconKind) -> Result<LoadedLexicon, LexiconError> {
    parse_lexicon(&read(path)?, kind)
}

mod bundled {
    pub const FREQUENCY: &str = include_str!("../../lexicon/frequency.tsv");
    pub const SYNONYMS: &str = include_str!("../../lexicon/synonyms.tsv");
    pub const SLANG: &str = include_str!("../../lexicon/slang.tsv");
    pub const ACRONYMS: &str = include_str!("../../lexicon/acronyms.tsv");
    pub const DICTIONARY: &str = include_str!("../../lexicon/dictionary.txt");
    pub const SYLLABLE_GOLD: &str = include_str!("../../lexicon/syllable_gold.tsv");
}

/// The bundled syllable gold list.
pub fn bundled_syllable_gold() -> SyllableGold {
    SyllableGold::parse(bundled::SYLLABLE_GOLD).expect("bundled syllable gold list is well-formed")
}

/// Every table the rules consult. A missing table disables the rules that need it.
#[derive(Debug, Clone, Default)]
pub struct Lexicons {
    pub frequency: Option<FrequencyLexicon>,
    pub synonyms: Option<SynonymMap>,
    pub slang: Option<SlangMap>,
    pub acronyms: Option<AcronymMap>,
    pub dictionary: Option<SpellDictionary>,
    pub function_words: FunctionWordLists,
}

impl Lexicons {
    /// Tables compiled into the crate, parsed once per process.
    pub fn bundled() -> &'static Lexicons {
        static BUNDLED: OnceLock<Lexicons> = OnceLock::new();
        BUNDLED.get_or_init(|| Lexicons {
            frequency: Some(FrequencyLexicon::parse(bundled::FREQUENCY).expect("bundled frequency table")),
            synonyms: Some(SynonymMap::parse(bundled::SYNONYMS).expect("bundled synonym table")),
            slang: Some(SlangMap::parse(bundled::SLANG).expect("bundled slang table")),
            acronyms: Some(AcronymMap::parse(bundled::ACRONYMS).expect("bundled acronym table")),
            dictionary: Some(SpellDictionary::parse(bundled::DICTIONARY).expect("bundled dictionary")),
            function_words: FunctionWordLists::english(),
        })
    }

    /// Loads whichever standard table files exist in `dir`. Missing files leave
    /// the table absent; unreadable or malformed files are errors.
    pub fn from_dir(dir: &Path) -> Result<Lexicons, LexiconError> {
        if !dir.is_dir() {
            return Err(LexiconError::Io {
                path: dir.to_path_buf(),
                source: std::io::Error::new(std::io::ErrorKind::NotFound, "lexicon directory not found"),
            });
        }
        fn opt<T>(
            dir: &Path,
            kind: LexiconKind,
            load: impl Fn(&Path) -> Result<T, LexiconError>,
        ) -> Result<Option<T>, LexiconError> {
            let path = dir.join(kind.file_name());
            if path.exists() {
                load(&path).map(Some)
            } else {
                Ok(None)
            }
        }
        Ok(Lexicons {
            frequency: opt(dir, LexiconKind::Frequency, FrequencyLexicon::load)?,
            synonyms: opt(dir, LexiconKind::Synonyms, SynonymMap::load)?,
            slang: opt(dir, LexiconKind::Slang, SlangMap::load)?,
            acronyms: opt(dir, LexiconKind::Acronyms, AcronymMap::load)?,
            dictionary: opt(dir, LexiconKind::Dictionary, SpellDictionary::load)?,
            function_words: FunctionWordLists::english(),
        })
    }

    pub fn missing(&self) -> Vec<LexiconKind> {
        let mut out = Vec::new();
        if self.frequency.is_none() {
            out.push(LexiconKind::Frequency);
        }
        if self.synonyms.is_none() {
            out.push(LexiconKind::Synonyms);
        }
        if self.slang.is_none() {
            out.push(LexiconKind::Slang);
        }
        if self.acronyms.is_none() {
            out.push(LexiconKind::Acronyms);
        }
        if self.dictionary.is_none() {
            out.push(LexiconKind::Dictionary);
        }
        out
    }

    pub fn rank(&self, word: &str) -> Option<u32> {
        self.frequency.as_ref()?.rank(word)
    }

    /// Dictionary membership with possessives, contractions and hyphenated
    /// compounds resolved against their parts. False without a dictionary.
    pub fn is_known_word(&self, word: &str) -> bool {
        let Some(dict) = &self.dictionary else {
            return false;
        };
        known(dict, &lower(word))
    }

    pub fn is_slang(&self, word: &str) -> bool {
        self.slang.as_ref().is_some_and(|s| s.contains(word))
    }
}

fn known(dict: &SpellDictionary, word: &str) -> bool {
    if word.is_empty() {
        return false;
    }
    if dict.contains(word) {
        return true;
    }
    if word.contains('-') {
        return word.split('-').all(|part| known(dict, part));
    }
    for suffix in ["'s", "'", "'ll", "'ve", "'re", "'d", "'m", "n't"] {
        if let Some(base) = word.strip_suffix(suffix) {
            if !base.is_empty() && dict.contains(base) {
                return true;
            }
        }
    }
    false
}

/// Combined rank of a replacement phrase: the rank of its rarest content word.
/// `None` when any content word is unranked.
fn phrase_rank(lex: &Lexicons, phrase: &str) -> Option<u32> {
    let mut worst = 0;
    let mut any = false;
    for word in phrase.split_whitespace() {
        let w = lower(word);
        if lex.function_words.stopwords.contains(w.as_str()) {
            continue;
        }
        any = true;
        worst = worst.max(lex.rank(&w)?);
    }
    if any {
        Some(worst)
    } else {
        phrase.split_whitespace().map(|w| lex.rank(w)).try_fold(0, |acc, r| r.map(|r| acc.max(r)))
    }
}

fn phrase_syllables(phrase: &str) -> usize {
    phrase.split_whitespace().filter_map(|w| syllables(w).ok()).sum()
}

/// First synonym that is more common than `word`; among equally ranked
/// (including both unranked) a candidate with fewer syllables also counts.
pub fn simpler_alternative<'l>(word: &str, lexicons: &'l Lexicons) -> Option<&'l str> {
    let candidates = lexicons.synonyms.as_ref()?.get(word)?;
    let own_rank = lexicons.rank(word);
    let own_syllables = syllables(word).unwrap_or(1);
    candidates
        .iter()
        .find(|cand| {
            let rank = phrase_rank(lexicons, cand);
            match (rank, own_rank) {
                (Some(r), Some(o)) if r != o => r < o,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                _ => phrase_syllables(cand) < own_syllables,
            }
        })
        .map(String::as_str)
}
