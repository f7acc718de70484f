//! Edit-distance spelling suggestions.

use super::{FrequencyLexicon, SpellDictionary};

/// Maximum edit distance considered by [`spell_suggest`].
pub const MAX_DISTANCE: usize = 2;

/// Damerau-Levenshtein distance (insert, delete, substitute and adjacent
/// transposition each cost 1), with unrestricted transpositions.
pub fn damerau_levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let (n, m) = (a.len(), b.len());
    let inf = n + m;
    // last row where each character was seen in `a`
    let mut last_row: Vec<(char, usize)> = Vec::new();
    let width = m + 2;
    let mut d = vec![0usize; (n + 2) * width];
    let idx = |i: usize, j: usize| i * width + j;
    d[idx(0, 0)] = inf;
    for i in 0..=n {
        d[idx(i + 1, 0)] = inf;
        d[idx(i + 1, 1)] = i;
    }
    for j in 0..=m {
        d[idx(0, j + 1)] = inf;
        d[idx(1, j + 1)] = j;
    }
    for i in 1..=n {
        let mut last_match_col = 0;
        for j in 1..=m {
            let i1 = last_row
                .iter()
                .find(|(c, _)| *c == b[j - 1])
                .map_or(0, |&(_, r)| r);
            let j1 = last_match_col;
            let cost = if a[i - 1] == b[j - 1] {
                last_match_col = j;
                0
            } else {
                1
            };
            d[idx(i + 1, j + 1)] = (d[idx(i, j)] + cost)
                .min(d[idx(i + 1, j)] + 1)
                .min(d[idx(i, j + 1)] + 1)
                .min(d[idx(i1, j1)] + (i - i1 - 1) + 1 + (j - j1 - 1));
        }
        match last_row.iter_mut().find(|(c, _)| *c == a[i - 1]) {
            Some(entry) => entry.1 = i,
            None => last_row.push((a[i - 1], i)),
        }
    }
    d[idx(n + 1, m + 1)]
}

/// All dictionary words within distance 2 of `word`, ordered by
/// (distance, frequency rank, lexicographic). Unranked words sort after ranked ones.
pub fn spell_suggest(
    dict: &SpellDictionary,
    freq: Option<&FrequencyLexicon>,
    word: &str,
) -> Vec<String> {
    suggest_scored(dict, freq, word)
        .into_iter()
        .map(|s| s.word)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Scored {
    pub word: String,
    pub distance: usize,
    pub rank: Option<u32>,
}

pub(crate) fn suggest_scored(
    dict: &SpellDictionary,
    freq: Option<&FrequencyLexicon>,
    word: &str,
) -> Vec<Scored> {
    let word = word.to_lowercase();
    let len = word.chars().count();
    let counts = letter_counts(&word);
    let mut out: Vec<Scored> = dict
        .words_with_len(len.saturating_sub(MAX_DISTANCE)..=len + MAX_DISTANCE)
        .filter(|cand| *cand != word && bag_distance(&counts, cand) <= MAX_DISTANCE)
        .filter_map(|cand| {
            let distance = damerau_levenshtein(&word, cand);
            (distance <= MAX_DISTANCE).then(|| Scored {
                word: cand.to_string(),
                distance,
                rank: freq.and_then(|f| f.rank(cand)),
            })
        })
        .collect();
    out.sort_by(|a, b| {
        a.distance
            .cmp(&b.distance)
            .then_with(|| a.rank.unwrap_or(u32::MAX).cmp(&b.rank.unwrap_or(u32::MAX)))
            .then_with(|| a.word.cmp(&b.word))
    });
    out
}

fn letter_counts(word: &str) -> [i16; 27] {
    let mut counts = [0i16; 27];
    for c in word.chars() {
        let slot = if c.is_ascii_lowercase() { (c as u8 - b'a') as usize } else { 26 };
        counts[slot] += 1;
    }
    counts
}

/// Lower bound on the edit distance from letter counts alone: every edit
/// changes the multiset difference by at most one, a transposition by none.
fn bag_distance(counts: &[i16; 27], cand: &str) -> usize {
    let other = letter_counts(cand);
    let (mut surplus, mut deficit) = (0usize, 0usize);
    for (a, b) in counts.iter().zip(other.iter()) {
        let d = a - b;
        if d > 0 {
            surplus += d as usize;
        } else {
            deficit += (-d) as usize;
        }
    }
    surplus.max(deficit)
}

/// The single best correction among candidates passing `accept`, when it is
/// not tied with another candidate on both distance and frequency rank.
pub(crate) fn confident_correction(
    dict: &SpellDictionary,
    freq: Option<&FrequencyLexicon>,
    word: &str,
    accept: impl Fn(&str) -> bool,
) -> Option<String> {
    let scored: Vec<Scored> = suggest_scored(dict, freq, word).into_iter().filter(|s| accept(&s.word)).collect();
    let best = scored.first()?;
    match scored.get(1) {
        Some(second) if second.distance == best.distance && (best.rank.is_none() || second.rank == best.rank) => None,
        _ => Some(best.word.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distances() {
        assert_eq!(damerau_levenshtein("teh", "the"), 1);
        assert_eq!(damerau_levenshtein("", "abc"), 3);
        assert_eq!(damerau_levenshtein("kitten", "sitting"), 3);
        // unrestricted transposition: ca -> ac -> abc
        assert_eq!(damerau_levenshtein("ca", "abc"), 2);
        assert_eq!(damerau_levenshtein("same", "same"), 0);
    }

    fn fixture() -> (SpellDictionary, FrequencyLexicon) {
        let dict = SpellDictionary::parse("the\ncat\nten\nhat\nthen\n").unwrap();
        let freq = FrequencyLexicon::parse("the\t1\nthen\t50\nten\t300\ncat\t1200\n").unwrap();
        (dict, freq)
    }

    #[test]
    fn teh_suggests_the_first() {
        let (dict, freq) = fixture();
        let got = spell_suggest(&dict, Some(&freq), "teh");
        assert_eq!(got[0], "the");
        assert!(got.contains(&"ten".to_string()));
    }

    #[test]
    fn nothing_close() {
        let (dict, freq) = fixture();
        assert!(spell_suggest(&dict, Some(&freq), "xqzvw").is_empty());
    }

    #[test]
    fn tie_on_unranked_candidates_is_not_confident() {
        let dict = SpellDictionary::parse("bat\ncat\n").unwrap();
        assert_eq!(confident_correction(&dict, None, "zat", |_| true), None);
        let dict = SpellDictionary::parse("bat\n").unwrap();
        assert_eq!(confident_correction(&dict, None, "zat", |_| true).as_deref(), Some("bat"));
    }
}
