//! Heuristic English syllable counter.
//!
//! Counts maximal vowel groups, then applies a handful of spelling rules for
//! silent letters and vowel pairs that are pronounced separately.

use super::LexiconError;

/// Syllable count for a word containing at least one letter.
///
/// Hyphenated compounds are counted part by part. Non-letters are ignored.
pub fn syllables(word: &str) -> Result<usize, LexiconError> {
    if !word.chars().any(char::is_alphabetic) {
        return Err(LexiconError::NotAWord(word.to_string()));
    }
    Ok(word
        .split(['-', '\u{2010}', '\u{2011}'])
        .filter(|part| part.chars().any(char::is_alphabetic))
        .map(|part| {
            let letters: Vec<char> = part
                .chars()
                .filter(|c| c.is_alphabetic())
                .flat_map(char::to_lowercase)
                .collect();
            count_part(&letters)
        })
        .sum())
}

fn is_plain_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

fn is_consonant(c: char) -> bool {
    c.is_alphabetic() && !is_plain_vowel(c) && c != 'y'
}

fn vowel_groups(w: &[char]) -> usize {
    // 'y' before a vowel acts as a consonant (yes, beyond, player)
    let is_vowel = |i: usize| match w[i] {
        'y' => !w.get(i + 1).copied().is_some_and(is_plain_vowel),
        c => is_plain_vowel(c),
    };
    let mut count = 0;
    let mut i = 0;
    while i < w.len() {
        if !is_vowel(i) {
            i += 1;
            continue;
        }
        let mut j = i;
        while j < w.len() && is_vowel(j) {
            j += 1;
        }
        count += 1;
        let prev = if i > 0 { Some(w[i - 1]) } else { None };
        for k in i..j - 1 {
            let (a, b) = (w[k], w[k + 1]);
            let hiatus = match (a, b) {
                ('i', 'a' | 'o') => {
                    k == i && prev.is_some_and(|p| !matches!(p, 'c' | 't' | 's' | 'g' | 'x'))
                }
                ('i', 'u') => true,
                ('u', 'a') => prev.is_some_and(|p| !matches!(p, 'q' | 'g')),
                ('e', 'o') => prev.is_some_and(|p| !matches!(p, 'g' | 'p')),
                _ => false,
            };
            if hiatus {
                count += 1;
            }
        }
        i = j;
    }
    count
}

fn ends_with(w: &[char], suffix: &str) -> bool {
    let s: Vec<char> = suffix.chars().collect();
    w.len() >= s.len() && w[w.len() - s.len()..] == s[..]
}

/// Consonant + "l" before the given suffix, as in "table", "tables", "sampled".
fn consonant_l_before(w: &[char], suffix_len: usize) -> bool {
    let n = w.len();
    n >= suffix_len + 2 && w[n - suffix_len - 1] == 'l' && is_consonant(w[n - suffix_len - 2])
}

fn silent_letters(w: &[char]) -> usize {
    let n = w.len();
    if ends_with(w, "e") && n >= 2 && is_consonant(w[n - 2]) && !consonant_l_before(w, 1) {
        return 1;
    }
    if ends_with(w, "es")
        && n >= 4
        && is_consonant(w[n - 3])
        && !matches!(w[n - 3], 's' | 'x' | 'z' | 'c' | 'g')
        && !(ends_with(w, "ches") || ends_with(w, "shes"))
        && !consonant_l_before(w, 2)
    {
        return 1;
    }
    if ends_with(w, "ed")
        && n >= 4
        && is_consonant(w[n - 3])
        && !matches!(w[n - 3], 't' | 'd')
        && !consonant_l_before(w, 2)
    {
        return 1;
    }
    if (ends_with(w, "que") || ends_with(w, "gue")) && n >= 4 {
        return 1;
    }
    if n >= 5 {
        for suffix in ["ly", "ment", "ments", "ful", "less", "ness"] {
            let s = suffix.len();
            if ends_with(w, suffix) && n > s + 1 && w[n - s - 1] == 'e' && !(is_plain_vowel(w[n - s - 2]) || w[n - s - 2] == 'y') {
                return 1;
            }
        }
    }
    0
}

fn count_part(w: &[char]) -> usize {
    let n = w.len();
    let mut count = vowel_groups(w) as isize;
    count -= silent_letters(w) as isize;
    if ends_with(w, "ically") {
        count -= 1;
    }
    let before = |len: usize| n > len && !is_plain_vowel(w[n - len - 1]) && w[n - len - 1] != 'y';
    if (ends_with(w, "ism") && before(3)) || (ends_with(w, "isms") && before(4)) {
        count += 1;
    }
    if (ends_with(w, "ier") && before(3)) || (ends_with(w, "iest") && before(4)) {
        count += 1;
    }
    count.max(1) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(w: &str) -> usize {
        syllables(w).unwrap()
    }

    #[test]
    fn minimum_one() {
        assert_eq!(s("a"), 1);
        assert_eq!(s("hmm"), 1);
    }

    #[test]
    fn silent_final_e() {
        assert_eq!(s("allocate"), 3);
        assert_eq!(s("make"), 1);
        assert_eq!(s("the"), 1);
    }

    #[test]
    fn consonant_le_keeps_its_syllable() {
        assert_eq!(s("table"), 2);
        assert_eq!(s("tables"), 2);
        assert_eq!(s("sampled"), 2);
    }

    #[test]
    fn inflection_endings() {
        assert_eq!(s("walked"), 1);
        assert_eq!(s("created"), 2);
        assert_eq!(s("whales"), 1);
        assert_eq!(s("boxes"), 2);
        assert_eq!(s("unique"), 2);
    }

    #[test]
    fn vowel_pairs_split() {
        assert_eq!(s("radiation"), 4);
        assert_eq!(s("via"), 2);
        assert_eq!(s("nation"), 2);
        assert_eq!(s("usual"), 3);
    }

    #[test]
    fn y_handling() {
        assert_eq!(s("yes"), 1);
        assert_eq!(s("beyond"), 2);
        assert_eq!(s("happy"), 2);
        assert_eq!(s("yesterday"), 3);
    }

    #[test]
    fn hyphenated_parts_are_summed() {
        assert_eq!(s("dog-walking"), 3);
        assert_eq!(s("home-made"), 2);
    }

    #[test]
    fn non_words_rejected() {
        assert!(matches!(syllables("110"), Err(LexiconError::NotAWord(_))));
        assert!(syllables("").is_err());
    }
}
