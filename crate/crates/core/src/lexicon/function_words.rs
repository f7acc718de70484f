//! Closed-class word lists consulted by the grammar-shaped rules.

use std::collections::{HashMap, HashSet};

const BE_FORMS: &[&str] = &["am", "is", "are", "was", "were", "be", "been", "being"];

const NEGATIVE_MARKERS: &[&str] = &[
    "not", "n't", "no", "never", "nobody", "nothing", "none", "nowhere", "neither", "nor", "no one",
    "cannot",
];

/// Irregular past participle -> simple past.
const IRREGULAR_PARTICIPLES: &[(&str, &str)] = &[
    ("arisen", "arose"), ("awoken", "awoke"), ("beaten", "beat"), ("become", "became"),
    ("begun", "began"), ("bent", "bent"), ("bitten", "bit"), ("blown", "blew"),
    ("broken", "broke"), ("brought", "brought"), ("built", "built"), ("bought", "bought"),
    ("caught", "caught"), ("chosen", "chose"), ("dealt", "dealt"), ("done", "did"),
    ("drawn", "drew"), ("driven", "drove"), ("drunk", "drank"), ("dug", "dug"),
    ("eaten", "ate"), ("fallen", "fell"), ("fed", "fed"), ("felt", "felt"),
    ("fought", "fought"), ("found", "found"), ("flown", "flew"), ("forbidden", "forbade"),
    ("forgiven", "forgave"), ("forgotten", "forgot"), ("frozen", "froze"), ("given", "gave"),
    ("gotten", "got"), ("grown", "grew"), ("heard", "heard"), ("held", "held"),
    ("hidden", "hid"), ("hung", "hung"), ("kept", "kept"), ("known", "knew"),
    ("laid", "laid"), ("led", "led"), ("lent", "lent"), ("lost", "lost"),
    ("made", "made"), ("meant", "meant"), ("met", "met"), ("paid", "paid"),
    ("ridden", "rode"), ("rung", "rang"), ("risen", "rose"), ("run", "ran"),
    ("said", "said"), ("seen", "saw"), ("sent", "sent"), ("shaken", "shook"),
    ("shot", "shot"), ("shown", "showed"), ("sold", "sold"), ("sought", "sought"),
    ("slain", "slew"), ("spent", "spent"), ("spoken", "spoke"), ("spun", "spun"),
    ("stolen", "stole"), ("struck", "struck"), ("stung", "stung"), ("sung", "sang"),
    ("sunk", "sank"), ("sworn", "swore"), ("swept", "swept"), ("swum", "swam"),
    ("taken", "took"), ("taught", "taught"), ("thought", "thought"), ("thrown", "threw"),
    ("told", "told"), ("torn", "tore"), ("understood", "understood"), ("woken", "woke"),
    ("won", "won"), ("worn", "wore"), ("written", "wrote"),
];

/// Common words ending in "-ed" that are not participles.
const NOT_PARTICIPLES: &[&str] = &[
    "bed", "bleed", "breed", "creed", "deed", "embed", "exceed", "feed", "fled", "freed",
    "greed", "hundred", "indeed", "kindred", "naked", "need", "proceed", "red", "sacred",
    "seed", "shed", "sled", "speed", "succeed", "wed", "weed", "wicked", "rugged", "ragged",
    "crooked", "jagged", "wretched",
];

const SEQUENCE_CUES: &[&str] = &[
    "turn", "drive", "go", "take", "walk", "head", "continue", "follow", "cross", "stop",
    "exit", "enter", "park", "open", "close", "click", "select", "press", "add", "mix",
    "pour", "put", "place", "remove", "fill", "check", "then", "next", "first", "second",
    "third", "fourth", "fifth", "finally", "lastly", "after", "afterwards", "afterward",
    "before", "once",
];

const NEGATIVE_TO_POSITIVE: &[(&str, &str)] = &[
    ("nothing", "anything"),
    ("nobody", "anybody"),
    ("never", "ever"),
    ("no", "any"),
    ("nowhere", "anywhere"),
    ("none", "any"),
    ("no one", "anyone"),
];

const NOUNS: &[&str] = &[
    "air", "animal", "apple", "area", "arm", "baby", "back", "bag", "ball", "bank", "bed",
    "bike", "bird", "boat", "body", "bone", "book", "bottle", "box", "boy", "brain", "bread",
    "bridge", "brother", "bus", "cake", "car", "card", "case", "cat", "chair", "child",
    "city", "class", "coat", "coffee", "computer", "cup", "data", "day", "desk", "dog",
    "door", "dress", "egg", "engine", "eye", "face", "family", "farm", "father", "field",
    "fire", "fish", "floor", "flower", "food", "foot", "friend", "fruit", "game", "garden",
    "girl", "glass", "hair", "hand", "hat", "head", "heart", "home", "horse", "hospital",
    "hotel", "hour", "house", "ice", "island", "job", "key", "kitchen", "knife", "lake",
    "leg", "letter", "light", "lunch", "man", "map", "market", "meal", "meat", "milk",
    "money", "month", "morning", "mother", "mountain", "mouth", "music", "name", "neck",
    "night", "nose", "office", "oil", "owner", "page", "paper", "park", "part", "party",
    "pen", "people", "person", "phone", "picture", "plant", "plate", "pocket", "price",
    "river", "road", "rock", "roof", "room", "rope", "school", "sea", "seat", "shirt",
    "shoe", "shop", "side", "sister", "skin", "sky", "snow", "sock", "son", "song",
    "station", "stone", "store", "street", "student", "sugar", "sun", "table", "tax",
    "tea", "teacher", "team", "test", "ticket", "time", "tooth", "town", "toy", "train",
    "tree", "truck", "wall", "watch", "water", "week", "wheel", "window", "winter", "woman",
    "wood", "word", "work", "world", "year",
];

const IRREGULAR_PLURALS: &[(&str, &str)] = &[
    ("children", "child"), ("men", "man"), ("women", "woman"), ("feet", "foot"),
    ("teeth", "tooth"), ("knives", "knife"), ("mice", "mouse"),
];

const NUMBER_CUES: &[&str] = &[
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "several",
    "many", "few", "some",
];

const STOPWORDS: &[&str] = &[
    "a", "an", "the", "of", "to", "in", "on", "at", "by", "for", "with", "from", "and", "or",
    "but", "so", "as", "is", "are", "was", "were", "be", "it", "its", "this", "that", "these",
    "those", "up", "out", "into", "onto", "off", "over", "about",
];

const COORDINATORS: &[&str] = &["and", "but", "or", "nor", "so", "yet"];

/// Words that end a "by"-agent noun phrase.
const PHRASE_BOUNDARIES: &[&str] = &[
    "about", "after", "against", "along", "among", "and", "around", "at", "because", "before",
    "behind", "below", "beside", "between", "but", "by", "during", "for", "from", "in",
    "into", "near", "of", "off", "on", "onto", "or", "over", "since", "so", "than", "that",
    "through", "to", "toward", "towards", "under", "until", "when", "where", "which", "while",
    "who", "with", "within", "without", "yet",
];

const AUXILIARIES: &[&str] = &[
    "will", "would", "can", "could", "shall", "should", "may", "might", "must", "has", "have",
    "had", "do", "does", "did", "get", "gets", "got",
];

const ADVERBS: &[&str] = &[
    "not", "never", "also", "often", "always", "just", "still", "already", "soon", "then",
    "well", "rarely", "seldom", "usually",
];

/// Built-in closed-class lists. Cheap to construct; shared read-only.
#[derive(Debug, Clone)]
pub struct FunctionWordLists {
    pub be_forms: HashSet<&'static str>,
    pub negative_markers: HashSet<&'static str>,
    pub irregular_participles: HashMap<&'static str, &'static str>,
    pub not_participles: HashSet<&'static str>,
    pub sequence_cues: HashSet<&'static str>,
    pub negative_to_positive: HashMap<&'static str, &'static str>,
    pub nouns: HashSet<&'static str>,
    pub irregular_plurals: HashMap<&'static str, &'static str>,
    pub number_cues: HashSet<&'static str>,
    pub stopwords: HashSet<&'static str>,
    pub coordinators: HashSet<&'static str>,
    pub phrase_boundaries: HashSet<&'static str>,
    pub auxiliaries: HashSet<&'static str>,
    pub adverbs: HashSet<&'static str>,
}

impl Default for FunctionWordLists {
    fn default() -> Self {
        Self::english()
    }
}

impl FunctionWordLists {
    pub fn english() -> Self {
        let set = |words: &[&'static str]| words.iter().copied().collect::<HashSet<_>>();
        let map = |pairs: &[(&'static str, &'static str)]| pairs.iter().copied().collect::<HashMap<_, _>>();
        FunctionWordLists {
            be_forms: set(BE_FORMS),
            negative_markers: set(NEGATIVE_MARKERS),
            irregular_participles: map(IRREGULAR_PARTICIPLES),
            not_participles: set(NOT_PARTICIPLES),
            sequence_cues: set(SEQUENCE_CUES),
            negative_to_positive: map(NEGATIVE_TO_POSITIVE),
            nouns: set(NOUNS),
            irregular_plurals: map(IRREGULAR_PLURALS),
            number_cues: set(NUMBER_CUES),
            stopwords: set(STOPWORDS),
            coordinators: set(COORDINATORS),
            phrase_boundaries: set(PHRASE_BOUNDARIES),
            auxiliaries: set(AUXILIARIES),
            adverbs: set(ADVERBS),
        }
    }

    pub fn is_be_form(&self, word: &str) -> bool {
        self.be_forms.contains(word)
    }

    /// Negation class of a lowercased word, if it is a negative marker.
    pub fn is_negative(&self, word: &str) -> bool {
        self.negative_markers.contains(word) || word.ends_with("n't")
    }

    /// "not", "cannot" and any "-n't" contraction.
    pub fn is_verbal_negation(&self, word: &str) -> bool {
        word == "not" || word == "cannot" || word.ends_with("n't")
    }

    /// Simple past for a past participle, if the word looks like one.
    pub fn past_tense_of_participle(&self, word: &str) -> Option<String> {
        if let Some(past) = self.irregular_participles.get(word) {
            return Some((*past).to_string());
        }
        let regular = word.len() >= 4
            && word.ends_with("ed")
            && word.chars().all(|c| c.is_ascii_lowercase())
            && !self.not_participles.contains(word);
        regular.then(|| word.to_string())
    }

    pub fn is_adverb(&self, word: &str) -> bool {
        self.adverbs.contains(word) || (word.len() > 4 && word.ends_with("ly") && word != "only")
    }

    pub fn is_noun(&self, word: &str) -> bool {
        if self.nouns.contains(word) {
            return true;
        }
        if let Some(singular) = self.irregular_plurals.get(word) {
            return self.nouns.contains(singular);
        }
        word.strip_suffix("es").is_some_and(|s| self.nouns.contains(s))
            || word.strip_suffix('s').is_some_and(|s| self.nouns.contains(s))
    }
}
