#!/usr/bin/env python3
"""Regenerate the generated bundled lexicon tables.

Produces, under crates/core/lexicon/:

  frequency.tsv       word<TAB>rank   (wordfreq English top list, rank 1 = most frequent)
  dictionary.txt      word            (Webster's 2nd lowercase entries plus validated
                                       inflections and contractions from the frequency list,
                                       plus frequency-list words that CMUdict also lists)
  syllable_gold.tsv   word<TAB>count  (1,000 common words, counts from CMUdict)

synonyms.tsv, slang.tsv and acronyms.tsv are hand-maintained and not touched here.

Requires: pip install wordfreq cmudict english-words names
"""

import pickle
import random
import re
from pathlib import Path

import cmudict
import english_words
import names
import wordfreq

OUT = Path(__file__).resolve().parent.parent / "crates" / "core" / "lexicon"

FREQ_SIZE = 60000
GOLD_SIZE = 1000
GOLD_POOL = 10000
GOLD_SEED = 2017

WORD = re.compile(r"[a-z]+")
CONTRACTION = re.compile(r"[a-z]+'(t|re|ll|ve|d|m|s)")

EXTRA_WORDS = """
online website websites email emails internet ok okay app apps smartphone smartphones
laptop laptops login logout username password passwords download downloads upload
uploads homepage webpage blog blogs video videos selfie wifi
""".split()


def load_pickle(name):
    base = Path(english_words.__file__).parent / "data"
    with open(base / name, "rb") as fh:
        return set(pickle.load(fh))


def census_names():
    """Lowercase US census first and last names."""
    base = Path(names.__file__).parent
    out = set()
    for fname in ("dist.all.last", "dist.female.first", "dist.male.first"):
        with open(base / fname) as fh:
            out.update(line.split()[0].lower() for line in fh if line.strip())
    return out


def base_forms(word):
    """Candidate stems for common English inflections."""
    out = set()
    for suffix, repl in [
        ("ies", "y"), ("ied", "y"), ("ier", "y"), ("iest", "y"), ("ily", "y"),
        ("es", ""), ("s", ""), ("ed", ""), ("ed", "e"), ("d", ""),
        ("ing", ""), ("ing", "e"), ("er", ""), ("er", "e"), ("est", ""),
        ("est", "e"), ("ly", ""), ("ness", ""), ("ment", ""), ("ers", ""),
        ("ers", "e"), ("ings", ""), ("ings", "e"),
    ]:
        if word.endswith(suffix) and len(word) > len(suffix) + 1:
            stem = word[: -len(suffix)] + repl
            out.add(stem)
            # doubled final consonant: stopped -> stop
            if repl == "" and len(stem) > 2 and stem[-1] == stem[-2]:
                out.add(stem[:-1])
    return out


def main():
    web2 = load_pickle("web2.pickle")
    gcide = load_pickle("gcide.pickle")
    lower_entries = {w for w in web2 | gcide if WORD.fullmatch(w)}

    top = wordfreq.top_n_list("en", 200000)
    freq_words = [w for w in top if WORD.fullmatch(w) or CONTRACTION.fullmatch(w)]
    freq_words = freq_words[:FREQ_SIZE]

    with open(OUT / "frequency.tsv", "w") as fh:
        fh.write("# word<TAB>rank; derived from the wordfreq English top-n list\n")
        for rank, w in enumerate(freq_words, start=1):
            fh.write(f"{w}\t{rank}\n")

    dictionary = {w for w in lower_entries if len(w) >= 2}
    dictionary |= {"a", "i"}
    for w in freq_words:
        if CONTRACTION.fullmatch(w):
            if not w.endswith("'s"):
                dictionary.add(w)
        elif w in lower_entries or any(b in lower_entries for b in base_forms(w)):
            dictionary.add(w)
    dictionary |= set(EXTRA_WORDS)
    # the gold sample below was drawn against this set; keep it fixed
    gold_dictionary = set(dictionary)

    # modern and British spellings missing from the older sources; the
    # pronouncing dictionary screens out typos such as "teh", the census
    # lists screen out personal names
    pron = cmudict.dict()
    people = census_names()
    slang = {line.split("\t")[0] for line in (OUT / "slang.tsv").read_text().splitlines()
             if line and not line.startswith("#")}
    dictionary |= {w for w in freq_words if WORD.fullmatch(w) and len(w) >= 2 and w in pron
                   and w not in slang and w not in people}

    with open(OUT / "dictionary.txt", "w") as fh:
        fh.write("# one lowercase word per line\n")
        for w in sorted(dictionary):
            fh.write(w + "\n")

    pool = [
        w for w in freq_words[:GOLD_POOL]
        if WORD.fullmatch(w) and len(w) >= 2 and w in pron and w in gold_dictionary
    ]
    rng = random.Random(GOLD_SEED)
    gold = sorted(rng.sample(pool, GOLD_SIZE))
    with open(OUT / "syllable_gold.tsv", "w") as fh:
        fh.write("# word<TAB>syllables; vowel phonemes of the first CMUdict pronunciation\n")
        for w in gold:
            count = sum(1 for p in pron[w][0] if p[-1].isdigit())
            fh.write(f"{w}\t{count}\n")

    print(f"frequency: {len(freq_words)}  dictionary: {len(dictionary)}  gold: {len(gold)}")


if __name__ == "__main__":
    main()
