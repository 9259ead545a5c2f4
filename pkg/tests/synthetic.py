"""Synthetic corpora built from known noun classes."""

import random
from pathlib import Path

from morphinject.corpus import AlignedSentencePair, FactoredToken, NOUN_SCHEME, TARGET_SCHEME
from morphinject.dictgen import read_bilingual
from morphinject.nouns import CELLS, classify, read_noun_lexicon
from morphinject.profile import load_profile


def lexicon_nouns():
    prof = load_profile()
    return read_noun_lexicon(prof.path("nouns")), read_bilingual(prof.path("bilingual"))


def noun_tokens(lemma, entry, klass, cell, profile):
    suffix = profile.noun_table.suffix_for(klass, cell, entry.ending)
    surface = profile.rules.join(entry.root, suffix, klass)
    number, case = cell
    eng = lemma + ("s" if number == "plural" else "")
    src = NOUN_SCHEME.token({"surface": eng, "lemma": lemma, "number": number, "case": case})
    tgt = TARGET_SCHEME.token({"surface": surface, "root": entry.root, "suffix": suffix})
    return src, tgt


def class_corpus(n_nouns=400, min_occ=2, max_occ=8, seed=0):
    """Aligned one-noun sentence pairs for nouns of known class.

    Each synthetic noun borrows a shipped root (so its ending and class are
    real) under a fresh English lemma, and occurs a uniform 2..8 times in
    uniformly drawn number-case cells.  Returns (corpus, truth) where truth
    maps lemma -> (root, class, set of observed cells).
    """
    rng = random.Random(seed)
    profile = load_profile()
    entries, _ = lexicon_nouns()
    corpus, truth = [], {}
    for i in range(n_nouns):
        entry = entries[rng.randrange(len(entries))]
        klass = classify(entry)
        lemma = "noun%d" % i
        cells = set()
        for _ in range(rng.randint(min_occ, max_occ)):
            cell = CELLS[rng.randrange(4)]
            cells.add(cell)
            src, tgt = noun_tokens(lemma, entry, klass, cell, profile)
            corpus.append(AlignedSentencePair([src], [tgt], frozenset({(0, 0)})))
        truth[lemma] = (entry.root, klass, cells)
    return corpus, truth


VERBS = [("play", "खेलते_हैं", "खेल", "ते_हैं"), ("run", "भागते_हैं", "भाग", "ते_हैं"),
         ("eat", "खाते_हैं", "खा", "ते_हैं"), ("live", "रहते_हैं", "रह", "ते_हैं")]
NAMES = ["ram", "sita", "mohan", "gita", "delhi"]


def _verb(rng):
    lemma, surface, root, suffix = VERBS[rng.randrange(len(VERBS))]
    return FactoredToken.of(lemma, lemma, "null", "null"), FactoredToken.of(surface, root, suffix)


def desk_corpus(outdir, n_train=500, n_test=200, seed=7):
    """Write train.src/.tgt/.align and test.src for the reduction scenario.

    Training sentences only ever show a noun in its direct cases; the test
    set also asks for oblique forms, which the lexicon dictionary supplies.
    A few proper names in the test set have no translation anywhere.
    """
    rng = random.Random(seed)
    profile = load_profile()
    entries, bilingual = lexicon_nouns()
    nouns = [(bilingual[e.root], e, classify(e)) for e in entries if e.root in bilingual]
    direct = [c for c in CELLS if c.case == "direct"]
    src_lines, tgt_lines, align_lines = [], [], []
    for _ in range(n_train):
        lemma, entry, klass = nouns[rng.randrange(len(nouns))]
        s, t = noun_tokens(lemma, entry, klass, direct[rng.randrange(2)], profile)
        vs, vt = _verb(rng)
        src_lines.append("%s %s" % (s, vs))
        tgt_lines.append("%s %s" % (t, vt))
        align_lines.append("0-0 1-1")
    test_lines = []
    for _ in range(n_test):
        lemma, entry, klass = nouns[rng.randrange(len(nouns))]
        s, _ = noun_tokens(lemma, entry, klass, CELLS[rng.randrange(4)], profile)
        vs, _ = _verb(rng)
        toks = [str(s), str(vs)]
        if rng.random() < 0.1:
            name = NAMES[rng.randrange(len(NAMES))]
            toks.insert(0, str(FactoredToken.of(name, name, "singular", "direct")))
        test_lines.append(" ".join(toks))
    outdir = Path(outdir)
    for name, lines in (("train.src", src_lines), ("train.tgt", tgt_lines), ("train.align", align_lines),
                        ("test.src", test_lines)):
        (outdir / name).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return outdir
