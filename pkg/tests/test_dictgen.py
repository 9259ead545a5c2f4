import pytest

from morphinject.corpus import (
    AlignedSentencePair, FactoredToken, NOUN_SCHEME, WidthError, format_sentence, normalize_factors, parse_sentence,
    read_parallel,
)
from morphinject.dictgen import (
    ClassEvidence, WordFormDictionary, WordFormRecord, build_from_lexicon, build_from_parallel,
    classify_from_parallel, factorize_target, filter_infrequent, inject, read_bilingual,
)
from morphinject.nouns import FEMININE, MASCULINE, COUNTABLE, MASS, NounClass, NounLexEntry, read_noun_lexicon
from morphinject.profile import load_profile
from morphinject.script import SplitIndex
from morphinject.verbs import VerbLexEntry, read_verb_lexicon

NADI = NounLexEntry("नदी", FEMININE, COUNTABLE)


def _pair(src, tgt, align="0-0"):
    return AlignedSentencePair.from_lines(src, tgt, align)


def test_build_from_lexicon_river():
    d = build_from_lexicon([NADI], [], {"नदी": "river"})
    assert d.to_lines() == [
        ".|river|singular|direct\tनदी|नदी|null",
        ".|river|singular|oblique\tनदी|नदी|null",
        ".|river|plural|direct\tनदियाँ|नदी|याँ",
        ".|river|plural|oblique\tनदियों|नदी|यों",
    ]


def test_build_from_lexicon_skips_untranslated():
    d = build_from_lexicon([NounLexEntry("भाजा", MASCULINE, COUNTABLE)], [], {})
    assert len(d) == 0
    assert [r for r, _ in d.skipped] == ["भाजा"]


def test_build_from_lexicon_unclassifiable_reported():
    d = build_from_lexicon([NounLexEntry("जौ", MASCULINE, COUNTABLE)], [], {"जौ": "barley"})
    assert len(d) == 0 and d.skipped and d.skipped[0][0] == "जौ"


def test_build_from_lexicon_mass():
    d = build_from_lexicon([NounLexEntry("क्रोध", MASCULINE, MASS)], [], {"क्रोध": "anger"})
    assert [r.target_surface for r in d] == ["क्रोध"] * 4


def test_build_from_lexicon_empty():
    assert len(build_from_lexicon([], [], {})) == 0


def test_build_from_lexicon_counts():
    prof = load_profile()
    nouns = read_noun_lexicon(prof.path("nouns"))
    verbs = read_verb_lexicon(prof.path("verbs"))
    bil = read_bilingual(prof.path("bilingual"))
    d = build_from_lexicon(nouns, verbs, bil)
    translated = [n for n in nouns if n.root in bil]
    assert d.counts_by_pos() == {"noun": 4 * len(translated), "verb": 12 * len(verbs),
                                 "total": 4 * len(translated) + 12 * len(verbs)}
    d.validate(prof.rules)


def test_record_line_round_trip():
    d = build_from_lexicon([NADI], [VerbLexEntry("भाग", "run")], {"नदी": "river"})
    for rec in d:
        assert WordFormRecord.from_line(rec.to_line()) == rec
    line = [r for r in d if r.pos == "verb"][0].to_line()
    assert line.startswith(".|run|singular|first|present|simple|null\t")
    assert "_" in line.split("\t")[1]


def test_dictionary_dedup_and_file_round_trip(tmp_path):
    recs = list(build_from_lexicon([NADI], [], {"नदी": "river"}))
    d = WordFormDictionary(recs + recs)
    assert len(d) == 4
    p = tmp_path / "d.tsv"
    d.write(p)
    assert WordFormDictionary.read(p).to_lines() == d.to_lines()


# --- parallel pipeline -------------------------------------------------------

def test_evidence_plural_direct_e():
    ev = classify_from_parallel([_pair("boys|boy|plural|direct", "लड़के|लड़का|ए")])
    (e,) = ev.values()
    assert {c for c, n in e.counts.items() if n} == {NounClass.D}


def test_evidence_singular_direct_all():
    ev = classify_from_parallel([_pair("boy|boy|singular|direct", "लड़का|लड़का|null")])
    (e,) = ev.values()
    assert all(n == 1 for n in e.counts.values())
    assert e.best() == NounClass.A


def test_evidence_unclassified():
    ev = classify_from_parallel([_pair("boys|boy|plural|direct", "लड़काओ|लड़का|ओ")])
    (e,) = ev.values()
    assert e.total == 0 and e.unclassified == 1 and e.best() is None


def test_evidence_probabilities_sum_to_one():
    corpus = [_pair("boys|boy|plural|direct", "लड़के|लड़का|ए"), _pair("boy|boy|singular|direct", "लड़का|लड़का|null")]
    (e,) = classify_from_parallel(corpus).values()
    probs = e.probabilities()
    assert abs(sum(probs.values()) - 1.0) < 1e-12
    assert e.best() == NounClass.D
    assert ClassEvidence().probabilities() == {}


def test_build_from_parallel_boy():
    corpus = [_pair("boys|boy|plural|direct play|play|null|null", "लड़के|लड़का|ए खेलते_हैं|खेल|ते_हैं", "0-0 1-1")]
    ev = classify_from_parallel(corpus)
    d = build_from_parallel(corpus, ev)
    assert d.provenance == "parallel"
    assert d.to_lines() == [
        ".|boy|singular|direct\tलड़का|लड़का|null",
        ".|boy|singular|oblique\tलड़के|लड़का|ए",
        "boys|boy|plural|direct\tलड़के|लड़का|ए",
        ".|boy|plural|oblique\tलड़कों|लड़का|ओं",
    ]


def test_build_from_parallel_river_shape():
    corpus = [_pair("rivers|river|plural|oblique", "नदियों|नदी|यों")]
    # यों alone fits B and E; the tie-break prefers E
    assert list(classify_from_parallel(corpus).values())[0].best() == NounClass.E
    corpus.append(_pair("rivers|river|plural|direct", "नदियाँ|नदी|याँ"))
    d = build_from_parallel(corpus, classify_from_parallel(corpus))
    assert {r.noun_class for r in d} == {NounClass.B}
    assert [r.target_surface for r in d] == ["नदी", "नदी", "नदियाँ", "नदियों"]


def test_build_from_parallel_zero_evidence_skipped():
    corpus = [_pair("boys|boy|plural|direct", "लड़काओ|लड़का|ओ")]
    d = build_from_parallel(corpus, classify_from_parallel(corpus))
    assert len(d) == 0 and d.skipped


def test_uniform_evidence_ties_to_a():
    e = ClassEvidence({c: 3 for c in NounClass})
    assert e.best() == NounClass.A


# --- filter / normalize / inject ---------------------------------------------

def _boy_dict():
    return build_from_lexicon([NounLexEntry("लड़का", MASCULINE, COUNTABLE), NounLexEntry("छोरा", MASCULINE, COUNTABLE)],
                              [], {"लड़का": "boy", "छोरा": "boy"})


def test_filter_infrequent():
    d = _boy_dict()
    assert filter_infrequent(d, {}, 0) is d
    kept = filter_infrequent(d, {"लड़का": 50, "छोरा": 1}, 2)
    assert {r.target_root for r in kept} == {"लड़का"}
    assert len(filter_infrequent(WordFormDictionary(), {}, 5)) == 0
    with pytest.raises(ValueError):
        filter_infrequent(d, {}, -1)


def test_filter_monotone():
    d = _boy_dict()
    freq = {"लड़का": 50, "छोरा": 1}
    sizes = [len(filter_infrequent(d, freq, m)) for m in range(0, 60, 5)]
    assert sizes == sorted(sizes, reverse=True)


def test_normalize_factors():
    assert str(normalize_factors(FactoredToken.parse("खेलते"), 3)) == "खेलते|null|null"
    tok = FactoredToken.parse("a|b|c")
    assert normalize_factors(tok, 3) == tok
    with pytest.raises(WidthError):
        normalize_factors(FactoredToken.parse("a|b|c|d"), 3)


CORPUS = [("boys|boy|plural|direct play|play|null|null", "लड़के|लड़का|ए खेलते_हैं|खेल|ते_हैं")]


def test_inject_factored():
    out = inject(CORPUS, _boy_dict(), "factored")
    assert out[:1] == CORPUS
    assert (".|boy|plural|oblique", "लड़कों|लड़का|ओं") in out
    assert len(out) == 1 + 8


def test_inject_surface():
    out = inject([("boys play", "लड़के खेलते हैं")], _boy_dict(), "surface")
    assert out[0] == ("boys play", "लड़के खेलते हैं")
    assert ("boy", "लड़कों") in out
    # लड़के appears twice in the paradigm but is only added once
    assert out.count(("boy", "लड़के")) == 1


def test_inject_empty_dictionary():
    assert inject(CORPUS, WordFormDictionary(), "factored") == CORPUS


def test_inject_skips_existing_line():
    corpus = CORPUS + [(".|boy|plural|oblique", "लड़कों|लड़का|ओं")]
    out = inject(corpus, _boy_dict(), "factored")
    assert out.count((".|boy|plural|oblique", "लड़कों|लड़का|ओं")) == 1


def test_inject_width_mismatch_before_output():
    bad = [("boys|boy|plural", "लड़के|लड़का|ए")]
    with pytest.raises(WidthError):
        inject(bad, _boy_dict(), "factored")
    with pytest.raises(WidthError):
        inject(CORPUS, _boy_dict(), "factored", NOUN_SCHEME._replace(name="x", names=NOUN_SCHEME.names + ("y",)))
    verbs = build_from_lexicon([], [VerbLexEntry("भाग", "run")], {})
    with pytest.raises(WidthError):
        inject(CORPUS, verbs, "factored")


def test_inject_full_scale_arithmetic():
    corpus = [("s%d" % i, "t%d" % i) for i in range(46000)]
    records = (WordFormRecord("w%d" % i, ("singular", "direct"), "ह%d" % i, "ह%d" % i, "", "noun")
               for i in range(492936))
    out = inject(corpus, records, "surface")
    assert len(out) == 538936
    assert out[:46000] == corpus


def test_factorize_target():
    roots = {"नदी", "भूख", "लड़का"}
    assert str(factorize_target("नदियों", roots)) == "नदियों|नदी|यों"
    assert str(factorize_target("भूख", roots)) == "भूख|भूख|null"
    assert str(factorize_target("xyz", roots)) == "xyz|xyz|null"
    index = SplitIndex({r: load_profile().suffix_inventory() for r in roots})
    assert str(factorize_target("लड़कों", index)) == "लड़कों|लड़का|ओं"


def test_read_parallel(tmp_path):
    (tmp_path / "s").write_text("boys|boy|plural|direct\n", encoding="utf-8")
    (tmp_path / "t").write_text("लड़के|लड़का|ए\n", encoding="utf-8")
    (tmp_path / "a").write_text("0-0\n", encoding="utf-8")
    (pair,) = read_parallel(tmp_path / "s", tmp_path / "t", tmp_path / "a")
    assert pair.alignment == frozenset({(0, 0)})
    (tmp_path / "a").write_text("0-3\n", encoding="utf-8")
    with pytest.raises(ValueError):
        read_parallel(tmp_path / "s", tmp_path / "t", tmp_path / "a")


def test_sentence_format_round_trip():
    line = "boys|boy|plural|direct .|null|null|null"
    assert format_sentence(parse_sentence(line)) == line
    assert str(FactoredToken.of("a|b", None, "x y")) == "a&#124;b|null|x_y"
