import pytest

from morphinject.nouns import (
    CELLS, FEMININE, MASCULINE, COUNTABLE, MASS, LexiconLineError, NounClass, NounLexEntry, NounPair, NumberCase,
    UnclassifiableError, classify, noun_paradigm, parse_noun_line, read_noun_lexicon, suffix_for,
)
from morphinject.profile import load_profile
from morphinject.script import EndingCategory

SD, SO, PD, PO = CELLS


@pytest.mark.parametrize("klass,nc,ending,expected", [
    (NounClass.D, SO, EndingCategory.A_VOWEL, "ए"),
    (NounClass.A, PO, EndingCategory.CONSONANT, ""),
    (NounClass.B, PO, EndingCategory.II_VOWEL, "यों"),
    (NounClass.B, PD, EndingCategory.II_VOWEL, "याँ"),
    (NounClass.E, PO, EndingCategory.II_VOWEL, "यों"),
    (NounClass.E, PO, EndingCategory.UU_VOWEL, "ओं"),
    (NounClass.E, PO, EndingCategory.CONSONANT, "ओं"),
])
def test_suffix_for_examples(klass, nc, ending, expected):
    assert suffix_for(klass, nc, ending) == expected


@pytest.mark.parametrize("root,gender,count,klass", [
    ("लड़की", FEMININE, COUNTABLE, NounClass.B),
    ("प्यार", MASCULINE, MASS, NounClass.A),
    ("आलू", MASCULINE, COUNTABLE, NounClass.E),
    ("लड़का", MASCULINE, COUNTABLE, NounClass.D),
    ("रात", FEMININE, COUNTABLE, NounClass.C),
    ("गुड़िया", FEMININE, COUNTABLE, NounClass.B),
    ("माली", MASCULINE, COUNTABLE, NounClass.E),
    ("घर", MASCULINE, COUNTABLE, NounClass.E),
])
def test_classify_examples(root, gender, count, klass):
    assert classify(NounLexEntry(root, gender, count)) == klass


def test_classify_override_wins():
    assert classify(NounLexEntry("राजा", MASCULINE, COUNTABLE, NounClass.E)) == NounClass.E


def test_classify_unclassifiable():
    with pytest.raises(UnclassifiableError):
        classify(NounLexEntry("जौ", MASCULINE, COUNTABLE))
    with pytest.raises(UnclassifiableError):
        classify(NounLexEntry("घर"))


def _surfaces(recs):
    return [(r.target_surface, r.target_root, r.target_suffix) for r in recs]


def test_paradigm_boy():
    recs = noun_paradigm(NounPair("boy", NounLexEntry("लड़का", MASCULINE, COUNTABLE)))
    assert [r.source_factors for r in recs] == [tuple(c) for c in CELLS]
    assert _surfaces(recs) == [("लड़का", "लड़का", ""), ("लड़के", "लड़का", "ए"),
                               ("लड़के", "लड़का", "ए"), ("लड़कों", "लड़का", "ओं")]


def test_paradigm_river():
    recs = noun_paradigm(NounPair("river", NounLexEntry("नदी", FEMININE, COUNTABLE)))
    assert _surfaces(recs) == [("नदी", "नदी", ""), ("नदी", "नदी", ""),
                               ("नदियाँ", "नदी", "याँ"), ("नदियों", "नदी", "यों")]


def test_paradigm_hunger_all_root():
    recs = noun_paradigm(NounPair("hunger", NounLexEntry("भूख", FEMININE, MASS)))
    assert [r.target_surface for r in recs] == ["भूख"] * 4


def test_noun_pair_lowercase():
    with pytest.raises(ValueError):
        NounPair("Boy", NounLexEntry("लड़का"))
    with pytest.raises(ValueError):
        NounPair("", NounLexEntry("लड़का"))


def test_shipped_lexicon_properties():
    prof = load_profile()
    for e in read_noun_lexicon(prof.path("nouns")):
        klass = classify(e)
        recs = noun_paradigm(NounPair("x", e), prof.noun_table, prof.rules)
        assert len(recs) == 4
        assert all(r.target_surface for r in recs)
        assert recs[0].target_surface == e.root
        if klass == NounClass.D:
            assert recs[1].target_surface == recs[2].target_surface


def test_parse_noun_line():
    e = parse_noun_line("नदी\tf\tcount")
    assert (e.root, e.gender, e.countability, e.class_override) == ("नदी", FEMININE, COUNTABLE, None)
    assert parse_noun_line("राजा\tm\tcount\tE").class_override == NounClass.E
    with pytest.raises(LexiconLineError) as exc:
        parse_noun_line("नदी\tx\tcount", 7)
    assert "line 7" in str(exc.value)
    with pytest.raises(LexiconLineError):
        parse_noun_line("नदी\tf", 2)


def test_read_lexicon_collects_errors(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("# comment\nनदी\tf\tcount\nbad line\nघर\tm\tcount\n", encoding="utf-8")
    errors = []
    entries = read_noun_lexicon(p, errors)
    assert [e.root for e in entries] == ["नदी", "घर"]
    assert len(errors) == 1 and errors[0].lineno == 3


def test_number_case_order():
    assert CELLS == (NumberCase("singular", "direct"), NumberCase("singular", "oblique"),
                     NumberCase("plural", "direct"), NumberCase("plural", "oblique"))
