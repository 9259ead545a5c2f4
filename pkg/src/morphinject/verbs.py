"""Verb paradigm lookup and verb word-form generation."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Optional

from .script import JoinRules, join

NUMBERS = ("singular", "plural")
PERSONS = ("first", "second", "third")
TENSES = ("present", "past", "future")
ASPECTS = ("simple", "progressive", "perfect")
GENDERS = ("m", "f")


class UnsupportedFeaturesError(KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unsupported features"


@dataclass(frozen=True, order=True)
class VerbFeatures:
    number: str
    person: str
    tense: str
    aspect: str = "simple"
    modality: Optional[str] = None

    def __post_init__(self):
        for value, allowed, name in ((self.number, NUMBERS, "number"), (self.person, PERSONS, "person"),
                                     (self.tense, TENSES, "tense"), (self.aspect, ASPECTS, "aspect")):
            if value not in allowed:
                raise ValueError("bad %s %r" % (name, value))

    def factors(self) -> tuple:
        return (self.number, self.person, self.tense, self.aspect, self.modality or "null")

    def __str__(self):
        return "/".join((self.number, self.person, self.tense, self.aspect, self.modality or "-"))


@dataclass(frozen=True)
class VerbLexEntry:
    root: str
    source_lemma: str

    def __post_init__(self):
        if not self.root or not self.source_lemma:
            raise ValueError("verb entries need a stem and a source lemma")


class VerbParadigmTable:
    """Feature bundle -> gender-variant suffixes."""

    def __init__(self, entries: dict):
        # VerbFeatures -> {gender: suffix}
        self.entries = {k: dict(v) for k, v in entries.items() if v}

    @classmethod
    def load(cls, path) -> "VerbParadigmTable":
        entries: dict = {}
        with open(path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, 1):
                line = line.rstrip("\n")
                if not line.strip() or line.startswith("#"):
                    continue
                cols = line.split("\t")
                if len(cols) != 7:
                    raise ValueError("%s:%d: expected 7 columns, got %d" % (path, lineno, len(cols)))
                number, person, tense, aspect, modality, gender, suffix = cols
                if gender not in GENDERS:
                    raise ValueError("%s:%d: bad gender %r" % (path, lineno, gender))
                if not suffix:
                    raise ValueError("%s:%d: empty suffix" % (path, lineno))
                try:
                    feats = VerbFeatures(number, person, tense, aspect, None if modality == "-" else modality)
                except ValueError as exc:
                    raise ValueError("%s:%d: %s" % (path, lineno, exc)) from None
                variants = entries.setdefault(feats, {})
                if gender in variants:
                    raise ValueError("%s:%d: duplicate row for %s/%s" % (path, lineno, feats, gender))
                variants[gender] = suffix
        return cls(entries)

    def __len__(self):
        return len(self.entries)

    def bundles(self) -> list:
        return sorted(self.entries, key=_bundle_order)

    def variants(self, features: VerbFeatures) -> dict:
        try:
            return self.entries[features]
        except KeyError:
            raise UnsupportedFeaturesError("no paradigm entry for %s" % features) from None

    def suffixes(self) -> set:
        return {s for v in self.entries.values() for s in v.values()}


def _bundle_order(f: VerbFeatures):
    return (TENSES.index(f.tense), ASPECTS.index(f.aspect), f.modality or "",
            PERSONS.index(f.person), NUMBERS.index(f.number))


DEFAULT_PARADIGM_PATH = Path(__file__).parent / "data" / "hi" / "verb_paradigm.tsv"


@lru_cache(maxsize=None)
def default_paradigm() -> VerbParadigmTable:
    return VerbParadigmTable.load(DEFAULT_PARADIGM_PATH)


def verb_suffixes(features: VerbFeatures, table: Optional[VerbParadigmTable] = None) -> set:
    """All gender variants of the merged suffix for *features*."""
    return set((table or default_paradigm()).variants(features).values())


def verb_paradigm(entry: VerbLexEntry, feature_space: Iterable[VerbFeatures],
                  table: Optional[VerbParadigmTable] = None, rules: Optional[JoinRules] = None):
    """One record per (bundle, gender variant).

    Gender is not a source factor, so both variants carry identical source
    factors and differ only on the target side.
    """
    from .dictgen import WordFormRecord

    table = table or default_paradigm()
    records = []
    seen = set()
    for feats in feature_space:
        variants = table.variants(feats)
        for gender in GENDERS:
            if gender not in variants:
                continue
            suffix = variants[gender]
            surface = join(entry.root, suffix, rules=rules)
            key = (feats, surface)
            if key in seen:
                continue
            seen.add(key)
            records.append(WordFormRecord(
                source_root=entry.source_lemma,
                source_factors=feats.factors(),
                target_surface=surface,
                target_root=entry.root,
                target_suffix=suffix,
                pos="verb",
            ))
    return records


def read_verb_lexicon(path) -> list[VerbLexEntry]:
    entries = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.rstrip("\n").split("\t")
            if len(cols) != 2:
                raise ValueError("%s:%d: expected source_lemma<TAB>stem" % (path, lineno))
            entries.append(VerbLexEntry(root=cols[1].strip(), source_lemma=cols[0].strip().lower()))
    return entries
