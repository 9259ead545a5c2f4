"""Noun inflection: class table, class prediction and paradigm generation."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import NamedTuple, Optional

from .script import NULL_SUFFIX, EndingCategory, JoinRules, ending_category, ends_in_ya, join

SINGULAR, PLURAL = "singular", "plural"
DIRECT, OBLIQUE = "direct", "oblique"
MASCULINE, FEMININE = "masculine", "feminine"
COUNTABLE, MASS = "countable", "mass_or_abstract"


class NounClass(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"


# argmax tie-break: most null cells first
TIE_BREAK = (NounClass.A, NounClass.E, NounClass.D, NounClass.C, NounClass.B)


class NumberCase(NamedTuple):
    number: str
    case: str


CELLS = (
    NumberCase(SINGULAR, DIRECT),
    NumberCase(SINGULAR, OBLIQUE),
    NumberCase(PLURAL, DIRECT),
    NumberCase(PLURAL, OBLIQUE),
)


class UnclassifiableError(ValueError):
    pass


@dataclass(frozen=True)
class NounLexEntry:
    root: str
    gender: Optional[str] = None
    countability: Optional[str] = None
    class_override: Optional[NounClass] = None

    def __post_init__(self):
        if not self.root:
            raise ValueError("noun root must be non-empty")

    @property
    def ending(self) -> EndingCategory:
        return ending_category(self.root)


@dataclass(frozen=True)
class NounPair:
    source_root: str
    target: NounLexEntry

    def __post_init__(self):
        if not self.source_root or self.source_root != self.source_root.lower():
            raise ValueError("source root must be a non-empty lowercase lemma: %r" % self.source_root)


class NounTable:
    """Suffix per (class, number-case), with optional ending-specific cells."""

    def __init__(self, cells: dict):
        # (class, NumberCase, ending-or-None) -> suffix
        self.cells = dict(cells)

    @classmethod
    def load(cls, path) -> "NounTable":
        cells = {}
        with open(path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, 1):
                line = line.rstrip("\n")
                if not line.strip() or line.startswith("#"):
                    continue
                cols = line.split("\t")
                if len(cols) != 5:
                    raise ValueError("%s:%d: expected 5 columns" % (path, lineno))
                klass, number, case, ending, suffix = cols
                nc = NumberCase(number, case)
                if nc not in CELLS:
                    raise ValueError("%s:%d: bad number/case %s/%s" % (path, lineno, number, case))
                key = (NounClass(klass), nc, None if ending == "*" else EndingCategory(ending))
                cells[key] = NULL_SUFFIX if suffix == "null" else suffix
        table = cls(cells)
        for klass in NounClass:
            for nc in CELLS:
                if (klass, nc, None) not in cells:
                    raise ValueError("%s: missing default cell for class %s %s" % (path, klass.value, nc))
        return table

    def suffix_for(self, klass: NounClass, nc: NumberCase, ending: Optional[EndingCategory] = None) -> str:
        klass = NounClass(klass)
        nc = NumberCase(*nc)
        if ending is not None and (klass, nc, ending) in self.cells:
            return self.cells[klass, nc, ending]
        return self.cells[klass, nc, None]

    def suffixes(self) -> set:
        return {s for s in self.cells.values() if s}

    def admissible(self, klass: NounClass, ending: EndingCategory) -> list:
        return [self.suffix_for(klass, nc, ending) for nc in CELLS]


DEFAULT_TABLE_PATH = Path(__file__).parent / "data" / "hi" / "noun_classes.tsv"


@lru_cache(maxsize=None)
def default_table() -> NounTable:
    return NounTable.load(DEFAULT_TABLE_PATH)


def suffix_for(klass: NounClass, nc: NumberCase, ending: Optional[EndingCategory] = None,
               table: Optional[NounTable] = None) -> str:
    """Suffix of *klass* in cell *nc*; the empty string is the null inflection."""
    return (table or default_table()).suffix_for(klass, nc, ending)


def classify(entry: NounLexEntry) -> NounClass:
    """Predict the inflectional class from gender, countability and ending."""
    if entry.class_override is not None:
        return NounClass(entry.class_override)
    if entry.countability == MASS:
        return NounClass.A
    ending = entry.ending
    if entry.gender == FEMININE:
        if ending is EndingCategory.II_VOWEL or ends_in_ya(entry.root):
            return NounClass.B
        return NounClass.C
    if entry.gender == MASCULINE:
        if ending is EndingCategory.A_VOWEL:
            return NounClass.D
        if ending in (EndingCategory.UU_VOWEL, EndingCategory.II_VOWEL, EndingCategory.CONSONANT):
            return NounClass.E
        raise UnclassifiableError("masculine noun %r with ending %s fits no class" % (entry.root, ending.value))
    raise UnclassifiableError("noun %r has no gender and no class override" % entry.root)


def noun_paradigm(pair: NounPair, table: Optional[NounTable] = None, rules: Optional[JoinRules] = None,
                  source_surface: str = "."):
    """The four word-form records (sg-dir, sg-obl, pl-dir, pl-obl) of *pair*."""
    from .dictgen import WordFormRecord

    table = table or default_table()
    target = pair.target
    klass = classify(target)
    ending = target.ending
    records = []
    for nc in CELLS:
        suffix = table.suffix_for(klass, nc, ending)
        surface = join(target.root, suffix, klass, rules=rules)
        records.append(WordFormRecord(
            source_root=pair.source_root,
            source_factors=(nc.number, nc.case),
            target_surface=surface,
            target_root=target.root,
            target_suffix=suffix,
            pos="noun",
            source_surface=source_surface,
            noun_class=klass,
        ))
    return records


_GENDER_CODES = {"m": MASCULINE, "f": FEMININE}
_COUNT_CODES = {"count": COUNTABLE, "mass": MASS}


class LexiconLineError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__("line %d: %s" % (lineno, message))
        self.lineno = lineno


def parse_noun_line(line: str, lineno: int = 0) -> NounLexEntry:
    cols = line.rstrip("\n").split("\t")
    if len(cols) not in (3, 4):
        raise LexiconLineError(lineno, "expected 3 or 4 tab-separated columns, got %d" % len(cols))
    root, gender, count = (c.strip() for c in cols[:3])
    if not root:
        raise LexiconLineError(lineno, "empty root")
    if gender not in _GENDER_CODES:
        raise LexiconLineError(lineno, "unknown gender code %r (expected m or f)" % gender)
    if count not in _COUNT_CODES:
        raise LexiconLineError(lineno, "unknown countability %r (expected count or mass)" % count)
    override = None
    if len(cols) == 4 and cols[3].strip():
        try:
            override = NounClass(cols[3].strip())
        except ValueError:
            raise LexiconLineError(lineno, "unknown class %r" % cols[3].strip()) from None
    return NounLexEntry(root, _GENDER_CODES[gender], _COUNT_CODES[count], override)


def read_noun_lexicon(path, errors: Optional[list] = None) -> list[NounLexEntry]:
    """Read a noun lexicon TSV.

    Malformed lines raise unless an *errors* list is given, in which case
    they are appended to it and skipped.
    """
    entries = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip() or line.startswith("#"):
                continue
            try:
                entries.append(parse_noun_line(line, lineno))
            except LexiconLineError as exc:
                if errors is None:
                    raise
                errors.append(exc)
    return entries


def gender_code(gender: Optional[str]) -> str:
    return {MASCULINE: "m", FEMININE: "f"}.get(gender, "-")


def count_code(countability: Optional[str]) -> str:
    return {COUNTABLE: "count", MASS: "mass"}.get(countability, "-")
