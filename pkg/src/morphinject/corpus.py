"""Factored tokens, factor schemes and parallel-corpus I/O.

A factored token is written ``surface|f1|f2|...``.  Tokens are separated by
single spaces, so spaces inside a merged form (``भागता हूँ``) are stored as
``_``.  Alignment lines hold 0-based ``i-j`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

NULL = "null"
FACTOR_SEP = "|"


def encode_field(value: Optional[str]) -> str:
    if value is None or value == "":
        return NULL
    return value.replace("|", "&#124;").replace(" ", "_")


def decode_field(value: str) -> str:
    return value.replace("_", " ").replace("&#124;", "|")


@dataclass(frozen=True)
class FactoredToken:
    fields: tuple

    def __post_init__(self):
        if not self.fields or not self.fields[0]:
            raise ValueError("factored token needs a surface field")

    @classmethod
    def parse(cls, text: str) -> "FactoredToken":
        return cls(tuple(text.split(FACTOR_SEP)))

    @classmethod
    def of(cls, *values) -> "FactoredToken":
        return cls(tuple(encode_field(v) for v in values))

    @property
    def surface(self) -> str:
        return self.fields[0]

    @property
    def width(self) -> int:
        return len(self.fields)

    def __str__(self) -> str:
        return FACTOR_SEP.join(self.fields)


class FactorScheme(NamedTuple):
    name: str
    names: tuple

    @property
    def width(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def token(self, values: dict) -> FactoredToken:
        return FactoredToken(tuple(encode_field(values.get(n)) for n in self.names))


NOUN_SCHEME = FactorScheme("noun", ("surface", "lemma", "number", "case"))
VERB_SCHEME = FactorScheme("verb", ("surface", "lemma", "number", "person", "tense", "aspect", "modality"))
FULL_SCHEME = FactorScheme("full", ("surface", "lemma", "number", "case", "person", "tense", "aspect", "modality"))
TARGET_SCHEME = FactorScheme("target", ("surface", "root", "suffix"))

SCHEMES = {s.name: s for s in (NOUN_SCHEME, VERB_SCHEME, FULL_SCHEME)}
_BY_WIDTH = {s.width: s for s in SCHEMES.values()}


class WidthError(ValueError):
    pass


def scheme_for_width(width: int) -> FactorScheme:
    try:
        return _BY_WIDTH[width]
    except KeyError:
        raise WidthError("no source factor scheme has width %d (known: %s)"
                         % (width, ", ".join("%s=%d" % (s.name, s.width) for s in SCHEMES.values()))) from None


def normalize_factors(token: FactoredToken, width: int) -> FactoredToken:
    """Pad *token* with ``null`` factors up to *width* fields."""
    if token.width > width:
        raise WidthError("token %s has %d factors, wider than %d" % (token, token.width, width))
    return FactoredToken(token.fields + (NULL,) * (width - token.width))


def parse_sentence(line: str) -> list[FactoredToken]:
    return [FactoredToken.parse(t) for t in line.split()]


def format_sentence(tokens: Iterable[FactoredToken]) -> str:
    return " ".join(str(t) for t in tokens)


def parse_alignment(line: str) -> frozenset:
    pairs = set()
    for item in line.split():
        i, sep, j = item.partition("-")
        if not sep:
            raise ValueError("bad alignment item %r" % item)
        pairs.add((int(i), int(j)))
    return frozenset(pairs)


def format_alignment(pairs: Iterable[tuple]) -> str:
    return " ".join("%d-%d" % p for p in sorted(pairs))


@dataclass(frozen=True)
class AlignedSentencePair:
    source: tuple
    target: tuple
    alignment: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for i, j in self.alignment:
            if not (0 <= i < len(self.source) and 0 <= j < len(self.target)):
                raise ValueError("alignment %d-%d out of range for %d x %d tokens"
                                 % (i, j, len(self.source), len(self.target)))

    @classmethod
    def from_lines(cls, src: str, tgt: str, align: str = "") -> "AlignedSentencePair":
        return cls(tuple(parse_sentence(src)), tuple(parse_sentence(tgt)), parse_alignment(align))


def read_lines(path) -> list[str]:
    with open(path, encoding="utf-8") as f:
        return [line.rstrip("\n") for line in f]


def write_lines(path, lines: Iterable[str]) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for line in lines:
            f.write(line + "\n")


def read_parallel(src_path, tgt_path, align_path=None) -> list[AlignedSentencePair]:
    src = read_lines(src_path)
    tgt = read_lines(tgt_path)
    align = read_lines(align_path) if align_path else [""] * len(src)
    if not (len(src) == len(tgt) == len(align)):
        raise ValueError("parallel files differ in length: %d source, %d target, %d alignment"
                         % (len(src), len(tgt), len(align)))
    pairs = []
    for n, (s, t, a) in enumerate(zip(src, tgt, align), 1):
        try:
            pairs.append(AlignedSentencePair.from_lines(s, t, a))
        except ValueError as exc:
            raise ValueError("sentence %d: %s" % (n, exc)) from None
    return pairs


def corpus_width(lines: Sequence[str]) -> Optional[int]:
    """Common token width of *lines*; ``None`` for an empty corpus."""
    widths = {t.count(FACTOR_SEP) + 1 for line in lines for t in line.split()}
    if len(widths) > 1:
        raise WidthError("corpus mixes token widths %s" % sorted(widths))
    return widths.pop() if widths else None
