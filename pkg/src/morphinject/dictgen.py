"""Word-form dictionaries: building, filtering and corpus injection.

Two builders mirror the two ways of obtaining noun classes: from a target
lexicon (gender, countability, ending) or from counting suffix evidence in
an aligned factored corpus.  Dictionary files hold one record per line,
``source_token<TAB>target_token``, where the source token is written in the
record's own scheme (noun width 4, verb width 7) and the target token is
``surface|root|suffix``.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

from .corpus import (NOUN_SCHEME, NULL, TARGET_SCHEME, VERB_SCHEME, AlignedSentencePair, FactoredToken,
                     FactorScheme, WidthError, corpus_width, decode_field, encode_field, normalize_factors,
                     scheme_for_width)
from .nouns import (CELLS, TIE_BREAK, NounClass, NounLexEntry, NounPair, NounTable, NumberCase,
                    UnclassifiableError, default_table, noun_paradigm)
from .script import NULL_SUFFIX, JoinError, JoinRules, SplitIndex, default_rules, split
from .verbs import VerbFeatures, VerbLexEntry, VerbParadigmTable, default_paradigm, verb_paradigm

log = logging.getLogger(__name__)

NOUN_FACTORS = ("number", "case")
VERB_FACTORS = ("number", "person", "tense", "aspect", "modality")
_NATIVE = {"noun": NOUN_SCHEME, "verb": VERB_SCHEME}


@dataclass(frozen=True)
class WordFormRecord:
    source_root: str
    source_factors: tuple
    target_surface: str
    target_root: str
    target_suffix: str
    pos: str
    source_surface: str = "."
    noun_class: Optional[NounClass] = field(default=None, compare=False)

    def __post_init__(self):
        names = self.factor_names
        if len(self.source_factors) != len(names):
            raise ValueError("%s record needs %d source factors, got %r" % (self.pos, len(names), self.source_factors))

    @property
    def factor_names(self) -> tuple:
        if self.pos == "noun":
            return NOUN_FACTORS
        if self.pos == "verb":
            return VERB_FACTORS
        raise ValueError("unknown part of speech %r" % self.pos)

    def source_values(self) -> dict:
        values = dict(zip(self.factor_names, self.source_factors))
        values["surface"] = self.source_surface
        values["lemma"] = self.source_root
        return values

    def source_token(self, scheme: Optional[FactorScheme] = None) -> FactoredToken:
        scheme = scheme or _NATIVE[self.pos]
        values = self.source_values()
        lost = [n for n, v in values.items() if n not in scheme.names and v not in (None, "", NULL)]
        if lost:
            raise WidthError("%s scheme cannot carry %s of %s record %s"
                             % (scheme.name, ", ".join(lost), self.pos, self.source_root))
        return scheme.token(values)

    def target_token(self) -> FactoredToken:
        return TARGET_SCHEME.token({"surface": self.target_surface, "root": self.target_root,
                                    "suffix": self.target_suffix})

    def to_line(self) -> str:
        return "%s\t%s" % (self.source_token(), self.target_token())

    @classmethod
    def from_line(cls, line: str) -> "WordFormRecord":
        src, sep, tgt = line.rstrip("\n").partition("\t")
        if not sep:
            raise ValueError("dictionary line needs source<TAB>target: %r" % line)
        s = FactoredToken.parse(src)
        t = FactoredToken.parse(tgt)
        if t.width != TARGET_SCHEME.width:
            raise WidthError("target token %s must have 3 fields" % t)
        if s.width == NOUN_SCHEME.width:
            pos = "noun"
        elif s.width == VERB_SCHEME.width:
            pos = "verb"
        else:
            raise WidthError("source token %s is neither a noun (4) nor a verb (7) record" % s)
        suffix = NULL_SUFFIX if t.fields[2] == NULL else decode_field(t.fields[2])
        return cls(
            source_root=s.fields[1],
            source_factors=tuple(s.fields[2:]),
            target_surface=decode_field(t.fields[0]),
            target_root=decode_field(t.fields[1]),
            target_suffix=suffix,
            pos=pos,
            source_surface=s.fields[0],
        )


class WordFormDictionary:
    """Ordered, duplicate-free collection of word-form records."""

    def __init__(self, records: Iterable[WordFormRecord] = (), provenance: str = "lexicon"):
        if provenance not in ("lexicon", "parallel"):
            raise ValueError("provenance must be lexicon or parallel")
        self.provenance = provenance
        self.records: list = []
        self._seen: set = set()
        # skipped entries and the reason, for reporting
        self.skipped: list = []
        for rec in records:
            self.add(rec)

    def add(self, rec: WordFormRecord) -> bool:
        if rec in self._seen:
            return False
        self._seen.add(rec)
        self.records.append(rec)
        return True

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __contains__(self, rec):
        return rec in self._seen

    def counts_by_pos(self) -> dict:
        counts = Counter(r.pos for r in self.records)
        return {"noun": counts.get("noun", 0), "verb": counts.get("verb", 0), "total": len(self.records)}

    def validate(self, rules: Optional[JoinRules] = None) -> None:
        """Check ``join(root, suffix) == surface`` for every record."""
        rules = rules or default_rules()
        for rec in self.records:
            hints = (rec.noun_class,) if rec.noun_class is not None else (None,) + tuple(NounClass)
            for hint in hints:
                try:
                    if rules.join(rec.target_root, rec.target_suffix, hint) == rec.target_surface:
                        break
                except JoinError:
                    continue
            else:
                raise ValueError("record %s does not join back to its surface" % rec.to_line())

    def to_lines(self) -> list:
        return [r.to_line() for r in self.records]

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as f:
            for line in self.to_lines():
                f.write(line + "\n")

    @classmethod
    def read(cls, path, provenance: str = "lexicon") -> "WordFormDictionary":
        with open(path, encoding="utf-8") as f:
            return cls((WordFormRecord.from_line(l) for l in f if l.strip() and not l.startswith("#")), provenance)


def build_from_lexicon(
    nouns: Sequence[NounLexEntry],
    verbs: Sequence[VerbLexEntry],
    bilingual: Mapping[str, str],
    feature_space: Optional[Iterable[VerbFeatures]] = None,
    table: Optional[NounTable] = None,
    paradigm: Optional[VerbParadigmTable] = None,
    rules: Optional[JoinRules] = None,
) -> WordFormDictionary:
    """Generate records for every translated noun and every verb.

    Nouns without a translation and unclassifiable nouns are skipped and
    listed in ``dictionary.skipped``.  *feature_space* defaults to every
    bundle in the verb paradigm table.
    """
    paradigm = paradigm or default_paradigm()
    space = list(feature_space) if feature_space is not None else paradigm.bundles()
    out = WordFormDictionary(provenance="lexicon")
    for entry in nouns:
        source = bilingual.get(entry.root)
        if not source:
            out.skipped.append((entry.root, "no translation"))
            log.info("skipping %s: no translation", entry.root)
            continue
        try:
            records = noun_paradigm(NounPair(source.lower(), entry), table=table, rules=rules)
        except (UnclassifiableError, JoinError) as exc:
            out.skipped.append((entry.root, str(exc)))
            log.warning("skipping %s: %s", entry.root, exc)
            continue
        for rec in records:
            out.add(rec)
    for verb in verbs:
        for rec in verb_paradigm(verb, space, table=paradigm, rules=rules):
            out.add(rec)
    return out


@dataclass
class ClassEvidence:
    counts: dict = field(default_factory=lambda: {c: 0 for c in NounClass})
    unclassified: int = 0

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def probabilities(self) -> dict:
        total = self.total
        if not total:
            return {}
        return {c: n / total for c, n in self.counts.items()}

    def best(self) -> Optional[NounClass]:
        if not self.total:
            return None
        top = max(self.counts.values())
        return next(c for c in TIE_BREAK if self.counts[c] == top)


def _noun_links(corpus: Iterable[AlignedSentencePair], scheme: Optional[FactorScheme]):
    """Yield (source token, number-case, target root, target suffix) per aligned noun link."""
    for pair in corpus:
        if not pair.source:
            continue
        sch = scheme or scheme_for_width(pair.source[0].width)
        if "case" not in sch.names:
            raise WidthError("%s scheme carries no case factor" % sch.name)
        ni, ci = sch.index("number"), sch.index("case")
        for i, j in sorted(pair.alignment):
            s, t = pair.source[i], pair.target[j]
            if s.width != sch.width or t.width < 3:
                raise WidthError("link %d-%d: expected %d source and 3 target factors" % (i, j, sch.width))
            nc = NumberCase(s.fields[ni], s.fields[ci])
            if nc not in CELLS:
                continue  # not a noun occurrence
            suffix = NULL_SUFFIX if t.fields[2] == NULL else decode_field(t.fields[2])
            yield s, nc, decode_field(t.fields[1]), suffix


def classify_from_parallel(corpus: Iterable[AlignedSentencePair], scheme: Optional[FactorScheme] = None,
                           table: Optional[NounTable] = None) -> dict:
    """Class evidence per aligned noun pair.

    Every class whose table cell for the observed number and case equals the
    observed suffix gains one count.  Observations matching no class are
    counted as unclassified.
    """
    table = table or default_table()
    evidence: dict = {}
    for s, nc, root, suffix in _noun_links(corpus, scheme):
        pair = NounPair(s.fields[1].lower(), NounLexEntry(root))
        ev = evidence.setdefault(pair, ClassEvidence())
        ending = pair.target.ending
        hit = False
        for klass in NounClass:
            if table.suffix_for(klass, nc, ending) == suffix:
                ev.counts[klass] += 1
                hit = True
        if not hit:
            ev.unclassified += 1
    return evidence


def build_from_parallel(corpus: Sequence[AlignedSentencePair], evidence: Mapping[NounPair, ClassEvidence],
                        scheme: Optional[FactorScheme] = None, table: Optional[NounTable] = None,
                        rules: Optional[JoinRules] = None) -> WordFormDictionary:
    """Four records per classified pair, keeping observed English surfaces."""
    surfaces: dict = {}
    for s, nc, root, _suffix in _noun_links(corpus, scheme):
        surfaces.setdefault((s.fields[1].lower(), root, nc), s.surface)
    out = WordFormDictionary(provenance="parallel")
    for pair in sorted(evidence, key=lambda p: (p.source_root, p.target.root)):
        best = evidence[pair].best()
        if best is None:
            out.skipped.append((pair.target.root, "no classifiable observations"))
            log.info("no evidence for %s/%s", pair.source_root, pair.target.root)
            continue
        classified = NounPair(pair.source_root, NounLexEntry(pair.target.root, class_override=best))
        try:
            records = noun_paradigm(classified, table=table, rules=rules)
        except JoinError as exc:
            out.skipped.append((pair.target.root, str(exc)))
            continue
        for rec, nc in zip(records, CELLS):
            surface = surfaces.get((pair.source_root, pair.target.root, nc), ".")
            out.add(WordFormRecord(rec.source_root, rec.source_factors, rec.target_surface, rec.target_root,
                                   rec.target_suffix, rec.pos, surface, rec.noun_class))
    return out


def filter_infrequent(dictionary: WordFormDictionary, freq: Mapping[str, int], min_count: int) -> WordFormDictionary:
    """Drop records whose target root occurs fewer than *min_count* times."""
    if min_count < 0:
        raise ValueError("min_count must be >= 0")
    if min_count == 0:
        return dictionary
    kept = WordFormDictionary((r for r in dictionary if freq.get(r.target_root, 0) >= min_count),
                              dictionary.provenance)
    kept.skipped = list(dictionary.skipped)
    return kept


def _surface_pair(rec: WordFormRecord) -> tuple:
    # lexicon records have no English surface; the lemma stands in for it
    source = rec.source_surface if rec.source_surface not in (".", "", NULL) else rec.source_root
    return encode_field(source), encode_field(rec.target_surface)


def inject(corpus_lines: Sequence[tuple], dictionary: Iterable[WordFormRecord], mode: str = "factored",
           scheme: Optional[FactorScheme] = None) -> list:
    """Append one single-token sentence pair per record to *corpus_lines*.

    *corpus_lines* holds ``(source_line, target_line)`` pairs and is copied
    unchanged to the front of the result.  Lines already present are not
    added again.  In factored mode records are rendered in the corpus's factor
    scheme (inferred from its width unless given); surface mode keeps only
    surface forms.
    """
    if mode not in ("factored", "surface"):
        raise ValueError("mode must be factored or surface")
    records = list(dictionary)
    rendered = []
    if mode == "factored":
        width = corpus_width([s for s, _ in corpus_lines])
        twidth = corpus_width([t for _, t in corpus_lines])
        if twidth is not None and twidth != TARGET_SCHEME.width:
            raise WidthError("target side has width %d, expected %d" % (twidth, TARGET_SCHEME.width))
        if scheme is None:
            if width is not None:
                scheme = scheme_for_width(width)
            else:
                kinds = {r.pos for r in records}
                scheme = _NATIVE[kinds.pop()] if len(kinds) == 1 else scheme_for_width(8)
        elif width is not None and width != scheme.width:
            raise WidthError("corpus width %d does not match the %s scheme (%d)" % (width, scheme.name, scheme.width))
        for rec in records:
            tok = normalize_factors(rec.source_token(scheme), scheme.width)
            rendered.append((str(tok), str(rec.target_token())))
    else:
        rendered = [_surface_pair(rec) for rec in records]
    out = list(corpus_lines)
    seen = set(out)
    for line in rendered:
        if line not in seen:
            seen.add(line)
            out.append(line)
    return out


def factorize_target(token: str, lexicon: Union[SplitIndex, Iterable[str]],
                     suffixes: Optional[Iterable[str]] = None) -> FactoredToken:
    """``surface|root|suffix`` for a target surface token via the best split."""
    surface = decode_field(token)
    if isinstance(lexicon, SplitIndex):
        candidates = lexicon.split(surface)
    else:
        candidates = split(surface, lexicon, suffixes)
    root, suffix = candidates[0] if candidates else (surface, NULL_SUFFIX)
    return TARGET_SCHEME.token({"surface": surface, "root": root, "suffix": suffix})


def read_bilingual(path) -> dict:
    """Target root -> source root; the first translation of a root wins."""
    table: dict = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.rstrip("\n").split("\t")
            if len(cols) != 2:
                raise ValueError("%s:%d: expected target<TAB>source" % (path, lineno))
            table.setdefault(cols[0].strip(), cols[1].strip())
    return table


def read_frequencies(path) -> dict:
    freq: dict = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.rstrip("\n").split("\t")
            if len(cols) != 2:
                raise ValueError("%s:%d: expected root<TAB>count" % (path, lineno))
            freq[cols[0].strip()] = freq.get(cols[0].strip(), 0) + int(cols[1])
    return freq
