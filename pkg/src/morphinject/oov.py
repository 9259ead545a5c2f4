"""Count-based toy factored translation model and OOV accounting.

The factored model has one translation step, (lemma, source factors) ->
(target root, target suffix), and one generation step, (target root,
target suffix) -> target surface.  Either step can lack evidence, in which
case the token comes out as UNKNOWN.  Surface mode maps source surface to
target surface directly.

Machine-readable report keys (one JSON object per report)::

    total              tokens translated
    oov                tokens that came out UNKNOWN
    oov_by_step        {"translation": n, "generation": n}
    oov_types          {source surface: count}, sorted by surface
    test_fingerprint   sha1 of the test token stream

and per comparison::

    before, after      the two reports
    reduction_percent  100 * (before.oov - after.oov) / before.oov, or null
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .corpus import AlignedSentencePair, FactoredToken, decode_field

TRANSLATION, GENERATION = "translation", "generation"


@dataclass(frozen=True)
class Unknown:
    form: str
    step: str

    def __str__(self):
        return "@UNK:%s@" % self.form


@dataclass(frozen=True)
class ToyFactoredModel:
    translation: dict = field(default_factory=dict)
    generation: dict = field(default_factory=dict)
    mode: str = "factored"

    def __post_init__(self):
        if self.mode not in ("factored", "surface"):
            raise ValueError("mode must be factored or surface")


def _best(counter: Counter):
    # highest count, then lexicographically smallest target
    return min(counter.items(), key=lambda kv: (-kv[1], kv[0]))[0]


def _source_key(tok: FactoredToken):
    if tok.width < 2:
        raise ValueError("factored model needs factor-complete tokens, got %s" % tok)
    return tok.fields[1], tok.fields[2:]


def train(pairs: Iterable[AlignedSentencePair], mode: str = "factored") -> ToyFactoredModel:
    """Count one translation (and generation) entry per alignment link."""
    translation: dict = {}
    generation: dict = {}
    for pair in pairs:
        for i, j in sorted(pair.alignment):
            s, t = pair.source[i], pair.target[j]
            if mode == "surface":
                translation.setdefault(s.surface, Counter())[t.surface] += 1
                continue
            if t.width < 3:
                raise ValueError("factored model needs surface|root|suffix targets, got %s" % t)
            target = (t.fields[1], t.fields[2])
            translation.setdefault(_source_key(s), Counter())[target] += 1
            generation.setdefault(target, Counter())[t.surface] += 1
    return ToyFactoredModel(translation, generation, mode)


def translate_token(model: ToyFactoredModel, token: FactoredToken) -> Union[str, Unknown]:
    """Target surface for *token*, or an :class:`Unknown` naming the failing step."""
    if model.mode == "surface":
        options = model.translation.get(token.surface)
        return decode_field(_best(options)) if options else Unknown(token.surface, TRANSLATION)
    options = model.translation.get(_source_key(token))
    if not options:
        return Unknown(token.surface, TRANSLATION)
    surfaces = model.generation.get(_best(options))
    if not surfaces:
        return Unknown(token.surface, GENERATION)
    return decode_field(_best(surfaces))


def translate_sentence(model: ToyFactoredModel, tokens: Sequence[FactoredToken]) -> str:
    return " ".join(str(translate_token(model, t)) for t in tokens)


def fingerprint(test: Iterable[Sequence[FactoredToken]]) -> str:
    h = hashlib.sha1()
    for sent in test:
        h.update(" ".join(str(t) for t in sent).encode("utf-8"))
        h.update(b"\n")
    return h.hexdigest()


@dataclass
class OovReport:
    total_tokens: int = 0
    oov_tokens: int = 0
    oov_list: Counter = field(default_factory=Counter)
    by_step: dict = field(default_factory=lambda: {TRANSLATION: 0, GENERATION: 0})
    test_fingerprint: str = ""

    def __post_init__(self):
        if not 0 <= self.oov_tokens <= self.total_tokens:
            raise ValueError("oov count out of range")

    def reduction_percent(self, baseline: "OovReport") -> Optional[float]:
        if baseline.oov_tokens == 0:
            return None
        return 100.0 * (baseline.oov_tokens - self.oov_tokens) / baseline.oov_tokens

    def to_dict(self) -> dict:
        return {
            "total": self.total_tokens,
            "oov": self.oov_tokens,
            "oov_by_step": dict(self.by_step),
            "oov_types": dict(sorted(self.oov_list.items())),
            "test_fingerprint": self.test_fingerprint,
        }


def count_oov(model: ToyFactoredModel, test: Sequence[Sequence[FactoredToken]]) -> OovReport:
    report = OovReport(test_fingerprint=fingerprint(test))
    for sent in test:
        for tok in sent:
            report.total_tokens += 1
            out = translate_token(model, tok)
            if isinstance(out, Unknown):
                report.oov_tokens += 1
                report.by_step[out.step] += 1
                report.oov_list[tok.surface] += 1
    return report


class ComparisonError(ValueError):
    pass


@dataclass
class OovComparison:
    before: OovReport
    after: OovReport

    @property
    def reduction_percent(self) -> Optional[float]:
        return self.after.reduction_percent(self.before)

    def to_dict(self) -> dict:
        return {"before": self.before.to_dict(), "after": self.after.to_dict(),
                "reduction_percent": self.reduction_percent}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2, sort_keys=True)

    def to_rows(self) -> list:
        red = self.reduction_percent
        return [
            ("metric", "before", "after"),
            ("tokens", str(self.before.total_tokens), str(self.after.total_tokens)),
            ("oov", str(self.before.oov_tokens), str(self.after.oov_tokens)),
            ("oov_translation", str(self.before.by_step[TRANSLATION]), str(self.after.by_step[TRANSLATION])),
            ("oov_generation", str(self.before.by_step[GENERATION]), str(self.after.by_step[GENERATION])),
            ("reduction_percent", "", "n/a" if red is None else "%.2f" % red),
        ]


def compare(before: OovReport, after: OovReport) -> OovComparison:
    if before.test_fingerprint != after.test_fingerprint or before.total_tokens != after.total_tokens:
        raise ComparisonError("reports were computed on different test sets")
    return OovComparison(before, after)


def simulate(source_lines: Sequence[str], target_lines: Sequence[str], align_lines: Sequence[str],
             test: Sequence[Sequence[FactoredToken]], dictionary=None, mode: str = "factored") -> OovComparison:
    """OOV counts of a model trained before and after injecting *dictionary*."""
    from .dictgen import inject

    before_pairs = [AlignedSentencePair.from_lines(s, t, a) for s, t, a in zip(source_lines, target_lines, align_lines)]
    before = count_oov(train(before_pairs, mode), test)
    if not dictionary:
        return compare(before, before)
    original = list(zip(source_lines, target_lines))
    injected = inject(original, dictionary, mode)
    extra = [AlignedSentencePair.from_lines(s, t, "0-0") for s, t in injected[len(original):]]
    after = count_oov(train(before_pairs + extra, mode), test)
    return compare(before, after)
