"""English-side factor extraction from dependency-parsed sentences.

Input is file based: one token per line with the columns
``index form lemma POS head relation`` (tab separated), or a 10-column
CoNLL-U block, in which case the language-specific POS column is used when
present.  Sentences are separated by blank lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Optional

from .corpus import NOUN_SCHEME, FactoredToken, FactorScheme

PRESENT_TAGS = ("VBP", "VBZ", "VB")
ABILITY_MODALS = ("can", "could")
PUNCT_TAGS = frozenset((".", ",", ":", "``", "''", "-LRB-", "-RRB-", "#", "$", "PUNCT", "SYM", "HYPH", "NFP"))


class NoVerbError(ValueError):
    pass


class RelationAliases:
    """Canonical relation name -> accepted input labels.

    An accepted label ending in ``*`` matches by prefix; a ``+case`` suffix
    additionally requires the dependent to have a ``case`` child.
    """

    def __init__(self, table: dict):
        self.table = {k: tuple(v) for k, v in table.items()}

    @classmethod
    def load(cls, path) -> "RelationAliases":
        table: dict = {}
        with open(path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, 1):
                line = line.rstrip("\n")
                if not line.strip() or line.startswith("#"):
                    continue
                cols = line.split("\t")
                if len(cols) != 2:
                    raise ValueError("%s:%d: expected canonical<TAB>accepted" % (path, lineno))
                table.setdefault(cols[0].strip(), []).append(cols[1].strip())
        return cls(table)

    def matches(self, graph: "DepGraph", tok: "DepToken", canonical: str) -> bool:
        for label in self.table.get(canonical, (canonical,)):
            needs_case = label.endswith("+case")
            if needs_case:
                label = label[: -len("+case")]
            if label.endswith("*"):
                ok = tok.rel.startswith(label[:-1])
            else:
                ok = tok.rel == label
            if ok and needs_case:
                ok = any(c.rel == "case" for c in graph.children(tok))
            if ok:
                return True
        return False


DEFAULT_ALIASES_PATH = Path(__file__).parent / "data" / "hi" / "relation_aliases.tsv"


@lru_cache(maxsize=None)
def default_aliases() -> RelationAliases:
    return RelationAliases.load(DEFAULT_ALIASES_PATH)


@dataclass(frozen=True)
class DepToken:
    index: int
    form: str
    lemma: str
    pos: str
    head: int
    rel: str

    @property
    def is_noun(self) -> bool:
        return self.pos.startswith("NN")

    @property
    def is_verb(self) -> bool:
        return self.pos.startswith("VB") or self.pos == "MD"

    @property
    def is_punct(self) -> bool:
        return self.pos in PUNCT_TAGS or not any(ch.isalnum() for ch in self.form)

    @property
    def norm_lemma(self) -> str:
        lemma = self.lemma if self.lemma not in ("", "_") else self.form
        return lemma.lower()


@dataclass
class DepGraph:
    tokens: list
    relation_aliases: RelationAliases = field(default_factory=default_aliases)

    def __post_init__(self):
        n = len(self.tokens)
        for pos, tok in enumerate(self.tokens, 1):
            if tok.index != pos:
                raise ValueError("token indices must run 1..n, got %d at position %d" % (tok.index, pos))
            if not (0 <= tok.head <= n):
                raise ValueError("head %d of token %d out of range" % (tok.head, tok.index))
            if not tok.rel:
                raise ValueError("token %d has an empty relation" % tok.index)
        roots = [t for t in self.tokens if t.head == 0]
        if self.tokens and len(roots) != 1:
            raise ValueError("expected exactly one root, found %d" % len(roots))
        for tok in self.tokens:
            seen = set()
            cur = tok
            while cur.head:
                if cur.index in seen:
                    raise ValueError("cycle through token %d" % tok.index)
                seen.add(cur.index)
                cur = self.tokens[cur.head - 1]
        self._children: dict = {}
        for tok in self.tokens:
            self._children.setdefault(tok.head, []).append(tok)

    def __len__(self):
        return len(self.tokens)

    def children(self, tok: DepToken) -> list:
        return self._children.get(tok.index, [])

    def head_of(self, tok: DepToken) -> Optional[DepToken]:
        return self.tokens[tok.head - 1] if tok.head else None

    @property
    def root(self) -> Optional[DepToken]:
        return next((t for t in self.tokens if t.head == 0), None)

    def is_rel(self, tok: DepToken, canonical: str) -> bool:
        return self.relation_aliases.matches(self, tok, canonical)

    def is_aux(self, tok: DepToken) -> bool:
        return tok.pos == "MD" or self.is_rel(tok, "aux")


@dataclass
class TamResult:
    tense: list = field(default_factory=list)
    aspect: list = field(default_factory=list)
    modality: list = field(default_factory=list)


def _tam_of(tokens: Iterable[DepToken]) -> TamResult:
    out = TamResult()
    for tok in tokens:
        if tok.pos in PRESENT_TAGS:
            out.tense.append("present")
        elif tok.pos == "VBD":
            out.tense.append("past")
        elif tok.pos == "MD":
            if tok.form.lower() not in ABILITY_MODALS:
                out.tense.append("future")
            else:
                out.modality.append(tok.form.lower())
        elif tok.pos == "VBG":
            out.aspect.append("progressive")
        elif tok.pos == "VBN":
            out.aspect.append("perfect")
    return out


def tam(graph: DepGraph) -> TamResult:
    """Tense, aspect and modality over every token of the sentence."""
    return _tam_of(graph.tokens)


def subject(graph: DepGraph) -> Optional[DepToken]:
    """The nsubj dependent of the root, else the first nsubj in the sentence."""
    subjects = [t for t in graph.tokens if graph.is_rel(t, "nsubj")]
    root = graph.root
    for t in subjects:
        if root is not None and t.head == root.index:
            return t
    return subjects[0] if subjects else None


def _person_of(subj: Optional[DepToken]) -> str:
    word = subj.form.lower() if subj else ""
    if word in ("i", "we"):
        return "first"
    if word == "you":
        return "second"
    return "third"


def _number_of(tok: Optional[DepToken]) -> str:
    if tok is None or not tok.pos.startswith("NN"):
        return "unknown"
    return "plural" if tok.pos.endswith("S") else "singular"


def person(graph: DepGraph) -> str:
    return _person_of(subject(graph))


def subject_number(graph: DepGraph) -> str:
    return _number_of(subject(graph))


def subject_gender(graph: DepGraph) -> str:
    # only three pronouns are recognised; everything else stays unknown
    subj = subject(graph)
    word = subj.form.lower() if subj else ""
    return {"he": "+musc", "she": "-musc", "it": "neutral"}.get(word, "unknown")


def _oblique_subject_tense(t: TamResult) -> bool:
    if "past" in t.tense:
        return True
    return "present" in t.tense and "perfect" in t.aspect


def noun_cases(graph: DepGraph, tam_result: Optional[TamResult] = None) -> dict:
    """Direct/oblique case for every noun token, keyed by token index."""
    if tam_result is None:
        tam_result = tam(graph)
    cases = {}
    subj = subject(graph)
    if subj is not None:
        has_object = any(graph.is_rel(t, "dobj") and t.head == subj.head for t in graph.tokens)
        if has_object and _oblique_subject_tense(tam_result):
            cases[subj.index] = "oblique"
    for tok in graph.tokens:
        if graph.is_rel(tok, "pobj"):
            cases[tok.index] = "oblique"
        elif graph.is_rel(tok, "prep") or graph.is_rel(tok, "prepc"):
            if tok.is_noun:
                cases[tok.index] = "oblique"
            else:
                # basic style: prep(verb, in) pobj(in, noun)
                for child in graph.children(tok):
                    if child.is_noun:
                        cases[child.index] = "oblique"
    result = {}
    for tok in graph.tokens:
        if tok.is_noun:
            result[tok.index] = cases.get(tok.index, "direct")
    return result


def main_verbs(graph: DepGraph) -> list:
    return [t for t in graph.tokens if t.pos.startswith("VB") and not graph.is_aux(t)]


def main_verb_lemma(graph: DepGraph) -> str:
    """Lemma of the main verb with auxiliaries and modals removed."""
    verbs = main_verbs(graph)
    if verbs:
        root = graph.root
        chosen = root if root in verbs else verbs[0]
        return chosen.norm_lemma
    anyverb = [t for t in graph.tokens if t.is_verb]
    if not anyverb:
        raise NoVerbError("sentence has no verb: %s" % " ".join(t.form for t in graph.tokens))
    return anyverb[-1].norm_lemma


def _verb_factors(graph: DepGraph, verb: DepToken, sentence_subject: Optional[DepToken]) -> dict:
    chain = [verb] + [c for c in graph.children(verb) if graph.is_aux(c)]
    chain.sort(key=lambda t: t.index)
    t = _tam_of(chain)
    subj = next((c for c in graph.children(verb) if graph.is_rel(c, "nsubj")), sentence_subject)
    number = _number_of(subj)
    return {
        "number": None if number == "unknown" else number,
        "person": _person_of(subj),
        "tense": t.tense[0] if t.tense else None,
        "aspect": t.aspect[0] if t.aspect else "simple",
        "modality": t.modality[0] if t.modality else None,
    }


def annotate(graph: DepGraph, scheme: FactorScheme = NOUN_SCHEME) -> list[FactoredToken]:
    """Factored tokens for one sentence, all of width ``scheme.width``."""
    with_nouns = "case" in scheme.names
    with_verbs = "person" in scheme.names
    cases = noun_cases(graph, tam(graph)) if with_nouns else {}
    verbs = set(t.index for t in main_verbs(graph)) if with_verbs else set()
    subj = subject(graph)
    out = []
    for tok in graph.tokens:
        values = {"surface": tok.form.lower()}
        if not tok.is_punct:
            values["lemma"] = tok.norm_lemma
        if tok.index in cases:
            values["number"] = "plural" if tok.pos.endswith("S") else "singular"
            values["case"] = cases[tok.index]
        elif tok.index in verbs:
            values.update(_verb_factors(graph, tok, subj))
        out.append(scheme.token(values))
    return out


def parse_token_line(line: str) -> Optional[DepToken]:
    cols = line.split("\t")
    if len(cols) >= 10:
        idx, form, lemma, upos, xpos, _feats, head, rel = cols[:8]
        pos = xpos if xpos not in ("", "_") else upos
    elif len(cols) == 6:
        idx, form, lemma, pos, head, rel = cols
    else:
        raise ValueError("expected 6 or 10 tab-separated columns, got %d" % len(cols))
    if "-" in idx or "." in idx:
        return None  # multiword ranges and empty nodes
    return DepToken(int(idx), form, lemma, pos, int(head), rel)


def read_parsed(lines: Iterable[str], aliases: Optional[RelationAliases] = None) -> list[DepGraph]:
    aliases = aliases or default_aliases()
    graphs = []
    current: list = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\n")
        if not line.strip():
            if current:
                graphs.append(DepGraph(current, aliases))
                current = []
            continue
        if line.startswith("#"):
            continue
        try:
            tok = parse_token_line(line)
        except ValueError as exc:
            raise ValueError("line %d: %s" % (lineno, exc)) from None
        if tok is not None:
            current.append(tok)
    if current:
        graphs.append(DepGraph(current, aliases))
    return graphs


def read_parsed_file(path, aliases: Optional[RelationAliases] = None) -> list[DepGraph]:
    with open(path, encoding="utf-8") as f:
        return read_parsed(f, aliases)
