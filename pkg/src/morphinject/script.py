"""Devanagari text primitives and the rule-based joiner.

The joiner fuses a root and an inflectional suffix into a surface form
(reverse morphology).  Rules live in a TSV file shipped with each language
profile; :func:`split` inverts them by brute force over a root inventory.
"""

from __future__ import annotations

import enum
import re as _re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping, Optional

import regex

NULL_SUFFIX = ""

VIRAMA = "्"
NUKTA = "़"

# independent vowel -> dependent sign (matra); अ has no sign
VOWEL_SIGNS = {
    "अ": "",
    "आ": "ा",
    "इ": "ि",
    "ई": "ी",
    "उ": "ु",
    "ऊ": "ू",
    "ऋ": "ृ",
    "ए": "े",
    "ऐ": "ै",
    "ऑ": "ॉ",
    "ओ": "ो",
    "औ": "ौ",
}
MATRAS = frozenset(s for s in VOWEL_SIGNS.values() if s)

_GRAPHEME_RE = regex.compile(r"\X")


class EndingCategory(str, enum.Enum):
    A_VOWEL = "A_VOWEL"
    II_VOWEL = "II_VOWEL"
    UU_VOWEL = "UU_VOWEL"
    E_CLASS_VOWEL = "E_CLASS_VOWEL"
    CONSONANT = "CONSONANT"
    OTHER = "OTHER"


_FINAL_VOWEL = {
    "ा": EndingCategory.A_VOWEL,
    "आ": EndingCategory.A_VOWEL,
    "ी": EndingCategory.II_VOWEL,
    "ि": EndingCategory.II_VOWEL,
    "ई": EndingCategory.II_VOWEL,
    "इ": EndingCategory.II_VOWEL,
    "ू": EndingCategory.UU_VOWEL,
    "ु": EndingCategory.UU_VOWEL,
    "ऊ": EndingCategory.UU_VOWEL,
    "उ": EndingCategory.UU_VOWEL,
    "े": EndingCategory.E_CLASS_VOWEL,
    "ै": EndingCategory.E_CLASS_VOWEL,
    "ो": EndingCategory.E_CLASS_VOWEL,
    "ए": EndingCategory.E_CLASS_VOWEL,
    "ऐ": EndingCategory.E_CLASS_VOWEL,
    "ओ": EndingCategory.E_CLASS_VOWEL,
}

_SHORTEN_II = {"ी": "ि", "ई": "इ"}
_SHORTEN_UU = {"ू": "ु", "ऊ": "उ"}


class JoinError(ValueError):
    """No joiner rule accepts the (root, suffix) combination."""


def is_consonant(ch: str) -> bool:
    cp = ord(ch)
    return 0x0915 <= cp <= 0x0939 or 0x0958 <= cp <= 0x095F or 0x0978 <= cp <= 0x097F


def graphemes(text: str) -> list[str]:
    """Split *text* into extended grapheme clusters.

    >>> graphemes("boy")
    ['b', 'o', 'y']
    """
    if not isinstance(text, str):
        raise TypeError("graphemes() expects str, got %s" % type(text).__name__)
    # lone surrogates cannot be encoded; surface them as encoding errors
    text.encode("utf-8")
    return _GRAPHEME_RE.findall(text)


def ending_category(root: str) -> EndingCategory:
    """Category of the vowel content of the final grapheme of *root*."""
    if not root:
        raise ValueError("ending_category() needs a non-empty root")
    last = root[-1]
    if last in _FINAL_VOWEL:
        return _FINAL_VOWEL[last]
    if is_consonant(last) or last == VIRAMA:
        return EndingCategory.CONSONANT
    if last == NUKTA and len(root) > 1 and is_consonant(root[-2]):
        return EndingCategory.CONSONANT
    return EndingCategory.OTHER


def ends_in_ya(root: str) -> bool:
    return root.endswith("या")


def _ends_in_consonant(text: str) -> bool:
    if not text:
        return False
    last = text[-1]
    if last == NUKTA:
        return len(text) > 1 and is_consonant(text[-2])
    return is_consonant(last)


def _attach(stem: str, suffix: str) -> str:
    if suffix and suffix[0] in VOWEL_SIGNS and _ends_in_consonant(stem):
        return stem + VOWEL_SIGNS[suffix[0]] + suffix[1:]
    return stem + suffix


def _act(action: str, root: str, suffix: str) -> Optional[str]:
    """Apply *action*; ``None`` when the root does not meet its precondition."""
    if action == "CONCAT":
        return _attach(root, suffix)
    if action == "DROP_MATRA_CONCAT":
        if root[-1] not in MATRAS:
            return None
        return _attach(root[:-1], suffix)
    if action == "SHORTEN_II_CONCAT":
        return _attach(root[:-1] + _SHORTEN_II.get(root[-1], root[-1]), suffix)
    if action == "SHORTEN_UU_CONCAT":
        return _attach(root[:-1] + _SHORTEN_UU.get(root[-1], root[-1]), suffix)
    if action == "DROP_YAA_CONCAT":
        if not ends_in_ya(root):
            return None
        return _attach(root[:-2], suffix)
    raise ValueError("unknown joiner action %r" % action)


ACTIONS = ("CONCAT", "DROP_MATRA_CONCAT", "SHORTEN_II_CONCAT", "SHORTEN_UU_CONCAT", "DROP_YAA_CONCAT")


@dataclass(frozen=True)
class JoinRule:
    pattern: str
    ending: Optional[EndingCategory]  # None matches any ending
    action: str
    priority: int
    classes: Optional[frozenset]  # None: applies with or without a class hint
    order: int = 0

    def matches(self, suffix: str, ending: EndingCategory, class_hint) -> bool:
        if self.ending is not None and self.ending is not ending:
            return False
        if self.classes is not None:
            if class_hint is None or str(getattr(class_hint, "value", class_hint)) not in self.classes:
                return False
        return _compiled(self.pattern).fullmatch(suffix) is not None


@lru_cache(maxsize=None)
def _compiled(pattern: str) -> "_re.Pattern[str]":
    return _re.compile(pattern)


class JoinRules:
    """An ordered, immutable joiner rule table."""

    def __init__(self, rules: Iterable[JoinRule]):
        self.rules = tuple(sorted(rules, key=lambda r: (r.priority, r.order)))

    def __len__(self) -> int:
        return len(self.rules)

    @classmethod
    def load(cls, path) -> "JoinRules":
        rules = []
        with open(path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, 1):
                line = line.rstrip("\n")
                if not line.strip() or line.startswith("#"):
                    continue
                cols = line.split("\t")
                if len(cols) not in (4, 5):
                    raise ValueError("%s:%d: expected 4 or 5 columns, got %d" % (path, lineno, len(cols)))
                pattern, ending, action, priority = cols[:4]
                classes = cols[4] if len(cols) == 5 else "*"
                if action not in ACTIONS:
                    raise ValueError("%s:%d: unknown action %r" % (path, lineno, action))
                try:
                    _re.compile(pattern)
                except _re.error as exc:
                    raise ValueError("%s:%d: bad suffix pattern: %s" % (path, lineno, exc)) from None
                rules.append(JoinRule(
                    pattern=pattern,
                    ending=None if ending == "*" else EndingCategory(ending),
                    action=action,
                    priority=int(priority),
                    classes=None if classes == "*" else frozenset(classes),
                    order=lineno,
                ))
        return cls(rules)

    def join(self, root: str, suffix: Optional[str] = NULL_SUFFIX, class_hint=None) -> str:
        if not root:
            raise ValueError("join() needs a non-empty root")
        if not suffix:
            return root
        ending = ending_category(root)
        for rule in self.rules:
            if rule.matches(suffix, ending, class_hint):
                out = _act(rule.action, root, suffix)
                if out is not None:
                    return out
        hint = "" if class_hint is None else ", class %s" % getattr(class_hint, "value", class_hint)
        raise JoinError("no joiner rule for root %r (%s) with suffix %r%s" % (root, ending.value, suffix, hint))


# no hint first, then every noun class tag
ALL_HINTS = (None, "A", "B", "C", "D", "E")

DEFAULT_RULES_PATH = Path(__file__).parent / "data" / "hi" / "joiner_rules.tsv"


@lru_cache(maxsize=None)
def default_rules() -> JoinRules:
    return JoinRules.load(DEFAULT_RULES_PATH)


def join(root: str, suffix: Optional[str] = NULL_SUFFIX, class_hint=None, rules: Optional[JoinRules] = None) -> str:
    """Fuse *root* and *suffix* into a surface form.

    The empty (null) suffix is the identity.  *class_hint* selects
    class-restricted rules, e.g. class C feminine roots in ``-ā`` keep their
    final vowel before ``ओं``.
    """
    return (rules or default_rules()).join(root, suffix, class_hint)


def split(
    surface: str,
    lexicon_roots: Iterable[str],
    suffixes: Optional[Iterable[str]] = None,
    rules: Optional[JoinRules] = None,
    class_hints: Iterable = ALL_HINTS,
) -> list[tuple[str, str]]:
    """All (root, suffix) pairs from the inventories that join to *surface*.

    A pair is accepted when ``join(root, suffix, hint) == surface`` for any of
    *class_hints*.  Joining changes at most the last two characters of a root,
    so only roots whose prefix occurs in *surface* are tried.  Results are
    ordered longest root first.  *suffixes* defaults to the default profile's
    noun and verb suffix inventory.
    """
    if not surface:
        raise ValueError("split() needs a non-empty surface")
    rules = rules or default_rules()
    if suffixes is None:
        from .profile import load_profile

        suffixes = load_profile().suffix_inventory()
    roots = lexicon_roots if isinstance(lexicon_roots, (set, frozenset)) else set(lexicon_roots)
    suffixes = sorted(set(suffixes) | {NULL_SUFFIX})
    hints = list(class_hints)
    found = set()
    for root in roots:
        if not root or not surface.startswith(root[:-2]):
            continue
        for suffix in suffixes:
            for hint in hints:
                try:
                    out = rules.join(root, suffix, hint)
                except JoinError:
                    continue
                if out == surface:
                    found.add((root, suffix))
                    break
    return sorted(found, key=lambda p: (-len(p[0]), p[0], p[1]))


class SplitIndex:
    """Precomputed join table for repeated splitting against one lexicon."""

    def __init__(self, roots: Mapping[str, Iterable[str]], rules: Optional[JoinRules] = None,
                 class_hints: Iterable = ALL_HINTS):
        """*roots* maps each root to the suffixes it admits."""
        rules = rules or default_rules()
        hints = list(class_hints)
        self._table: dict[str, set] = {}
        for root, sufs in roots.items():
            for suffix in set(sufs) | {NULL_SUFFIX}:
                for hint in hints:
                    try:
                        out = rules.join(root, suffix, hint)
                    except JoinError:
                        continue
                    self._table.setdefault(out, set()).add((root, suffix))

    def split(self, surface: str) -> list[tuple[str, str]]:
        return sorted(self._table.get(surface, ()), key=lambda p: (-len(p[0]), p[0], p[1]))
