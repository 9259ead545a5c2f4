"""Language profiles.

A profile bundles what porting the technique to a new target language
needs: the source factor set, the inflection tables and the joiner rules.
Profiles are directories of TSV files; ``MORPHINJECT_PROFILE_DIR`` points at
a directory holding one subdirectory per profile.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .corpus import FULL_SCHEME, FactorScheme
from .extract import RelationAliases
from .nouns import NounTable
from .script import JoinRules
from .verbs import VerbParadigmTable

PACKAGE_DATA = Path(__file__).parent / "data"
ENV_VAR = "MORPHINJECT_PROFILE_DIR"

FILES = {
    "rules": "joiner_rules.tsv",
    "nouns_table": "noun_classes.tsv",
    "paradigm": "verb_paradigm.tsv",
    "aliases": "relation_aliases.tsv",
    "nouns": "nouns.tsv",
    "verbs": "verbs.tsv",
    "bilingual": "bilingual.tsv",
    "frequencies": "frequencies.tsv",
}


@dataclass(frozen=True)
class LanguageProfile:
    name: str
    directory: Path
    rules: JoinRules
    noun_table: NounTable
    paradigm: VerbParadigmTable
    aliases: RelationAliases
    scheme: FactorScheme = FULL_SCHEME

    def path(self, key: str) -> Path:
        return self.directory / FILES[key]

    def suffix_inventory(self) -> set:
        return self.noun_table.suffixes() | self.paradigm.suffixes()


def profile_dir(name: str = "hi", data_dir=None) -> Path:
    root = Path(data_dir or os.environ.get(ENV_VAR) or PACKAGE_DATA)
    if (root / FILES["rules"]).exists():
        return root
    return root / name


@lru_cache(maxsize=None)
def _load(directory: Path, name: str) -> LanguageProfile:
    if not directory.is_dir():
        raise FileNotFoundError("profile directory %s does not exist" % directory)
    return LanguageProfile(
        name=name,
        directory=directory,
        rules=JoinRules.load(directory / FILES["rules"]),
        noun_table=NounTable.load(directory / FILES["nouns_table"]),
        paradigm=VerbParadigmTable.load(directory / FILES["paradigm"]),
        aliases=RelationAliases.load(directory / FILES["aliases"]),
    )


def load_profile(name: str = "hi", data_dir=None) -> LanguageProfile:
    return _load(profile_dir(name, data_dir).resolve(), name)
