"""Morphology injection for factored MT corpora."""

from .script import EndingCategory, JoinError, ending_category, graphemes, join, split
from .nouns import NounClass, NounLexEntry, NounPair, NumberCase, classify, noun_paradigm, suffix_for
from .verbs import VerbFeatures, VerbLexEntry, verb_paradigm, verb_suffixes
from .dictgen import (WordFormDictionary, WordFormRecord, build_from_lexicon, build_from_parallel,
                      classify_from_parallel, factorize_target, filter_infrequent, inject)
from .oov import ToyFactoredModel, compare, count_oov, train, translate_token
from .profile import LanguageProfile, load_profile

__version__ = "0.1.0"
