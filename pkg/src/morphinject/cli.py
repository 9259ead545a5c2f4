"""Command-line front end.

Subcommands follow the pipeline stages: classify, inflect, join, extract,
build-dict, inject and simulate.  Options may also come from a JSON config
file (``--config``) whose keys are the long option names with dashes
replaced by underscores; options given on the command line win.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import __version__
from .corpus import SCHEMES, format_sentence, parse_sentence, read_lines, read_parallel, scheme_for_width, write_lines
from .dictgen import (WordFormDictionary, build_from_lexicon, build_from_parallel, classify_from_parallel,
                      filter_infrequent, inject, read_bilingual, read_frequencies)
from .extract import annotate, read_parsed_file
from .nouns import (LexiconLineError, NounClass, NounPair, UnclassifiableError, classify, count_code, gender_code,
                    noun_paradigm, parse_noun_line, read_noun_lexicon)
from .oov import simulate
from .profile import load_profile
from .script import JoinError, JoinRules
from .verbs import VerbParadigmTable, read_verb_lexicon

log = logging.getLogger("morphinject")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Resolved options for one run; file paths are checked before any stage runs."""

    language_profile: str = "hi"
    paths: dict = field(default_factory=dict)
    width: Optional[int] = None
    min_count: int = 0
    mode: str = "factored"

    def require(self, *keys) -> None:
        for key in keys:
            path = self.paths.get(key)
            if path is None:
                raise UsageError("missing required option --%s" % key.replace("_", "-"))
            if not Path(path).is_file():
                raise UsageError("--%s: no such file: %s" % (key.replace("_", "-"), path))

    def check(self) -> None:
        for key, path in self.paths.items():
            if path is not None and not Path(path).is_file():
                raise UsageError("--%s: no such file: %s" % (key.replace("_", "-"), path))


PATH_OPTIONS = ("lexicon", "verbs", "bilingual", "paradigm", "rules", "freq", "corpus_src", "corpus_tgt",
                "align", "parsed", "dict", "test")


def _config(args) -> RunConfig:
    profile = load_profile(args.profile)
    paths = {k: getattr(args, k, None) for k in PATH_OPTIONS}
    cfg = RunConfig(language_profile=args.profile, paths=paths, width=getattr(args, "width", None),
                    min_count=getattr(args, "min_count", None) or 0, mode=getattr(args, "mode", None) or "factored")
    cfg.check()
    cfg.profile = profile  # type: ignore[attr-defined]
    return cfg


def _rules(cfg) -> JoinRules:
    p = cfg.paths.get("rules")
    return JoinRules.load(p) if p else cfg.profile.rules


def _paradigm(cfg) -> VerbParadigmTable:
    p = cfg.paths.get("paradigm")
    return VerbParadigmTable.load(p) if p else cfg.profile.paradigm


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout
    return open(path, "w", encoding="utf-8")


def cmd_classify(args) -> int:
    cfg = _config(args)
    path = args.lexicon_file or cfg.paths.get("lexicon")
    if path is None:
        raise UsageError("classify needs a lexicon file")
    cfg.paths["lexicon"] = path
    cfg.require("lexicon")
    failures = 0
    out = _open_out(args.out)
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip() or line.startswith("#"):
                continue
            try:
                entry = parse_noun_line(line, lineno)
                klass = classify(entry)
            except (LexiconLineError, UnclassifiableError) as exc:
                failures += 1
                msg = str(exc) if isinstance(exc, LexiconLineError) else "line %d: %s" % (lineno, exc)
                print("%s: %s" % (path, msg), file=sys.stderr)
                continue
            out.write("%s\t%s\t%s\t%s\n" % (entry.root, gender_code(entry.gender), count_code(entry.countability),
                                             klass.value))
    if out is not sys.stdout:
        out.close()
    return 1 if failures else 0


def cmd_inflect(args) -> int:
    cfg = _config(args)
    rules = _rules(cfg)
    table = cfg.profile.noun_table
    entries = []
    failures = 0
    if args.root:
        if len(args.root) != 3:
            raise UsageError("inflect takes ROOT GENDER COUNTABILITY (or --lexicon)")
        try:
            entries.append(parse_noun_line("\t".join(args.root), 0))
        except LexiconLineError as exc:
            raise UsageError(str(exc).replace("line 0: ", "")) from None
    elif cfg.paths.get("lexicon"):
        errors: list = []
        entries = read_noun_lexicon(cfg.paths["lexicon"], errors)
        for exc in errors:
            print("%s: %s" % (cfg.paths["lexicon"], exc), file=sys.stderr)
        failures += len(errors)
    else:
        raise UsageError("inflect needs ROOT GENDER COUNTABILITY or --lexicon")
    out = _open_out(args.out)
    for entry in entries:
        try:
            records = noun_paradigm(NounPair(args.source or "x", entry), table=table, rules=rules)
        except (UnclassifiableError, JoinError) as exc:
            failures += 1
            print("%s: %s" % (entry.root, exc), file=sys.stderr)
            continue
        for rec in records:
            number, case = rec.source_factors
            out.write("%s\t%s\t%s\t%s\t%s\n" % (entry.root, number, case, rec.target_surface,
                                                rec.target_suffix or "null"))
    if out is not sys.stdout:
        out.close()
    return 1 if failures else 0


def cmd_join(args) -> int:
    cfg = _config(args)
    rules = _rules(cfg)
    suffix = "" if args.suffix in (None, "null") else args.suffix
    try:
        print(rules.join(args.root, suffix, NounClass(args.noun_class) if args.noun_class else None))
    except JoinError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    return 0


def cmd_extract(args) -> int:
    cfg = _config(args)
    cfg.require("parsed")
    scheme = SCHEMES[args.factors]
    graphs = read_parsed_file(cfg.paths["parsed"], cfg.profile.aliases)
    out = _open_out(args.out)
    for graph in graphs:
        out.write(format_sentence(annotate(graph, scheme)) + "\n")
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_build_dict(args) -> int:
    cfg = _config(args)
    rules = _rules(cfg)
    table = cfg.profile.noun_table
    if args.source == "lexicon":
        lexicon = cfg.paths.get("lexicon") or cfg.profile.path("nouns")
        verbs_path = cfg.paths.get("verbs") or cfg.profile.path("verbs")
        bilingual_path = cfg.paths.get("bilingual") or cfg.profile.path("bilingual")
        errors: list = []
        nouns = read_noun_lexicon(lexicon, errors)
        for exc in errors:
            print("%s: %s" % (lexicon, exc), file=sys.stderr)
        verbs = read_verb_lexicon(verbs_path) if not args.no_verbs else []
        dictionary = build_from_lexicon(nouns, verbs, read_bilingual(bilingual_path), table=table,
                                        paradigm=_paradigm(cfg), rules=rules)
        failures = len(errors)
    else:
        cfg.require("corpus_src", "corpus_tgt", "align")
        corpus = read_parallel(cfg.paths["corpus_src"], cfg.paths["corpus_tgt"], cfg.paths["align"])
        evidence = classify_from_parallel(corpus, table=table)
        dictionary = build_from_parallel(corpus, evidence, table=table, rules=rules)
        failures = 0
        for pair, ev in sorted(evidence.items(), key=lambda kv: (kv[0].source_root, kv[0].target.root)):
            best = ev.best()
            print("%s\t%s\t%s\t%s" % (pair.source_root, pair.target.root, best.value if best else "-",
                                      " ".join("%s=%d" % (c.value, n) for c, n in ev.counts.items())),
                  file=sys.stderr)
    if cfg.min_count:
        freq_path = cfg.paths.get("freq") or cfg.profile.path("frequencies")
        dictionary = filter_infrequent(dictionary, read_frequencies(freq_path), cfg.min_count)
    for root, reason in dictionary.skipped:
        print("skipped %s: %s" % (root, reason), file=sys.stderr)
    out = _open_out(args.out)
    for line in dictionary.to_lines():
        out.write(line + "\n")
    if out is not sys.stdout:
        out.close()
    counts = dictionary.counts_by_pos()
    print("records\tnoun=%d\tverb=%d\ttotal=%d" % (counts["noun"], counts["verb"], counts["total"]), file=sys.stderr)
    if args.figure:
        from .plots import plot_dictionary_summary

        classes: dict = {}
        for rec in dictionary:
            if rec.noun_class is not None:
                classes[rec.noun_class.value] = classes.get(rec.noun_class.value, 0) + 1
        plot_dictionary_summary(counts, args.figure, {k: v // 4 for k, v in classes.items()})
    return 1 if failures else 0


def cmd_inject(args) -> int:
    cfg = _config(args)
    cfg.require("corpus_src", "corpus_tgt", "dict")
    if not args.out:
        raise UsageError("inject needs --out PREFIX")
    src = read_lines(cfg.paths["corpus_src"])
    tgt = read_lines(cfg.paths["corpus_tgt"])
    if len(src) != len(tgt):
        raise UsageError("corpus sides differ in length (%d vs %d)" % (len(src), len(tgt)))
    align = read_lines(cfg.paths["align"]) if cfg.paths.get("align") else None
    dictionary = WordFormDictionary.read(cfg.paths["dict"])
    scheme = scheme_for_width(cfg.width) if cfg.width and cfg.mode == "factored" else None
    lines = inject(list(zip(src, tgt)), dictionary, cfg.mode, scheme)
    added = len(lines) - len(src)
    write_lines(args.out + ".src", (s for s, _ in lines))
    write_lines(args.out + ".tgt", (t for _, t in lines))
    if align is not None:
        write_lines(args.out + ".align", list(align) + ["0-0"] * added)
    print("corpus=%d\tadded=%d\ttotal=%d" % (len(src), added, len(lines)), file=sys.stderr)
    return 0


def cmd_simulate(args) -> int:
    cfg = _config(args)
    cfg.require("corpus_src", "corpus_tgt", "align", "test")
    src = read_lines(cfg.paths["corpus_src"])
    tgt = read_lines(cfg.paths["corpus_tgt"])
    align = read_lines(cfg.paths["align"])
    test = [parse_sentence(l) for l in read_lines(cfg.paths["test"])]
    dictionary = WordFormDictionary.read(cfg.paths["dict"]) if cfg.paths.get("dict") else None
    comparison = simulate(src, tgt, align, test, dictionary, cfg.mode)
    rows = comparison.to_rows()
    for row in rows:
        print("\t".join(row))
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        write_lines(outdir / "report.tsv", ("\t".join(r) for r in rows))
        (outdir / "report.json").write_text(comparison.to_json() + "\n", encoding="utf-8")
        from .plots import plot_oov_comparison

        plot_oov_comparison(comparison, outdir / "oov.png")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--profile", default=None, help="language profile (default hi)")
    common.add_argument("--config", default=None, help="JSON file with option defaults")
    common.add_argument("--rules", default=None, help="joiner rules TSV")
    common.add_argument("--out", default=None, help="output path (stdout when omitted)")

    parser = argparse.ArgumentParser(prog="morphinject", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="predict noun classes for a lexicon")
    p.add_argument("lexicon_file", nargs="?", help="noun lexicon TSV")
    p.add_argument("--lexicon", default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("inflect", parents=[common], help="print the four noun forms")
    p.add_argument("root", nargs="*", help="ROOT GENDER(m|f) COUNTABILITY(count|mass)")
    p.add_argument("--lexicon", default=None)
    p.add_argument("--source", default=None, help="English lemma for the records")
    p.set_defaults(func=cmd_inflect)

    p = sub.add_parser("join", parents=[common], help="join a root and a suffix")
    p.add_argument("root")
    p.add_argument("suffix", nargs="?")
    p.add_argument("--class", dest="noun_class", choices=[c.value for c in NounClass])
    p.set_defaults(func=cmd_join)

    p = sub.add_parser("extract", parents=[common], help="factor parsed English sentences")
    p.add_argument("--parsed", default=None)
    p.add_argument("--factors", choices=sorted(SCHEMES), default="noun")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("build-dict", parents=[common], help="build a word-form dictionary")
    p.add_argument("--source", choices=("lexicon", "parallel"), default="lexicon")
    p.add_argument("--lexicon", default=None)
    p.add_argument("--verbs", default=None, help="verb lexicon TSV (English lemma, Hindi stem)")
    p.add_argument("--no-verbs", action="store_true")
    p.add_argument("--bilingual", default=None)
    p.add_argument("--paradigm", default=None)
    p.add_argument("--freq", default=None, help="frequency list for --min-count")
    p.add_argument("--min-count", type=int, default=None)
    p.add_argument("--corpus-src", default=None)
    p.add_argument("--corpus-tgt", default=None)
    p.add_argument("--align", default=None)
    p.add_argument("--figure", default=None, help="write a summary PNG here")
    p.set_defaults(func=cmd_build_dict)

    p = sub.add_parser("inject", parents=[common], help="append a dictionary to a training corpus")
    p.add_argument("--corpus-src", default=None)
    p.add_argument("--corpus-tgt", default=None)
    p.add_argument("--align", default=None)
    p.add_argument("--dict", default=None)
    p.add_argument("--mode", choices=("factored", "surface"), default=None)
    p.add_argument("--width", type=int, default=None)
    p.set_defaults(func=cmd_inject)

    p = sub.add_parser("simulate", parents=[common], help="OOV counts before and after injection")
    p.add_argument("--corpus-src", default=None)
    p.add_argument("--corpus-tgt", default=None)
    p.add_argument("--align", default=None)
    p.add_argument("--test", default=None, help="factored source sentences")
    p.add_argument("--dict", default=None)
    p.add_argument("--mode", choices=("factored", "surface"), default=None)
    p.set_defaults(func=cmd_simulate)
    return parser


def _apply_config(args) -> None:
    if args.config:
        with open(args.config, encoding="utf-8") as f:
            conf = json.load(f)
        for key, value in conf.items():
            key = key.replace("-", "_")
            if hasattr(args, key) and getattr(args, key) in (None, False, []):
                setattr(args, key, value)
    if args.profile is None:
        args.profile = "hi"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        _apply_config(args)
        return args.func(args)
    except UsageError as exc:
        print("morphinject %s: error: %s" % (args.command, exc), file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print("morphinject %s: error: %s" % (args.command, exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
