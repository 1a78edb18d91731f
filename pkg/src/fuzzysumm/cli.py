"""Command-line front end.

    fuzzysumm summarize --input DIR --method all --out DIR
    fuzzysumm evaluate --summaries DIR --refs DIR --out DIR
    fuzzysumm features --input DIR --out features.csv

Settings may also come from an INI file (``--config``), section
``[fuzzysumm]``, keys named like the long options with dashes or
underscores; command-line flags win. Exit status is 0 on success, 1 if
some documents failed, 2 on configuration or rule-file errors.
"""

from __future__ import annotations

import argparse
import configparser
import logging
import sys
from pathlib import Path

from . import __version__
from .errors import ConfigError, FuzzyError, FuzzySummError, MissingFile
from .features import write_feature_csv
from .fuzzy import DEFAULT_RESOLUTION, default_system
from .pipeline import SummarizeOptions, list_corpus, run_corpus, sidecar
from .preprocess import load_stopwords
from .report import collect_pairs, write_reports
from .rouge import RougeConfig
from .scoring import Method

log = logging.getLogger("fuzzysumm")

EXIT_OK, EXIT_DOC_FAILURES, EXIT_CONFIG = 0, 1, 2

DEFAULTS = {
    "method": "all",
    "rate": None,
    "budget_words": None,
    "rules": None,
    "stopwords": None,
    "weights": None,
    "workers": 1,
    "title": None,
    "no_title": False,
    "strip_tags": False,
    "resolution": DEFAULT_RESOLUTION,
    "rouge_stem": False,
    "rouge_multi": "max",
}

_BOOL_KEYS = {"no_title", "strip_tags", "rouge_stem"}
_INT_KEYS = {"budget_words", "workers", "resolution"}
_FLOAT_KEYS = {"rate"}


def _read_config(path):
    parser = configparser.ConfigParser()
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except (OSError, configparser.Error) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    if not parser.has_section("fuzzysumm"):
        raise ConfigError(f"{path}: missing [fuzzysumm] section")
    out = {}
    section = parser["fuzzysumm"]
    for key in section:
        name = key.replace("-", "_")
        try:
            if name in _BOOL_KEYS:
                out[name] = section.getboolean(key)
            elif name in _INT_KEYS:
                out[name] = section.getint(key)
            elif name in _FLOAT_KEYS:
                out[name] = section.getfloat(key)
            else:
                out[name] = section[key]
        except ValueError as exc:
            raise ConfigError(f"{path}: bad value for {key}: {exc}") from None
    return out


def _settings(args):
    """Merge defaults < config file < command line."""
    merged = dict(DEFAULTS)
    if getattr(args, "config", None):
        merged.update(_read_config(args.config))
    for key, value in vars(args).items():
        if value is not None and value is not False:
            merged[key] = value
    return merged


def _parse_weights(text):
    if text is None:
        return None
    try:
        weights = tuple(float(w) for w in str(text).replace(",", " ").split())
    except ValueError:
        raise ConfigError(f"weights must be numbers: {text!r}") from None
    if len(weights) != 8 or any(w < 0 for w in weights):
        raise ConfigError("weights must be 8 non-negative numbers")
    return weights


def _methods(name):
    if name == "all":
        return (Method.GSM, Method.FUZZY, Method.BASELINE)
    try:
        return (Method(name),)
    except ValueError:
        raise ConfigError(f"unknown method {name!r}") from None


def _options(s, need_system=True):
    if s["rate"] is not None and s["budget_words"] is not None:
        raise ConfigError("--rate and --budget-words are mutually exclusive")
    rate = s["rate"]
    if rate is None and s["budget_words"] is None:
        rate = 0.2
    if rate is not None and not 0.0 < rate <= 1.0:
        raise ConfigError(f"rate {rate} not in (0, 1]")
    if s["budget_words"] is not None and s["budget_words"] < 1:
        raise ConfigError("budget must be a positive word count")
    methods = _methods(s["method"]) if need_system else ()
    system = None
    if Method.FUZZY in methods:
        system = default_system(s["rules"], resolution=s["resolution"])
    stopwords = load_stopwords(s["stopwords"]) if s["stopwords"] else None
    title = "" if s["no_title"] else s["title"]
    return SummarizeOptions(
        methods=methods,
        compression_rate=rate,
        word_budget=s["budget_words"],
        system=system,
        weights=_parse_weights(s["weights"]),
        stopwords=stopwords,
        title=title,
        strip_tags=s["strip_tags"],
    )


def _report_failures(results):
    failed = [r for r in results if r.error]
    for r in failed:
        print(f"error: {r.error}", file=sys.stderr)
    if failed:
        print(f"{len(failed)} of {len(results)} documents failed", file=sys.stderr)
    return EXIT_DOC_FAILURES if failed else EXIT_OK


def cmd_summarize(args):
    s = _settings(args)
    opts = _options(s)
    paths = list_corpus(s["input"])
    out = Path(s["out"])
    out.mkdir(parents=True, exist_ok=True)
    results = run_corpus(paths, opts, workers=s["workers"])
    for res in sorted((r for r in results if not r.error), key=lambda r: r.doc_id):
        for summary in res.summaries:
            stem = f"{res.doc_id}.{summary.method}"
            (out / f"{stem}.sum.txt").write_text(summary.text + "\n", encoding="utf-8")
            (out / f"{stem}.json").write_text(sidecar(summary, res.sentence_count), encoding="utf-8")
    log.info("summarized %d documents into %s", len(results), out)
    return _report_failures(results)


def cmd_features(args):
    s = _settings(args)
    opts = _options(s, need_system=False)
    paths = list_corpus(s["input"])
    results = run_corpus(paths, opts, workers=s["workers"], features_only=True)
    out = Path(s["out"])
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8", newline="") as fh:
        write_feature_csv(((r.doc_id, r.features) for r in results if not r.error), fh)
    return _report_failures(results)


def cmd_evaluate(args):
    s = _settings(args)
    config = RougeConfig(stem=bool(s["rouge_stem"]), multi_reference=s["rouge_multi"])
    pairs = collect_pairs(Path(s["summaries"]), Path(s["refs"]))
    write_reports(pairs, Path(s["out"]), config)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="fuzzysumm", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="INI file with a [fuzzysumm] section")
        p.add_argument("--workers", type=int, help="worker processes (default 1)")

    def doc_opts(p):
        p.add_argument("--input", required=True, help="directory of .txt documents, or one file")
        p.add_argument("--stopwords", help="stopword file (one word per line)")
        title = p.add_mutually_exclusive_group()
        title.add_argument("--title", help="use this title for every document")
        title.add_argument("--no-title", action="store_true", help="documents have no title line")
        p.add_argument("--strip-tags", action="store_true", help="remove <...> markup first")

    p = sub.add_parser("summarize", help="write extractive summaries")
    common(p)
    doc_opts(p)
    p.add_argument("--method", choices=["gsm", "fuzzy", "baseline", "all"])
    size = p.add_mutually_exclusive_group()
    size.add_argument("--rate", type=float, help="compression rate (default 0.2)")
    size.add_argument("--budget-words", type=int, help="word budget instead of a rate")
    p.add_argument("--rules", help="fuzzy rule file (default: packaged rules)")
    p.add_argument("--weights", help="8 comma-separated GSM feature weights")
    p.add_argument("--resolution", type=int, help="defuzzifier sample points")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("evaluate", help="ROUGE-1 against reference summaries")
    common(p)
    p.add_argument("--summaries", required=True)
    p.add_argument("--refs", required=True, help="directory with one sub-directory per doc id")
    p.add_argument("--out", required=True)
    p.add_argument("--rouge-stem", action="store_true", help="Porter-stem tokens before matching")
    p.add_argument("--rouge-multi", choices=["max", "average"])
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("features", help="export the feature matrix as CSV")
    common(p)
    doc_opts(p)
    p.add_argument("--out", required=True, help="CSV file to write")
    p.set_defaults(func=cmd_features)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    func = args.func
    del args.func
    try:
        return func(args)
    except (ConfigError, FuzzyError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except MissingFile as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOC_FAILURES
    except (FuzzySummError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
