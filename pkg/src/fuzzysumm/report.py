"""Corpus evaluation reports: per-method ROUGE-1 averages and F-measure histograms."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import MissingFile
from .rouge import BINS, CorpusReport, RougeConfig, evaluate_corpus

__all__ = ["METHOD_ORDER", "collect_pairs", "format_table", "write_reports"]

METHOD_ORDER = ("gsm", "fuzzy", "baseline")
_DISPLAY = {"gsm": "GSM", "fuzzy": "Fuzzy", "baseline": "Baseline"}
_SUFFIX = ".sum.txt"


def _method_key(m):
    return (METHOD_ORDER.index(m) if m in METHOD_ORDER else len(METHOD_ORDER), m)


def collect_pairs(summaries_dir: Path, refs_dir: Path) -> dict[str, list[tuple[Path, list[Path]]]]:
    """Match ``<doc_id>.<method>.sum.txt`` files with ``refs/<doc_id>/*.txt``.

    Raises MissingFile naming every doc id that has no reference.
    """
    summaries_dir, refs_dir = Path(summaries_dir), Path(refs_dir)
    if not summaries_dir.is_dir():
        raise MissingFile(f"summary directory not found: {summaries_dir}", [str(summaries_dir)])
    by_method: dict[str, list[tuple[Path, list[Path]]]] = {}
    missing = set()
    for cand in sorted(summaries_dir.glob(f"*{_SUFFIX}")):
        doc_id, _, method = cand.name[: -len(_SUFFIX)].rpartition(".")
        if not doc_id:
            continue
        refs = sorted((refs_dir / doc_id).glob("*.txt")) if (refs_dir / doc_id).is_dir() else []
        if not refs:
            missing.add(doc_id)
            continue
        by_method.setdefault(method, []).append((cand, refs))
    if missing:
        ids = sorted(missing)
        raise MissingFile(f"no reference summaries for: {', '.join(ids)}", ids)
    if not by_method:
        raise MissingFile(f"no *{_SUFFIX} files in {summaries_dir}", [str(summaries_dir)])
    return {m: by_method[m] for m in sorted(by_method, key=_method_key)}


def format_table(reports: dict[str, CorpusReport]) -> str:
    lines = ["ROUGE-1 average precision, recall and F-measure", ""]
    lines.append(f"{'Summarizer':<12}{'Precision':>11}{'Recall':>11}{'F-measure':>11}{'Docs':>7}")
    for method, rep in reports.items():
        name = _DISPLAY.get(method, method)
        lines.append(
            f"{name:<12}{rep.precision:>11.5f}{rep.recall:>11.5f}{rep.f_measure:>11.5f}{len(rep.per_document):>7}"
        )
    lines += ["", "Number of documents per average F-measure range", ""]
    header = f"{'F-measure':<12}" + "".join(f"{_DISPLAY.get(m, m):>10}" for m in reports)
    lines.append(header)
    for label, _, _ in BINS:
        lines.append(f"{label:<12}" + "".join(f"{rep.histogram[label]:>10}" for rep in reports.values()))
    return "\n".join(lines) + "\n"


def write_reports(pairs: dict[str, list], out_dir: Path, config: RougeConfig = RougeConfig()) -> dict[str, CorpusReport]:
    """Write ``rouge_report.json`` and ``rouge_report.txt`` into ``out_dir``."""
    reports = {m: evaluate_corpus(p, config) for m, p in pairs.items()}
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    payload = {
        "config": {"stem": config.stem, "multi_reference": config.multi_reference},
        "methods": {m: rep.to_dict() for m, rep in reports.items()},
    }
    (out_dir / "rouge_report.json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    (out_dir / "rouge_report.txt").write_text(format_table(reports), encoding="utf-8")
    return reports
