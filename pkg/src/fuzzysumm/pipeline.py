"""Per-document summarization pipeline and corpus fan-out."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Sequence

from .errors import FuzzySummError
from .extract import Summary, baseline_summary, render_summary, select_by_budget, select_sentences
from .features import FeatureVector, extract_features
from .fuzzy import FuzzySystem
from .preprocess import Document, build_document, default_stopwords, parse_raw_document, read_raw_document
from .scoring import Method, score_sentences

__all__ = [
    "DocumentResult",
    "SummarizeOptions",
    "list_corpus",
    "run_corpus",
    "sidecar",
    "summarize_document",
    "summarize_text",
]

ALL_METHODS = (Method.GSM, Method.FUZZY, Method.BASELINE)


@dataclass(frozen=True)
class SummarizeOptions:
    methods: tuple[Method, ...] = ALL_METHODS
    compression_rate: float | None = 0.2
    word_budget: int | None = None
    system: FuzzySystem | None = None
    weights: tuple[float, ...] | None = None
    stopwords: frozenset[str] | None = None
    title: str | None = None
    strip_tags: bool = False

    def __post_init__(self):
        if (self.compression_rate is None) == (self.word_budget is None):
            raise ValueError("set exactly one of compression_rate and word_budget")
        if Method.FUZZY in self.methods and self.system is None:
            raise ValueError("fuzzy method needs a FuzzySystem")


@dataclass
class DocumentResult:
    doc_id: str
    summaries: list[Summary] = field(default_factory=list)
    features: list[FeatureVector] = field(default_factory=list)
    sentence_count: int = 0
    error: str | None = None


def _summaries(doc: Document, vectors, opts: SummarizeOptions) -> list[Summary]:
    out = []
    word_counts = [len(s.text.split()) for s in doc.sentences]
    for method in opts.methods:
        if method is Method.BASELINE:
            out.append(baseline_summary(doc))
            continue
        scored = score_sentences(vectors, method, system=opts.system, weights=opts.weights)
        if opts.word_budget is not None:
            summary = select_by_budget(scored, word_counts, opts.word_budget, doc.id)
        else:
            summary = select_sentences(scored, opts.compression_rate, doc.id)
        out.append(replace(summary, text=render_summary(summary, doc)))
    return out


def summarize_document(doc: Document, opts: SummarizeOptions) -> DocumentResult:
    vectors = extract_features(doc)
    return DocumentResult(doc.id, _summaries(doc, vectors, opts), vectors, len(doc.sentences))


def summarize_text(text: str, opts: SummarizeOptions, doc_id: str = "doc") -> DocumentResult:
    raw = parse_raw_document(doc_id, text, title=opts.title, strip_tags=opts.strip_tags)
    return summarize_document(build_document(raw, opts.stopwords or default_stopwords()), opts)


def _process(path, opts, features_only=False):
    path = Path(path)
    try:
        raw = read_raw_document(path, title=opts.title, strip_tags=opts.strip_tags)
        doc = build_document(raw, opts.stopwords or default_stopwords())
        if features_only:
            return DocumentResult(doc.id, [], extract_features(doc), len(doc.sentences))
        return summarize_document(doc, opts)
    except (FuzzySummError, OSError, ValueError) as exc:
        return DocumentResult(path.stem, error=f"{path}: {exc}")


def list_corpus(path) -> list[Path]:
    """``.txt`` files of a directory in name order, or a single file."""
    path = Path(path)
    if path.is_file():
        return [path]
    if not path.is_dir():
        raise FileNotFoundError(f"input not found: {path}")
    return sorted(p for p in path.iterdir() if p.suffix == ".txt" and p.is_file())


def run_corpus(paths: Sequence[Path], opts: SummarizeOptions, workers: int = 1,
               features_only: bool = False) -> list[DocumentResult]:
    """Process documents independently; results come back in input order."""
    if workers <= 1 or len(paths) <= 1:
        return [_process(p, opts, features_only) for p in paths]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_process, p, opts, features_only) for p in paths]
        return [f.result() for f in futures]


def sidecar(summary: Summary, sentence_count: int) -> str:
    data = {
        "doc_id": summary.doc_id,
        "method": str(summary.method),
        "compression_rate": summary.compression_rate,
        "word_budget": summary.word_budget,
        "sentence_count": sentence_count,
        "selected_indices": list(summary.selected_indices),
        "scores": list(summary.scores),
    }
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
