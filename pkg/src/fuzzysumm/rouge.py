"""ROUGE-1 (unigram overlap) scoring and corpus-level averaging."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EmptyInput, MissingFile
from .porter import stem

__all__ = [
    "BINS",
    "CorpusReport",
    "RougeConfig",
    "RougeScore",
    "bin_label",
    "evaluate_corpus",
    "histogram",
    "rouge_1",
    "rouge_tokens",
]

# (label, lower bound inclusive, upper bound exclusive); the last bin is closed.
BINS = (
    ("<0.3", float("-inf"), 0.3),
    ("0.3-0.4", 0.3, 0.4),
    ("0.4-0.5", 0.4, 0.5),
    ("0.5-0.6", 0.5, 0.6),
    ("0.6-0.7", 0.6, 0.7),
    (">=0.7", 0.7, float("inf")),
)

_NON_ALNUM = re.compile(r"[^0-9a-z]+")


@dataclass(frozen=True)
class RougeConfig:
    stem: bool = False
    multi_reference: str = "max"  # or "average"

    def __post_init__(self):
        if self.multi_reference not in ("max", "average"):
            raise ValueError(f"multi_reference must be 'max' or 'average', not {self.multi_reference!r}")


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f_measure: float
    match_count: float = 0
    candidate_count: float = 0
    reference_count: float = 0


def _f(p, r):
    return 0.0 if p + r == 0 else 2 * p * r / (p + r)


def rouge_tokens(text: str, use_stem: bool = False) -> list[str]:
    """Lowercase, replace anything but ASCII letters/digits with space, split."""
    toks = _NON_ALNUM.sub(" ", text.lower()).split()
    if use_stem:
        toks = [stem(t) for t in toks]
    return toks


def _score(cand: Counter, ref: Counter) -> RougeScore:
    match = sum(min(n, ref[w]) for w, n in cand.items())
    nc = sum(cand.values())
    nr = sum(ref.values())
    p = match / nc if nc else 0.0
    r = match / nr if nr else 0.0
    return RougeScore(p, r, _f(p, r), match, nc, nr)


def rouge_1(candidate: str, references: Sequence[str] | str, config: RougeConfig = RougeConfig()) -> RougeScore:
    """Clipped unigram precision/recall/F1 against one or more references.

    With several references the triple of the highest-recall reference is
    returned (first one on ties), or the per-reference average when
    ``config.multi_reference == "average"``.
    """
    if isinstance(references, str):
        references = [references]
    cand = Counter(rouge_tokens(candidate, config.stem))
    refs = [Counter(rouge_tokens(r, config.stem)) for r in references]
    refs = [r for r in refs if r]
    if not cand or not refs:
        raise EmptyInput("candidate and at least one reference must contain words")
    scores = [_score(cand, r) for r in refs]
    if config.multi_reference == "max":
        return max(scores, key=lambda s: s.recall)
    k = len(scores)
    p = sum(s.precision for s in scores) / k
    r = sum(s.recall for s in scores) / k
    return RougeScore(
        p, r, _f(p, r),
        sum(s.match_count for s in scores) / k,
        scores[0].candidate_count,
        sum(s.reference_count for s in scores) / k,
    )


def bin_label(f: float) -> str:
    for label, lo, hi in BINS[:-1]:
        if lo <= f < hi:
            return label
    return BINS[-1][0]


def histogram(values: Iterable[float]) -> dict[str, int]:
    counts = {label: 0 for label, _, _ in BINS}
    for v in values:
        counts[bin_label(v)] += 1
    return counts


@dataclass
class CorpusReport:
    per_document: dict[str, RougeScore]
    precision: float
    recall: float
    f_measure: float
    histogram: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "documents": {k: asdict(v) for k, v in self.per_document.items()},
            "average": {"precision": self.precision, "recall": self.recall, "f_measure": self.f_measure},
            "histogram": dict(self.histogram),
            "count": len(self.per_document),
        }


def _doc_id(candidate: Path) -> str:
    name = candidate.name
    if name.endswith(".sum.txt"):
        return name[: -len(".sum.txt")].rsplit(".", 1)[0]
    return candidate.stem


def summarize_scores(per_doc: dict[str, RougeScore]) -> CorpusReport:
    """Average per-document scores, summing in sorted doc-id order."""
    if not per_doc:
        raise EmptyInput("no documents to average")
    ids = sorted(per_doc)
    n = len(ids)
    p = sum(per_doc[i].precision for i in ids) / n
    r = sum(per_doc[i].recall for i in ids) / n
    f = sum(per_doc[i].f_measure for i in ids) / n
    ordered = {i: per_doc[i] for i in ids}
    return CorpusReport(ordered, p, r, f, histogram(s.f_measure for s in ordered.values()))


def evaluate_corpus(pairs, config: RougeConfig = RougeConfig()) -> CorpusReport:
    """Score ``(candidate_file, [reference_file, ...])`` pairs and average them.

    Per-document F-measures are also binned into :data:`BINS`.
    """
    pairs = list(pairs)
    if not pairs:
        raise EmptyInput("no candidate/reference pairs")
    missing = []
    for cand, refs in pairs:
        for p in (cand, *refs):
            if not Path(p).is_file():
                missing.append(str(p))
        if not refs:
            missing.append(f"references for {cand}")
    if missing:
        raise MissingFile(f"missing files: {', '.join(missing)}", missing)
    per_doc = {}
    for cand, refs in pairs:
        cand = Path(cand)
        ref_texts = [Path(r).read_text(encoding="utf-8") for r in refs]
        per_doc[_doc_id(cand)] = rouge_1(cand.read_text(encoding="utf-8"), ref_texts, config)
    return summarize_scores(per_doc)
