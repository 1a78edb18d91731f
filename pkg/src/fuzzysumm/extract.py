"""Sentence selection: top-scored sentences, re-emitted in document order."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InvalidRate
from .preprocess import Document
from .scoring import Method, ScoredSentence

__all__ = [
    "Summary",
    "baseline_summary",
    "rank",
    "render_summary",
    "select_by_budget",
    "select_sentences",
    "summary_size",
]

BASELINE_WORDS = 100


@dataclass(frozen=True)
class Summary:
    doc_id: str
    method: Method
    selected_indices: tuple[int, ...]
    compression_rate: float | None = None
    word_budget: int | None = None
    scores: tuple[float, ...] = field(default=(), repr=False)
    text: str = ""

    def __post_init__(self):
        idx = self.selected_indices
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError("selected_indices must be strictly increasing")


def summary_size(n_sentences: int, compression_rate: float) -> int:
    """``max(1, ceil(rate * n))``, computed on the rate's decimal value so
    that e.g. 0.2 * 15 gives 3 rather than 4."""
    if not 0.0 < compression_rate <= 1.0:
        raise InvalidRate(f"compression rate {compression_rate!r} not in (0, 1]")
    exact = Fraction(str(compression_rate)) * n_sentences
    return max(1, math.ceil(exact))


def rank(scores: Sequence[ScoredSentence]) -> list[ScoredSentence]:
    """Descending score; equal scores keep document order."""
    return sorted(scores, key=lambda s: (-s.score, s.sentence_index))


def select_sentences(scores: Sequence[ScoredSentence], compression_rate: float, doc_id: str = "") -> Summary:
    if not scores:
        raise ValueError("no scored sentences")
    m = summary_size(len(scores), compression_rate)
    chosen = sorted(s.sentence_index for s in rank(scores)[:m])
    by_index = sorted(scores, key=lambda s: s.sentence_index)
    return Summary(
        doc_id,
        scores[0].method,
        tuple(chosen),
        compression_rate=compression_rate,
        scores=tuple(s.score for s in by_index),
    )


def select_by_budget(
    scores: Sequence[ScoredSentence],
    word_counts: Sequence[int],
    budget_words: int,
    doc_id: str = "",
) -> Summary:
    """Take sentences by rank until the next one would overflow ``budget_words``.

    The top-ranked sentence is always taken.
    """
    if not scores:
        raise ValueError("no scored sentences")
    if budget_words < 1:
        raise ValueError("word budget must be positive")
    chosen = []
    used = 0
    for s in rank(scores):
        n = word_counts[s.sentence_index]
        if chosen and used + n > budget_words:
            break
        chosen.append(s.sentence_index)
        used += n
    by_index = sorted(scores, key=lambda s: s.sentence_index)
    return Summary(
        doc_id,
        scores[0].method,
        tuple(sorted(chosen)),
        word_budget=budget_words,
        scores=tuple(s.score for s in by_index),
    )


def render_summary(summary: Summary, document: Document) -> str:
    n = len(document.sentences)
    for i in summary.selected_indices:
        if not 0 <= i < n:
            raise IndexError(f"sentence index {i} out of range for {n} sentences")
    return " ".join(document.sentences[i].text for i in summary.selected_indices)


def baseline_summary(document: Document, n_words: int = BASELINE_WORDS) -> Summary:
    """Lead baseline: the first ``n_words`` whitespace-separated words of the body."""
    words: list[str] = []
    touched = []
    for sent in document.sentences:
        if len(words) >= n_words:
            break
        piece = sent.text.split()
        words.extend(piece[: n_words - len(words)])
        touched.append(sent.index)
    return Summary(
        document.id,
        Method.BASELINE,
        tuple(touched),
        word_budget=n_words,
        text=" ".join(words),
    )
