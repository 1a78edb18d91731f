"""The eight per-sentence feature scores, each normalized to [0, 1]."""

from __future__ import annotations

import csv
import math
from collections import Counter
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Mapping

import numpy as np

from . import kernels
from .preprocess import Document, Sentence

__all__ = [
    "FEATURE_NAMES",
    "FeatureVector",
    "TermWeightTable",
    "build_term_weights",
    "cosine_similarity",
    "extract_features",
    "proper_noun_count",
    "score_length",
    "score_numeric",
    "score_position",
    "score_proper_noun",
    "score_similarity",
    "score_term_weight",
    "score_thematic",
    "score_title",
    "sentence_weight_sums",
    "similarity_sums",
    "write_feature_csv",
]

POSITION_WINDOW = 5


def _ratio(num, den):
    return num / den if den else 0.0


@dataclass(frozen=True)
class FeatureVector:
    f1_title: float
    f2_length: float
    f3_term_weight: float
    f4_position: float
    f5_similarity: float
    f6_proper_noun: float
    f7_thematic: float
    f8_numeric: float

    def __post_init__(self):
        for name, value in zip(FEATURE_NAMES, astuple(self)):
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name}={value!r} outside [0, 1]")

    def __iter__(self):
        return iter(astuple(self))

    def as_dict(self) -> dict[str, float]:
        return dict(zip(FEATURE_NAMES, astuple(self)))


FEATURE_NAMES = tuple(f.name for f in fields(FeatureVector))


@dataclass(frozen=True)
class TermWeightTable:
    """tf.isf weights over a document's content stems.

    ``tf`` counts occurrences in the whole document, ``sentence_freq`` the
    number of sentences containing the stem, and
    ``weights[s] = tf[s] * isf[s]`` with ``isf[s] = log10(N / n_s)``.
    """

    n_sentences: int
    tf: Mapping[str, int]
    sentence_freq: Mapping[str, int]
    isf: Mapping[str, float]
    weights: Mapping[str, float]

    def scaled(self, factor: float) -> "TermWeightTable":
        return TermWeightTable(
            self.n_sentences,
            self.tf,
            self.sentence_freq,
            {s: factor * v for s, v in self.isf.items()},
            {s: factor * v for s, v in self.weights.items()},
        )


def build_term_weights(document: Document) -> TermWeightTable:
    n = len(document.sentences)
    tf = Counter()
    sf = Counter()
    for sent in document.sentences:
        tf.update(sent.content_stems)
        sf.update(set(sent.content_stems))
    isf = {s: math.log10(n / sf[s]) for s in sorted(tf)}
    weights = {s: tf[s] * isf[s] for s in isf}
    return TermWeightTable(n, dict(tf), dict(sf), isf, weights)


def score_title(sentence: Sentence, title_stems: Iterable[str]) -> float:
    title = set(title_stems)
    if not title:
        return 0.0
    return len(title.intersection(sentence.content_stems)) / len(title)


def score_length(sentence: Sentence, longest_sentence_word_count: int) -> float:
    return _ratio(len(sentence.tokens), longest_sentence_word_count)


def sentence_weight_sums(document: Document, table: TermWeightTable) -> list[float]:
    return [sum(table.weights[s] for s in sent.content_stems) for sent in document.sentences]


def score_term_weight(sentence: Sentence, table: TermWeightTable, per_sentence_sums) -> float:
    own = sum(table.weights[s] for s in sentence.content_stems)
    return _ratio(own, max(per_sentence_sums, default=0.0))


def score_position(sentence: Sentence) -> float:
    k = sentence.index_in_paragraph
    if k >= POSITION_WINDOW:
        return 0.0
    return (POSITION_WINDOW - k) / POSITION_WINDOW


def _vectors(sentences, table):
    vocab = sorted({s for sent in sentences for s in sent.content_stems})
    col = {s: i for i, s in enumerate(vocab)}
    mat = np.zeros((len(sentences), len(vocab)), dtype=np.float64)
    for row, sent in enumerate(sentences):
        for s, count in Counter(sent.content_stems).items():
            mat[row, col[s]] = count * table.isf[s]
    return mat


def cosine_similarity(s_i: Sentence, s_j: Sentence, table: TermWeightTable) -> float:
    """Cosine of the tf x isf vectors of two sentences; 0 if either is all-zero."""
    u, v = _vectors([s_i, s_j], table)
    return kernels.cosine(u, v)


def similarity_sums(document: Document, table: TermWeightTable) -> list[float]:
    if len(document.sentences) < 2:
        return [0.0] * len(document.sentences)
    return kernels.similarity_sums(_vectors(document.sentences, table))


def score_similarity(sentence: Sentence, document: Document, table: TermWeightTable, sums=None) -> float:
    if sums is None:
        sums = similarity_sums(document, table)
    if len(sums) < 2:
        return 0.0
    return _ratio(sums[sentence.index], max(sums))


def _mid_capitalized(document):
    return {
        tok.lower
        for sent in document.sentences
        for tok in sent.tokens[1:]
        if tok.is_capitalized
    }


def _is_acronym(surface):
    letters = [ch for ch in surface if ch.isalpha()]
    return len(letters) >= 2 and all(ch.isupper() for ch in letters)


def proper_noun_count(sentence: Sentence, mid_capitalized=frozenset()) -> int:
    """Capitalized tokens, skipping a sentence-initial word unless it is an
    acronym or is also seen capitalized mid-sentence (``mid_capitalized``)."""
    n = 0
    for i, tok in enumerate(sentence.tokens):
        if not tok.is_capitalized:
            continue
        if i > 0 or _is_acronym(tok.surface) or tok.lower in mid_capitalized:
            n += 1
    return n


def score_proper_noun(sentence: Sentence, document: Document | None = None) -> float:
    mid = _mid_capitalized(document) if document is not None else frozenset()
    return _ratio(proper_noun_count(sentence, mid), len(sentence.tokens))


def _thematic_count(sentence, thematic):
    return sum(1 for s in sentence.content_stems if s in thematic)


def score_thematic(sentence: Sentence, document: Document) -> float:
    thematic = set(document.thematic_stems)
    best = max((_thematic_count(s, thematic) for s in document.sentences), default=0)
    return _ratio(_thematic_count(sentence, thematic), best)


def score_numeric(sentence: Sentence) -> float:
    return _ratio(sum(t.is_numeric for t in sentence.tokens), len(sentence.tokens))


def extract_features(document: Document) -> list[FeatureVector]:
    sentences = document.sentences
    table = build_term_weights(document)
    longest = max(len(s.tokens) for s in sentences)
    weight_sums = sentence_weight_sums(document, table)
    max_weight = max(weight_sums)
    sim_sums = similarity_sums(document, table)
    max_sim = max(sim_sums)
    thematic = set(document.thematic_stems)
    theme_counts = [_thematic_count(s, thematic) for s in sentences]
    max_theme = max(theme_counts)
    mid = _mid_capitalized(document)

    out = []
    for i, sent in enumerate(sentences):
        out.append(
            FeatureVector(
                f1_title=score_title(sent, document.title_stems),
                f2_length=score_length(sent, longest),
                f3_term_weight=_ratio(weight_sums[i], max_weight),
                f4_position=score_position(sent),
                f5_similarity=_ratio(sim_sums[i], max_sim),
                f6_proper_noun=_ratio(proper_noun_count(sent, mid), len(sent.tokens)),
                f7_thematic=_ratio(theme_counts[i], max_theme),
                f8_numeric=score_numeric(sent),
            )
        )
    return out


def write_feature_csv(rows, fh) -> None:
    """Write ``(doc_id, [FeatureVector, ...])`` pairs as CSV to an open text file."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["doc_id", "sentence_index", *FEATURE_NAMES])
    for doc_id, vectors in rows:
        for i, fv in enumerate(vectors):
            writer.writerow([doc_id, i, *(repr(v) for v in fv)])
