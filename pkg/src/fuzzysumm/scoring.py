from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .features import FeatureVector
from .fuzzy import FuzzySystem

__all__ = ["Method", "ScoredSentence", "score_fuzzy", "score_gsm", "score_sentences"]


class Method(str, enum.Enum):
    GSM = "gsm"
    FUZZY = "fuzzy"
    BASELINE = "baseline"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ScoredSentence:
    sentence_index: int
    score: float
    method: Method


def score_gsm(feature_vector: FeatureVector, weights: Sequence[float] | None = None) -> float:
    """Sum of the eight feature scores, optionally weighted (unit weights by default)."""
    total = 0.0
    if weights is None:
        for v in feature_vector:
            total += v
        return total
    weights = tuple(weights)
    if len(weights) != 8:
        raise ValueError("expected 8 weights")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be non-negative")
    for w, v in zip(weights, feature_vector):
        total += w * v
    return total


def score_fuzzy(system: FuzzySystem, feature_vector: FeatureVector) -> float:
    return system.evaluate(feature_vector)


def score_sentences(
    vectors: Sequence[FeatureVector],
    method: Method | str,
    system: FuzzySystem | None = None,
    weights: Sequence[float] | None = None,
) -> list[ScoredSentence]:
    method = Method(method)
    if method is Method.GSM:
        scores = [score_gsm(fv, weights) for fv in vectors]
    elif method is Method.FUZZY:
        if system is None:
            raise ValueError("fuzzy scoring needs a FuzzySystem")
        scores = system.evaluate_many(vectors)
    else:
        raise ValueError(f"{method} does not score sentences")
    return [ScoredSentence(i, s, method) for i, s in enumerate(scores)]
