"""Mamdani fuzzy inference with triangular membership functions.

Inference is classic min/max: a rule fires at ``weight * min`` of its
antecedent degrees, each output term is clipped at the strongest firing of
its rules, the clipped terms are merged with ``max``, and the resulting
curve is reduced to a crisp value by its sampled centroid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Mapping, Sequence

import numpy as np

from . import kernels
from .errors import ConflictingRules, FuzzyError, MissingInput, OutOfUniverse, UnknownTerm, UnknownVariable

__all__ = [
    "AggregatedCurve",
    "FuzzyRule",
    "FuzzySystem",
    "LinguisticVariable",
    "RuleBase",
    "TriangularMF",
    "default_input_variables",
    "default_output_variable",
    "default_system",
    "defuzzify_centroid",
    "five_term_partition",
    "mf_eval",
]

UNIVERSE_SLACK = 1e-9
DEFAULT_RESOLUTION = 1001
MIN_RESOLUTION = 101
NO_FIRE_FALLBACK = 0.5

INPUT_NAMES = (
    "f1_title",
    "f2_length",
    "f3_term_weight",
    "f4_position",
    "f5_similarity",
    "f6_proper_noun",
    "f7_thematic",
    "f8_numeric",
)

# Short names and the long names used in the literature's sample rule.
INPUT_ALIASES = {
    "f1_title": ("f1", "NoWordInTitle"),
    "f2_length": ("f2", "SentenceLength"),
    "f3_term_weight": ("f3", "TermFreq", "TermWeight"),
    "f4_position": ("f4", "SentencePosition"),
    "f5_similarity": ("f5", "SentenceSimilarity"),
    "f6_proper_noun": ("f6", "NoProperNoun"),
    "f7_thematic": ("f7", "NoThematicWord"),
    "f8_numeric": ("f8", "NumericalData"),
}


@dataclass(frozen=True)
class TriangularMF:
    a: float
    b: float
    c: float

    def __post_init__(self):
        if not self.a <= self.b <= self.c:
            raise ValueError(f"triangle needs a <= b <= c, got {self.a}, {self.b}, {self.c}")
        if self.a == self.c:
            raise ValueError(f"degenerate triangle at {self.a}")

    def __call__(self, x: float) -> float:
        return kernels.tri(self.a, self.b, self.c, x)


def mf_eval(mf: TriangularMF, x: float) -> float:
    """``max(min((x-a)/(b-a), (c-x)/(c-b)), 0)``.

    A vertical side (``a == b`` or ``b == c``) is a shoulder: membership is 1
    on that side of the peak up to the foot, and 0 beyond it.
    """
    return kernels.tri(mf.a, mf.b, mf.c, x)


@dataclass(frozen=True)
class LinguisticVariable:
    name: str
    terms: tuple[tuple[str, TriangularMF], ...]
    universe: tuple[float, float] = (0.0, 1.0)
    aliases: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((str(l), mf) for l, mf in self.terms))
        lo, hi = self.universe
        if not lo < hi:
            raise ValueError(f"{self.name}: empty universe {self.universe}")
        labels = [l.lower() for l, _ in self.terms]
        if not labels:
            raise ValueError(f"{self.name}: no terms")
        if len(set(labels)) != len(labels):
            raise ValueError(f"{self.name}: duplicate term labels")
        for label, mf in self.terms:
            if mf.a < lo or mf.c > hi:
                raise ValueError(f"{self.name}.{label}: support [{mf.a}, {mf.c}] outside universe")
        self._check_coverage()

    def _check_coverage(self):
        # Positive membership of a term is the open interval (a, c), closed
        # at an end that is a shoulder.
        spans = sorted((mf.a, mf.a != mf.b, mf.c, mf.b == mf.c) for _, mf in self.terms)
        lo, hi = self.universe
        reach, reach_closed = lo, False
        for n, (a, a_open, c, c_closed) in enumerate(spans):
            if n == 0:
                gap = a > lo or a_open
            else:
                gap = a > reach or (a == reach and a_open and not reach_closed)
            if gap:
                raise ValueError(f"{self.name}: terms leave a gap near {a} in {self.universe}")
            if c > reach or (c == reach and c_closed):
                reach, reach_closed = c, c_closed
        if reach < hi or (reach == hi and not reach_closed):
            raise ValueError(f"{self.name}: terms do not reach {hi}")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(l for l, _ in self.terms)

    def term_index(self, label: str) -> int:
        key = label.lower()
        for i, (l, _) in enumerate(self.terms):
            if l.lower() == key:
                return i
        raise UnknownTerm(f"variable {self.name!r} has no term {label!r}")

    def canonical_label(self, label: str) -> str:
        return self.terms[self.term_index(label)][0]

    def matches(self, name: str) -> bool:
        key = name.lower()
        return key == self.name.lower() or any(key == a.lower() for a in self.aliases)

    def clamp(self, x: float) -> float:
        lo, hi = self.universe
        if math.isnan(x) or x < lo - UNIVERSE_SLACK or x > hi + UNIVERSE_SLACK:
            raise OutOfUniverse(f"{self.name}: {x!r} outside [{lo}, {hi}]")
        return min(max(x, lo), hi)

    def fuzzify(self, x: float) -> dict[str, float]:
        x = self.clamp(x)
        return {label: mf_eval(mf, x) for label, mf in self.terms}


def five_term_partition(name: str, aliases: Sequence[str] = ()) -> LinguisticVariable:
    """VL/L/M/H/VH: evenly spaced triangles over [0, 1] with shoulder ends."""
    return LinguisticVariable(
        name,
        (
            ("VL", TriangularMF(0.0, 0.0, 0.25)),
            ("L", TriangularMF(0.0, 0.25, 0.5)),
            ("M", TriangularMF(0.25, 0.5, 0.75)),
            ("H", TriangularMF(0.5, 0.75, 1.0)),
            ("VH", TriangularMF(0.75, 1.0, 1.0)),
        ),
        aliases=tuple(aliases),
    )


def default_input_variables() -> tuple[LinguisticVariable, ...]:
    return tuple(five_term_partition(n, INPUT_ALIASES[n]) for n in INPUT_NAMES)


def default_output_variable() -> LinguisticVariable:
    return LinguisticVariable(
        "importance",
        (
            ("Unimportant", TriangularMF(0.0, 0.0, 0.5)),
            ("Average", TriangularMF(0.0, 0.5, 1.0)),
            ("Important", TriangularMF(0.5, 1.0, 1.0)),
        ),
        aliases=("Sentence",),
    )


@dataclass(frozen=True)
class FuzzyRule:
    """``antecedents`` holds ``(variable, label)`` pairs; absent variables are don't-care."""

    antecedents: tuple[tuple[str, str], ...]
    consequent: str
    weight: float = 1.0
    output: str = "importance"

    def __post_init__(self):
        if not self.antecedents:
            raise FuzzyError("a rule needs at least one antecedent")
        if not 0.0 < self.weight <= 1.0:
            raise FuzzyError(f"rule weight {self.weight!r} outside (0, 1]")

    @property
    def antecedent_map(self) -> dict[str, str]:
        return dict(self.antecedents)


@dataclass(frozen=True)
class RuleBase:
    rules: tuple[FuzzyRule, ...]
    source_text: str = field(default="", compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        if not self.rules:
            raise FuzzyError("rule base is empty")
        seen = {}
        for n, rule in enumerate(self.rules, 1):
            key = frozenset((v.lower(), l.lower()) for v, l in rule.antecedents)
            first = seen.setdefault(key, (n, rule.consequent))
            if first[1].lower() != rule.consequent.lower():
                raise ConflictingRules(
                    f"rules {first[0]} and {n} share antecedents but conclude "
                    f"{first[1]!r} vs {rule.consequent!r}"
                )

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)


@dataclass(frozen=True)
class AggregatedCurve:
    """Max of the output terms, each clipped at its activation."""

    output: LinguisticVariable
    activations: tuple[float, ...]

    def __call__(self, y: float) -> float:
        mu = 0.0
        for (_, mf), act in zip(self.output.terms, self.activations):
            mu = max(mu, min(act, mf_eval(mf, y)))
        return mu

    def activation(self, label: str) -> float:
        return self.activations[self.output.term_index(label)]

    def sample(self, resolution: int = DEFAULT_RESOLUTION) -> list[float]:
        lo, hi = self.output.universe
        step = (hi - lo) / (resolution - 1)
        return [self(lo + i * step) for i in range(resolution)]


def defuzzify_centroid(
    curve: AggregatedCurve | Callable[[float], float] | Sequence[float],
    resolution: int = DEFAULT_RESOLUTION,
    fallback: float = NO_FIRE_FALLBACK,
    universe: tuple[float, float] = (0.0, 1.0),
) -> float:
    """Sampled centre of gravity ``sum(y * mu(y)) / sum(mu(y))``.

    ``curve`` may be an :class:`AggregatedCurve`, any callable, or a sequence
    of memberships already sampled on an even grid (``resolution`` is then
    the sequence length). An all-zero curve yields ``fallback``.
    """
    if isinstance(curve, AggregatedCurve):
        lo, hi = curve.output.universe
        params = [(mf.a, mf.b, mf.c) for _, mf in curve.output.terms]
        return kernels.centroid(list(curve.activations), params, lo, hi, resolution, fallback)
    lo, hi = universe
    if callable(curve):
        mus = None
    else:
        mus = list(curve)
        resolution = len(mus)
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    step = (hi - lo) / (resolution - 1)
    num = den = 0.0
    for i in range(resolution):
        y = lo + i * step
        mu = curve(y) if mus is None else mus[i]
        num += y * mu
        den += mu
    return num / den if den else fallback


class FuzzySystem:
    """Input variables, an output variable and a rule base.

    Immutable after construction; :meth:`evaluate` is safe to call from
    several threads or processes.
    """

    def __init__(
        self,
        inputs: Sequence[LinguisticVariable],
        output: LinguisticVariable,
        rules: RuleBase,
        resolution: int = DEFAULT_RESOLUTION,
        fallback: float = NO_FIRE_FALLBACK,
    ):
        if resolution < MIN_RESOLUTION:
            raise ValueError(f"resolution must be >= {MIN_RESOLUTION}")
        if tuple(output.universe) != (0.0, 1.0):
            raise ValueError("output universe must be [0, 1]")
        self.inputs = tuple(inputs)
        self.output = output
        self.rules = rules
        self.resolution = int(resolution)
        self.fallback = float(fallback)
        self._index = {v.name: i for i, v in enumerate(self.inputs)}
        self._compile()

    def __getstate__(self):
        return {k: getattr(self, k) for k in ("inputs", "output", "rules", "resolution", "fallback")}

    def __setstate__(self, state):
        self.__init__(**state)

    def input_variable(self, name: str) -> LinguisticVariable:
        for v in self.inputs:
            if v.matches(name):
                return v
        raise UnknownVariable(f"unknown input variable {name!r}")

    def _compile(self):
        n_in = len(self.inputs)
        width = max(len(v.terms) for v in self.inputs)
        params = np.full((n_in, width, 3), np.nan)
        for i, var in enumerate(self.inputs):
            for t, (_, mf) in enumerate(var.terms):
                params[i, t] = (mf.a, mf.b, mf.c)
        ante = np.full((len(self.rules), n_in), -1, dtype=np.int64)
        weights = np.empty(len(self.rules))
        cons = np.empty(len(self.rules), dtype=np.int64)
        for r, rule in enumerate(self.rules):
            if not self.output.matches(rule.output):
                raise UnknownVariable(f"rule {r + 1}: unknown output variable {rule.output!r}")
            for name, label in rule.antecedents:
                var = self.input_variable(name)
                ante[r, self._index[var.name]] = var.term_index(label)
            weights[r] = rule.weight
            cons[r] = self.output.term_index(rule.consequent)
        self._in_params = params
        self._n_terms = np.array([len(v.terms) for v in self.inputs], dtype=np.int64)
        self._ante = ante
        self._weights = weights
        self._cons = cons
        self._out_params = np.array([(mf.a, mf.b, mf.c) for _, mf in self.output.terms])

    def fuzzify(self, input_name: str, x: float) -> dict[str, float]:
        return self.input_variable(input_name).fuzzify(x)

    def _crisp_vector(self, inputs) -> list[float]:
        if isinstance(inputs, Mapping):
            values: list[float | None] = [None] * len(self.inputs)
            for name, x in inputs.items():
                values[self._index[self.input_variable(name).name]] = x
            missing = [v.name for v, x in zip(self.inputs, values) if x is None]
            if missing:
                raise MissingInput(f"missing inputs: {', '.join(missing)}")
        else:
            values = list(inputs)
            if len(values) != len(self.inputs):
                raise MissingInput(f"expected {len(self.inputs)} inputs, got {len(values)}")
        return [var.clamp(float(x)) for var, x in zip(self.inputs, values)]

    def firing_strengths(self, inputs) -> list[float]:
        """Per-rule firing strength (weight times min of antecedent degrees)."""
        x = self._crisp_vector(inputs)
        deg = kernels.fuzzify_all(x, self._in_params, self._n_terms)
        out = []
        for r in range(len(self.rules)):
            s = 1.0
            for v, t in enumerate(self._ante[r]):
                if t >= 0:
                    s = min(s, deg[v][t])
            out.append(float(self._weights[r]) * s)
        return out

    def infer(self, inputs) -> AggregatedCurve:
        x = self._crisp_vector(inputs)
        deg = kernels.fuzzify_all(x, self._in_params, self._n_terms)
        width = self._in_params.shape[1]
        deg = [row + [0.0] * (width - len(row)) for row in deg]
        act = kernels.fire_rules(deg, self._ante, self._weights, self._cons, len(self.output.terms))
        return AggregatedCurve(self.output, tuple(act))

    def evaluate(self, feature_vector) -> float:
        return defuzzify_centroid(self.infer(feature_vector), self.resolution, self.fallback)

    def evaluate_many(self, vectors) -> list[float]:
        rows = [self._crisp_vector(v) for v in vectors]
        if not rows:
            return []
        return kernels.evaluate_batch(
            rows, self._in_params, self._n_terms, self._ante, self._weights, self._cons,
            self._out_params, 0.0, 1.0, self.resolution, self.fallback,
        )


def _default_rules_path():
    return resources.files("fuzzysumm").joinpath("rules/default.rules")


def default_system(rule_file=None, resolution: int = DEFAULT_RESOLUTION) -> FuzzySystem:
    """The eight feature inputs, the three-term importance output and a rule file
    (the packaged default rules when ``rule_file`` is None)."""
    from .rules import parse_rules

    inputs = default_input_variables()
    output = default_output_variable()
    if rule_file is None:
        text = _default_rules_path().read_text(encoding="utf-8")
    else:
        text = Path(rule_file).read_text(encoding="utf-8")
    return FuzzySystem(inputs, output, parse_rules(text, inputs, output), resolution=resolution)
