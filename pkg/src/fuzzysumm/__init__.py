"""Feature-based extractive summarization.

Sentences are described by eight features (title overlap, length, tf.isf
term weight, position, similarity to other sentences, proper nouns,
thematic words, numerals) and scored either by their plain sum or by a
Mamdani fuzzy system; the top-scored fraction is extracted in document
order. A ROUGE-1 harness compares summarizers against references.
"""

__version__ = "0.1.0"

from .errors import FuzzySummError
from .extract import Summary, baseline_summary, render_summary, select_by_budget, select_sentences
from .features import FeatureVector, extract_features
from .fuzzy import FuzzySystem, default_system
from .kernels import BACKEND
from .pipeline import SummarizeOptions, summarize_document, summarize_text
from .preprocess import Document, build_document, parse_raw_document, read_raw_document
from .rouge import RougeScore, evaluate_corpus, rouge_1
from .scoring import Method, score_fuzzy, score_gsm

__all__ = [
    "BACKEND",
    "Document",
    "FeatureVector",
    "FuzzySummError",
    "FuzzySystem",
    "Method",
    "RougeScore",
    "Summary",
    "SummarizeOptions",
    "baseline_summary",
    "build_document",
    "default_system",
    "evaluate_corpus",
    "extract_features",
    "parse_raw_document",
    "read_raw_document",
    "render_summary",
    "rouge_1",
    "score_fuzzy",
    "score_gsm",
    "select_by_budget",
    "select_sentences",
    "summarize_document",
    "summarize_text",
]
