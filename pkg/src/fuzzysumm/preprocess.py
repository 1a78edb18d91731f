"""Plain text to :class:`Document`: segmentation, tokenization, stopwords, stemming."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import EmptyDocument, InvalidEncoding
from .porter import stem

__all__ = [
    "ABBREVIATIONS",
    "Document",
    "RawDocument",
    "Sentence",
    "Token",
    "build_document",
    "default_stopwords",
    "is_numeric_token",
    "load_stopwords",
    "parse_raw_document",
    "read_raw_document",
    "segment_sentences",
    "tokenize",
]

THEMATIC_COUNT = 10

# Lowercased, without the final period.
ABBREVIATIONS = frozenset(
    """
    mr mrs ms dr prof inc co corp ltd st vs etc jr sr gen sen rep gov lt col
    capt sgt mt ft jan feb mar apr jun jul aug sep sept oct nov dec
    u.s u.k u.n e.g i.e a.m p.m
    """.split()
)

_BLANK_LINES = re.compile(r"\n[ \t\r\f\v]*\n\s*")
_BOUNDARY = re.compile(r"[.!?]+[\"')\]’”]*(\s+)(?=[\"'(\[‘“]*[A-Z0-9])")
_WORD_CHUNK = re.compile(r"[^\s\-/‐-―]+")
_STRIP = "!\"#&'()*+,-./:;<=>?@[\\]^_`{|}~‘’“”…«»"
_TAG = re.compile(r"<[^>]*>")


@dataclass(frozen=True)
class RawDocument:
    id: str
    title: str
    body: str
    paragraph_breaks: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.body.strip():
            raise EmptyDocument(f"document {self.id!r} has an empty body")


@dataclass(frozen=True)
class Token:
    surface: str
    lower: str
    stem: str
    is_stopword: bool
    is_numeric: bool
    is_capitalized: bool
    char_offset: int


@dataclass(frozen=True)
class Sentence:
    index: int
    paragraph_index: int
    index_in_paragraph: int
    tokens: tuple[Token, ...]
    content_stems: tuple[str, ...]
    text: str

    def __len__(self):
        return len(self.tokens)


@dataclass(frozen=True)
class Document:
    id: str
    title_stems: tuple[str, ...]
    sentences: tuple[Sentence, ...]
    thematic_stems: tuple[str, ...]

    def __len__(self):
        return len(self.sentences)


def load_stopwords(path=None) -> frozenset[str]:
    """Read a stopword file: one word per line, ``#`` starts a comment."""
    if path is None:
        text = resources.files("fuzzysumm").joinpath("data/stopwords.txt").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    words = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip().lower()
        if line:
            words.add(line)
    return frozenset(words)


_DEFAULT_STOPWORDS = None


def default_stopwords() -> frozenset[str]:
    global _DEFAULT_STOPWORDS
    if _DEFAULT_STOPWORDS is None:
        _DEFAULT_STOPWORDS = load_stopwords()
    return _DEFAULT_STOPWORDS


def _paragraph_breaks(body):
    return tuple(m.start() for m in _BLANK_LINES.finditer(body))


def parse_raw_document(doc_id: str, text: str, title: str | None = None, strip_tags: bool = False) -> RawDocument:
    """Split file contents into title and body.

    With ``title=None`` the first non-empty line is the title and the rest is
    the body. Any other value (``""`` meaning no title) is used verbatim and
    the whole text becomes the body.
    """
    if strip_tags:
        text = _TAG.sub(" ", text)
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    if title is None:
        stripped = text.lstrip()
        first, _, rest = stripped.partition("\n")
        title, body = first.strip(), rest
    else:
        body = text
    body = body.strip()
    return RawDocument(doc_id, title, body, _paragraph_breaks(body))


def read_raw_document(path, title: str | None = None, strip_tags: bool = False) -> RawDocument:
    path = Path(path)
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidEncoding(str(path), exc.start, exc.reason) from None
    if text.startswith("﻿"):
        text = text[1:]
    return parse_raw_document(path.stem, text, title=title, strip_tags=strip_tags)


def _is_abbreviation(text, end):
    """True when the word ending just before ``end`` (a period) is an abbreviation."""
    start = end
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    word = text[start:end].lstrip(_STRIP)
    if len(word) == 1 and word.isupper():
        return True  # initial, as in "J. Smith"
    return word.lower() in ABBREVIATIONS


def _sentence_spans(body, paragraph_breaks=None):
    if paragraph_breaks is None:
        paragraph_breaks = _paragraph_breaks(body)
    bounds = [0, *paragraph_breaks, len(body)]
    spans = []
    for para, (lo, hi) in enumerate(zip(bounds, bounds[1:])):
        start = lo
        for m in _BOUNDARY.finditer(body, lo, hi):
            if body[m.start()] == "." and _is_abbreviation(body, m.start()):
                continue
            spans.append((start, m.start(1), para))
            start = m.end()
        spans.append((start, hi, para))
    out = []
    for lo, hi, para in spans:
        seg = body[lo:hi]
        lead = len(seg) - len(seg.lstrip())
        seg = seg.strip()
        if seg:
            out.append((lo + lead, seg, para))
    return out


def segment_sentences(body: str, paragraph_breaks=None) -> list[tuple[str, int]]:
    """Split ``body`` into ``(sentence_text, paragraph_index)`` pairs.

    A sentence ends at ``.``, ``!`` or ``?`` (plus closing quotes/brackets)
    followed by whitespace and an uppercase letter or digit, unless the word
    carrying the period is a known abbreviation or a single initial.
    """
    if not body.strip():
        raise EmptyDocument("no sentence found")
    spans = _sentence_spans(body, paragraph_breaks)
    paragraphs = sorted({p for _, _, p in spans})
    renumber = {p: i for i, p in enumerate(paragraphs)}
    return [(text, renumber[p]) for _, text, p in spans]


def is_numeric_token(surface: str) -> bool:
    s = surface.replace(",", "").replace("%", "").replace("$", "").replace(".", "", 1)
    return bool(s) and s.isascii() and s.isdigit()


def _stem_key(lower):
    if lower.endswith("'s"):
        lower = lower[:-2]
    elif lower.endswith("s'"):
        lower = lower[:-1]
    return lower.replace("'", "")


def tokenize(sentence_text: str, stopwords=None, offset: int = 0) -> list[Token]:
    if stopwords is None:
        stopwords = default_stopwords()
    tokens = []
    for m in _WORD_CHUNK.finditer(sentence_text):
        chunk = m.group()
        left = len(chunk) - len(chunk.lstrip(_STRIP))
        surface = chunk.strip(_STRIP)
        if not surface:
            continue
        lower = surface.lower().replace("’", "'")
        is_stop = lower in stopwords
        has_alpha = any(ch.isalpha() for ch in surface)
        stem_ = stem(_stem_key(lower)) if has_alpha and not is_stop else ""
        if has_alpha and not is_stop and not stem_:
            stem_ = lower
        tokens.append(
            Token(
                surface=surface,
                lower=lower,
                stem=stem_,
                is_stopword=is_stop,
                is_numeric=is_numeric_token(surface),
                is_capitalized=surface[0].isupper(),
                char_offset=offset + m.start() + left,
            )
        )
    return tokens


def _content_stems(tokens):
    return tuple(t.stem for t in tokens if t.stem)


def build_document(raw: RawDocument, stopwords=None) -> Document:
    if stopwords is None:
        stopwords = default_stopwords()
    spans = _sentence_spans(raw.body, raw.paragraph_breaks)
    sentences = []
    para_map = {}
    per_para = Counter()
    for start, text, para in spans:
        tokens = tokenize(text, stopwords, offset=start)
        if not tokens:
            continue
        p = para_map.setdefault(para, len(para_map))
        sentences.append(
            Sentence(
                index=len(sentences),
                paragraph_index=p,
                index_in_paragraph=per_para[p],
                tokens=tuple(tokens),
                content_stems=_content_stems(tokens),
                text=text,
            )
        )
        per_para[p] += 1
    if not sentences:
        raise EmptyDocument(f"document {raw.id!r}: no sentence found")

    counts = Counter(s for sent in sentences for s in sent.content_stems)
    thematic = sorted(counts, key=lambda s: (-counts[s], s))[:THEMATIC_COUNT]
    title_stems = _content_stems(tokenize(raw.title, stopwords)) if raw.title else ()
    return Document(raw.id, title_stems, tuple(sentences), tuple(thematic))
