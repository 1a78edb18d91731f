"""Porter suffix-stripping stemmer.

Follows Martin Porter's reference implementation (the ANSI C version
distributed alongside the published ``voc.txt``/``output.txt`` test
vocabulary), including its two well-known departures from the 1980
article: step 2 maps ``-bli`` to ``-ble`` and ``-logi`` to ``-log``.
Words of one or two letters are returned unchanged.
"""

from functools import lru_cache

__all__ = ["stem"]

_VOWELS = frozenset("aeiou")

# (suffix, replacement); first suffix that matches wins, whether or not
# the measure condition then holds.
_STEP2 = (
    ("ational", "ate"), ("tional", "tion"),
    ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"),
    ("bli", "ble"), ("alli", "al"), ("entli", "ent"), ("eli", "e"), ("ousli", "ous"),
    ("ization", "ize"), ("ation", "ate"), ("ator", "ate"),
    ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"), ("ousness", "ous"),
    ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
    ("logi", "log"),
)

_STEP3 = (
    ("icate", "ic"), ("ative", ""), ("alize", "al"),
    ("iciti", "ic"),
    ("ical", "ic"), ("ful", ""),
    ("ness", ""),
)

_STEP4 = (
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement", "ment",
    "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
)


def _is_consonant(word, i):
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        return i == 0 or not _is_consonant(word, i - 1)
    return True


def _measure(stem):
    """Number of VC sequences in ``stem`` ([C](VC)^m[V])."""
    n = 0
    prev_vowel = False
    for i in range(len(stem)):
        cons = _is_consonant(stem, i)
        if cons and prev_vowel:
            n += 1
        prev_vowel = not cons
    return n


def _has_vowel(stem):
    return any(not _is_consonant(stem, i) for i in range(len(stem)))


def _ends_double_consonant(word):
    return len(word) >= 2 and word[-1] == word[-2] and _is_consonant(word, len(word) - 1)


def _ends_cvc(word):
    i = len(word) - 1
    if i < 2:
        return False
    return (
        _is_consonant(word, i)
        and not _is_consonant(word, i - 1)
        and _is_consonant(word, i - 2)
        and word[i] not in "wxy"
    )


def _step1ab(w):
    if w.endswith("s"):
        if w.endswith("sses"):
            w = w[:-2]
        elif w.endswith("ies"):
            w = w[:-2]
        elif not w.endswith("ss"):
            w = w[:-1]

    if w.endswith("eed"):
        if _measure(w[:-3]) > 0:
            w = w[:-1]
        return w

    for suffix in ("ed", "ing"):
        if w.endswith(suffix) and _has_vowel(w[: -len(suffix)]):
            w = w[: -len(suffix)]
            if w.endswith(("at", "bl", "iz")):
                w += "e"
            elif _ends_double_consonant(w):
                if w[-1] not in "lsz":
                    w = w[:-1]
            elif _measure(w) == 1 and _ends_cvc(w):
                w += "e"
            return w
    return w


def _step1c(w):
    if w.endswith("y") and _has_vowel(w[:-1]):
        return w[:-1] + "i"
    return w


def _replace_first(w, rules, min_measure):
    for suffix, repl in rules:
        if w.endswith(suffix):
            base = w[: -len(suffix)]
            if _measure(base) > min_measure:
                return base + repl
            return w
    return w


def _step4(w):
    for suffix in _STEP4:
        if not w.endswith(suffix):
            continue
        base = w[: -len(suffix)]
        if suffix == "ion" and not base.endswith(("s", "t")):
            return w
        return base if _measure(base) > 1 else w
    return w


def _step5(w):
    if w.endswith("e"):
        m = _measure(w[:-1])
        if m > 1 or (m == 1 and not _ends_cvc(w[:-1])):
            w = w[:-1]
    if w.endswith("ll") and _measure(w) > 1:
        w = w[:-1]
    return w


@lru_cache(maxsize=65536)
def stem(word: str) -> str:
    """Stem a lowercase word.

    >>> stem("caresses"), stem("relational"), stem("a")
    ('caress', 'relat', 'a')
    """
    if len(word) <= 2:
        return word
    w = _step1ab(word)
    if len(w) <= 1:
        return w
    w = _step1c(w)
    w = _replace_first(w, _STEP2, 0)
    w = _replace_first(w, _STEP3, 0)
    w = _step4(w)
    return _step5(w)
