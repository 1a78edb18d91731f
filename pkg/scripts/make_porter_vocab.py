"""Regenerate tests/data/porter_vocab.tsv.

The word list is every lowercase alphabetic run found in the given text
files; expected stems come from NLTK's PorterStemmer in MARTIN_EXTENSIONS
mode, which reproduces the reference C implementation's output.

    python scripts/make_porter_vocab.py examples/**/*.py > tests/data/porter_vocab.tsv
"""
import re
import sys

from nltk.stem.porter import PorterStemmer


def main(paths):
    words = set()
    for path in paths:
        with open(path, encoding="utf-8", errors="ignore") as fh:
            words.update(re.findall(r"[a-z]+", fh.read().lower()))
    oracle = PorterStemmer(mode=PorterStemmer.MARTIN_EXTENSIONS)
    for w in sorted(words):
        print(f"{w}\t{oracle.stem(w)}")


if __name__ == "__main__":
    main(sys.argv[1:])
