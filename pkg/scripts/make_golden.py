"""Regenerate the golden CLI outputs for the fixture corpus.

    python3 scripts/make_golden.py

Review the diff before committing: the tests compare against these files
byte for byte.
"""

import shutil
import sys
from pathlib import Path

from fuzzysumm.cli import main

DATA = Path(__file__).resolve().parents[1] / "tests" / "data"


def run():
    golden = DATA / "golden"
    if golden.exists():
        shutil.rmtree(golden)
    summaries = golden / "summaries"
    rc = main(["summarize", "--input", str(DATA / "corpus"), "--method", "all", "--out", str(summaries)])
    rc |= main(["evaluate", "--summaries", str(summaries), "--refs", str(DATA / "refs"), "--out", str(golden / "report")])
    rc |= main(["features", "--input", str(DATA / "corpus"), "--out", str(golden / "features.csv")])
    return rc


if __name__ == "__main__":
    sys.exit(run())
