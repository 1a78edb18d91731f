"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--sentences 2000] [--repeat 3]

Times fuzzy batch evaluation (fuzzify, fire, 1001-point centroid) and the
all-pairs cosine sums used by the similarity feature, then one end-to-end
corpus run per backend in a subprocess.
"""

import argparse
import os
import subprocess
import sys
import time
from pathlib import Path

import numpy as np

from fuzzysumm import _pykernels
from fuzzysumm.fuzzy import default_system

try:
    from fuzzysumm import _kernels
except ImportError:
    _kernels = None

CORPUS = Path(__file__).resolve().parents[1] / "tests" / "data" / "corpus"


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def bench_fuzzy(mod, rows, sys_, repeat):
    args = (sys_._in_params, sys_._n_terms, sys_._ante, sys_._weights, sys_._cons,
            sys_._out_params, 0.0, 1.0, sys_.resolution, sys_.fallback)
    return best_of(repeat, lambda: list(mod.evaluate_batch(rows, *args)))


def bench_similarity(mod, mats, repeat):
    return best_of(repeat, lambda: [list(mod.similarity_sums(m)) for m in mats])


def bench_cli(backend):
    env = dict(os.environ)
    env.pop("FUZZYSUMM_PURE_PYTHON", None)
    if backend == "python":
        env["FUZZYSUMM_PURE_PYTHON"] = "1"
    code = (
        "import tempfile, time; from fuzzysumm.cli import main; t=time.perf_counter(); "
        f"main(['summarize','--input',{str(CORPUS)!r},'--out',tempfile.mkdtemp()]); "
        "print(time.perf_counter()-t)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--sentences", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    sys_ = default_system()
    rows = rng.random((args.sentences, 8)).tolist()
    mats = []
    for _ in range(max(1, args.sentences // 30)):
        m = rng.random((30, 150))
        m[m < 0.9] = 0.0
        mats.append(m)

    backends = [("python", _pykernels)]
    if _kernels is not None:
        backends.insert(0, ("cython", _kernels))
    else:
        print("compiled kernels not built; timing the Python fallback only")

    results = {}
    for name, mod in backends:
        tf, sf = bench_fuzzy(mod, rows, sys_, args.repeat)
        ts, ss = bench_similarity(mod, mats, args.repeat)
        results[name] = (tf, ts, sf, ss)
        print(f"{name:>7}: fuzzy {args.sentences} sentences {tf * 1e3:9.1f} ms | "
              f"similarity {len(mats)} docs x 30 sentences {ts * 1e3:8.1f} ms | "
              f"corpus run {bench_cli(name):.2f} s")

    if len(results) == 2:
        c, p = results["cython"], results["python"]
        same = c[2] == p[2] and c[3] == p[3]
        print(f"speed-up: fuzzy x{p[0] / c[0]:.0f}, similarity x{p[1] / c[1]:.0f}; identical results: {same}")


if __name__ == "__main__":
    main()
