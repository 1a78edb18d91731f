"""Backend selection for the numeric kernels.

The compiled extension is used when it was built; otherwise, or when
``FUZZYSUMM_PURE_PYTHON`` is set to a non-empty value, the pure-Python
module is used. Both expose the same functions.
"""

import os

if os.environ.get("FUZZYSUMM_PURE_PYTHON"):
    from . import _pykernels as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        from . import _pykernels as _impl

BACKEND = "python" if _impl.__name__.endswith("_pykernels") else "cython"

tri = _impl.tri
fire_rules = _impl.fire_rules
centroid = _impl.centroid
fuzzify_all = _impl.fuzzify_all
evaluate_batch = _impl.evaluate_batch
cosine = _impl.cosine
similarity_sums = _impl.similarity_sums

__all__ = [
    "BACKEND",
    "centroid",
    "cosine",
    "evaluate_batch",
    "fire_rules",
    "fuzzify_all",
    "similarity_sums",
    "tri",
]
