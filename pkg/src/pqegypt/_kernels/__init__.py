"""Hot search loops, compiled when available.

The Cython twin ``_csearch`` works on C ``long long`` values, so callers go
through :func:`search_reduced` and :func:`find_record`, which fall back to the
pure-Python kernel when the extension is missing or the instance is too large
for 64-bit arithmetic.
Set ``PQEGYPT_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pysearch

_SAFE = 1 << 60

try:
    if os.environ.get("PQEGYPT_PURE"):
        raise ImportError("pure-Python kernels forced")
    from . import _csearch  # type: ignore[attr-defined]
except ImportError:
    _csearch = None

COMPILED = _csearch is not None


def backend() -> str:
    return "cython" if COMPILED else "python"


def search_reduced(p, q, alpha, n, max_depth, *, pure=False):
    P = p**alpha
    if not pure and COMPILED and P * (q + 1) * (n + 2) < _SAFE:
        return _csearch.search_reduced(p, q, alpha, n, max_depth)
    return _pysearch.search_reduced(p, q, alpha, n, max_depth)


def find_record(p, q, alpha, n, max_depth, *, pure=False):
    P = p**alpha
    if not pure and COMPILED and P * (q + 1) * (n + 2) < _SAFE:
        return _csearch.find_record(p, q, alpha, n, max_depth)
    return _pysearch.find_record(p, q, alpha, n, max_depth)
