"""Compiled vs pure-Python search kernel on a few instances.

Run with ``python3 benchmarks/bench_kernels.py``.
"""

from __future__ import annotations

import argparse
import time

from pqegypt import _kernels
from pqegypt._kernels import _pysearch
from pqegypt.enumerator import depth_limit
from pqegypt.model import Params

INSTANCES = [
    Params(3, 5, 7, 2),
    Params(2, 91, 13, 4),
    Params(2, 3, 8, 4),
    Params(2, 67, 13, 3),
    Params(3, 2, 8, 3),
    Params(5, 2, 8, 4),
    Params(2, 5, 10, 6),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.COMPILED:
        print("compiled kernel not available; build with `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'instance':<22}{'records':>9}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for prm in INSTANCES:
        a = (prm.p, prm.q, prm.alpha_p, prm.n, depth_limit(prm))
        tp, rp = best_of(lambda: _pysearch.search_reduced(*a), args.repeat)
        tc, rc = best_of(lambda: _kernels._csearch.search_reduced(*a), args.repeat)
        assert rp == rc
        label = f"p={prm.p} q={prm.q} n={prm.n} a={prm.alpha_p}"
        print(f"{label:<22}{len(rp):>9}{tp:>11.4f}{tc:>11.4f}{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
