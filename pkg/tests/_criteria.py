"""Collects one pass/fail line per acceptance criterion for the terminal summary."""

import time
from contextlib import contextmanager

LINES = []


@contextmanager
def criterion(number, title, limit_s=None):
    start = time.perf_counter()
    status = "FAIL"
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit_s is not None and elapsed >= limit_s:
            detail = f" (took {elapsed:.2f}s, limit {limit_s}s)"
            raise AssertionError(f"criterion {number} exceeded its time limit{detail}")
        status = "PASS"
        detail = f" ({elapsed:.2f}s)"
    finally:
        line = f"[{status}] criterion {number}: {title}{detail}"
        LINES.append(line)
        print(line)
