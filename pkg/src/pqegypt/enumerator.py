"""Table-based enumeration of all solutions for one instance.

The search runs top row first. Every row is kept in reduced form (columns
2.. hold base-p digits) together with a count ``l`` of right moves still to
apply, and the value pushed down into the next row is written as
``p**alpha * s_tilde + s``. A branch ends either on a bottom row (the unique
completion of a pushed-down ``s < p**alpha``) or on a last row, when all parts
are used and the carry is ``p**alpha * q**b``. Reduced solutions are then
expanded by right moves in all possible ways, deduplicated, filtered and
verified.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Set, Tuple

from . import _kernels
from .model import BOTTOM, LAST, Params, Row, SolutionGrid, canonical_key, verify
from .moves import ReductionSeed, bottom_completion, expand_row, step_row
from .numtheory import sylvester_exceeds

log = logging.getLogger(__name__)


class InvariantError(RuntimeError):
    """The search produced something that cannot be right; a bug, not bad input."""


@dataclass(frozen=True)
class ReducedSolution:
    trail: Tuple[Tuple[int, Row], ...]  # (l, reduced row), top row first
    kind: str
    alpha_q: int
    height: int


def depth_limit(params: Params) -> int:
    """Largest step index whose row can still hold a denominator below ``S_n``.

    The row built at step ``i`` forces a top row at q-exponent ``i - 1`` or more.
    The result is also clipped to the depth the search can reach at all: at most
    ``n`` nonzero rows, each followed by at most ``log_q(n p**alpha)`` zero rows.
    """
    q = params.q
    zero_run, t = 1, params.n * params.p_pow
    while t >= q:
        t //= q
        zero_run += 1
    reach = (params.n + 1) * (zero_run + 1)
    i, qp = 1, q
    while i < reach and sylvester_exceeds(params.n, qp):
        qp *= q
        i += 1
    return i


def within_depth_cap(depth: int, params: Params) -> bool:
    """``depth <= ceil(log_q S_n) + 2``."""
    return depth <= 3 or sylvester_exceeds(params.n, params.q ** (depth - 3))


def _record_to_reduced(record, params: Params) -> ReducedSolution:
    kind, b, moves, carries = record
    seeds = [ReductionSeed(0, 0)] + [ReductionSeed(st, s) for st, s in carries]
    rows = [step_row(seeds[i], seeds[i + 1], params) for i in range(len(carries))]
    if kind == 0:
        rows.append(bottom_completion(seeds[-1].s, params))
        return ReducedSolution(tuple(zip(moves, rows)), BOTTOM, len(rows) - 1, 1)
    return ReducedSolution(tuple(zip(moves, rows)), LAST, b + len(rows), b + 2)


def enumerate_reduced(params: Params, *, pure: bool = False) -> List[ReducedSolution]:
    records = _kernels.search_reduced(
        params.p, params.q, params.alpha_p, params.n, depth_limit(params), pure=pure
    )
    out = []
    for rec in records:
        red = _record_to_reduced(rec, params)
        if not within_depth_cap(len(red.trail), params):
            raise InvariantError(f"search depth {len(red.trail)} exceeds ceil(log_q S_n) + 2")
        out.append(red)
    return out


def expand_reduced(reduced: ReducedSolution, params: Params) -> Set[SolutionGrid]:
    choices = [sorted(expand_row(row, l, params.p)) for l, row in reduced.trail]
    padding: Tuple[Row, ...] = ()
    if reduced.kind == LAST:
        zero = (0,) * params.width
        padding = (zero,) * (reduced.alpha_q + 1 - len(reduced.trail))
    grids = set()
    for combo in itertools.product(*choices):
        grids.add(SolutionGrid(padding + tuple(reversed(combo)), params))
    return grids


def _is_unicolumn(grid: SolutionGrid) -> bool:
    return not any(k for r in grid.rows for k in r[1:])


def _expand_chunk(args) -> List[Tuple[Row, ...]]:
    chunk, params = args
    keys = set()
    for red in chunk:
        for g in expand_reduced(red, params):
            keys.add(g.rows)
    return sorted(keys)


def enumerate_solutions(params: Params, *, jobs: int = 1, pure: bool = False) -> List[SolutionGrid]:
    """Every solution for ``params`` exactly once, in canonical order.

    Single-column (p-free) grids are dropped; every other grid is verified and
    a failure raises :class:`InvariantError`.
    """
    reduced = enumerate_reduced(params, pure=pure)
    keys: Set[Tuple[Row, ...]] = set()
    if jobs > 1 and len(reduced) > 1:
        chunks = [reduced[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_expand_chunk, [(c, params) for c in chunks]):
                keys.update(part)
    else:
        for red in reduced:
            for g in expand_reduced(red, params):
                keys.add(g.rows)
    grids = []
    for rows in sorted(keys):
        g = SolutionGrid(rows, params)
        if _is_unicolumn(g):
            continue
        report = verify(g)
        if not report.is_valid:
            raise InvariantError(f"emitted grid {rows} fails verification: {report.failures}")
        grids.append(g)
    grids.sort(key=canonical_key)
    log.debug("p=%d q=%d n=%d alpha=%d: %d reduced, %d solutions",
              params.p, params.q, params.n, params.alpha_p, len(reduced), len(grids))
    return grids


def count(params: Params, **kw) -> int:
    return len(enumerate_solutions(params, **kw))


def find_one(params: Params, *, pure: bool = False) -> SolutionGrid | None:
    """One verified solution, or None, without enumerating everything."""
    rec = _kernels.find_record(
        params.p, params.q, params.alpha_p, params.n, depth_limit(params), pure=pure
    )
    if rec is None:
        return None
    red = _record_to_reduced(rec, params)
    for g in sorted(expand_reduced(red, params), key=canonical_key):
        if _is_unicolumn(g):
            continue
        report = verify(g)
        if not report.is_valid:
            raise InvariantError(f"grid {g.rows} fails verification: {report.failures}")
        return g
    raise InvariantError(f"reduced record {rec} expands to no usable grid")


def exists(params: Params, **kw) -> bool:
    return find_one(params, **kw) is not None
