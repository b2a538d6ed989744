"""Row-level operations on a single row of a solution table.

A right move at column ``j`` takes one unit out of box ``j`` and puts ``p``
units into box ``j+1``; the weighted row value is unchanged and the number of
parts grows by ``p-1``. A left move is its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Sequence, Tuple

from .model import Params, Row, row_value
from .numtheory import not_op_extended, to_digits


@dataclass(frozen=True)
class ReductionSeed:
    """Carry into the next row down, written as ``p**alpha * s_tilde + s``."""

    s_tilde: int
    s: int

    def value(self, p_pow: int) -> int:
        return p_pow * self.s_tilde + self.s


def is_admissible(row: Sequence[int], params: Params) -> bool:
    return row_value(row, params.p, params.alpha_p) % params.q == 0


def push_value(row: Sequence[int], params: Params) -> int:
    v = row_value(row, params.p, params.alpha_p)
    if v % params.q:
        raise ValueError(f"row {tuple(row)} is not admissible for q={params.q}")
    return v // params.q


def right_move(row: Sequence[int], j: int, p: int) -> Row:
    """Move one unit from column ``j`` (1-based) to ``p`` units in column ``j+1``."""
    if not 1 <= j < len(row):
        raise ValueError(f"no right move from column {j} of a width-{len(row)} row")
    if row[j - 1] < 1:
        raise ValueError(f"column {j} of {tuple(row)} is empty")
    out = list(row)
    out[j - 1] -= 1
    out[j] += p
    return tuple(out)


def left_move(row: Sequence[int], j: int, p: int) -> Row:
    if not 1 <= j < len(row):
        raise ValueError(f"no left move into column {j} of a width-{len(row)} row")
    if row[j] < p:
        raise ValueError(f"column {j + 1} of {tuple(row)} holds fewer than {p} units")
    out = list(row)
    out[j] -= p
    out[j - 1] += 1
    return tuple(out)


def expand_row(row: Sequence[int], l: int, p: int) -> FrozenSet[Row]:
    """All distinct rows reachable from ``row`` by exactly ``l`` right moves.

    Layered breadth-first search; a unit created by one move may be moved again.
    """
    if l < 0:
        raise ValueError(f"move count must be >= 0, got {l}")
    layer = {tuple(row)}
    width = len(row)
    for _ in range(l):
        nxt = set()
        for r in layer:
            for j in range(width - 1):
                if r[j]:
                    moved = list(r)
                    moved[j] -= 1
                    moved[j + 1] += p
                    nxt.add(tuple(moved))
        if not nxt:
            return frozenset()
        layer = nxt
    return frozenset(layer)


def reduced_row(value: int, params: Params) -> Row:
    """The row of the given value whose columns 2.. hold base-p digits."""
    if value < 0:
        raise ValueError(f"row value must be >= 0, got {value}")
    head, low = divmod(value, params.p_pow)
    return (head,) + to_digits(low, params.p, params.alpha_p).digits


def step_row(seed_in: ReductionSeed, seed_out: ReductionSeed, params: Params) -> Row:
    """Reduced row sitting between two carries.

    Column 1 holds ``q*s~_out - s~_in + floor((q*s_out - s_in) / p**alpha)``, the
    rest are the digits of ``(q*s_out - s_in) mod p**alpha``.
    """
    p_pow, q = params.p_pow, params.q
    head, low = divmod(q * seed_out.s - seed_in.s, p_pow)
    first = q * seed_out.s_tilde - seed_in.s_tilde + head
    if first < 0:
        raise ValueError("carries do not fit a row with nonnegative entries")
    return (first,) + to_digits(low, params.p, params.alpha_p).digits


def reduce_row(row: Sequence[int], params: Params) -> ReductionSeed:
    t = push_value(row, params)
    s_tilde, s = divmod(t, params.p_pow)
    return ReductionSeed(s_tilde, s)


def bottom_completion(s: int, params: Params) -> Row:
    """Unique bottom row that, together with a pushed-down ``s``, sums to ``p**alpha``."""
    comp = not_op_extended(s, params.p, params.alpha_p)
    return (0,) + to_digits(comp, params.p, params.alpha_p).digits
