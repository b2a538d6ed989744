"""Problem instances, solution grids and exact verification.

A solution of ``sum 1/x_i = 1`` with every ``x_i = p**a * q**b`` is stored as
the table ``k[b][a]`` counting how often ``1/(p**a q**b)`` occurs. Rows are
indexed by the q-exponent ``b`` from the bottom (``b = 0``) upward, columns by
the p-exponent ``a`` from left (``a = 0``) to right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from .numtheory import is_prime, sylvester_exceeds

Row = Tuple[int, ...]

BOTTOM = "bottom"
LAST = "last"


@dataclass(frozen=True)
class Params:
    p: int
    q: int
    n: int
    alpha_p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.q < 2:
            raise ValueError(f"q must be >= 2, got {self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"p={self.p} and q={self.q} must be coprime")
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.alpha_p < 1:
            raise ValueError(f"alpha_p must be >= 1, got {self.alpha_p}")

    @property
    def width(self) -> int:
        return self.alpha_p + 1

    @property
    def p_pow(self) -> int:
        return self.p**self.alpha_p


def row_value(row: Sequence[int], p: int, alpha: int) -> int:
    """Weighted value ``sum k_i p**(alpha+1-i)`` of a row (1-based ``i``)."""
    if len(row) != alpha + 1:
        raise ValueError(f"row {tuple(row)} does not have width {alpha + 1}")
    v = 0
    for k in row:
        v = v * p + k
    return v


def _trim(rows: Sequence[Sequence[int]]) -> Tuple[Row, ...]:
    out = [tuple(int(k) for k in r) for r in rows]
    while out and not any(out[-1]):
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class SolutionGrid:
    """Immutable solution table; all-zero top rows are dropped on construction."""

    rows: Tuple[Row, ...]
    params: Params

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", _trim(self.rows))

    @property
    def alpha_q(self) -> int:
        return len(self.rows) - 1

    @property
    def kind(self) -> str:
        return BOTTOM if self.rows and any(self.rows[0]) else LAST

    @property
    def height(self) -> int:
        """1 for bottom-row solutions, otherwise one more than the last row's q-exponent."""
        if self.kind == BOTTOM:
            return 1
        lowest = next(b for b, r in enumerate(self.rows) if any(r))
        return lowest + 1

    @property
    def top_row(self) -> Row:
        return self.rows[-1]

    def part_count(self) -> int:
        return sum(sum(r) for r in self.rows)

    def denominators(self) -> List[int]:
        """Sorted multiset of denominators ``p**a q**b``."""
        p, q = self.params.p, self.params.q
        out = []
        for b, r in enumerate(self.rows):
            for a, k in enumerate(r):
                out.extend([p**a * q**b] * k)
        return sorted(out)

    def is_distinct(self) -> bool:
        return all(k <= 1 for r in self.rows for k in r)


def grid_sum(grid: SolutionGrid) -> Fraction:
    """Exact ``sum k[b][a] / (p**a q**b)``, accumulated over ``p**A q**B``."""
    p, q = grid.params.p, grid.params.q
    if not grid.rows:
        return Fraction(0)
    A, B = len(grid.rows[0]) - 1, len(grid.rows) - 1
    num = 0
    for b, r in enumerate(grid.rows):
        v = 0
        for k in r:
            v = v * p + k
        num += v * q ** (B - b)
    return Fraction(num, p**A * q**B)


@dataclass
class VerificationReport:
    is_valid: bool
    sum: Fraction
    part_count: int
    p_appears: bool
    q_appears: bool
    max_denominator_ok: bool
    failures: List[str] = field(default_factory=list)


def verify(grid: SolutionGrid) -> VerificationReport:
    """Check every solution invariant; failures are collected, never raised."""
    prm = grid.params
    failures: List[str] = []
    if not grid.rows:
        failures.append("empty")
    if any(len(r) != prm.width for r in grid.rows):
        failures.append("width")
    if any(k < 0 for r in grid.rows for k in r):
        failures.append("negative_entry")
    total = grid_sum(grid)
    if total != 1:
        failures.append("sum_not_one")
    parts = grid.part_count()
    if parts != prm.n:
        failures.append("part_count")
    p_appears = any(k > 0 for r in grid.rows for a, k in enumerate(r) if a >= 1)
    q_appears = any(k > 0 for b, r in enumerate(grid.rows) if b >= 1 for k in r)
    if not p_appears:
        failures.append("p_absent")
    if not q_appears:
        failures.append("q_absent")
    used = [prm.p**a * prm.q**b for b, r in enumerate(grid.rows) for a, k in enumerate(r) if k > 0]
    den_ok = not used or sylvester_exceeds(prm.n, max(used))
    if not den_ok:
        failures.append("denominator_cap")
    return VerificationReport(
        is_valid=not failures,
        sum=total,
        part_count=parts,
        p_appears=p_appears,
        q_appears=q_appears,
        max_denominator_ok=den_ok,
        failures=failures,
    )


def canonical_key(grid: SolutionGrid) -> Tuple[Row, ...]:
    """Row-major key; equal iff the trimmed tables are equal."""
    return grid.rows


def grid_from_denominators(denominators: Sequence[int], params: Params) -> SolutionGrid:
    """Assemble a grid from a multiset of ``p**a q**b`` denominators."""
    p, q = params.p, params.q
    cells = {}
    max_b = 0
    for x in denominators:
        a = b = 0
        while x % p == 0:
            x //= p
            a += 1
        while x % q == 0:
            x //= q
            b += 1
        if x != 1 or a > params.alpha_p:
            raise ValueError(f"denominator not of the form p^a q^b with a <= {params.alpha_p}")
        cells[(a, b)] = cells.get((a, b), 0) + 1
        max_b = max(max_b, b)
    rows = [[0] * params.width for _ in range(max_b + 1)]
    for (a, b), k in cells.items():
        rows[b][a] = k
    return SolutionGrid(tuple(tuple(r) for r in rows), params)
