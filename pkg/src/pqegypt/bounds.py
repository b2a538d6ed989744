"""Closed-form thresholds on q and n, and the explicit p = 2 construction.

All quantities are exact integers. ``<c>`` below is ``c mod p**alpha`` and
``N(c)`` the base-p digit sum of ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict

from .model import Params, SolutionGrid
from .numtheory import digit_sum, is_prime, to_digits


def _check_k(alpha: int, k: int) -> None:
    if not 1 <= k <= alpha:
        raise ValueError(f"k must satisfy 1 <= k <= alpha={alpha}, got {k}")


def q_bound_basic(p: int, alpha: int, n: int) -> int:
    """``p**alpha * n``; any q occurring in a solution is strictly below it."""
    return p**alpha * n


def q_bound_k(p: int, alpha: int, n: int, k: int) -> int:
    """Inclusive upper bound on q obtained from the converse threshold at ``k``."""
    _check_k(alpha, k)
    P = p**alpha
    return max(
        P * ((p - 1) * (2 * alpha - k) + 2) - 1,
        P * (n - 1 - (p - 1) * (alpha - k)) - 1,
    )


def q_bound_best(p: int, alpha: int, n: int) -> int:
    """Smallest inclusive bound on q over the basic bound and every ``k``."""
    best = q_bound_basic(p, alpha, n) - 1
    for k in range(1, alpha + 1):
        best = min(best, q_bound_k(p, alpha, n, k))
    return best


def _split_q(q: int, alpha2: int):
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be odd and >= 3, got {q}")
    if alpha2 < 1:
        raise ValueError(f"alpha2 must be >= 1, got {alpha2}")
    c = q % 2**alpha2
    return (q - c) // 2**alpha2, c


def construction_threshold(alpha2: int, q: int) -> int:
    """Number of parts of the two-row base solution for p = 2."""
    head, c = _split_q(q, alpha2)
    return head + digit_sum(c, 2) + alpha2


def construct_p2(alpha2: int, q: int, n: int) -> SolutionGrid:
    """A solution with exactly ``n`` parts for p = 2, built explicitly.

    Start from the two rows ``[head, bits(c)]`` over ``[0, 1, ..., 1]``, insert
    ``ell`` copies of ``[head, bits(c) with last bit 0]`` between them, then
    apply ``r`` right moves to the top row, always moving the leftmost unit
    that can move.
    """
    head, c = _split_q(q, alpha2)
    m = construction_threshold(alpha2, q)
    if n < m:
        raise ValueError(f"n={n} is below the construction threshold {m}")
    step = head + digit_sum(c, 2) - 1
    if step <= 0:
        raise RuntimeError(f"degenerate construction step for q={q}, alpha2={alpha2}")
    ell, r = divmod(n - m, step)
    bits = to_digits(c, 2, alpha2).digits
    top = [head, *bits]
    middle = (head, *bits[:-1], 0)
    bottom = (0,) + (1,) * alpha2
    for _ in range(r):
        j = next(i for i in range(alpha2) if top[i] > 0)
        top[j] -= 1
        top[j + 1] += 2
    rows = (bottom,) + (middle,) * ell + (tuple(top),)
    return SolutionGrid(rows, Params(2, q, n, alpha2))


def converse_applies(p: int, alpha: int, k: int, q: int) -> bool:
    _check_k(alpha, k)
    return q >= p**alpha * ((p - 1) * (2 * alpha - k) + 2) - 2


def converse_threshold(p: int, alpha: int, k: int, q: int) -> int:
    """Least n any solution can have once :func:`converse_applies` holds."""
    _check_k(alpha, k)
    P = p**alpha
    best = None
    for s in range(1, p**k):
        low = (s * q) % P
        val = (s * q - low) // P + digit_sum(low, p)
        if best is None or val < best:
            best = val
    return best + (alpha - k) * (p - 1) + 1


def cns_exists_p2(alpha2: int, q: int, n: int) -> bool:
    """Existence for p = 2 and large q: exactly when n reaches the construction threshold."""
    if not is_prime(q) or q == 2:
        raise ValueError(f"q must be an odd prime, got {q}")
    if q < 2**alpha2 * (2 * alpha2 + 1) - 2:
        raise ValueError(
            f"q={q} is below 2^a(2a+1)-2 = {2**alpha2 * (2 * alpha2 + 1) - 2}; "
            "the threshold is not a characterisation there"
        )
    return n >= construction_threshold(alpha2, q)


def alpha2_exists_p2(q: int, n: int) -> bool:
    """Existence for p = 2 with highest 2-exponent at most 2: ``q <= 4n - 11``."""
    if not is_prime(q) or q == 2:
        raise ValueError(f"q must be an odd prime, got {q}")
    if q == 3:
        raise ValueError("q = 3 is an exception (1/2 + 1/3 + 1/6 = 1 already at n = 3)")
    return q <= 4 * n - 11


def residue_bound(alpha2: int, c: int, n: int) -> int:
    """Largest q = c (mod 2**alpha2) the p = 2 construction covers with n parts."""
    if c % 2 == 0 or not 1 <= c < 2**alpha2:
        raise ValueError(f"c must be odd with 1 <= c < 2**{alpha2}, got {c}")
    return 2**alpha2 * (n - digit_sum(c, 2) - alpha2) + c


@dataclass
class BoundsReport:
    p: int
    alpha: int
    n: int
    q_basic: int
    q_best: int
    per_k: Dict[int, int] = field(default_factory=dict)
    notes: Dict[str, object] = field(default_factory=dict)


def bounds_report(p: int, alpha: int, n: int, q: int | None = None) -> BoundsReport:
    """Every bound for ``(p, alpha, n)``; with ``q`` also the applicable verdicts."""
    rep = BoundsReport(
        p=p,
        alpha=alpha,
        n=n,
        q_basic=q_bound_basic(p, alpha, n),
        q_best=q_bound_best(p, alpha, n),
        per_k={k: q_bound_k(p, alpha, n, k) for k in range(1, alpha + 1)},
    )
    if q is None:
        return rep
    rep.notes["q_within_best"] = q <= rep.q_best
    conv = {}
    for k in range(1, alpha + 1):
        if converse_applies(p, alpha, k, q):
            conv[k] = converse_threshold(p, alpha, k, q)
    rep.notes["converse_min_n"] = conv
    if conv:
        rep.notes["converse_excludes"] = n < max(conv.values())
    if p == 2 and q % 2 == 1 and q >= 3:
        thr = construction_threshold(alpha, q)
        rep.notes["construction_threshold"] = thr
        rep.notes["construction_guarantees"] = n >= thr
        if is_prime(q) and q >= 2**alpha * (2 * alpha + 1) - 2:
            rep.notes["cns_exists"] = n >= thr
        if alpha == 2 and is_prime(q) and q != 3:
            rep.notes["alpha2_exists"] = q <= 4 * n - 11
    return rep
