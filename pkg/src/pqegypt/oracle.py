"""Brute-force reference enumerator.

Independent of the table search: it lists every multiset of ``n`` admissible
denominators ``p**a q**b`` (``a <= alpha_p``, below the Sylvester cap ``S_n``)
whose reciprocals add up to one. Denominators are taken in nondecreasing
order, with the usual pruning (the remaining parts must be able to cover the
remaining sum, and each new reciprocal must fit in it). Sums are kept exact by
scaling everything to one common denominator.
"""

from __future__ import annotations

import math
from typing import List

from .model import Params, SolutionGrid, canonical_key, grid_from_denominators
from .numtheory import sylvester


def candidate_denominators(params: Params) -> List[int]:
    """All ``p**a q**b < S_n`` with ``0 <= a <= alpha_p``, ascending."""
    cap = sylvester(params.n)
    out = []
    pa = 1
    for _ in range(params.alpha_p + 1):
        x = pa
        while x < cap:
            out.append(x)
            x *= params.q
        pa *= params.p
        if pa >= cap:
            break
    return sorted(out)


def brute_enumerate(params: Params) -> List[SolutionGrid]:
    dens = candidate_denominators(params)
    if not dens:
        return []
    common = 1
    for x in dens:
        if common % x:
            common = common * x // math.gcd(common, x)
    weights = [common // x for x in dens]
    grids = []
    for combo in _weight_multisets(weights, params.n, common):
        g = grid_from_denominators([dens[i] for i in combo], params)
        p_used = any(k for r in g.rows for k in r[1:])
        q_used = len(g.rows) > 1
        if p_used and q_used:
            grids.append(g)
    grids.sort(key=canonical_key)
    return grids


def brute_count(params: Params) -> int:
    return len(brute_enumerate(params))


def _weight_multisets(weights, n, target):
    """All nonincreasing index-multisets of ``n`` weights summing to ``target``.

    ``weights`` must be strictly decreasing. Returns a list of index tuples.
    """
    index_of = {w: i for i, w in enumerate(weights)}
    size = len(weights)
    found = []
    picked = []

    def rec(start, k, rest):
        if k == 1:
            i = index_of.get(rest)
            if i is not None and i >= start:
                found.append(tuple(picked) + (i,))
            return
        i = start
        while i < size and weights[i] > rest:
            i += 1
        while i < size:
            w = weights[i]
            if w * k < rest:
                break
            picked.append(i)
            rec(i, k - 1, rest - w)
            picked.pop()
            i += 1

    if n >= 1:
        rec(0, n, target)
    return found
