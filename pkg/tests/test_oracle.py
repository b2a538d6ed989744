from fractions import Fraction

import pytest

from pqegypt.model import Params, verify
from pqegypt.numtheory import sylvester
from pqegypt.oracle import brute_count, brute_enumerate, candidate_denominators

SEVEN = ((0, 1, 1, 0), (0, 0, 0, 2), (0, 3, 0, 0))


def test_candidates_below_cap():
    prm = Params(2, 3, 4, 3)
    dens = candidate_denominators(prm)
    assert dens == sorted(set(dens))
    assert all(x < sylvester(4) for x in dens)
    assert dens == sorted(2**a * 3**b for a in range(4) for b in range(4) if 2**a * 3**b < 43)


def test_seven_term_example():
    assert SEVEN in {g.rows for g in brute_enumerate(Params(2, 3, 7, 3))}


def test_twenty_two():
    assert brute_count(Params(3, 5, 7, 2)) == 22


def test_halves_lack_q():
    assert brute_enumerate(Params(2, 3, 2, 1)) == []


@pytest.mark.parametrize("prm,want", [(Params(3, 53, 10, 2), 0), (Params(2, 31, 8, 3), 0)])
def test_empty(prm, want):
    assert brute_count(prm) == want


def test_three_parts():
    assert brute_count(Params(2, 3, 3, 2)) >= 1


def test_outputs_verify_and_are_sorted():
    for prm in (Params(2, 5, 6, 3), Params(3, 2, 6, 2), Params(5, 3, 5, 1)):
        grids = brute_enumerate(prm)
        assert all(verify(g).is_valid for g in grids)
        keys = [g.rows for g in grids]
        assert keys == sorted(set(keys))


def test_matches_naive_search():
    # plain rational search over nondecreasing denominators, no shared code
    prm = Params(2, 3, 5, 2)
    dens = candidate_denominators(prm)
    found = set()

    def rec(start, left, rest, chosen):
        if left == 0:
            if rest == 0:
                found.add(tuple(chosen))
            return
        for i in range(start, len(dens)):
            f = Fraction(1, dens[i])
            if f * left < rest:
                break
            if f <= rest:
                rec(i, left - 1, rest - f, chosen + [dens[i]])

    rec(0, prm.n, Fraction(1), [])
    mixed = {c for c in found if any(x % 2 == 0 for x in c) and any(x % 3 == 0 for x in c)}
    assert mixed == {tuple(g.denominators()) for g in brute_enumerate(prm)}
