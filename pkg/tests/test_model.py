from fractions import Fraction

import pytest

from pqegypt.model import (
    BOTTOM,
    LAST,
    Params,
    SolutionGrid,
    canonical_key,
    grid_from_denominators,
    grid_sum,
    row_value,
    verify,
)

# 1/2 + 1/4 + 2/24 + 3/18 = 1, rows listed bottom first
SEVEN = ((0, 1, 1, 0), (0, 0, 0, 2), (0, 3, 0, 0))


def grid(rows, p=2, q=3, n=7, alpha=3):
    return SolutionGrid(tuple(map(tuple, rows)), Params(p, q, n, alpha))


@pytest.mark.parametrize(
    "kw",
    [dict(p=4, q=3), dict(p=2, q=1), dict(p=2, q=6), dict(p=2, q=3, n=1), dict(p=2, q=3, alpha_p=0)],
)
def test_params_rejects(kw):
    base = dict(p=2, q=3, n=5, alpha_p=2)
    base.update(kw)
    with pytest.raises(ValueError):
        Params(**base)


def test_params_accepts_composite_q():
    assert Params(2, 91, 13, 4).p_pow == 16


@pytest.mark.parametrize("row,p,a,want", [((0, 3, 0, 0), 2, 3, 12), ((0, 1, 1, 2), 2, 3, 8), ((0, 0, 0), 5, 2, 0)])
def test_row_value(row, p, a, want):
    assert row_value(row, p, a) == want


def test_row_value_width():
    with pytest.raises(ValueError):
        row_value((1, 2), 2, 3)


def test_grid_sum_examples():
    assert grid_sum(grid(SEVEN)) == 1
    five = grid([(0, 1, 0, 1, 0, 1), (1, 0, 0, 0, 0, 1)], n=5, alpha=5)
    assert grid_sum(five) == 1
    assert grid_sum(grid([(0, 0, 0, 0)])) == 0


def test_grid_sum_matches_termwise():
    g = grid([(1, 2, 0, 3), (0, 1, 4, 0), (2, 0, 0, 1)])
    want = sum(Fraction(k, 2**a * 3**b) for b, r in enumerate(g.rows) for a, k in enumerate(r))
    assert grid_sum(g) == want


def test_grid_sum_ignores_zero_rows():
    padded = grid(SEVEN + ((0, 0, 0, 0),) * 3)
    assert grid_sum(padded) == grid_sum(grid(SEVEN))
    assert padded == grid(SEVEN)


def test_seven_term_valid():
    rep = verify(grid(SEVEN))
    assert rep.is_valid and rep.failures == []
    assert rep.part_count == 7 and rep.p_appears and rep.q_appears and rep.max_denominator_ok


def test_three_term_valid():
    assert verify(grid([(0, 1, 0), (1, 1, 0)], n=3, alpha=2)).is_valid


def test_kind_and_height():
    g = grid(SEVEN)
    assert g.kind == BOTTOM and g.height == 1 and g.alpha_q == 2
    last = grid([(0, 0, 0), (4, 3, 0)], p=3, q=5, alpha=2)
    assert last.kind == LAST and last.height == 2 and last.alpha_q == 1
    deeper = grid([(0, 0, 0), (0, 0, 0), (1, 0, 0), (0, 1, 0)], p=3, q=5, alpha=2)
    assert deeper.height == 3


def test_pure_q_grid_rejected():
    g = grid([(0, 0), (3, 0)], q=3, n=3, alpha=1)
    rep = verify(g)
    assert not rep.is_valid and rep.failures == ["p_absent"]


# one mutation per invariant, each must trip exactly the matching code
@pytest.mark.parametrize(
    "rows,kw,code",
    [
        ([], {}, "empty"),
        ([(0, 1, 1), (0, 0, 0, 2), (0, 3, 0, 0)], {}, "width"),
        ([(0, 1, 1, 2), (0, 0, 0, 2), (0, 3, -1, 2)], {}, "negative_entry"),
        ([(0, 1, 1, 1), (0, 0, 0, 2), (0, 3, 0, 0)], {"n": 8}, "sum_not_one"),
        (list(SEVEN), {"n": 8}, "part_count"),
        ([(1, 0, 0)], {"n": 2, "alpha": 2}, "p_absent"),
        ([(0, 2)], {"n": 2, "alpha": 1}, "q_absent"),
        ([(0, 1, 1, 0), (0, 0, 0, 2), (0, 3, 0, 0)], {"n": 7, "alpha": 3, "q": 5}, "sum_not_one"),
    ],
)
def test_mutations(rows, kw, code):
    rep = verify(grid(rows, **kw))
    assert code in rep.failures and not rep.is_valid


def test_denominator_cap_failure():
    # 1/2 + 1/3 + 1/6 with n=3 is fine; putting a denominator >= S_3 = 7 trips the cap
    ok = grid([(0, 1, 0), (1, 1, 0)], n=3, alpha=2)
    assert verify(ok).max_denominator_ok
    # 1/2+1/4+1/8+1/24+1/12: sum = 1 with a denominator 24 >= S_4 = 43? no, so use n=3
    bad = grid([(0, 1, 1, 1), (0, 0, 1, 1)], n=3, alpha=3)
    rep = verify(bad)
    assert "denominator_cap" in rep.failures


def test_canonical_key():
    a, b = grid(SEVEN), grid(SEVEN)
    assert canonical_key(a) == canonical_key(b)
    c = grid([(0, 1, 1, 0), (0, 0, 0, 2), (0, 2, 2, 0)])
    assert canonical_key(a) != canonical_key(c)
    assert canonical_key(grid(SEVEN + ((0, 0, 0, 0),))) == canonical_key(a)
    assert sorted([a, c], key=canonical_key)[0] == c


def test_grid_from_denominators():
    dens = [2, 4, 24, 24, 18, 18, 18]
    g = grid_from_denominators(dens, Params(2, 3, 7, 3))
    assert g.rows == SEVEN
    assert g.denominators() == sorted(dens)
    with pytest.raises(ValueError):
        grid_from_denominators([5], Params(2, 3, 7, 3))
