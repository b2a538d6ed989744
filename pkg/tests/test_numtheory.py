import pytest
from hypothesis import given, strategies as st

from pqegypt.numtheory import (
    DigitVec,
    alpha_cap,
    digit_sum,
    from_digits,
    not_op,
    not_op_digits,
    not_op_extended,
    p_valuation,
    residue_mod_power,
    sylvester,
    sylvester_exceeds,
    to_digits,
)


@pytest.mark.parametrize("m,p,a,want", [(53, 3, 2, 8), (0, 2, 4, 0), (71, 2, 3, 7)])
def test_residue_mod_power(m, p, a, want):
    assert residue_mod_power(m, p, a) == want


@pytest.mark.parametrize("m,p,w,want", [(12, 2, 4, (1, 1, 0, 0)), (8, 3, 2, (2, 2)), (0, 5, 3, (0, 0, 0))])
def test_to_digits(m, p, w, want):
    d = to_digits(m, p, w)
    assert d.digits == want and d.width == w and d.value() == m


def test_to_digits_overflow():
    with pytest.raises(OverflowError):
        to_digits(16, 2, 4)


def test_digitvec_rejects_bad_digit():
    with pytest.raises(ValueError):
        DigitVec((0, 3), 3)


@pytest.mark.parametrize("m,p,want", [(5, 2, 2), (8, 3, 4), (0, 7, 0)])
def test_digit_sum(m, p, want):
    assert digit_sum(m, p) == want


@pytest.mark.parametrize("m,p,want", [(12, 2, 2), (6, 3, 1), (1, 5, 0)])
def test_p_valuation(m, p, want):
    assert p_valuation(m, p) == want


def test_p_valuation_rejects_zero():
    with pytest.raises(ValueError):
        p_valuation(0, 2)


@pytest.mark.parametrize("s,p,want", [(6, 2, 2), (5, 3, 4), (4, 2, 4)])
def test_not_op(s, p, want):
    assert not_op(s, p) == want


def test_not_op_rejects_zero():
    with pytest.raises(ValueError):
        not_op(0, 2)


@pytest.mark.parametrize("s,p,a,want", [(2, 2, 3, 6), (4, 2, 3, 4), (1, 3, 2, 8)])
def test_not_op_extended(s, p, a, want):
    assert not_op_extended(s, p, a) == want


@pytest.mark.parametrize("s", [0, 8])
def test_not_op_extended_range(s):
    with pytest.raises(ValueError):
        not_op_extended(s, 2, 3)


@pytest.mark.parametrize("i,want", [(1, 2), (2, 3), (3, 7), (4, 43), (5, 1807), (6, 3263443)])
def test_sylvester(i, want):
    assert sylvester(i) == want


def test_sylvester_recurrence():
    for i in range(1, 10):
        s = sylvester(i)
        assert sylvester(i + 1) == s * s - s + 1


def test_sylvester_exceeds_matches_direct():
    for n in range(1, 9):
        S = sylvester(n)
        for x in (S - 1, S, S + 1, 1, 10**30):
            assert sylvester_exceeds(n, x) == (S > x)


@pytest.mark.parametrize("p,n,want", [(2, 4, 5), (3, 3, 1), (2, 1, 0)])
def test_alpha_cap(p, n, want):
    assert alpha_cap(p, n) == want


@given(st.integers(2, 7), st.integers(1, 8))
def test_alpha_cap_is_largest(p, n):
    a = alpha_cap(p, n)
    assert p**a < sylvester(n) <= p ** (a + 1)


@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 8), st.data())
def test_digits_round_trip(p, w, data):
    m = data.draw(st.integers(0, p**w - 1))
    assert from_digits(to_digits(m, p, w), p) == m


@given(st.sampled_from([2, 3, 5]), st.integers(1, 10**6))
def test_not_op_sums_to_power(p, s):
    L = 0
    while p ** (L + 1) <= s:
        L += 1
    assert s + not_op(s, p) == p ** (L + 1)


def test_extended_not_exhaustive():
    for p in (2, 3, 5):
        for a in range(1, 7):
            P = p**a
            for s in range(1, P):
                comp = not_op_extended(s, p, a)
                assert s + comp == P
                assert list(to_digits(comp, p, a)) == not_op_digits(s, p, a)
                v = p_valuation(s, p)
                assert digit_sum(comp, p) == (p - 1) * (a - v) + 1 - digit_sum(s, p)
