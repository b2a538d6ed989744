"""Base-p arithmetic primitives.

Digit vectors are most-significant first, the same left-to-right order used
when a row of a solution table is printed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence


@dataclass(frozen=True)
class DigitVec:
    digits: tuple
    base: int

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if any(d < 0 or d >= self.base for d in self.digits):
            raise ValueError(f"digit out of range for base {self.base}: {self.digits}")

    @property
    def width(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, i):
        return self.digits[i]

    def value(self) -> int:
        return from_digits(self.digits, self.base)


def _check_base(p: int) -> None:
    if p < 2:
        raise ValueError(f"base must be >= 2, got {p}")


def residue_mod_power(m: int, p: int, alpha: int) -> int:
    """Return ``m mod p**alpha`` (always in ``[0, p**alpha)``)."""
    _check_base(p)
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    return m % p**alpha


def to_digits(m: int, p: int, width: int) -> DigitVec:
    _check_base(p)
    if width < 1:
        raise ValueError(f"width must be positive, got {width}")
    if m < 0:
        raise ValueError(f"negative integer {m} has no digit expansion")
    if m >= p**width:
        raise OverflowError(f"{m} does not fit in {width} base-{p} digits")
    out = [0] * width
    i = width - 1
    while m:
        m, out[i] = divmod(m, p)
        i -= 1
    return DigitVec(tuple(out), p)


def from_digits(digits: Sequence[int], p: int) -> int:
    m = 0
    for d in digits:
        m = m * p + d
    return m


def digit_sum(m: int, p: int) -> int:
    """Sum of the base-p digits of ``m``; for p = 2 this is the popcount."""
    _check_base(p)
    if m < 0:
        raise ValueError(f"digit_sum needs m >= 0, got {m}")
    if p == 2:
        return bin(m).count("1")
    total = 0
    while m:
        m, d = divmod(m, p)
        total += d
    return total


def p_valuation(m: int, p: int) -> int:
    _check_base(p)
    if m <= 0:
        raise ValueError(f"valuation needs m >= 1, got {m}")
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def _leading_index(s: int, p: int) -> int:
    # index of the most significant base-p digit of s >= 1
    L = 0
    while s >= p:
        s //= p
        L += 1
    return L


def not_op(s: int, p: int) -> int:
    """Digit complement: ``p-1-d`` above the valuation, ``p-d`` at it.

    Digits below the valuation stay zero, so ``s + not_op(s, p)`` is the next
    power of ``p`` above the leading digit of ``s``.
    """
    _check_base(p)
    if s < 1:
        raise ValueError(f"NOT is defined for s >= 1, got {s}")
    v = p_valuation(s, p)
    L = _leading_index(s, p)
    out = 0
    for j in range(L, v - 1, -1):
        d = (s // p**j) % p
        nd = p - d if j == v else p - 1 - d
        out = out * p + nd
    return out * p**v


def not_op_digits(s: int, p: int, alpha: int) -> List[int]:
    """Digit-wise extended complement of ``s`` over ``alpha`` places.

    Zeros above the leading digit are complemented to ``p-1``. This is the
    construction that :func:`not_op_extended` replaces with a subtraction; it
    is kept for cross-checking.
    """
    if not 1 <= s < p**alpha:
        raise ValueError(f"need 1 <= s < p**alpha, got s={s}")
    digits = list(to_digits(s, p, alpha))
    v = p_valuation(s, p)
    out = [0] * alpha
    for idx in range(alpha):
        j = alpha - 1 - idx  # place value exponent
        if j > v:
            out[idx] = p - 1 - digits[idx]
        elif j == v:
            out[idx] = p - digits[idx]
    return out


def not_op_extended(s: int, p: int, alpha: int) -> int:
    _check_base(p)
    if not 1 <= s < p**alpha:
        raise ValueError(f"need 1 <= s < p**alpha, got s={s}, p**alpha={p**alpha}")
    return p**alpha - s


@lru_cache(maxsize=None)
def sylvester(i: int) -> int:
    """The i-th Sylvester number: 2, 3, 7, 43, 1807, ..."""
    if i < 1:
        raise ValueError(f"Sylvester index starts at 1, got {i}")
    s = 2
    for _ in range(i - 1):
        s = s * s - s + 1
    return s


def sylvester_exceeds(n: int, x: int) -> bool:
    """``sylvester(n) > x``, without building ``S_n`` once it is clearly larger."""
    if n < 1:
        raise ValueError(f"Sylvester index starts at 1, got {n}")
    s = 2
    for _ in range(n - 1):
        if s > x:
            return True
        s = s * s - s + 1
    return s > x


def alpha_cap(p: int, n: int) -> int:
    """Largest alpha with ``p**alpha < sylvester(n)``, in exact integers."""
    _check_base(p)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    bound = sylvester(n)
    lo, hi = 0, bound.bit_length()  # p**hi >= 2**hi > bound
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if p**mid < bound:
            lo = mid
        else:
            hi = mid
    return lo


def power_exponent(m: int, q: int) -> int | None:
    """Return b with ``m == q**b``, or None."""
    if m < 1:
        return None
    b = 0
    while m % q == 0:
        m //= q
        b += 1
    return b if m == 1 else None


def is_prime(m: int) -> bool:
    """Trial division; meant for the small bases this package deals with."""
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True
