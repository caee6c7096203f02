"""Exact scalar arithmetic: reduced rationals and integer floor-logarithms.

Everything in this module is computed with big-integer comparisons only.
No floating point is used anywhere, so results stay exact for inputs of
arbitrary size and for exponents far outside the float range.
"""
from __future__ import annotations

import threading
from bisect import bisect_right
from fractions import Fraction
from typing import Iterable

Rational = Fraction

# Grow-only cache of [1, k, k**2, ...] per base; guarded so concurrent
# growth cannot append a power twice (index must equal exponent).
_POWERS: dict[int, list[int]] = {}
_POWERS_LOCK = threading.Lock()


def _powers_through(k: int, bound: int) -> list[int]:
    """Powers of ``k`` as a sorted list extending past ``bound``."""
    pows = _POWERS.get(k)
    if pows is None:
        with _POWERS_LOCK:
            pows = _POWERS.setdefault(k, [1, k])
    if pows[-1] <= bound:
        with _POWERS_LOCK:
            while pows[-1] <= bound:
                pows.append(pows[-1] * k)
    return pows


def _ilog(k: int, d: int) -> int:
    """Largest ``e >= 0`` with ``k**e <= d``, for integers ``d >= 1``."""
    return bisect_right(_powers_through(k, d), d) - 1


class NonPositiveInput(ValueError):
    """An argument that must be strictly positive was zero or negative."""


def parse_rational(text: str) -> Fraction:
    """Parse a rational from its ``a/b`` (or bare integer) string form."""
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Serialize a rational as ``a/b`` in lowest terms; zero is ``0/1``."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def flog(k: int, u: int, q: Fraction) -> int:
    """Floor logarithm of ``q`` in base ``k ** (1/u)``.

    Returns the unique integer ``j`` with ``k**j <= q**u < k**(j+1)``,
    i.e. ``k**j * b**u <= a**u < k**(j+1) * b**u`` for ``q = a/b``, found
    by pure integer arithmetic (never floating point).

    Raises:
        NonPositiveInput: if ``q <= 0``.
        ValueError: if ``k < 2`` or ``u < 1``.
    """
    if k < 2:
        raise ValueError(f"base must be an integer >= 2, got {k}")
    if u < 1:
        raise ValueError(f"root index must be an integer >= 1, got {u}")
    q = Fraction(q)
    if q <= 0:
        raise NonPositiveInput(f"flog needs a positive input, got {q}")
    a = q.numerator ** u
    b = q.denominator ** u
    if a >= b:
        # j >= 0.  With d = a // b: k**e <= d <= a/b forces j >= e, while
        # k**(e+1) >= d+1 > a/b forces j <= e, so j = ilog(k, d) exactly.
        return _ilog(k, a // b)
    # j < 0: j = -n for the least n >= 1 with k**n >= ceil(b/a) >= 2.
    c = -(-b // a)
    return -(_ilog(k, c - 1) + 1)


def translate_witness(points: Iterable[Fraction], x: Fraction, k: int) -> list[Fraction]:
    """Shift a set so its k-fold sums land where the originals' did, minus x.

    Maps each ``t`` to ``t - x/k``.  Any k-term sum of the result equals the
    corresponding k-term sum of the input minus ``x``, which is the exact
    change of variables used to recentre a sumset witness at the origin.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    shift = Fraction(x) / k
    return [Fraction(t) - shift for t in points]
