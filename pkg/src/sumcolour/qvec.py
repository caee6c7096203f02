"""Dense rational vectors: tuples of rationals with exact arithmetic."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact import format_rational, parse_rational

QVec = tuple[Fraction, ...]


def as_vec(coords: Iterable) -> QVec:
    """Coerce an iterable of rational-likes into a vector tuple."""
    vec = tuple(Fraction(c) for c in coords)
    if not vec:
        raise ValueError("a vector needs at least one coordinate")
    return vec


def vec_sum(*vecs: Sequence[Fraction]) -> QVec:
    """Coordinate-wise sum; all operands must share the dimension."""
    if not vecs:
        raise ValueError("nothing to sum")
    dim = len(vecs[0])
    if any(len(v) != dim for v in vecs):
        raise ValueError("dimension mismatch")
    return tuple(sum(v[i] for v in vecs) for i in range(dim))


def vec_scale(c: Fraction, vec: Sequence[Fraction]) -> QVec:
    c = Fraction(c)
    return tuple(c * x for x in vec)


def height(q: Fraction) -> int:
    """Height of a reduced rational: max(|numerator|, denominator)."""
    q = Fraction(q)
    return max(abs(q.numerator), q.denominator)


def vec_height(vec: Sequence[Fraction]) -> int:
    return max(height(c) for c in vec)


def format_vec(vec: Sequence[Fraction]) -> list[str]:
    return [format_rational(c) for c in vec]


def parse_vec(items: Iterable[str]) -> QVec:
    return as_vec(parse_rational(s) for s in items)
