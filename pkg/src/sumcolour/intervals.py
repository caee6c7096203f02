"""Finite unions of open intervals with rational endpoints.

An :class:`IntervalSet` is stored in canonical form: spans sorted by left
endpoint, each nonempty, and pairwise disjoint.  Because the spans are open,
two spans that merely touch at an endpoint (``(a, b)`` and ``(b, c)``) are
left separate; the shared endpoint is not a member of either.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .exact import format_rational, parse_rational

Span = tuple[Fraction, Fraction]


class ZeroScale(ValueError):
    """Affine transforms must use a nonzero scale factor."""


def _normalize(pairs: Iterable[Sequence]) -> tuple[Span, ...]:
    spans: list[Span] = []
    for pair in pairs:
        a, b = Fraction(pair[0]), Fraction(pair[1])
        if a >= b:
            raise ValueError(f"interval ({a}, {b}) is empty or inverted")
        spans.append((a, b))
    spans.sort()
    merged: list[Span] = []
    for a, b in spans:
        if merged and a < merged[-1][1]:
            # strict overlap: open intervals that only touch stay separate
            last = merged.pop()
            merged.append((last[0], max(last[1], b)))
        else:
            merged.append((a, b))
    return tuple(merged)


@dataclass(frozen=True)
class IntervalSet:
    """A finite union of open rational intervals in canonical form."""

    spans: tuple[Span, ...] = ()

    @classmethod
    def of(cls, *pairs: Sequence) -> "IntervalSet":
        return cls(_normalize(pairs))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence]) -> "IntervalSet":
        return cls(_normalize(pairs))

    def __iter__(self) -> Iterator[Span]:
        return iter(self.spans)

    @property
    def is_empty(self) -> bool:
        return not self.spans

    def contains(self, q: Fraction) -> bool:
        """Membership test; endpoints are excluded."""
        q = Fraction(q)
        return any(a < q < b for a, b in self.spans)

    def covers_closed(self, lo: Fraction, hi: Fraction) -> bool:
        """True when the closed interval [lo, hi] sits inside one span."""
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError(f"closed interval [{lo}, {hi}] is inverted")
        return any(a < lo and hi < b for a, b in self.spans)

    def transform(self, scale: Fraction, shift: Fraction) -> "IntervalSet":
        """Image under ``t -> scale*t + shift``; a negative scale flips spans.

        Raises:
            ZeroScale: if ``scale == 0``.
        """
        scale, shift = Fraction(scale), Fraction(shift)
        if scale == 0:
            raise ZeroScale("cannot scale an interval set by zero")
        moved = []
        for a, b in self.spans:
            x, y = scale * a + shift, scale * b + shift
            moved.append((x, y) if scale > 0 else (y, x))
        return IntervalSet(_normalize(moved))

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        out: list[Span] = []
        for a1, b1 in self.spans:
            for a2, b2 in other.spans:
                lo, hi = max(a1, a2), min(b1, b2)
                if lo < hi:
                    out.append((lo, hi))
        return IntervalSet(tuple(sorted(out)))

    def to_json(self) -> list[list[str]]:
        return [[format_rational(a), format_rational(b)] for a, b in self.spans]

    @classmethod
    def from_json(cls, data: Iterable[Sequence[str]]) -> "IntervalSet":
        return cls(_normalize([(parse_rational(a), parse_rational(b)) for a, b in data]))
