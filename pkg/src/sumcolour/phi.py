"""Prime-power partial fractions.

Every rational ``x`` splits, uniquely up to an integer, as a sum of parts
``a / p**n`` where ``p**n`` ranges over the prime powers in the reduced
denominator of ``x`` and each numerator satisfies ``0 < a < p**n`` with
``p`` not dividing ``a``.  The part numerators are recovered with one
modular inverse per prime power; no search is involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .primes import factorize, is_prime


class NotPrime(ValueError):
    """A per-prime accessor was called with a composite or unit argument."""


@dataclass(frozen=True, order=True)
class PrimePowerPart:
    """One component ``a / p**n`` of a decomposition."""

    p: int
    n: int
    a: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.a, self.p ** self.n)


@dataclass(frozen=True)
class PhiDecomp:
    """All prime-power parts of a rational, ordered by prime."""

    parts: tuple[PrimePowerPart, ...]

    @property
    def value(self) -> Fraction:
        """Sum of the parts; differs from the decomposed rational by an integer."""
        return sum((part.value for part in self.parts), Fraction(0))

    def part_for(self, p: int) -> PrimePowerPart | None:
        for part in self.parts:
            if part.p == p:
                return part
        return None


def decompose(x: Fraction) -> PhiDecomp:
    """Split ``x`` into its prime-power parts.

    For each prime power ``p**n`` exactly dividing the reduced denominator,
    the numerator is ``a = b * inverse(c / p**n) mod p**n`` where ``x = b/c``
    in lowest terms.  Reducing the defining congruence modulo ``p**n`` kills
    every other part, which is why this is the unique solution.
    """
    x = Fraction(x)
    den = x.denominator
    parts = []
    for p, n in sorted(factorize(den).items()) if den > 1 else []:
        q = p ** n
        cofactor = den // q
        a = x.numerator * pow(cofactor, -1, q) % q
        parts.append(PrimePowerPart(p, n, a))
    return PhiDecomp(tuple(parts))


def n_p(x: Fraction, p: int) -> int:
    """Exponent of ``p`` in the reduced denominator of ``x`` (0 if absent)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    part = decompose(x).part_for(p)
    return part.n if part else 0


def a_p(x: Fraction, p: int) -> int:
    """Numerator of the ``p``-part of ``x`` (0 if ``p`` is absent)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    part = decompose(x).part_for(p)
    return part.a if part else 0
