"""Band colourings of the positive rationals.

The line is cut into multiplicative bands ``[base**(t/u), base**((t+1)/u))``
and the colour of ``x`` is the band number ``t`` modulo a small modulus.
The parameters are chosen so that summing ``k`` elements of one band moves
the band number by ``u`` while summing ``m`` elements moves it by ``v`` or
``v + 1``, and those displacements never agree modulo the modulus.  The sum
of a k-subset of an m-set inside one band therefore never shares a colour
with the full sum.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import NonPositiveInput, flog


class BadOrder(ValueError):
    """Band parameters need ``m > k >= 1``."""


class BandMismatch(ValueError):
    """An element claimed to lie in band ``t`` does not."""


@dataclass(frozen=True)
class BandParams:
    """Resolved band-colouring parameters.

    For ``k == 1`` the bands are plain powers of ``m`` and the colour is the
    band number mod 2 (``base == m``, ``u == 1``, ``modulus == 2``).  For
    ``k >= 2`` the bands are powers of ``k ** (1/u)`` where ``u`` is least
    with ``k**(u+1) <= m**u``, ``v`` is the band number of ``m``, and the
    modulus is ``l = v + 2 - u``.
    """

    k: int
    m: int
    u: int
    v: int | None
    l: int

    @property
    def base(self) -> int:
        return self.m if self.k == 1 else self.k

    @property
    def modulus(self) -> int:
        return self.l


def band_params(k: int, m: int) -> BandParams:
    """Compute band parameters for sums of ``k`` out of ``m`` elements.

    Raises:
        BadOrder: unless ``m > k >= 1``.
    """
    if k < 1 or m <= k:
        raise BadOrder(f"need m > k >= 1, got k={k}, m={m}")
    if k == 1:
        return BandParams(k=1, m=m, u=1, v=None, l=2)
    u = 1
    while k ** (u + 1) > m ** u:
        u += 1
    v = flog(k, u, Fraction(m))
    return BandParams(k=k, m=m, u=u, v=v, l=v + 2 - u)


def band_colour(params: BandParams, x: Fraction) -> int:
    """Colour of a rational: its band number modulo the params' modulus.

    Zero gets colour 0 and negatives take the colour of their absolute
    value, so the colouring is defined on all of the rationals.
    """
    x = Fraction(x)
    if x == 0:
        return 0
    return flog(params.base, params.u, abs(x)) % params.modulus


def band_index(params: BandParams, x: Fraction) -> int:
    """Band number of a positive rational (the un-reduced colour)."""
    x = Fraction(x)
    if x <= 0:
        raise NonPositiveInput(f"band index needs a positive input, got {x}")
    return flog(params.base, params.u, x)


def band_property_check(params: BandParams, t: int, F: Sequence[Fraction],
                        H: Sequence[Fraction]) -> bool:
    """Check the defining property on one concrete band-``t`` configuration.

    ``F`` must hold ``m`` distinct elements of band ``t`` and ``H`` a
    ``k``-element subset of ``F``.  Returns true iff the colour of
    ``sum(H)`` differs from the colour of ``sum(F)``.

    Raises:
        BandMismatch: if some element of ``F`` lies outside band ``t``.
        ValueError: if the sizes or the subset relation are wrong.
    """
    F = [Fraction(x) for x in F]
    H = [Fraction(x) for x in H]
    if len(set(F)) != len(F) or len(F) != params.m:
        raise ValueError(f"F must hold {params.m} distinct elements")
    if len(set(H)) != len(H) or len(H) != params.k:
        raise ValueError(f"H must hold {params.k} distinct elements")
    if not set(H) <= set(F):
        raise ValueError("H must be a subset of F")
    for x in F:
        if x <= 0 or band_index(params, x) != t:
            raise BandMismatch(f"{x} is not in band {t}")
    return band_colour(params, sum(H)) != band_colour(params, sum(F))


def _floor_root(c: int, u: int) -> int:
    """Largest ``g >= 0`` with ``g**u <= c`` (``c >= 0``), exactly."""
    if c < 0:
        raise ValueError("negative radicand")
    if u == 1 or c in (0, 1):
        return c
    # Newton iteration on integers, seeded above the root.
    g = 1 << -(-c.bit_length() // u)
    while True:
        t = ((u - 1) * g + c // g ** (u - 1)) // u
        if t >= g:
            return g
        g = t


def sample_band(params: BandParams, t: int, count: int,
                rng: random.Random) -> list[Fraction]:
    """Draw ``count`` distinct rationals whose band number is exactly ``t``.

    Works by sampling a denominator, solving the exact integer range of
    admissible numerators inside the band shifted to the fundamental domain,
    then scaling back by a power of the base.
    """
    base, u = params.base, params.u
    qu, ru = divmod(t, u)
    out: set[Fraction] = set()
    while len(out) < count:
        d = rng.randint(1, 64)
        while True:
            c1 = base ** ru * d ** u
            c2 = base ** (ru + 1) * d ** u
            n_lo = _floor_root(c1 - 1, u) + 1   # least n with n**u >= c1
            n_hi = _floor_root(c2 - 1, u)       # greatest n with n**u < c2
            if n_lo <= n_hi:
                break
            d *= 2
        n = rng.randint(n_lo, n_hi)
        if qu >= 0:
            out.add(Fraction(n * base ** qu, d))
        else:
            out.add(Fraction(n, d * base ** (-qu)))
    return sorted(out)
