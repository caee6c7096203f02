"""A 72-colouring of rational vectors with no monochromatic k-fold sumsets.

Each vector gets four features derived from the prime-power decomposition
of its coordinates and from its l1 size:

- ``f``: a 3-colour residue feature at the largest denominator prime,
- ``g``: the same kind of feature at the deepest prime power coprime to k,
- ``h``: the parity of the deepest prime-power level among divisors of k,
- ``theta``: the l1-size band number modulo 4 in base ``k**(1/2)``.

The encoded colour is ``f*24 + g*8 + h*4 + theta``, giving 3*3*2*4 = 72
classes.  The point of the combination: for any fixed translate u and any
large enough family X, some x in X has ``u + x`` and ``k*x`` coloured
differently, and the four case generators below manufacture families that
drive each feature to that separation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .conflict import m_p, psi_p
from .exact import flog
from .phi import decompose
from .primes import is_prime
from .qvec import QVec, as_vec, vec_scale, vec_sum

CASES = ("I", "II", "III", "IV")


class NoWitness(RuntimeError):
    """No member of the family separates u + x from k*x."""


@dataclass(frozen=True)
class SupportStats:
    """Denominator statistics of a vector, split along divisors of k.

    S: all primes appearing in some coordinate's denominator.
    M: max of S, or 0 when S is empty.
    ell: largest coordinate index whose denominator M divides, or None.
    N: deepest exponent n_p(x_i) over primes p not dividing k.
    L: deepest scaled exponent n_p(x_i) // m_p over primes p dividing k.
    sigma: l1 size, the sum of coordinate absolute values.
    """

    S: frozenset[int]
    M: int
    ell: int | None
    N: int
    L: int
    sigma: Fraction


class GammaColour(NamedTuple):
    f: int
    g: int
    h: int
    theta: int

    def encode(self) -> int:
        return self.f * 24 + self.g * 8 + self.h * 4 + self.theta


def _decomposed_stats(x: QVec, k: int):
    decomps = [decompose(c) for c in x]
    S: set[int] = set()
    for d in decomps:
        S.update(part.p for part in d.parts)
    M = max(S) if S else 0
    ell = None
    if S:
        ell = max(i for i, d in enumerate(decomps) if d.part_for(M) is not None)
    N = 0
    L = 0
    for d in decomps:
        for part in d.parts:
            if k % part.p == 0:
                L = max(L, part.n // m_p(part.p, k))
            else:
                N = max(N, part.n)
    sigma = sum(abs(c) for c in x)
    st = SupportStats(S=frozenset(S), M=M, ell=ell, N=N, L=L, sigma=sigma)
    return st, decomps


def support_stats(x: Sequence[Fraction], k: int) -> SupportStats:
    """Compute the six statistics feeding the colour of ``x``."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return _decomposed_stats(as_vec(x), k)[0]


def gamma(x: Sequence[Fraction], k: int) -> GammaColour:
    """Colour of a vector; see the module docstring for the four features."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    x = as_vec(x)
    st, decomps = _decomposed_stats(x, k)
    if not st.S or k % st.M == 0:
        f = 0
    else:
        f = psi_p(st.M, k)(decomps[st.ell].part_for(st.M).a)
    if st.N == 0:
        g = 0
    else:
        p = max(part.p
                for d in decomps for part in d.parts
                if k % part.p != 0 and part.n == st.N)
        j = max(i for i, d in enumerate(decomps)
                if (part := d.part_for(p)) is not None and part.n == st.N)
        g = psi_p(p, k)(decomps[j].part_for(p).a)
    h = st.L % 2
    theta = flog(k, 2, st.sigma) % 4 if st.sigma else 0
    return GammaColour(f=f, g=g, h=h, theta=theta)


def separate(u: Sequence[Fraction], X: Sequence[Sequence[Fraction]],
             k: int) -> QVec:
    """First x in X whose translate u + x and dilate k*x differ in colour.

    Raises:
        NoWitness: when no member separates; this signals a family that is
            too small or degenerate, never a defect in the colouring.
    """
    u = as_vec(u)
    for raw in X:
        x = as_vec(raw)
        if gamma(vec_sum(u, x), k) != gamma(vec_scale(k, x), k):
            return x
    raise NoWitness(f"no separating member among {len(X)} candidates")


def _next_prime(n: int) -> int:
    n += 1
    while not is_prime(n):
        n += 1
    return n


def _axis(m: int, value: Fraction) -> QVec:
    return (Fraction(0),) * (m - 1) + (Fraction(value),)


def case_generator(case: str, m: int, k: int, size: int,
                   seed: int) -> list[QVec]:
    """Deterministic families driving each separation mechanism.

    I: a seeded base vector plus integer translates whose l1 size grows
       geometrically, forcing the size band theta to separate.
    II: 1/p on the last coordinate for successive primes p > k, driving
        the top-denominator feature f.
    III: 1/p**n for the least prime not dividing k and growing n, driving
        the deep-exponent feature g.
    IV: 1/p**(n*m_p) for the least prime dividing k and growing n, driving
        the level parity h.

    Only case I consumes randomness; the other three are seed-independent.
    """
    if case not in CASES:
        raise ValueError(f"case must be one of {CASES}, got {case!r}")
    if m < 1 or size < 1:
        raise ValueError("need m >= 1 and size >= 1")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if case == "I":
        rng = random.Random(seed)
        base = tuple(Fraction(rng.randint(1, 100), rng.randint(1, 100))
                     for _ in range(m))
        out = []
        t = 0
        for _ in range(size):
            out.append((base[0] + t,) + base[1:])
            t = 2 * t + rng.randint(1, 100)
        return out
    if case == "II":
        out = []
        p = k
        for _ in range(size):
            p = _next_prime(p)
            out.append(_axis(m, Fraction(1, p)))
        return out
    if case == "III":
        p = 2
        while k % p == 0:
            p = _next_prime(p)
        return [_axis(m, Fraction(1, p ** (j + 1))) for j in range(size)]
    p = 2
    while k % p != 0:
        p = _next_prime(p)
    step = m_p(p, k)
    return [_axis(m, Fraction(1, p ** ((j + 1) * step))) for j in range(size)]
