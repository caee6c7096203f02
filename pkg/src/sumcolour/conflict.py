"""Conflict colourings for fixed-point-free self-maps.

Given a finite map ``f`` with ``f(x) != x`` everywhere, :func:`nofix_colour`
produces a 3-colouring in which no element shares its colour with its image.
On top of it, :func:`psi_p` builds, for a prime ``p`` not dividing ``k``, a
colour table on the residues coprime to ``p`` that separates every residue
``a`` from ``k*a``.  These tables are the per-prime ingredient of the
higher-arity colourings in this package.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Mapping, TypeVar

from .primes import is_prime, valuation
from .phi import NotPrime

T = TypeVar("T", bound=Hashable)


class FixedPointFound(ValueError):
    """The input map has a fixed point, so no conflict colouring exists."""


class NotInP1(ValueError):
    """Expected a prime divisor of k."""


class PInDividesK(ValueError):
    """Expected a prime that does not divide k."""


class NotCoprime(ValueError):
    """A residue-table lookup was attempted at a multiple of the prime."""


def nofix_colour(step: Mapping[T, T]) -> dict[T, int]:
    """3-colour the domain of a fixed-point-free map so x and step(x) differ.

    The rule is deterministic: components are visited in domain (insertion)
    order; the unique cycle of each component is coloured first, alternating
    0/1 along the walk with colour 2 patched onto the final vertex of an odd
    cycle; the trees hanging off the cycle are then coloured breadth-first,
    each vertex taking the least colour unused by its already-coloured
    neighbours.

    Raises:
        FixedPointFound: if ``step(x) == x`` for some x.
        ValueError: if some image lies outside the domain.
    """
    domain = list(step)
    pos = {x: i for i, x in enumerate(domain)}
    for x in domain:
        y = step[x]
        if y not in pos:
            raise ValueError(f"map is not total: {x!r} -> {y!r} leaves the domain")
        if y == x:
            raise FixedPointFound(f"map fixes {x!r}")

    neighbours: dict[T, list[T]] = {x: [] for x in domain}
    for x in domain:
        y = step[x]
        if y not in neighbours[x]:
            neighbours[x].append(y)
        if x not in neighbours[y]:
            neighbours[y].append(x)
    for x in domain:
        neighbours[x].sort(key=pos.__getitem__)

    colours: dict[T, int] = {}
    for start in domain:
        if start in colours:
            continue
        # walk forward until the component's cycle repeats
        path: list[T] = []
        seen_at: dict[T, int] = {}
        cur = start
        while cur not in seen_at:
            seen_at[cur] = len(path)
            path.append(cur)
            cur = step[cur]
        cycle = path[seen_at[cur] :]
        for i, v in enumerate(cycle):
            colours[v] = i % 2
        if len(cycle) % 2 == 1:
            colours[cycle[-1]] = 2
        queue = deque(cycle)
        while queue:
            v = queue.popleft()
            for w in neighbours[v]:
                if w not in colours:
                    used = {colours[z] for z in neighbours[w] if z in colours}
                    colours[w] = min(c for c in range(3) if c not in used)
                    queue.append(w)
    return colours


def r_p(p: int, k: int) -> int:
    """Least ``t >= 1`` with ``p**t > k``."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    t = 1
    while p ** t <= k:
        t += 1
    return t


def m_p(p: int, k: int) -> int:
    """Multiplicity of the prime ``p`` in ``k``; ``p`` must divide ``k``."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k % p != 0:
        raise NotInP1(f"{p} does not divide {k}")
    return valuation(k, p)


def prime_split(k: int) -> tuple[tuple[int, ...], Callable[[int], bool]]:
    """Primes dividing ``k``, plus a membership test for the complement.

    Returns ``(divisors, in_complement)`` where ``divisors`` lists the prime
    divisors of ``k`` in increasing order and ``in_complement(p)`` is true
    exactly for primes not dividing ``k``.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    divisors = tuple(sorted({p for p in range(2, k + 1) if k % p == 0 and is_prime(p)}))
    div_set = frozenset(divisors)

    def in_complement(p: int) -> bool:
        return is_prime(p) and p not in div_set

    return divisors, in_complement


@dataclass(frozen=True, eq=False)
class PsiTable:
    """Colour table on residues coprime to ``p``, modulo ``p ** r``.

    Looking up ``a`` and ``k*a`` always yields different colours; this is
    the multiply-by-k conflict colouring restricted to one prime.
    """

    p: int
    k: int
    r: int
    table: Mapping[int, int] = field(repr=False)

    def __call__(self, a: int) -> int:
        if a % self.p == 0:
            raise NotCoprime(f"{a} is divisible by {self.p}")
        return self.table[a % self.p ** self.r]

    def to_json(self) -> dict:
        """JSON-ready form: {p, k, r, table} with string residue keys."""
        return {"p": self.p, "k": self.k, "r": self.r,
                "table": {str(a): c for a, c in sorted(self.table.items())}}


@lru_cache(maxsize=None)
def psi_p(p: int, k: int) -> PsiTable:
    """Build (and memoize) the multiply-by-k residue colour table for ``p``.

    Raises:
        PInDividesK: if ``p`` divides ``k`` (the multiply-by-k map would not
            stay inside the coprime residues).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k}")
    if k % p == 0:
        raise PInDividesK(f"{p} divides {k}")
    r = r_p(p, k)
    modulus = p ** r
    residues = [a for a in range(1, modulus) if a % p != 0]
    table = nofix_colour({a: (k * a) % modulus for a in residues})
    return PsiTable(p=p, k=k, r=r, table=table)
