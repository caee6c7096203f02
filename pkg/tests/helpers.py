"""Brute-force oracles and small random generators shared by the tests."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product


def rand_rational(rng: random.Random, num: int = 100, den: int = 100,
                  signed: bool = True) -> Fraction:
    a = rng.randint(1, num)
    if signed and rng.random() < 0.5:
        a = -a
    return Fraction(a, rng.randint(1, den))


def brute_flog(k: int, u: int, q: Fraction) -> int:
    """The unique j with k**j <= q**u < k**(j+1), by stepwise scanning."""
    target = Fraction(q) ** u
    j, power = 0, Fraction(1)
    if power <= target:
        while power * k <= target:
            power *= k
            j += 1
        return j
    while power > target:
        power /= k
        j -= 1
    return j


def brute_digit(x: Fraction, p: int) -> tuple[int, int | None]:
    """(n, a) with x - a/p**n having a p-free denominator, by full scan."""
    n, den = 0, x.denominator
    while den % p == 0:
        den //= p
        n += 1
    if n == 0:
        return 0, None
    q = p ** n
    for a in range(1, q):
        if a % p == 0:
            continue
        if (x - Fraction(a, q)).denominator % p != 0:
            return n, a
    raise AssertionError(f"no digit for {x} at {p}")


def all_mode_sums(X, k: int, mode: str):
    """Every required k-fold sum of the point set X, as plain tuples."""
    dim = len(X[0])
    combos = (combinations_with_replacement(X, k) if mode == "kX"
              else combinations(X, k))
    return [tuple(sum(v[i] for v in c) for i in range(dim)) for c in combos]


def brute_core(S, pos: int):
    """Reference robust core: scan the whole digit space at full depth."""
    from sumcolour.digits import CylinderUnion

    d = max(S.depth, pos)
    kept = [w for w in product(range(S.m), repeat=d)
            if all(S.contains_word(w[:pos - 1] + (c,) + w[pos:])
                   for c in range(S.m))]
    return CylinderUnion(m=S.m, depth=d, members=frozenset(kept))
