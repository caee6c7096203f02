"""Prime utilities over a growable cached sieve.

Factorisation is plain trial division against the cached primes; the sieve
extends itself on demand, so callers never pass a limit around.
"""
from __future__ import annotations

from bisect import bisect_right

_primes: list[int] = [2, 3, 5, 7, 11, 13]
_sieved_to = 14


def _extend(limit: int) -> None:
    global _primes, _sieved_to
    if limit < _sieved_to:
        return
    limit = max(limit, 2 * _sieved_to)
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit ** 0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    _primes = [i for i, f in enumerate(flags) if f]
    _sieved_to = limit + 1


def primes_up_to(n: int) -> list[int]:
    """All primes ``<= n`` in increasing order."""
    if n < 2:
        return []
    _extend(n)
    return _primes[: bisect_right(_primes, n)]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    root = int(n ** 0.5) + 1
    _extend(root)
    for p in _primes:
        if p * p > n:
            return True
        if n % p == 0:
            return n == p
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of ``n >= 1`` as an exponent map."""
    if n < 1:
        raise ValueError(f"can only factorize positive integers, got {n}")
    out: dict[int, int] = {}
    rest = n
    i = 0
    while rest > 1:
        if i >= len(_primes):
            _extend(2 * _sieved_to)
        p = _primes[i]
        if p * p > rest:
            out[rest] = out.get(rest, 0) + 1
            break
        while rest % p == 0:
            out[p] = out.get(p, 0) + 1
            rest //= p
        i += 1
    return out


def valuation(n: int, p: int) -> int:
    """Largest ``e`` with ``p**e`` dividing ``n`` (``n != 0``)."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    if p < 2:
        raise ValueError(f"valuation base must be >= 2, got {p}")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
