"""Stepping the vector colouring up to finite-support sequences.

A sequence with finitely many nonzero entries is coloured by the pair
(inner, xi): ``inner`` applies the 72-colouring of the smallest dense
prefix containing the support, and ``xi`` is a 2-colouring of the top
nonzero entry that is guaranteed to flip under multiplication by k.
That gives 72 * 2 = 144 classes, and the flip makes any chain of
sequences with strictly increasing top index unable to close a
monochromatic k-fold sumset.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence

from .exact import flog
from .gamma import gamma
from .seqs import as_seq, seq_scale, seq_sum

FinSeq = Mapping[int, Fraction]


class ZeroInput(ValueError):
    """xi is undefined at zero."""


class ZeroVector(ValueError):
    """The zero sequence has no top entry."""


class ChainNotIncreasing(ValueError):
    """Chain members must have strictly increasing top indices."""


class TauColour(NamedTuple):
    inner: int
    xi: int

    def encode(self) -> int:
        return self.inner * 2 + self.xi


def xi(t: Fraction, k: int) -> int:
    """Band parity of |t| in base k; satisfies xi(k*t) = 1 - xi(t) exactly."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    t = Fraction(t)
    if t == 0:
        raise ZeroInput("xi needs a nonzero input")
    return flog(k, 1, abs(t)) % 2


def mu_eta(x: FinSeq) -> tuple[int, Fraction]:
    """Largest occupied index of a nonzero sequence and its value."""
    s = as_seq(x)
    if not s:
        raise ZeroVector("the zero sequence has no top entry")
    mu = max(s)
    return mu, s[mu]


def tau(x: FinSeq, k: int) -> TauColour:
    """Colour of a finite-support sequence; the zero sequence gets (0, 0)."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    s = as_seq(x)
    if not s:
        return TauColour(0, 0)
    mu, eta = mu_eta(s)
    prefix = tuple(s.get(i, Fraction(0)) for i in range(mu + 1))
    return TauColour(inner=gamma(prefix, k).encode(), xi=xi(eta, k))


def chain_check(xs: Sequence[FinSeq], k: int) -> bool:
    """Check the chain property on k sequences with increasing top index.

    Returns true iff the xi component of the chain's total sum differs
    from the xi component of k times the last member.  Always true for a
    valid chain: the total's top entry equals the last member's, and xi
    flips under multiplication by k.

    Raises:
        ChainNotIncreasing: if the top indices fail to strictly increase.
        ValueError: unless exactly k sequences are given, all nonzero.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    chain = [as_seq(x) for x in xs]
    if len(chain) != k:
        raise ValueError(f"need exactly {k} sequences, got {len(chain)}")
    if any(not s for s in chain):
        raise ZeroVector("chain members must be nonzero")
    tops = [max(s) for s in chain]
    if any(a >= b for a, b in zip(tops, tops[1:])):
        raise ChainNotIncreasing(f"top indices {tops} do not increase")
    total = seq_sum(*chain)
    return tau(total, k).xi != tau(seq_scale(k, chain[-1]), k).xi
