"""Base-m digit machinery: cylinder intervals, sumset-safe sets, measure.

Digit sequences over {0..m-1} map to rationals via position weights
m**-n.  With m = k+2, any k elements built from disjoint {0,1} tails add
without carries, which is what lets a whole cylinder's worth of sums stay
inside a target interval set.  The second half of the module is an exact
measure algebra on finite unions of fixed-depth cylinders, with the
digit-translation and robust-core operations used to shrink a positive-
measure set until membership is insensitive to chosen positions.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb
from typing import Iterable, Mapping, Sequence

from .exact import format_rational
from .intervals import IntervalSet


class NoCylinder(RuntimeError):
    """No cylinder interval fits inside the target up to the depth bound."""


class SumEscapedZ(RuntimeError):
    """A verified k-fold sum left the target set; carries the offender."""

    def __init__(self, summands: Sequence[Fraction]):
        self.summands = list(summands)
        super().__init__(
            "sum escaped the target: " +
            " + ".join(format_rational(s) for s in self.summands))


class EmptyB(RuntimeError):
    """The admissible interval set for the next greedy pick is empty."""


class ZeroMeasure(ValueError):
    """The iteration needs a set of positive measure."""


@dataclass(frozen=True)
class DigitSeq:
    """A base-m digit sequence: a dense prefix, sparse exceptions, zeros.

    Positions are 1-based; ``prefix[i]`` is the digit at position i+1 and
    ``sparse`` holds (position, digit) pairs strictly beyond the prefix.
    """

    m: int
    prefix: tuple[int, ...] = ()
    sparse: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.m < 3:
            raise ValueError(f"base must be >= 3, got {self.m}")
        if any(not 0 <= d < self.m for d in self.prefix):
            raise ValueError("prefix digits must lie in [0, m)")
        last = len(self.prefix)
        for pos, d in self.sparse:
            if pos <= last:
                raise ValueError(
                    f"sparse positions must increase beyond the prefix, got {pos}")
            if not 0 <= d < self.m:
                raise ValueError(f"digit {d} out of range for base {self.m}")
            last = pos

    def digit(self, pos: int) -> int:
        if pos < 1:
            raise ValueError(f"positions are 1-based, got {pos}")
        if pos <= len(self.prefix):
            return self.prefix[pos - 1]
        return dict(self.sparse).get(pos, 0)

    def support(self) -> tuple[int, ...]:
        head = tuple(i + 1 for i, d in enumerate(self.prefix) if d)
        tail = tuple(pos for pos, d in self.sparse if d)
        return head + tail

    def value(self) -> Fraction:
        total = Fraction(0)
        for i, d in enumerate(self.prefix):
            total += Fraction(d, self.m ** (i + 1))
        for pos, d in self.sparse:
            total += Fraction(d, self.m ** pos)
        return total


def psi_real(d: DigitSeq) -> Fraction:
    """The rational encoded by a digit sequence: sum of digit * m**-pos."""
    return d.value()


def _word_interval(word: Sequence[int], m: int) -> tuple[Fraction, Fraction]:
    lo = Fraction(0)
    for i, d in enumerate(word):
        lo += Fraction(d, m ** (i + 1))
    return lo, lo + Fraction(1, m ** len(word))


def find_cylinder_in(Z: IntervalSet, m: int,
                     max_depth: int = 12) -> tuple[list[int], int]:
    """Shortest, then lexicographically least, cylinder word inside Z.

    Returns (word, depth) such that the closed interval
    [value(word), value(word) + m**-depth] sits inside a single span of
    Z.  Words whose closed interval misses Z entirely are pruned, so the
    frontier stays proportional to the number of span boundaries.

    Raises:
        NoCylinder: if no word of length <= max_depth fits (for a thin Z
            this bounds the search; it does not prove absence).
    """
    if m < 3:
        raise ValueError(f"base must be >= 3, got {m}")
    if Z.is_empty:
        raise NoCylinder("the target set is empty")
    frontier: list[tuple[int, ...]] = [()]
    for depth in range(1, max_depth + 1):
        step = Fraction(1, m ** depth)
        nxt: list[tuple[int, ...]] = []
        for stem in frontier:
            lo, _ = _word_interval(stem, m)
            for d in range(m):
                a = lo + d * step
                b = a + step
                if Z.covers_closed(a, b):
                    return list(stem) + [d], depth
                if any(left < b and a < right for left, right in Z):
                    nxt.append(stem + (d,))
        if not nxt:
            raise NoCylinder("no cylinder can ever fit inside the target")
        frontier = nxt
    raise NoCylinder(f"no cylinder of depth <= {max_depth} fits")


def build_H(alpha_prefix: Sequence[int], n: int, X: Sequence[int], k: int,
            Z: IntervalSet) -> dict:
    """Construct H with every k-fold multiset sum of H inside Z, verified.

    alpha is the depth-n word ``alpha_prefix`` followed by zeros; its
    closed cylinder interval must sit inside Z.  H consists of
    value(alpha)/k plus all subset sums of {m**-j : j in X} with m = k+2,
    so 2**len(X) elements.  Any k of them (repeats allowed) add digit-wise
    without carries, landing inside alpha's cylinder; the containment is
    nevertheless re-verified sum by sum in exact scaled-integer
    arithmetic, and the certificate records the count.

    Raises:
        ValueError: for malformed inputs or a cylinder not inside Z.
        SumEscapedZ: if any verified sum leaves Z (unreachable when the
            preconditions hold; kept as a hard guard).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    m = k + 2
    prefix = [int(d) for d in alpha_prefix]
    if len(prefix) != n:
        raise ValueError(f"prefix length {len(prefix)} does not match n={n}")
    if any(not 0 <= d < m for d in prefix):
        raise ValueError(f"prefix digits must lie in [0, {m})")
    positions = sorted(int(j) for j in X)
    if len(set(positions)) != len(positions):
        raise ValueError("tail positions must be distinct")
    if positions and positions[0] <= n:
        raise ValueError(f"tail positions must exceed the prefix depth {n}")
    lo, hi = _word_interval(prefix, m)
    if not Z.covers_closed(lo, hi):
        raise ValueError("the cylinder of alpha_prefix is not inside Z")

    base = lo / k
    tails = [Fraction(1, m ** j) for j in positions]
    H: list[Fraction] = []
    for mask in range(2 ** len(positions)):
        v = base
        for bit, t in enumerate(tails):
            if mask >> bit & 1:
                v += t
        H.append(v)
    H.sort()

    depth = positions[-1] if positions else n
    scale = k * m ** depth
    scaled = []
    for h in H:
        s = h * scale
        assert s.denominator == 1
        scaled.append(s.numerator)
    spans = []
    for a, b in Z:
        lo_s = (a * scale).__floor__() + 1
        hi_s = -((-b * scale).__floor__()) - 1
        spans.append((lo_s, hi_s))
    for combo in combinations_with_replacement(range(len(H)), k):
        total = sum(scaled[i] for i in combo)
        if not any(lo_s <= total <= hi_s for lo_s, hi_s in spans):
            raise SumEscapedZ([H[i] for i in combo])

    return {
        "type": "construction",
        "method": "cylinder",
        "k": k,
        "m": m,
        "alpha_prefix": prefix,
        "n": n,
        "X": positions,
        "Z": Z.to_json(),
        "H": [format_rational(h) for h in H],
        "checked_sums": comb(len(H) + k - 1, k),
    }


@dataclass(frozen=True)
class CylinderUnion:
    """A finite union of depth-N cylinders over base-m digit space.

    ``members`` holds the length-``depth`` digit words; the set described
    is every sequence extending one of them, with exact product measure
    ``len(members) / m**depth``.
    """

    m: int
    depth: int
    members: frozenset[tuple[int, ...]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"base must be >= 2, got {self.m}")
        if self.depth < 0:
            raise ValueError(f"depth must be >= 0, got {self.depth}")
        for w in self.members:
            if len(w) != self.depth:
                raise ValueError(f"word {w} does not have depth {self.depth}")
            if any(not 0 <= d < self.m for d in w):
                raise ValueError(f"word {w} has digits outside [0, {self.m})")

    @classmethod
    def full(cls, m: int) -> "CylinderUnion":
        return cls(m=m, depth=0, members=frozenset({()}))

    @classmethod
    def of(cls, m: int, depth: int,
           words: Iterable[Sequence[int]]) -> "CylinderUnion":
        return cls(m=m, depth=depth,
                   members=frozenset(tuple(w) for w in words))

    def measure(self) -> Fraction:
        return Fraction(len(self.members), self.m ** self.depth)

    def refined(self, depth: int) -> "CylinderUnion":
        """The same set re-expressed with words of the given depth."""
        if depth < self.depth:
            raise ValueError(f"cannot coarsen from depth {self.depth} to {depth}")
        if depth == self.depth:
            return self
        exts = list(product(range(self.m), repeat=depth - self.depth))
        return CylinderUnion(
            m=self.m, depth=depth,
            members=frozenset(w + e for w in self.members for e in exts))

    def same_set(self, other: "CylinderUnion") -> bool:
        if self.m != other.m:
            return False
        d = max(self.depth, other.depth)
        return self.refined(d).members == other.refined(d).members

    def contains_word(self, word: Sequence[int]) -> bool:
        """Whether the cylinder of ``word`` (depth >= self.depth) lies inside."""
        w = tuple(word)
        if len(w) < self.depth:
            raise ValueError(f"word shorter than depth {self.depth}")
        return w[:self.depth] in self.members


def measure(S: CylinderUnion) -> Fraction:
    """Exact product measure of a cylinder union."""
    return S.measure()


def translate_digit(S: CylinderUnion, eta: Mapping[int, int]) -> CylinderUnion:
    """The translate S + eta under position-wise addition modulo m.

    ``eta`` maps 1-based positions to digits; S is refined first if eta
    reaches beyond its depth.  Measure is always preserved.
    """
    shifts = {int(p): int(d) % S.m for p, d in eta.items()}
    if any(p < 1 for p in shifts):
        raise ValueError("positions are 1-based")
    depth = max([S.depth, *shifts.keys()])
    base = S.refined(depth)
    moved = frozenset(
        tuple((d + shifts.get(i + 1, 0)) % S.m for i, d in enumerate(w))
        for w in base.members)
    return CylinderUnion(m=S.m, depth=depth, members=moved)


def robust_core(S: CylinderUnion, pos: int) -> CylinderUnion:
    """Members whose digit at ``pos`` can be rewritten freely within S.

    Equals the intersection of the m translates S + c*e_pos, so the
    result is insensitive to the digit at ``pos``.
    """
    if pos < 1:
        raise ValueError(f"positions are 1-based, got {pos}")
    base = S.refined(max(S.depth, pos))
    words = base.members
    kept = frozenset(
        w for w in words
        if all(w[:pos - 1] + (c,) + w[pos:] in words for c in range(base.m)))
    return CylinderUnion(m=base.m, depth=base.depth, members=kept)


def shrink_iterate(P: CylinderUnion, steps: int,
                   start: int = 1) -> tuple[CylinderUnion, list[int]]:
    """Shrink P to a core insensitive to ``steps`` chosen positions.

    With tolerance eps = measure(P)/2, scans positions from ``start``
    upward: a position is accepted when the robust core there keeps
    measure above measure(P) - eps, otherwise the position is skipped.
    Positions beyond the depth of the current set never change it, so the
    scan always completes with measure(T) > measure(P) - eps.  Before
    returning, the defining property is re-checked exactly: every digit
    rewrite of a member of T at the accepted positions stays inside P.

    Raises:
        ZeroMeasure: if P has measure zero.
    """
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    if start < 1:
        raise ValueError(f"start must be >= 1, got {start}")
    mu = P.measure()
    if mu == 0:
        raise ZeroMeasure("the iteration needs positive measure")
    eps = mu / 2
    threshold = mu - eps
    S = P
    accepted: list[int] = []
    pos = start
    while len(accepted) < steps:
        if pos > S.depth:
            accepted.append(pos)
        else:
            core = robust_core(S, pos)
            if core.measure() > threshold:
                S = core
                accepted.append(pos)
        pos += 1

    inner = [p for p in accepted if p <= S.depth]
    for w in S.members:
        for combo in product(range(S.m), repeat=len(inner)):
            v = list(w)
            for p, c in zip(inner, combo):
                v[p - 1] = c
            if not P.contains_word(tuple(v)):
                raise RuntimeError("shrink core check failed")  # unreachable
    return S, accepted


def _multiset_sums(values: Sequence[Fraction], r: int) -> set[Fraction]:
    return {sum(c) for c in combinations_with_replacement(values, r)}


def greedy_baire(Z: IntervalSet, k: int, T: int,
                 forbidden: Sequence[Fraction] = ()) -> dict:
    """Greedy selection of T rationals whose k-fold sums all stay in Z.

    Z must contain a punctured neighbourhood (0, k*delta) of the origin;
    delta is taken maximal.  Each step intersects (1/k)Z with every
    translate (1/r)(-a + Z) over the r-fold completions of the picks so
    far, then takes the least-denominator, then least-numerator rational
    of (0, delta) inside that set.  Candidates equal to a prior pick, or
    whose completions would land a k-fold sum on a ``forbidden`` point,
    are skipped, so every sum of the result avoids the finite forbidden
    set as well as the complement of Z.

    Raises:
        ValueError: if no span of Z has the form (a, b) with a <= 0 < b.
        EmptyB: if the admissible set becomes empty (cannot happen for an
            open Z; kept as a hard guard).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if T < 0:
        raise ValueError(f"T must be >= 0, got {T}")
    origin_spans = [(a, b) for a, b in Z if a <= 0 < b]
    if not origin_spans:
        raise ValueError("Z has no span (a, b) with a <= 0 < b around 0+")
    delta = max(b for _, b in origin_spans) / k
    forb = [Fraction(q) for q in forbidden]

    Y: list[Fraction] = []
    for _ in range(T):
        B = Z.transform(Fraction(1, k), Fraction(0))
        excluded = set(Y) | {q / k for q in forb}
        for r in range(1, k):
            for a in _multiset_sums(Y, k - r):
                B = B.intersect(Z.transform(Fraction(1, r), -a / Fraction(r)))
                excluded.update((q - a) / r for q in forb)
        C = B.intersect(IntervalSet.of((Fraction(0), delta)))
        if C.is_empty:
            raise EmptyB("no admissible interval remains")
        pick = None
        for den in range(1, 10 ** 6):
            top = (delta * den).__ceil__()
            for num in range(1, top):
                q = Fraction(num, den)
                if q.denominator != den or q in excluded:
                    continue
                if C.contains(q):
                    pick = q
                    break
            if pick is not None:
                break
        if pick is None:
            raise EmptyB("no rational of denominator < 10**6 is admissible")
        Y.append(pick)

    forb_set = set(forb)
    for combo in combinations_with_replacement(Y, k):
        total = sum(combo)
        if not Z.contains(total) or total in forb_set:
            raise SumEscapedZ(list(combo))

    return {
        "type": "construction",
        "method": "greedy",
        "k": k,
        "T": T,
        "Z": Z.to_json(),
        "delta": format_rational(delta),
        "forbidden": [format_rational(q) for q in forb],
        "Y": [format_rational(y) for y in Y],
        "checked_sums": comb(len(Y) + k - 1, k) if Y else 0,
    }
