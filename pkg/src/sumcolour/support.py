"""Support-position parity colouring over an explicit well-order.

Vectors live in a finite-dimensional rational space whose basis indices
carry two orders at once: the natural integer order and a priority
permutation standing in for a well-order W.  The colour of a nonzero
vector is the parity of the natural-order position of its W-maximal
support index.  The quadruple check realizes the separation argument:
two sums built from an aligned family land on W-maxima whose left-of-max
counts differ by exactly one, so their colours always differ.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterator, Mapping, Sequence

from .seqs import SparseVec, as_seq, seq_sum

HVec = Mapping[int, Fraction]


class IndexOutOfRange(ValueError):
    """A coefficient index falls outside the well-ordered index space."""


class PreconditionViolated(ValueError):
    """A named hypothesis of the quadruple check fails.

    Attributes:
        hypothesis: short name of the first violated hypothesis.
    """

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        super().__init__(f"{hypothesis}: {detail}" if detail else hypothesis)


class TooSmallIndexSpace(ValueError):
    """The index space cannot host the requested family."""


class NotEnoughPredecessors(ValueError):
    """Too few W-predecessors on the required side of the anchor index."""


@dataclass(frozen=True)
class WellOrder:
    """A well-order on {0..n-1} given as a priority permutation.

    ``priority[i]`` is the rank of index i: higher rank means W-later.
    ``i W j`` (i strictly before j) holds iff priority[i] < priority[j].
    """

    priority: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.priority) != list(range(len(self.priority))):
            raise ValueError("priority must be a permutation of 0..n-1")

    @property
    def n(self) -> int:
        return len(self.priority)

    @classmethod
    def shuffled(cls, n: int, seed: int) -> "WellOrder":
        perm = list(range(n))
        random.Random(seed).shuffle(perm)
        return cls(tuple(perm))

    def before(self, i: int, j: int) -> bool:
        """i W j: index i comes strictly before index j."""
        self._check(i)
        self._check(j)
        return self.priority[i] < self.priority[j]

    def argmax(self, indices: Sequence[int]) -> int:
        """The W-latest of the given indices."""
        for i in indices:
            self._check(i)
        return max(indices, key=self.priority.__getitem__)

    def _check(self, i: int) -> None:
        if not 0 <= i < len(self.priority):
            raise IndexOutOfRange(f"index {i} outside 0..{len(self.priority) - 1}")


def psi_support(x: HVec, W: WellOrder) -> int:
    """Parity of the position of the W-maximal support index.

    The support is sorted in natural order as i_1 < ... < i_m; if the
    W-latest among them is i_t, the colour is t mod 2.  The zero vector
    gets colour 0.
    """
    s = as_seq(x)
    if not s:
        return 0
    support = sorted(s)
    top = W.argmax(support)
    return (support.index(top) + 1) % 2


@dataclass(frozen=True)
class QuadrupleOutcome:
    """Result of a quadruple check; truthy iff the two colours differ."""

    separated: bool
    count_first: int
    count_second: int

    def __bool__(self) -> bool:
        return self.separated


def _support(v: SparseVec) -> list[int]:
    return sorted(v)


def _left_count(v: SparseVec, W: WellOrder) -> int:
    support = sorted(v)
    return support.index(W.argmax(support))


def quadruple_check(family: Sequence[HVec], x: HVec, y: HVec, w: HVec,
                    z: HVec, W: WellOrder, k: int,
                    fixed: Sequence[HVec] = ()) -> QuadrupleOutcome:
    """Separation check for two k-fold sums drawn from an aligned family.

    With b the sum of the k-2 ``fixed`` members, compares the colours of
    b+x+y and b+w+z.  Under the named hypotheses below the W-maximal
    support index of the first sum has exactly one more support element
    naturally below it than that of the second, so the parities always
    differ.

    Hypotheses validated, in order:
        support-size    all family supports share one size m
        separators      slot ranges are separated across members
        argmax-position all members have their W-max at one slot l
        shared-slots    each slot is all-shared or all-distinct
        sign-constant   shared-slot coefficients have constant sign
        fixed-ordering  fixed slot-l indices sit below the quadruple's,
                        in both natural and W order (k > 2 only)
        quad-order-xy   i(x,l) < i(y,l) naturally and i(x,l) W i(y,l)
        quad-order-wz   i(w,l) < i(z,l) naturally and i(z,l) W i(w,l)

    Raises:
        PreconditionViolated: naming the first failed hypothesis.
        ValueError: for structural problems (sizes, membership).
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    members = [as_seq(v) for v in family]
    if not members:
        raise ValueError("empty family")
    quad = [as_seq(v) for v in (x, y, w, z)]
    b_parts = [as_seq(v) for v in fixed]
    if len(b_parts) != k - 2:
        raise ValueError(f"need exactly {k - 2} fixed members, got {len(b_parts)}")
    for v in quad + b_parts:
        if v not in members:
            raise ValueError("quadruple and fixed members must come from the family")

    supports = [_support(v) for v in members]
    m = len(supports[0])
    if m == 0 or any(len(s) != m for s in supports):
        raise PreconditionViolated("support-size",
                                   "supports must share one nonzero size")
    for t in range(m - 1):
        if max(s[t] for s in supports) >= min(s[t + 1] for s in supports):
            raise PreconditionViolated("separators",
                                       f"slots {t + 1} and {t + 2} overlap")
    positions = {s.index(W.argmax(s)) + 1 for s in supports}
    if len(positions) != 1:
        raise PreconditionViolated("argmax-position",
                                   f"W-max positions differ: {sorted(positions)}")
    l = positions.pop()
    shared: list[bool] = []
    for t in range(m):
        distinct = {s[t] for s in supports}
        if len(distinct) == 1:
            shared.append(True)
        elif len(distinct) == len(supports):
            shared.append(False)
        else:
            raise PreconditionViolated("shared-slots",
                                       f"slot {t + 1} is partially shared")
    for t in range(m):
        if shared[t]:
            signs = {members[i][supports[i][t]] > 0 for i in range(len(members))}
            if len(signs) != 1:
                raise PreconditionViolated("sign-constant",
                                           f"slot {t + 1} mixes signs")
    sx, sy, sw, sz = (_support(v) for v in quad)
    quad_l = [s[l - 1] for s in (sx, sy, sw, sz)]
    prio = W.priority
    for c in b_parts:
        cl = _support(c)[l - 1]
        if any(cl >= i or prio[cl] >= prio[i] for i in quad_l):
            raise PreconditionViolated("fixed-ordering",
                                       "a fixed member's slot-l index is not "
                                       "below the quadruple's")
    ix, iy, iw, iz = quad_l
    if not (ix < iy and prio[ix] < prio[iy]):
        raise PreconditionViolated("quad-order-xy",
                                   f"need i(x,l) < i(y,l) in both orders, "
                                   f"got {ix}, {iy}")
    if not (iw < iz and prio[iz] < prio[iw]):
        raise PreconditionViolated("quad-order-wz",
                                   f"need i(w,l) < i(z,l) with i(z,l) W i(w,l), "
                                   f"got {iw}, {iz}")

    first = seq_sum(*b_parts, quad[0], quad[1])
    second = seq_sum(*b_parts, quad[2], quad[3])
    c1 = _left_count(first, W)
    c2 = _left_count(second, W)
    return QuadrupleOutcome(separated=psi_support(first, W) != psi_support(second, W),
                            count_first=c1, count_second=c2)


def _rand_coeff(rng: random.Random, sign: int = 0) -> Fraction:
    s = sign or rng.choice((-1, 1))
    return Fraction(s * rng.randint(1, 9), rng.randint(1, 9))


def _monotone(seq: Sequence[int]) -> bool:
    return (all(a < b for a, b in zip(seq, seq[1:]))
            or all(a > b for a, b in zip(seq, seq[1:])))


def _all_extras(slack: int, m: int) -> Iterator[list[int]]:
    """Every way to pad m blocks with at most slack spare indices."""
    for bars in combinations(range(slack + m), m):
        prev, out = -1, []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        yield out


def _pick_vary(cand: Sequence[int], prio: Sequence[int],
               n_vary: int) -> list[int] | None:
    """The n_vary highest-priority candidates in natural order, repaired
    by one swap if their priority sequence comes out monotone."""
    top = sorted(sorted(cand, key=prio.__getitem__, reverse=True)[:n_vary])
    if n_vary < 3 or not _monotone([prio[i] for i in top]):
        return top
    rest = sorted(set(cand) - set(top), key=prio.__getitem__, reverse=True)
    for add in rest:
        for drop in top:
            trial = sorted(set(top) - {drop} | {add})
            if not _monotone([prio[i] for i in trial]):
                return trial
    return None


def _choose_slot_l(pool: Sequence[int], prio: Sequence[int], n_fixed: int,
                   n_vary: int) -> list[int] | None:
    """Select slot-l indices from one block, or None if it cannot host any.

    The fixed prefix must sit below every varying index in both natural
    and W order, and the varying priority sequence must not be monotone
    when three or more vary.  Among the natural cut points that admit the
    pattern, keeps the selection whose sorted priorities are largest, to
    leave the other blocks the most room below.
    """
    block = sorted(pool)
    best: list[int] | None = None
    best_key: list[int] | None = None
    for cut in range(n_fixed, len(block) - n_vary + 1):
        vary = _pick_vary(block[cut:], prio, n_vary)
        if vary is None:
            continue
        vmin = min(prio[i] for i in vary)
        fixed = sorted((i for i in block[:cut] if prio[i] < vmin),
                       key=prio.__getitem__, reverse=True)[:n_fixed]
        if len(fixed) < n_fixed:
            continue
        chosen = sorted(fixed) + vary
        key = sorted(prio[i] for i in chosen)
        if best_key is None or key > best_key:
            best, best_key = chosen, key
    return best


def family_generator(n: int, m: int, l: int, M: Sequence[int], k: int,
                     count: int, seed: int, W: WellOrder) -> list[SparseVec]:
    """Build a family on which the quadruple check's hypotheses hold.

    Produces ``count`` vectors with size-m supports laid out in separated
    natural-order blocks, sharing one index (with sign-constant
    coefficients) at each slot in M, and varying at every other slot.
    The members come back sorted by their slot-l index; the first k-2 are
    suitable as the ``fixed`` part of a quadruple, and the rest carry a
    non-monotone priority sequence at slot l, so both an ascending and a
    descending adjacent pair exist whenever at least three vary.

    Raises:
        ValueError: if l lies in M, or count cannot host k-2 fixed
            members plus a pair.
        TooSmallIndexSpace: if no admissible layout is found within n
            indices.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if not 1 <= l <= m:
        raise ValueError(f"slot l must lie in 1..{m}, got {l}")
    shared_slots = set(M)
    if not shared_slots <= set(range(1, m + 1)):
        raise ValueError(f"M must be a subset of 1..{m}")
    if l in shared_slots:
        raise ValueError("the varying slot l cannot be shared")
    if count < (k - 2) + 2:
        raise ValueError(f"count must be at least {k}, got {count}")
    if W.n != n:
        raise ValueError("well-order size does not match n")
    need = sum(1 if t in shared_slots else count for t in range(1, m + 1))
    if need > n:
        raise TooSmallIndexSpace(f"need {need} indices, have {n}")

    rng = random.Random(seed)
    prio = W.priority
    n_fixed = k - 2
    n_vary = count - n_fixed
    total_slack = n - need

    def attempt(extras: Sequence[int]) -> list[SparseVec] | None:
        pools: list[list[int]] = []
        start = 0
        for t in range(1, m + 1):
            size = (1 if t in shared_slots else count) + extras[t - 1]
            pools.append(list(range(start, start + size)))
            start += size

        l_idx = _choose_slot_l(pools[l - 1], prio, n_fixed, n_vary)
        if l_idx is None:
            return None
        min_l_prio = min(prio[i] for i in l_idx)
        shared_idx: dict[int, int] = {}
        for t in shared_slots:
            cand = min(pools[t - 1], key=prio.__getitem__)
            if prio[cand] >= min_l_prio:
                return None
            shared_idx[t] = cand

        # Private slots: member with the r-th lowest slot-l priority
        # takes the r-th lowest-priority index of each block, which
        # must stay below its own slot-l priority.
        ranks = sorted(range(count), key=lambda j: prio[l_idx[j]])
        private: dict[int, list[int | None]] = {}
        for t in range(1, m + 1):
            if t in shared_slots or t == l:
                continue
            cand = sorted(pools[t - 1], key=prio.__getitem__)[:count]
            picks: list[int | None] = [None] * count
            for r, j in enumerate(ranks):
                if prio[cand[r]] >= prio[l_idx[j]]:
                    return None
                picks[j] = cand[r]
            private[t] = picks

        shared_sign = {t: rng.choice((-1, 1)) for t in shared_slots}
        out: list[SparseVec] = []
        for j in range(count):
            v: SparseVec = {l_idx[j]: _rand_coeff(rng)}
            for t, idx in shared_idx.items():
                v[idx] = _rand_coeff(rng, shared_sign[t])
            for t, picks in private.items():
                v[picks[j]] = _rand_coeff(rng)
            out.append(dict(sorted(v.items())))
        return out

    for _ in range(200):
        # Cut 0..n-1 into m consecutive blocks, handing out the slack in
        # shuffled slot order so late blocks are not starved.
        extras = [0] * m
        slack = total_slack
        order = list(range(m))
        rng.shuffle(order)
        for t in order:
            extras[t] = rng.randint(0, slack)
            slack -= extras[t]
        out = attempt(extras)
        if out is not None:
            return out
    # Tight spaces have few layouts; sweep them all before giving up.
    if comb(total_slack + m, m) <= 4000:
        for extras in _all_extras(total_slack, m):
            out = attempt(extras)
            if out is not None:
                return out
    raise TooSmallIndexSpace(
        f"no admissible layout found for n={n}, m={m}, count={count}")


def positive_family(W: WellOrder, j: int, k: int, count: int) -> list[SparseVec]:
    """A family {e_i + e_j} whose colour survives all k-fold distinct sums.

    Uses the first ``count`` indices i naturally above j with i W j, so j
    is both the natural minimum and the W-maximum of every member's and
    every sum's support; the colour is constantly 1.

    Raises:
        NotEnoughPredecessors: if fewer than count such indices exist.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    W._check(j)
    preds = [i for i in range(j + 1, W.n) if W.priority[i] < W.priority[j]]
    if len(preds) < count:
        raise NotEnoughPredecessors(
            f"index {j} has only {len(preds)} later W-predecessors, "
            f"need {count}")
    return [{j: Fraction(1), i: Fraction(1)} for i in preds[:count]]
