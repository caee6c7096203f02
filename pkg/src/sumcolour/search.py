"""Search for monochromatic k-fold sumsets over height-bounded grounds.

The ground is the full list of rational vectors of bounded height in a
fixed enumeration order.  The search branches on the first element of
the candidate set; the target colour is pinned by the first required
sum that exists, and every later extension is pruned as soon as one of
its new sums leaves that colour class.  The expansion budget is counted
per first-element subtree and the subtree results are merged in index
order, so the outcome is reproducible and independent of how many
worker threads ran the subtrees.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Sequence

from .qvec import QVec, format_vec, height as coord_height, vec_height, vec_sum
from .registry import ColouringRef, resolve

MODES = ("kX", "FSk")


class BudgetExceeded(RuntimeError):
    """The expansion budget ran out with no witness and branches unexplored."""

    def __init__(self, best_size: int):
        super().__init__(
            f"search budget exhausted; best monochromatic size reached: {best_size}")
        self.best_size = best_size


@dataclass(frozen=True)
class Exhausted:
    """The whole ground was explored; no set of the requested size exists."""

    best_size: int
    exhaustive: bool = True


def enumerate_ground(height: int, dim: int) -> list[QVec]:
    """All dim-vectors over rationals a/b with |a| <= height, 1 <= b <= height.

    Duplicate representations collapse under reduction; the order is by
    height, then lexicographic, so it is stable across runs.
    """
    if height < 1:
        raise ValueError(f"height must be >= 1, got {height}")
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    pool = {Fraction(a, b)
            for b in range(1, height + 1) for a in range(-height, height + 1)}
    scalars = sorted(pool, key=lambda q: (coord_height(q), q))
    vecs = list(product(scalars, repeat=dim))
    vecs.sort(key=lambda v: (vec_height(v), v))
    return vecs


def _extend_sums(mode: str, k: int, prev: Sequence[QVec], x: QVec) -> list[QVec]:
    """The sums that become required when x joins the set prev."""
    if mode == "kX":
        out = []
        for r in range(1, k + 1):
            for combo in combinations_with_replacement(prev, k - r):
                out.append(vec_sum(*combo, *([x] * r)))
        return out
    return [vec_sum(*combo, x) for combo in combinations(prev, k - 1)]


def _subtree(ground: Sequence[QVec], fn, mode: str, k: int, max_size: int,
             budget: int, first: int):
    """Depth-first search of candidate sets starting at ground[first].

    Elements are only added in increasing index order, so distinct
    subtrees never overlap.  Returns (witness, colour, truncated,
    best_size); witness is None when the subtree holds no full-size set.
    """
    memo: dict[QVec, int] = {}

    def colour_of(v: QVec) -> int:
        c = memo.get(v)
        if c is None:
            c = fn(v)
            memo[v] = c
        return c

    expansions = 0
    best = 0
    truncated = False
    hit: tuple[list[QVec], int | None] | None = None

    def visit(chosen: list[QVec], start: int, target: int | None) -> bool:
        nonlocal expansions, best, truncated, hit
        expansions += 1
        if expansions > budget:
            truncated = True
            return False
        if len(chosen) > best:
            best = len(chosen)
        if len(chosen) == max_size:
            hit = (list(chosen), target)
            return True
        for idx in range(start, len(ground)):
            t = target
            ok = True
            for s in _extend_sums(mode, k, chosen, ground[idx]):
                c = colour_of(s)
                if t is None:
                    t = c
                elif c != t:
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(ground[idx])
            done = visit(chosen, idx + 1, t)
            chosen.pop()
            if done or truncated:
                return done
        return False

    x0 = ground[first]
    target: int | None = None
    for s in _extend_sums(mode, k, [], x0):
        # a singleton requires at most one sum: k*x0 for kX, x0 itself for k=1
        target = colour_of(s)
    visit([x0], first + 1, target)
    if hit is None:
        return None, None, truncated, best
    return hit[0], hit[1], truncated, best


def search_mono(colouring: str | ColouringRef, mode: str, k: int,
                ground: Sequence[Sequence[Fraction]], max_size: int,
                budget: int = 1_000_000, *, workers: int = 1):
    """Hunt for a max_size-element set whose required sums share a colour.

    Mode "kX" requires every k-multiset sum (including k*x for each
    member), mode "FSk" every sum of k distinct members.  Returns an
    unsealed certificate dict on success and Exhausted when the full
    ground holds no witness.

    Raises:
        UnknownColouring: if a colouring id string does not resolve.
        BudgetExceeded: if the per-subtree budget truncated the search
            before a witness turned up.
        ValueError: for a bad mode, empty/ragged ground, or a colouring
            whose arity does not match the ground dimension.
    """
    ref = resolve(colouring) if isinstance(colouring, str) else colouring
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if max_size < 1:
        raise ValueError(f"max_size must be >= 1, got {max_size}")
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    vecs = [tuple(Fraction(c) for c in v) for v in ground]
    if not vecs:
        raise ValueError("ground must be non-empty")
    dim = len(vecs[0])
    if any(len(v) != dim for v in vecs):
        raise ValueError("ground vectors must share one dimension")
    if ref.dim is not None and ref.dim != dim:
        raise ValueError(
            f"colouring {ref.spec!r} expects dimension {ref.dim}, ground has {dim}")
    bound = max(vec_height(v) for v in vecs)

    def run(first: int):
        return _subtree(vecs, ref.fn, mode, k, max_size, budget, first)

    best = 0
    blocked = False
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for base in range(0, len(vecs), workers):
            batch = range(base, min(base + workers, len(vecs)))
            for witness, colour, truncated, sub_best in pool.map(run, batch):
                if sub_best > best:
                    best = sub_best
                if witness is not None:
                    return {
                        "type": "search",
                        "colouring": ref.spec,
                        "mode": mode,
                        "k": k,
                        "ground": {"height": bound, "dim": dim},
                        "max_size": max_size,
                        "witness": [format_vec(v) for v in witness],
                        "colour": colour,
                        "exhaustive": not blocked,
                    }
                blocked = blocked or truncated
    if blocked:
        raise BudgetExceeded(best)
    return Exhausted(best)
