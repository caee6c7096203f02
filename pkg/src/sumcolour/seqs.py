"""Finite-support rational sequences: maps index -> nonzero rational.

Shared by the stepped-up colouring (indices are sequence positions) and
the well-order support colouring (indices are basis positions).  The
canonical form stores no zero values, so the empty map is the zero vector
and the support is exactly the key set.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

SparseVec = dict[int, Fraction]


def as_seq(entries: Mapping[int, Fraction]) -> SparseVec:
    """Canonicalize a sparse vector: integer indices >= 0, zeros dropped.

    String keys holding integer literals are accepted so JSON objects can
    be fed in directly.
    """
    out: SparseVec = {}
    for idx, val in entries.items():
        if isinstance(idx, str):
            i = int(idx)
        elif isinstance(idx, int) and not isinstance(idx, bool):
            i = idx
        else:
            raise ValueError(f"index must be an integer, got {idx!r}")
        if i < 0:
            raise ValueError(f"index must be nonnegative, got {i}")
        v = Fraction(val)
        if v:
            out[i] = v
    return out


def seq_sum(*seqs: Mapping[int, Fraction]) -> SparseVec:
    """Entry-wise sum; indices whose values cancel are dropped."""
    out: SparseVec = {}
    for s in seqs:
        for i, v in s.items():
            total = out.get(i, 0) + Fraction(v)
            if total:
                out[int(i)] = total
            else:
                out.pop(int(i), None)
    return out


def seq_scale(c: Fraction, s: Mapping[int, Fraction]) -> SparseVec:
    c = Fraction(c)
    if not c:
        return {}
    return {int(i): c * Fraction(v) for i, v in s.items() if Fraction(v)}
