"""Registry resolving colouring id strings to evaluable colourings.

Ids have the form ``name:key=value,...`` with a fixed key order per
name, so the id embedded in a certificate is canonical and the verifier
can rebuild the exact same colouring from the string alone.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .bands import band_colour, band_params
from .gamma import gamma
from .stepup import tau
from .support import WellOrder, psi_support

QVecLike = Sequence[Fraction]


class UnknownColouring(ValueError):
    """The id does not resolve to a registered colouring."""


@dataclass(frozen=True)
class ColouringRef:
    """A resolved colouring: canonical id, colour count, arity, function.

    ``dim`` is None for colourings defined in every dimension.
    """

    spec: str
    colours: int
    dim: int | None
    fn: Callable[[QVecLike], int]


def _parse_args(argstr: str, spec: str) -> dict[str, int]:
    args: dict[str, int] = {}
    for piece in filter(None, argstr.split(",")):
        key, sep, value = piece.partition("=")
        if not sep:
            raise UnknownColouring(f"malformed parameter {piece!r} in {spec!r}")
        try:
            args[key] = int(value)
        except ValueError:
            raise UnknownColouring(
                f"parameter {key!r} in {spec!r} must be an integer") from None
    return args


def _take(args: dict[str, int], spec: str, *keys: str,
          optional: Sequence[str] = ()) -> list[int | None]:
    unknown = set(args) - set(keys) - set(optional)
    if unknown:
        raise UnknownColouring(f"unexpected parameters {sorted(unknown)} in {spec!r}")
    out: list[int | None] = []
    for key in keys:
        if key not in args:
            raise UnknownColouring(f"missing parameter {key!r} in {spec!r}")
        out.append(args[key])
    for key in optional:
        out.append(args.get(key))
    return out


def resolve(spec: str, seed: int | None = None) -> ColouringRef:
    """Resolve a colouring id; ``seed`` fills a missing psiW seed.

    Raises:
        UnknownColouring: for unknown names, bad parameters, or
            parameters out of range.
    """
    if not isinstance(spec, str):
        raise UnknownColouring(f"colouring id must be a string, got {spec!r}")
    name, _, argstr = spec.partition(":")
    args = _parse_args(argstr, spec)
    try:
        if name == "identity":
            _take(args, spec)
            return ColouringRef("identity", 1, None, lambda v: 0)
        if name == "band":
            k, m = _take(args, spec, "k", "m")
            params = band_params(k, m)
            return ColouringRef(
                f"band:k={k},m={m}", params.modulus, 1,
                lambda v: band_colour(params, v[0]))
        if name == "gamma72":
            k, m = _take(args, spec, "k", "m")
            if k < 2 or m < 1:
                raise UnknownColouring(f"need k >= 2 and m >= 1 in {spec!r}")
            return ColouringRef(
                f"gamma72:k={k},m={m}", 72, m,
                lambda v: gamma(tuple(v), k).encode())
        if name == "tau144":
            (k,) = _take(args, spec, "k")
            if k < 2:
                raise UnknownColouring(f"need k >= 2 in {spec!r}")
            return ColouringRef(
                f"tau144:k={k}", 144, None,
                lambda v: tau({i: c for i, c in enumerate(v)}, k).encode())
        if name == "psiW":
            n, s = _take(args, spec, "n", optional=("seed",))
            if n < 1:
                raise UnknownColouring(f"need n >= 1 in {spec!r}")
            if s is None:
                s = seed if seed is not None else 0
            W = WellOrder.shuffled(n, s)
            return ColouringRef(
                f"psiW:n={n},seed={s}", 2, n,
                lambda v: psi_support(
                    {i: c for i, c in enumerate(v) if c}, W))
    except (ValueError, TypeError) as exc:
        if isinstance(exc, UnknownColouring):
            raise
        raise UnknownColouring(f"cannot build colouring {spec!r}: {exc}") from exc
    raise UnknownColouring(f"no colouring named {name!r}")
