"""Colouring id resolution and canonical re-formatting."""
from fractions import Fraction

import pytest

from sumcolour.registry import UnknownColouring, resolve

F = Fraction


def test_identity():
    ref = resolve("identity")
    assert (ref.spec, ref.colours, ref.dim) == ("identity", 1, None)
    assert ref.fn((F(5, 7), F(-2))) == 0


def test_band_ref():
    ref = resolve("band:k=2,m=3")
    assert (ref.spec, ref.colours, ref.dim) == ("band:k=2,m=3", 3, 1)
    assert ref.fn((F(7),)) == 2
    assert ref.fn((F(0),)) == 0
    # key order does not matter, the canonical id is re-emitted
    assert resolve("band:m=3,k=2").spec == "band:k=2,m=3"


def test_gamma_ref():
    ref = resolve("gamma72:k=2,m=2")
    assert (ref.colours, ref.dim) == (72, 2)
    assert ref.fn((F(5, 12), F(3, 8))) == 39


def test_tau_ref():
    ref = resolve("tau144:k=2")
    assert (ref.colours, ref.dim) == (144, None)
    assert ref.fn((F(1, 2), F(0), F(0), F(5, 12))) == 70
    assert ref.fn((F(0),)) == 0


def test_psi_ref_seed_handling():
    ref = resolve("psiW:n=6,seed=3")
    assert ref.spec == "psiW:n=6,seed=3"
    assert (ref.colours, ref.dim) == (2, 6)
    assert ref.fn((F(0),) * 6) == 0
    # missing seed falls back to the resolve argument, then to 0
    assert resolve("psiW:n=6", seed=3).spec == "psiW:n=6,seed=3"
    assert resolve("psiW:n=6").spec == "psiW:n=6,seed=0"
    vec = (F(1), F(0), F(2), F(0), F(0), F(-1))
    assert resolve("psiW:n=6", seed=3).fn(vec) == ref.fn(vec)


def test_unknown_ids():
    for bad in ("nope", "band", "band:k=2", "band:k=2,m=3,x=1",
                "band:k=two,m=3", "band:k2,m=3", "gamma72:k=1,m=1",
                "gamma72:k=2,m=0", "tau144:k=1", "psiW:n=0",
                "band:k=2,m=2", 7):
        with pytest.raises(UnknownColouring):
            resolve(bad)
