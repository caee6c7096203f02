"""Scalar parsing, formatting, and the integer floor-logarithm."""
import random
from fractions import Fraction

import pytest

from sumcolour.exact import (NonPositiveInput, flog, format_rational,
                             parse_rational, translate_witness)

from helpers import brute_flog, rand_rational


def test_parse_and_format_round_trip():
    assert format_rational(Fraction(0)) == "0/1"
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert parse_rational("5/12") == Fraction(5, 12)
    assert parse_rational(" -7 ") == Fraction(-7)
    rng = random.Random(7)
    for _ in range(200):
        q = rand_rational(rng)
        assert parse_rational(format_rational(q)) == q


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_rational("one half")
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational(12)


def test_flog_known_values():
    assert flog(2, 1, Fraction(1)) == 0
    assert flog(2, 2, Fraction(3)) == 3
    assert flog(2, 2, Fraction(5, 6)) == -1
    assert flog(3, 1, Fraction(27)) == 3
    assert flog(3, 1, Fraction(1, 27)) == -3
    assert flog(10, 1, Fraction(999, 1000)) == -1


def test_flog_matches_brute_force():
    rng = random.Random(11)
    for _ in range(600):
        k = rng.randint(2, 7)
        u = rng.randint(1, 4)
        q = rand_rational(rng, 500, 500, signed=False)
        j = flog(k, u, q)
        assert j == brute_flog(k, u, q)
        a, b = q.numerator, q.denominator
        assert k ** j * b ** u <= a ** u < k ** (j + 1) * b ** u


def test_flog_exact_powers_and_huge_inputs():
    for k in (2, 3, 5):
        for u in (1, 2, 3):
            for t in (-6, -1, 0, 1, 9):
                assert flog(k, u, Fraction(k) ** t) == t * u
    big = Fraction(10 ** 120 + 7, 3 ** 50)
    assert flog(2, 3, big) == brute_flog(2, 3, big)


def test_flog_input_validation():
    with pytest.raises(NonPositiveInput):
        flog(2, 1, Fraction(0))
    with pytest.raises(NonPositiveInput):
        flog(2, 1, Fraction(-1, 2))
    with pytest.raises(ValueError):
        flog(1, 1, Fraction(2))
    with pytest.raises(ValueError):
        flog(2, 0, Fraction(2))


def test_translate_witness():
    out = translate_witness([Fraction(1, 4), Fraction(1, 3)], Fraction(1), 2)
    assert out == [Fraction(-1, 4), Fraction(-1, 6)]
    rng = random.Random(3)
    for _ in range(100):
        k = rng.randint(1, 5)
        x = rand_rational(rng)
        pts = [rand_rational(rng) for _ in range(k)]
        moved = translate_witness(pts, x, k)
        assert sum(moved) == sum(pts) - x
    with pytest.raises(ValueError):
        translate_witness([Fraction(1)], Fraction(1), 0)
