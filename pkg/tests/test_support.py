"""Well-order support colouring and the quadruple separation check."""
import itertools
import random
from fractions import Fraction

import pytest

from sumcolour.seqs import seq_sum
from sumcolour.support import (IndexOutOfRange, NotEnoughPredecessors,
                               PreconditionViolated, QuadrupleOutcome,
                               TooSmallIndexSpace, WellOrder, family_generator,
                               positive_family, psi_support, quadruple_check)

F = Fraction
NATURAL = WellOrder((0, 1, 2, 3, 4, 5, 6, 7))


def test_well_order_basics():
    W = WellOrder((1, 3, 0, 2, 4))
    assert W.n == 5
    assert W.before(2, 0) and not W.before(0, 2)
    assert W.argmax([0, 1, 2]) == 1
    assert W.argmax([3]) == 3
    with pytest.raises(IndexOutOfRange):
        W.before(0, 5)
    with pytest.raises(IndexOutOfRange):
        W.argmax([-1])
    with pytest.raises(ValueError):
        WellOrder((0, 0, 1))
    assert WellOrder.shuffled(6, 9) == WellOrder.shuffled(6, 9)
    assert sorted(WellOrder.shuffled(6, 9).priority) == list(range(6))


def test_psi_support():
    W = WellOrder((1, 3, 0, 2, 4))
    assert psi_support({1: F(1), 4: F(1)}, W) == 0
    assert psi_support({1: F(1)}, W) == 1
    assert psi_support({0: F(2), 1: F(1), 2: F(1)}, W) == 0
    assert psi_support({}, W) == 0
    assert psi_support({3: F(0)}, W) == 0
    # value magnitudes are irrelevant, only the support matters
    assert psi_support({1: F(-7, 3), 4: F(1, 99)}, W) == 0


def test_quadruple_hand_case_with_overlap():
    W = WellOrder((0, 2, 1))
    fam = [{0: F(1)}, {1: F(1)}, {2: F(1)}]
    out = quadruple_check(fam, fam[0], fam[1], fam[1], fam[2], W, 2)
    assert isinstance(out, QuadrupleOutcome)
    assert out
    assert (out.count_first, out.count_second) == (1, 0)


def test_quadruple_generated_families():
    rng = random.Random(67)
    for trial in range(60):
        k = rng.randint(2, 4)
        m = rng.randint(1, 4)
        l = rng.randint(1, m)
        M = [t for t in range(1, m + 1) if t != l and rng.random() < 0.5]
        count = k + 2
        n = 40
        W = WellOrder.shuffled(n, 5000 + trial)
        fam = family_generator(n, m, l, M, k, count, seed=trial, W=W)
        assert fam == family_generator(n, m, l, M, k, count, seed=trial, W=W)
        assert all(len(v) == m for v in fam)
        fixed, vary = fam[:k - 2], fam[k - 2:]
        idx = [sorted(v)[l - 1] for v in vary]
        prio = [W.priority[i] for i in idx]
        up = next(t for t in range(len(vary) - 1) if prio[t] < prio[t + 1])
        down = next(t for t in range(len(vary) - 1) if prio[t] > prio[t + 1])
        out = quadruple_check(fam, vary[up], vary[up + 1],
                              vary[down], vary[down + 1], W, k, fixed=fixed)
        assert out.separated
        assert out.count_first - out.count_second == 1


def test_quadruple_hypothesis_failures():
    W = NATURAL

    def hyp(family, x, y, w, z, order, k, fixed=()):
        with pytest.raises(PreconditionViolated) as err:
            quadruple_check(family, x, y, w, z, order, k, fixed)
        return err.value.hypothesis

    fam = [{0: F(1)}, {1: F(1), 2: F(1)}]
    assert hyp(fam, fam[0], fam[1], fam[0], fam[1], W, 2) == "support-size"

    fam = [{0: F(1), 1: F(1)}, {2: F(1), 3: F(1)}]
    assert hyp(fam, fam[0], fam[1], fam[0], fam[1], W, 2) == "separators"

    W4 = WellOrder((3, 0, 1, 2))
    fam = [{0: F(1), 2: F(1)}, {1: F(1), 3: F(1)}]
    assert hyp(fam, fam[0], fam[1], fam[0], fam[1], W4, 2) == "argmax-position"

    fam = [{0: F(1), 5: F(1)}, {0: F(1), 6: F(1)}, {1: F(1), 7: F(1)}]
    assert hyp(fam, fam[0], fam[1], fam[0], fam[2], W, 2) == "shared-slots"

    fam = [{0: F(1), 5: F(1)}, {0: F(-1), 6: F(1)}]
    assert hyp(fam, fam[0], fam[1], fam[0], fam[1], W, 2) == "sign-constant"

    fam = [{i: F(1)} for i in (5, 0, 1, 2, 3)]
    assert hyp(fam, fam[1], fam[2], fam[3], fam[4], W, 3,
               fixed=[fam[0]]) == "fixed-ordering"

    fam = [{0: F(1)}, {1: F(1)}]
    assert hyp(fam, fam[1], fam[0], fam[0], fam[1], W, 2) == "quad-order-xy"
    assert hyp(fam, fam[0], fam[1], fam[0], fam[1], W, 2) == "quad-order-wz"


def test_quadruple_structural_errors():
    fam = [{0: F(1)}, {1: F(1)}]
    with pytest.raises(ValueError):
        quadruple_check([], fam[0], fam[1], fam[0], fam[1], NATURAL, 2)
    with pytest.raises(ValueError):
        quadruple_check(fam, {5: F(1)}, fam[1], fam[0], fam[1], NATURAL, 2)
    with pytest.raises(ValueError):
        quadruple_check(fam, fam[0], fam[1], fam[0], fam[1], NATURAL, 3)
    with pytest.raises(ValueError):
        quadruple_check(fam, fam[0], fam[1], fam[0], fam[1], NATURAL, 1)


def test_family_generator_validation():
    W = WellOrder.shuffled(20, 0)
    with pytest.raises(ValueError):
        family_generator(20, 2, 1, [1], 2, 4, 0, W)
    with pytest.raises(ValueError):
        family_generator(20, 2, 1, [3], 2, 4, 0, W)
    with pytest.raises(ValueError):
        family_generator(20, 2, 1, [2], 2, 1, 0, W)
    with pytest.raises(ValueError):
        family_generator(21, 2, 1, [2], 2, 4, 0, W)
    with pytest.raises(TooSmallIndexSpace):
        family_generator(3, 2, 1, [], 2, 4, 0, WellOrder.shuffled(3, 0))


def test_positive_family():
    W = WellOrder((4, 0, 5, 1, 2, 3))
    fam = positive_family(W, 0, 2, 3)
    assert fam == [{0: F(1), 1: F(1)}, {0: F(1), 3: F(1)}, {0: F(1), 4: F(1)}]
    for v in fam:
        assert psi_support(v, W) == 1
    for k in (1, 2, 3):
        for combo in itertools.combinations(fam, k):
            assert psi_support(seq_sum(*combo), W) == 1
    with pytest.raises(NotEnoughPredecessors):
        positive_family(W, 0, 2, 6)
    with pytest.raises(NotEnoughPredecessors):
        positive_family(NATURAL, 2, 2, 1)
    with pytest.raises(ValueError):
        positive_family(W, 0, 0, 1)
