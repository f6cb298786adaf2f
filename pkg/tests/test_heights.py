import math
import random
from fractions import Fraction

import pytest

from wproj.errors import AllZero, HypothesisViolated
from wproj.heights import veronese_check, weil_height, wheight
from wproj.points import WPoint, normalize, scale, veronese
from wproj.weights import Weights

W23 = Weights.of(2, 3)


def rand_point(rng, weights, bound=30):
    while True:
        coords = tuple(
            Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            for _ in range(len(weights))
        )
        if any(c != 0 for c in coords):
            return WPoint.of(coords, weights)


def test_weil_height_examples():
    assert weil_height((3, 4))[0] == 4
    assert weil_height((27, 16))[0] == 27
    assert weil_height((Fraction(2, 3), 1))[0] == 3
    h_mult, h_log = weil_height((3, 4))
    assert h_log == pytest.approx(math.log(4))
    with pytest.raises(AllZero):
        weil_height((0, 0))


def test_wheight_desk_cases():
    one = wheight(WPoint.of((1, 1), W23))
    assert one.wh_pow_m == 1
    assert one.lwh == 0.0

    hv = wheight(WPoint.of((3, 4), W23))
    assert hv.m == 6
    assert hv.wh_pow_m == 27
    assert hv.lwh == pytest.approx(math.log(27) / 6)
    factors = {str(place): factor for place, factor in hv.per_place}
    assert factors == {"oo": 27, "2": 1, "3": 1}

    assert wheight(WPoint.of((4, 8), W23)).wh_pow_m == 1


def test_wheight_with_denominators():
    # [1/2 : 1] : archimedean max(1/8? no: max(|1/2|^3, 1)) = 1, p=2: max(2^3, 1) = 8
    hv = wheight(WPoint.of((Fraction(1, 2), 1), W23))
    assert hv.wh_pow_m == 8
    assert hv.lwh == pytest.approx(math.log(8) / 6)


def test_height_value_invariants():
    rng = random.Random(2)
    for _ in range(50):
        hv = wheight(rand_point(rng, W23))
        assert hv.wh_pow_m >= 1
        assert hv.lwh >= 0
        expected = (math.log(hv.wh_pow_m.numerator) - math.log(hv.wh_pow_m.denominator)) / hv.m
        assert abs(hv.lwh - expected) <= 1e-12


def test_scale_invariance_exact():
    rng = random.Random(19)
    for q in ((2, 3), (1, 2, 3, 5), (3, 4), (2, 3, 5)):
        w = Weights(q)
        for _ in range(40):
            x = rand_point(rng, w, bound=20)
            lam = Fraction(rng.randint(-12, 12), rng.randint(1, 12))
            if lam == 0:
                continue
            assert wheight(scale(x, lam)).wh_pow_m == wheight(x).wh_pow_m


def test_veronese_check_desk_cases():
    lhs, rhs, equal = veronese_check(WPoint.of((3, 4), W23))
    assert (lhs, rhs, equal) == (27, 27, True)
    lhs, rhs, equal = veronese_check(WPoint.of((1, 1), W23))
    assert (lhs, rhs, equal) == (1, 1, True)


def test_veronese_check_random():
    rng = random.Random(29)
    for q in ((2, 3), (1, 2, 3, 5), (2, 3, 5)):
        w = Weights(q)
        for _ in range(60):
            x = normalize(rand_point(rng, w, bound=15))
            lhs, rhs, equal = veronese_check(x)
            assert equal, (x, lhs, rhs)


def test_veronese_check_hypothesis_guard():
    with pytest.raises(HypothesisViolated):
        veronese_check(WPoint.of((1, 1), Weights.of(2, 4)))  # not reduced
    with pytest.raises(HypothesisViolated):
        veronese_check(WPoint.of((1, 1, 1), Weights.of(2, 2, 3)))  # not well-formed


def test_field_extension_scaling_trivial_case():
    # over Q the only tower is Q itself: wh^[Q:Q] = wh, asserted as such
    hv = wheight(WPoint.of((3, 4), W23))
    assert hv.wh_pow_m ** 1 == hv.wh_pow_m


def test_finite_place_factors_at_most_one_for_integral_points():
    rng = random.Random(43)
    for _ in range(40):
        x = normalize(rand_point(rng, W23, bound=20))
        for place, factor in wheight(x).per_place:
            if place.is_finite:
                assert factor <= 1
