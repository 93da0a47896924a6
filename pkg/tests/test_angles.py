import math
import random

import pytest
from hypothesis import given, strategies as st

from trishape.angles import (
    PI,
    AngleModPi,
    ProjPoint1R,
    angle_dist,
    lift,
    reduce_mod_pi,
    rho,
)


def test_wrap_into_range():
    for x in (0.0, 1.0, PI - 1e-15, PI, -PI, 3.7 * PI, -11.3):
        v = AngleModPi(x).value
        assert 0.0 <= v < PI


def test_wrap_rejects_non_finite():
    for bad in (math.inf, -math.inf, math.nan):
        with pytest.raises(ValueError):
            AngleModPi(bad)


@given(st.floats(-100.0, 100.0))
def test_wrap_is_periodic(x):
    a = reduce_mod_pi(x)
    b = reduce_mod_pi(x + PI)
    assert angle_dist(a, b) < 1e-9


@given(st.floats(-50.0, 50.0), st.floats(-50.0, 50.0))
def test_addition_respects_classes(x, y):
    direct = reduce_mod_pi(x + y)
    staged = reduce_mod_pi(x) + reduce_mod_pi(y)
    assert angle_dist(direct, staged) < 1e-9


def test_negation_is_involution():
    rng = random.Random(3)
    for _ in range(200):
        a = reduce_mod_pi(rng.uniform(-10, 10))
        assert angle_dist(-(-a), a) < 1e-12


def test_angle_dist_range_and_symmetry():
    rng = random.Random(4)
    for _ in range(500):
        a, b = rng.uniform(-10, 10), rng.uniform(-10, 10)
        d = angle_dist(a, b)
        assert 0.0 <= d <= PI / 2 + 1e-12
        assert abs(d - angle_dist(b, a)) < 1e-12


def test_angle_dist_triangle_inequality():
    rng = random.Random(5)
    for _ in range(500):
        a, b, c = (rng.uniform(0, PI) for _ in range(3))
        assert angle_dist(a, c) <= angle_dist(a, b) + angle_dist(b, c) + 1e-12


def test_proj_point_canonical_form():
    p = ProjPoint1R(-2.0, 4.0)
    assert max(abs(p.x), abs(p.y)) == 1.0
    assert p.x > 0 or (p.x == 0 and p.y > 0)
    q = ProjPoint1R(1.0, -2.0)
    assert (p.x, p.y) == (q.x, q.y)


def test_proj_point_rejects_origin():
    with pytest.raises(ValueError):
        ProjPoint1R(0.0, 0.0)


def test_rho_representative_independence():
    rng = random.Random(6)
    for _ in range(300):
        x, y = rng.uniform(-2, 2), rng.uniform(-2, 2)
        if max(abs(x), abs(y)) < 1e-3:
            continue
        lam = rng.choice((1, -1)) * rng.uniform(0.1, 5.0)
        d = angle_dist(rho(ProjPoint1R(x, y)), rho(ProjPoint1R(lam * x, lam * y)))
        assert d < 1e-12


def test_rho_lift_round_trip():
    rng = random.Random(7)
    for _ in range(300):
        xi = reduce_mod_pi(rng.uniform(0, PI))
        assert angle_dist(rho(lift(xi)), xi) < 1e-12


def test_rho_axis_values():
    assert angle_dist(rho(ProjPoint1R(1.0, 0.0)), 0.0) < 1e-15
    assert angle_dist(rho(ProjPoint1R(0.0, 1.0)), PI / 2) < 1e-15
    assert angle_dist(rho(ProjPoint1R(1.0, 1.0)), PI / 4) < 1e-15
