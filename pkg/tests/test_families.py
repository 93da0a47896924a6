import cmath
import math
import random

import pytest

from trishape.angles import PI, angle_dist, reduce_mod_pi
from trishape.triangle import (
    DegeneracyType,
    classify,
    from_vertices,
    interior_angles,
    orientation,
)
from trishape.shape import ProjTripleC, class_equal, class_of, proj_dist
from trishape.projections import DELTA_B, to_sphere, to_torus
from trishape.families import (
    Model,
    PonceletConfig,
    chord_tangency_residual,
    constant_angle_family,
    constant_ratio_family,
    incircle_outcircle,
    inscribed_family,
    level_value,
    limit_class,
    poncelet_family,
    separation_test,
)


def test_poncelet_config_validates_chapple():
    PonceletConfig(1.0, 3.0, math.sqrt(3.0))
    with pytest.raises(ValueError):
        PonceletConfig(1.0, 3.0, 1.0)
    with pytest.raises(ValueError):
        PonceletConfig(2.0, 3.0, 0.0)  # r > R/2


def test_incircle_outcircle_equilateral():
    w = cmath.exp(2j * PI / 3)
    # side length |1 - w| = sqrt(3); rescale vertices so sides have length 1
    s = abs(1 - w)
    cfg = incircle_outcircle(from_vertices(w / s, w.conjugate() / s, 1 / s))
    assert abs(cfg.r - 1 / (2 * math.sqrt(3))) < 1e-12
    assert abs(cfg.R - 1 / math.sqrt(3)) < 1e-12
    assert abs(cfg.d) < 1e-12
    assert abs(cfg.r / cfg.R - 0.5) < 1e-12


def test_incircle_outcircle_three_four_five():
    cfg = incircle_outcircle(from_vertices(0, 3, 4j))
    assert abs(cfg.r - 1.0) < 1e-12
    assert abs(cfg.R - 2.5) < 1e-12
    assert abs(cfg.d - math.sqrt(5) / 2) < 1e-12


def test_incircle_outcircle_homogeneity():
    rng = random.Random(41)
    for _ in range(50):
        pts = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)]
        T = from_vertices(*pts)
        if classify(T) is not DegeneracyType.NONDEGENERATE:
            continue
        lam = rng.uniform(0.1, 10)
        c1 = incircle_outcircle(T)
        c2 = incircle_outcircle(from_vertices(*(lam * p for p in pts)))
        assert abs(c2.r - lam * c1.r) < 1e-9 * lam
        assert abs(c2.R - lam * c1.R) < 1e-9 * lam
        assert abs(c2.d - lam * c1.d) < 1e-9 * lam


def test_incircle_outcircle_rejects_degenerate():
    with pytest.raises(ValueError):
        incircle_outcircle(from_vertices(0, 1, 2))


def test_level_value_examples():
    assert abs(level_value((PI / 3, PI / 3, PI / 3)) - 0.5) < 1e-12
    expected = 2 * math.sqrt(2) * math.sin(PI / 8) ** 2
    assert abs(level_value((PI / 2, PI / 4, PI / 4)) - expected) < 1e-12
    assert level_value((0.0, 0.5, PI - 0.5)) == 0.0


def test_level_value_matches_radii_both_orientations():
    rng = random.Random(42)
    for _ in range(200):
        pts = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)]
        T = from_vertices(*pts)
        if classify(T) is not DegeneracyType.NONDEGENERATE:
            continue
        cfg = incircle_outcircle(T)
        assert abs(level_value(interior_angles(T)) - cfg.r / cfg.R) < 1e-9


def test_poncelet_concentric_is_equilateral():
    cfg = PonceletConfig.from_radii(1.0, 2.0)
    assert cfg.d == 0.0
    ref = class_of(poncelet_family(cfg, 0.0))
    for theta in (0.7, 2.0, 4.5):
        T = poncelet_family(cfg, theta)
        angles = interior_angles(T)
        assert all(angle_dist(x, PI / 3) < 1e-9 for x in angles)


def test_poncelet_orbit_invariants():
    rng = random.Random(43)
    for _ in range(5):
        R = rng.uniform(0.5, 2.0)
        cfg = PonceletConfig.from_radii(rng.uniform(0.05, 0.45) * R, R)
        ratios = []
        for k in range(16):
            T = poncelet_family(cfg, 2 * PI * k / 16)
            got = incircle_outcircle(T)
            ratios.append(got.r / got.R)
            assert chord_tangency_residual(cfg, T) < 1e-8
            assert abs(got.r - cfg.r) < 1e-8
            assert abs(got.R - cfg.R) < 1e-8
        assert max(ratios) - min(ratios) < 1e-9


def test_inscribed_family_thales():
    fam = inscribed_family(-1.0, 1.0)
    for t in (0.5, 1.5, 2.5, 4.0):
        T = fam.eval(t)
        assert angle_dist(interior_angles(T)[0], PI / 2) < 1e-9


def test_inscribed_family_tangent_limit():
    fam = inscribed_family(-1.0, 1.0)
    # free argument at the double point equals the circle's tangent at C
    T0 = fam.eval(0.0)
    assert classify(T0) is DegeneracyType.DOUBLE
    assert angle_dist(T0.arguments[1], PI / 2) < 1e-12
    # and it is the limit of the chord argument from either side
    for t in (1e-3, 1e-5):
        b = fam.eval(t).sides[1]
        assert angle_dist(math.atan2(b.imag, b.real), PI / 2) < 2 * t


def test_inscribed_family_orientation_flip_continuity():
    fam = inscribed_family(-1.0, 1.0)
    eps = 1e-6
    before = fam.eval(2 * PI - eps)
    after = fam.eval(eps)
    assert orientation(before) is not orientation(after)
    for x, y in zip(interior_angles(before), interior_angles(after)):
        assert angle_dist(x, y) < 1e-3


def test_constant_angle_family_keeps_alpha():
    for a0 in (PI / 2, 2 * PI / 3, 0.8):
        fam = constant_angle_family(a0)
        lo, hi = fam.domain
        for frac in (0.1, 0.5, 0.9):
            T = fam.eval(lo + (hi - lo) * frac)
            assert classify(T) is DegeneracyType.NONDEGENERATE
            assert angle_dist(interior_angles(T)[0], a0) < 1e-9


def test_constant_angle_limits():
    f1 = limit_class(constant_angle_family(PI / 2))
    assert proj_dist(f1.sides, ProjTripleC(1, 0, -1)) < 1e-6
    t = to_torus(f1)
    assert angle_dist(t.p, PI / 2) < 1e-6 and angle_dist(t.q, 0.0) < 1e-6
    f2 = limit_class(constant_angle_family(2 * PI / 3))
    t = to_torus(f2)
    assert angle_dist(t.p, 2 * PI / 3) < 1e-6 and angle_dist(t.r, PI / 3) < 1e-6
    # both land on the same sphere point
    assert math.dist(to_sphere(f1).as_tuple(), DELTA_B) < 1e-6
    assert math.dist(to_sphere(f2).as_tuple(), DELTA_B) < 1e-6


def test_constant_ratio_family_keeps_ratio():
    for ratio in (1.0, 2.0, 0.5):
        fam = constant_ratio_family(ratio)
        lo, hi = fam.domain
        for frac in (0.1, 0.5, 0.9):
            T = fam.eval(lo + (hi - lo) * frac)
            assert classify(T) is DegeneracyType.NONDEGENERATE
            _, b, c = T.sides
            assert abs(abs(c) - ratio * abs(b)) < 1e-9


def test_constant_ratio_limits():
    c1 = limit_class(constant_ratio_family(1.0))
    c2 = limit_class(constant_ratio_family(2.0))
    assert to_torus(c1).is_origin(1e-6)
    assert to_torus(c2).is_origin(1e-6)
    assert proj_dist(c1.sides, ProjTripleC(2, -1, -1)) < 1e-6
    assert proj_dist(c2.sides, ProjTripleC(3, -1, -2)) < 1e-6


def test_limit_class_constant_family_is_identity():
    from trishape.families import Family

    T = from_vertices(0, 1, 0.3 + 0.8j)
    fam = Family("const", lambda t: T, (0.0, 1.0), 0.0)
    assert class_equal(limit_class(fam), class_of(T), 1e-9)


def test_separation_signature():
    fa1 = constant_angle_family(PI / 2)
    fa2 = constant_angle_family(2 * PI / 3)
    fr1 = constant_ratio_family(1.0)
    fr2 = constant_ratio_family(2.0)
    assert separation_test(fa1, fa2, Model.SPHERE).verdict == "Merged"
    assert separation_test(fa1, fa2, Model.TORUS).verdict == "Separated"
    assert separation_test(fa1, fa2, Model.DYCK).verdict == "Separated"
    assert separation_test(fr1, fr2, Model.TORUS).verdict == "Merged"
    assert separation_test(fr1, fr2, Model.SPHERE).verdict == "Separated"
    assert separation_test(fr1, fr2, Model.DYCK).verdict == "Separated"


def test_separation_report_serializes():
    rep = separation_test(
        constant_ratio_family(1.0), constant_ratio_family(2.0), Model.SPHERE
    )
    data = rep.to_json()
    assert data["model"] == "Sphere"
    assert data["verdict"] == "Separated"
    assert data["distance"] > 0.05
