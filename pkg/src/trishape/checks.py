"""Self-contained verification suite for the package's headline guarantees.

Every check is a pure function returning (passed, detail).  The test suite
and the command-line ``selftest`` both run this registry, so there is a
single source of truth for what the package promises numerically.
"""
from __future__ import annotations

import cmath
import math
import random
from typing import Callable

from .angles import PI, AngleModPi, angle_dist, reduce_mod_pi
from .triangle import (
    DegeneracyType,
    GroupElement,
    Orientation,
    TriangleVariable,
    act,
    classify,
    from_sides,
    from_vertices,
    interior_angles,
    orientation,
    vertex_angle,
)
from .shape import (
    BlowupCoord,
    ProjTripleC,
    ShapeClass,
    act_class,
    class_dist,
    class_of,
    orbit,
    phi,
    proj_dist,
    psi,
)
from .projections import (
    DELTA_A,
    DELTA_B,
    DELTA_C,
    TorusPoint,
    to_sphere,
    to_torus,
    torus_dist,
    torus_fiber_limit,
    torus_inverse,
)
from .families import (
    Model,
    PonceletConfig,
    chord_tangency_residual,
    constant_angle_family,
    constant_ratio_family,
    incircle_outcircle,
    inscribed_family,
    level_value,
    poncelet_family,
    separation_test,
)

SEED = 20260824


# ---------------------------------------------------------------------------
# samplers


def random_nondegenerate(rng: random.Random) -> TriangleVariable:
    while True:
        pts = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)]
        T = from_vertices(*pts)
        scale = max(abs(s) for s in T.sides)
        if scale > 0.1 and abs((T.sides[0].conjugate() * T.sides[1]).imag) > 0.05 * scale**2:
            return T


def random_positive(rng: random.Random) -> TriangleVariable:
    T = random_nondegenerate(rng)
    if orientation(T) is Orientation.NEGATIVE:
        A, B, C = T.vertices
        T = from_vertices(A.conjugate(), B.conjugate(), C.conjugate())
    return T


def random_double_class(rng: random.Random) -> ShapeClass:
    """A class over one of the three double-point divisors."""
    slot = rng.randrange(3)
    z = cmath.exp(1j * rng.uniform(0, 2 * PI)) * rng.uniform(0.5, 2.0)
    free = {("a", "b", "c")[slot]: reduce_mod_pi(rng.uniform(0, PI))}
    sides = [z, z, z]
    sides[slot] = 0j
    sides[(slot + 1) % 3] = z
    sides[(slot + 2) % 3] = -z
    return class_of(from_sides(*sides, free_arguments=free))


def random_simple(rng: random.Random) -> TriangleVariable:
    """Collinear distinct vertices on a random line."""
    direction = cmath.exp(1j * rng.uniform(0, 2 * PI))
    base = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    u, v = rng.uniform(0.2, 1.0), rng.uniform(-1.0, -0.2)
    return from_vertices(base + u * direction, base + v * direction, base)


def random_isosceles(rng: random.Random) -> tuple[TriangleVariable, int]:
    """Triangle with the two sides at one odd slot equal; returns (T, slot)."""
    slot = rng.randrange(3)
    base = rng.uniform(0.5, 2.0)
    height = rng.uniform(0.1, 2.0) * rng.choice((1.0, -1.0))
    spin = cmath.exp(1j * rng.uniform(0, 2 * PI))
    shift = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    # apex over the midpoint of the odd side
    P = shift
    Q = shift + base * spin
    apex = shift + (base / 2.0 + 1j * height) * spin
    if slot == 0:  # |b| = |c|: odd side a = C - B
        return from_vertices(apex, P, Q), 0
    if slot == 1:  # |c| = |a|: odd side b = A - C
        return from_vertices(P, apex, Q), 1
    return from_vertices(P, Q, apex), 2


def random_right(rng: random.Random) -> tuple[TriangleVariable, int]:
    """Triangle with a right angle at one vertex; returns (T, hypotenuse slot)."""
    slot = rng.randrange(3)
    spin = cmath.exp(1j * rng.uniform(0, 2 * PI))
    shift = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    leg1 = rng.uniform(0.3, 2.0)
    leg2 = rng.uniform(0.3, 2.0) * rng.choice((1.0, -1.0))
    corner = shift
    P = shift + leg1 * spin
    Q = shift + 1j * leg2 * spin
    # right angle at the corner; the hypotenuse is the side opposite it
    verts = {0: (corner, P, Q), 1: (P, corner, Q), 2: (P, Q, corner)}[slot]
    return from_vertices(*verts), slot


def random_obtuse(rng: random.Random) -> tuple[TriangleVariable, int]:
    """Triangle with an obtuse angle at one vertex; returns (T, opposite slot)."""
    while True:
        T = random_nondegenerate(rng)
        angles = [vertex_angle(T, i) for i in range(3)]
        lifted = [float(x) for x in angles]
        if abs(sum(lifted) - PI) > 1e-6:
            lifted = [PI - v for v in lifted]
        for slot, v in enumerate(lifted):
            if v > PI / 2 + 0.05:
                return T, slot


def random_torus_point(rng: random.Random) -> TorusPoint:
    while True:
        p = rng.uniform(0.01, PI - 0.01)
        q = rng.uniform(0.01, PI - 0.01)
        t = TorusPoint(reduce_mod_pi(p), reduce_mod_pi(q), reduce_mod_pi(-p - q))
        if not t.is_origin(1e-3):
            return t


# ---------------------------------------------------------------------------
# checks


def _blowup_dist(b1: BlowupCoord, b2: BlowupCoord) -> float:
    diffs = [x - y for x, y in zip(b1.xi, b2.xi)]
    spread = max(angle_dist(diffs[0], d) for d in diffs[1:])
    return proj_dist(b1.sides, b2.sides) + spread


def check_bijection() -> tuple[bool, str]:
    """Round trips between classes and blowup coordinates are the identity."""
    rng = random.Random(SEED + 1)
    worst = 0.0
    classes = [class_of(random_nondegenerate(rng)) for _ in range(1000)]
    classes += [random_double_class(rng) for _ in range(100)]
    for c in classes:
        b = phi(c)
        worst = max(worst, class_dist(psi(b), c))
        worst = max(worst, _blowup_dist(phi(psi(b)), b))
    return worst < 1e-9, f"max round-trip error {worst:.3e} over {len(classes)} classes"


def check_sphere_landmarks() -> tuple[bool, str]:
    """Double-point fibers collapse to the three landmarks; equilaterals map
    to the poles of the orientation axis."""
    rng = random.Random(SEED + 2)
    worst = 0.0
    landmarks = {0: DELTA_A, 1: DELTA_B, 2: DELTA_C}
    for _ in range(300):
        slot = rng.randrange(3)
        z = cmath.exp(1j * rng.uniform(0, 2 * PI))
        sides = [z, z, z]
        sides[slot] = 0j
        sides[(slot + 2) % 3] = -z
        free = {("a", "b", "c")[slot]: reduce_mod_pi(rng.uniform(0, PI))}
        c = class_of(from_sides(*sides, free_arguments=free))
        s = to_sphere(c)
        worst = max(worst, math.dist(s.as_tuple(), landmarks[slot]))
    w = cmath.exp(2j * PI / 3)
    plus = class_of(from_vertices(w, w.conjugate(), 1.0))
    minus = class_of(from_vertices(w.conjugate(), w, 1.0))
    assert orientation(from_vertices(w, w.conjugate(), 1.0)) is Orientation.POSITIVE
    worst = max(worst, math.dist(to_sphere(plus).as_tuple(), (0.0, -1.0, 0.0)))
    worst = max(worst, math.dist(to_sphere(minus).as_tuple(), (0.0, 1.0, 0.0)))
    return worst < 1e-12, f"max landmark error {worst:.3e}"


def check_hemispheres() -> tuple[bool, str]:
    """Orientation picks the hemisphere; degenerate classes sit on Y = 0."""
    rng = random.Random(SEED + 3)
    for _ in range(1000):
        T = random_nondegenerate(rng)
        y = to_sphere(class_of(T)).y
        want_neg = orientation(T) is Orientation.POSITIVE
        if want_neg != (y < 0.0):
            return False, f"hemisphere sign violated: y={y}, orientation {orientation(T)}"
    worst = 0.0
    for _ in range(200):
        worst = max(worst, abs(to_sphere(class_of(random_simple(rng))).y))
        worst = max(worst, abs(to_sphere(random_double_class(rng)).y))
    return worst < 1e-9, f"1000 oriented classes split; degenerate |Y| max {worst:.3e}"


def check_sphere_loci() -> tuple[bool, str]:
    """Isosceles and right classes land on their circles; obtuse classes in
    their caps."""
    rng = random.Random(SEED + 4)
    s3 = math.sqrt(3.0)
    worst = 0.0
    for _ in range(500):
        T, slot = random_isosceles(rng)
        x, _, z = to_sphere(class_of(T)).as_tuple()
        residual = {0: x + s3 * z, 1: x - s3 * z, 2: x}[slot]
        worst = max(worst, abs(residual))
    for _ in range(500):
        T, slot = random_right(rng)
        x, _, z = to_sphere(class_of(T)).as_tuple()
        residual = {0: -s3 * x + z + 1.0, 1: s3 * x + z + 1.0, 2: z - 0.5}[slot]
        worst = max(worst, abs(residual))
    if worst >= 1e-9:
        return False, f"circle residual {worst:.3e}"
    for _ in range(500):
        T, slot = random_obtuse(rng)
        x, _, z = to_sphere(class_of(T)).as_tuple()
        inside = {0: -s3 * x + z < -1.0, 1: s3 * x + z < -1.0, 2: z > 0.5}[slot]
        if not inside:
            return False, f"obtuse class escaped its cap (slot {slot})"
    return True, f"1000 circle residuals < 1e-9 (max {worst:.3e}); 500 caps hold"


def check_torus_inverse() -> tuple[bool, str]:
    """to_torus inverts torus_inverse away from the blown-down origin."""
    rng = random.Random(SEED + 5)
    worst = 0.0
    for _ in range(1000):
        t = random_torus_point(rng)
        worst = max(worst, torus_dist(to_torus(torus_inverse(t)), t))
    if worst >= 1e-9:
        return False, f"round-trip error {worst:.3e}"
    try:
        torus_inverse(TorusPoint(reduce_mod_pi(0), reduce_mod_pi(0), reduce_mod_pi(0)))
        return False, "origin was not rejected"
    except ValueError:
        pass
    return True, f"1000 round trips, max error {worst:.3e}; origin rejected"


def check_fiber_directions() -> tuple[bool, str]:
    """Approach directions of the torus origin resolve to the matching real
    side triple."""
    rng = random.Random(SEED + 6)
    worst = 0.0
    for _ in range(100):
        while True:
            a0 = rng.uniform(-1, 1)
            b0 = rng.uniform(-1, 1)
            if max(abs(a0), abs(b0), abs(a0 + b0)) > 0.1:
                break
        direction = (a0, b0, -a0 - b0)
        limit = torus_fiber_limit(direction)
        worst = max(worst, proj_dist(ProjTripleC(*direction), ProjTripleC(*limit)))
    return worst < 1e-6, f"max projective error {worst:.3e} over 100 directions"


def check_poncelet() -> tuple[bool, str]:
    """Radius relation, the angle formula for r/R, and closure of the
    revolving family."""
    rng = random.Random(SEED + 7)
    worst_chapple = 0.0
    worst_level = 0.0
    for _ in range(1000):
        T = random_nondegenerate(rng)
        cfg = incircle_outcircle(T)
        worst_chapple = max(
            worst_chapple, abs((cfg.R - cfg.r) ** 2 - cfg.r**2 - cfg.d**2)
        )
        lv = level_value(interior_angles(T))
        worst_level = max(worst_level, abs(lv - cfg.r / cfg.R))
    if worst_chapple >= 1e-9 or worst_level >= 1e-9:
        return False, f"chapple {worst_chapple:.3e}, level {worst_level:.3e}"
    worst_var = 0.0
    worst_tan = 0.0
    for _ in range(20):
        R = rng.uniform(0.5, 2.0)
        cfg = PonceletConfig.from_radii(rng.uniform(0.05, 0.45) * R, R)
        ratios = []
        for k in range(32):
            T = poncelet_family(cfg, 2 * PI * k / 32)
            got = incircle_outcircle(T)
            ratios.append(got.r / got.R)
            worst_tan = max(worst_tan, chord_tangency_residual(cfg, T))
        worst_var = max(worst_var, max(ratios) - min(ratios))
    ok = worst_var < 1e-9 and worst_tan < 1e-8
    return ok, (
        f"chapple {worst_chapple:.3e}, level {worst_level:.3e}, "
        f"orbit r/R variation {worst_var:.3e}, tangency {worst_tan:.3e}"
    )


def check_missing_degenerates() -> tuple[bool, str]:
    """Each blowdown model merges exactly one of the two benchmark family
    pairs that the full surface keeps apart."""
    fa1 = constant_angle_family(PI / 2)
    fa2 = constant_angle_family(2 * PI / 3)
    fr1 = constant_ratio_family(1.0)
    fr2 = constant_ratio_family(2.0)
    results = []
    r = separation_test(fa1, fa2, Model.SPHERE)
    results.append(("angle/sphere", r.verdict == "Merged" and r.distance < 1e-6, r))
    r = separation_test(fa1, fa2, Model.TORUS)
    results.append(("angle/torus", r.verdict == "Separated" and r.distance > 0.5, r))
    r = separation_test(fa1, fa2, Model.DYCK)
    results.append(("angle/dyck", r.verdict == "Separated", r))
    r = separation_test(fr1, fr2, Model.TORUS)
    results.append(("ratio/torus", r.verdict == "Merged" and r.distance < 1e-6, r))
    r = separation_test(fr1, fr2, Model.SPHERE)
    results.append(("ratio/sphere", r.verdict == "Separated" and r.distance > 0.05, r))
    r = separation_test(fr1, fr2, Model.DYCK)
    results.append(("ratio/dyck", r.verdict == "Separated", r))
    bad = [f"{name}: {rep.verdict} at {rep.distance:.3e}" for name, ok, rep in results if not ok]
    if bad:
        return False, "; ".join(bad)
    detail = ", ".join(f"{name} {rep.distance:.2e}" for name, _, rep in results)
    return True, detail


def check_group_action() -> tuple[bool, str]:
    """Composition law, orbit sizes, and equivariance of the quotient map."""
    rng = random.Random(SEED + 9)
    elements = GroupElement.all_elements()
    triangles = [random_nondegenerate(rng) for _ in range(20)]
    for g in elements:
        for h in elements:
            for T in triangles[:20]:
                left = act(g * h, T)
                right = act(g, act(h, T))
                if max(abs(u - v) for u, v in zip(left.sides, right.sides)) > 1e-12:
                    return False, f"composition failed for {g}, {h}"
                if any(
                    angle_dist(x, y) > 1e-12
                    for x, y in zip(left.arguments, right.arguments)
                ):
                    return False, f"argument composition failed for {g}, {h}"
    # scalene with all angles distinct -> free orbit
    scalene = class_of(from_vertices(0.0, 1.0, 0.3 + 0.9j))
    iso = class_of(from_vertices(0.5 + 1.1j, 0.0, 1.0))  # |b| = |c|, not equilateral
    w = cmath.exp(2j * PI / 3)
    equi = class_of(from_vertices(w.conjugate(), w, 1.0))
    sizes = (len(orbit(scalene, 1e-6)), len(orbit(iso, 1e-6)), len(orbit(equi, 1e-6)))
    if sizes != (12, 6, 2):
        return False, f"orbit sizes {sizes} != (12, 6, 2)"
    for _ in range(100):
        g = rng.choice(elements)
        T = random_nondegenerate(rng)
        d = class_dist(class_of(act(g, T)), act_class(g, class_of(T)))
        if d > 1e-9:
            return False, f"equivariance failed: distance {d:.3e}"
    return True, "144 compositions x 20 triangles; orbits (12, 6, 2); 100 equivariance pairs"


def check_angle_formula() -> tuple[bool, str]:
    """The argument-difference formula matches direct vertex measurement and
    stays continuous through a double point."""
    rng = random.Random(SEED + 10)
    worst = 0.0
    for _ in range(1000):
        T = random_nondegenerate(rng)
        computed = interior_angles(T)
        measured = [vertex_angle(T, i) for i in range(3)]
        worst = max(
            worst, max(angle_dist(x, y) for x, y in zip(computed, measured))
        )
    if worst >= 1e-9:
        return False, f"formula mismatch {worst:.3e}"
    fam = inscribed_family(-1.0, 1.0)
    eps = 1e-5
    around = [
        interior_angles(fam.eval(t)) for t in (eps, 0.0, 2 * PI - eps)
    ]
    jump = max(
        angle_dist(x, y)
        for t1 in around
        for t2 in around
        for x, y in zip(t1, t2)
    )
    if jump > 1e-3:
        return False, f"angles jump {jump:.3e} across the double point"
    return True, f"1000 triangles, max deviation {worst:.3e}; crossing jump {jump:.3e}"


ALL_CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("bijection", check_bijection),
    ("sphere-landmarks", check_sphere_landmarks),
    ("hemispheres", check_hemispheres),
    ("sphere-loci", check_sphere_loci),
    ("torus-inverse", check_torus_inverse),
    ("fiber-directions", check_fiber_directions),
    ("poncelet", check_poncelet),
    ("missing-degenerates", check_missing_degenerates),
    ("group-action", check_group_action),
    ("angle-formula", check_angle_formula),
]


def run_all(verbose_sink: Callable[[str], None] | None = None) -> bool:
    ok = True
    for name, fn in ALL_CHECKS:
        passed, detail = fn()
        ok = ok and passed
        if verbose_sink is not None:
            status = "PASS" if passed else "FAIL"
            verbose_sink(f"{status} {name}: {detail}")
    return ok
