"""Parametrized families of triangles and their degenerate limits.

Poncelet families revolve a triangle between a fixed incircle and
outcircle; inscribed-chord families move one vertex along a circle toward a
double point; the constant-angle and constant-ratio families degenerate in
ways that exactly one of the two blowdown models can still tell apart.
``limit_class`` extracts numeric limits and ``separation_test`` compares
them across models.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .angles import AngleModPi, angle_dist, reduce_mod_pi
from .shape import ProjTripleC, ShapeClass, class_dist, class_of
from .triangle import (
    DegeneracyType,
    TriangleVariable,
    classify,
    from_vertices,
    signed_area2,
)
from .projections import (
    DEFAULT_SCHEDULE,
    SpherePoint,
    TorusPoint,
    sphere_dist,
    to_sphere,
    to_torus,
    torus_dist,
)

DEFAULT_TOL = 1e-9

#: Default limit tolerance for extrapolated family limits.
LIMIT_TOL = 1e-6

#: Default model-point distance above which limits count as separated.
SEPARATION_THRESHOLD = 1e-3


@dataclass(frozen=True)
class PonceletConfig:
    """Inradius, circumradius, and center separation of a triangle.

    The three lengths always satisfy (R - r)^2 = r^2 + d^2, which is what
    makes the one-parameter revolving family close up.
    """

    r: float
    R: float
    d: float

    def __post_init__(self) -> None:
        r, R, d = float(self.r), float(self.R), float(self.d)
        if not (0.0 < r <= R / 2.0 + 1e-12):
            raise ValueError(f"inradius must satisfy 0 < r <= R/2: r={r}, R={R}")
        if d < 0.0:
            raise ValueError(f"center separation must be nonnegative: {d}")
        residual = (R - r) ** 2 - r**2 - d**2
        if abs(residual) > 1e-9 * max(1.0, R * R):
            raise ValueError(
                f"radii and separation are not a closed configuration: "
                f"(R-r)^2 - r^2 - d^2 = {residual}"
            )

    @staticmethod
    def from_radii(r: float, R: float) -> "PonceletConfig":
        """The unique closed configuration with the given radii."""
        return PonceletConfig(r, R, math.sqrt(max(0.0, R * (R - 2.0 * r))))


@dataclass(frozen=True)
class Family:
    """A one-parameter family of triangles.

    ``eval`` is total on the open ``domain``; the family degenerates as the
    parameter approaches ``limit_end``.
    """

    label: str
    eval: Callable[[float], TriangleVariable]
    domain: tuple[float, float]
    limit_end: float


class Model(enum.Enum):
    DYCK = "Dyck"
    SPHERE = "Sphere"
    TORUS = "Torus"


@dataclass(frozen=True)
class SeparationReport:
    model: Model
    limit1: tuple[float, ...]
    limit2: tuple[float, ...]
    distance: float
    verdict: str  # "Separated" | "Merged"

    def to_json(self) -> dict:
        return {
            "model": self.model.value,
            "limit1": list(self.limit1),
            "limit2": list(self.limit2),
            "distance": self.distance,
            "verdict": self.verdict,
        }


def _circumcenter(A: complex, B: complex, C: complex) -> complex:
    ax, ay, bx, by, cx, cy = A.real, A.imag, B.real, B.imag, C.real, C.imag
    den = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    na, nb, nc = abs(A) ** 2, abs(B) ** 2, abs(C) ** 2
    ox = (na * (by - cy) + nb * (cy - ay) + nc * (ay - by)) / den
    oy = (na * (cx - bx) + nb * (ax - cx) + nc * (bx - ax)) / den
    return complex(ox, oy)


def incircle_outcircle(T: TriangleVariable) -> PonceletConfig:
    """Inradius, circumradius, and incenter-circumcenter distance of a
    nondegenerate triangle."""
    if classify(T) is not DegeneracyType.NONDEGENERATE:
        raise ValueError("incircle and outcircle require a nondegenerate triangle")
    A, B, C = T.vertices
    la, lb, lc = abs(C - B), abs(A - C), abs(B - A)
    area = abs(signed_area2(T)) / 2.0
    perimeter = la + lb + lc
    r = 2.0 * area / perimeter
    R = la * lb * lc / (4.0 * area)
    incenter = (la * A + lb * B + lc * C) / perimeter
    d = abs(incenter - _circumcenter(A, B, C))
    return PonceletConfig(r, R, d)


def level_value(angles: Sequence[AngleModPi | float]) -> float:
    """r/R from interior angles alone: 4 sin(a/2) sin(b/2) sin(g/2).

    Accepts either orientation's mod-pi representatives; returns 0 for a
    degenerate (zero-angle) triple.
    """
    reps = [float(reduce_mod_pi(float(v))) for v in angles]
    if len(reps) != 3:
        raise ValueError("expected an angle triple")
    if any(angle_dist(v, 0.0) <= 1e-12 for v in reps):
        return 0.0
    total = sum(reps)
    if abs(total - 2.0 * math.pi) < abs(total - math.pi):
        reps = [math.pi - v for v in reps]  # mirror to the positive lift
    return 4.0 * math.prod(math.sin(v / 2.0) for v in reps)


def _line_distance(P: complex, Q: complex, Z: complex) -> float:
    """Distance from Z to the line through P and Q."""
    w = Q - P
    return abs(((Z - P) * w.conjugate()).imag) / abs(w)


def poncelet_family(cfg: PonceletConfig, theta: float) -> TriangleVariable:
    """The triangle of the revolving family whose vertex A sits at angle
    theta on the outcircle.

    Outcircle: center 0, radius R.  Incircle: center (d, 0), radius r.
    B and C are the second outcircle intersections of the two tangent lines
    from A to the incircle; the closure theorem makes BC tangent as well.
    """
    A = cfg.R * cmath.exp(1j * theta)
    center = complex(cfg.d, 0.0)
    w = center - A
    # Chapple guarantees R - d > r, so A is strictly outside the incircle
    phi = math.asin(cfg.r / abs(w))
    others = []
    for sign in (1.0, -1.0):
        direction = (w / abs(w)) * cmath.exp(1j * sign * phi)
        # second intersection of the line A + s*direction with |z| = R
        s = -2.0 * (A.conjugate() * direction).real
        others.append(A + s * direction)
    # the +phi tangent meets the outcircle counterclockwise of the -phi one;
    # naming them (C, B) keeps the triangle positively oriented
    C, B = others
    T = from_vertices(A, B, C)
    residual = abs(_line_distance(B, C, center) - cfg.r)
    if residual > 1e-8 * max(1.0, cfg.R):
        raise ValueError(f"third chord failed tangency: residual {residual}")
    return T


def chord_tangency_residual(cfg: PonceletConfig, T: TriangleVariable) -> float:
    """How far the chord BC of a revolving-family triangle is from touching
    the incircle (center (d, 0), radius r)."""
    _, B, C = T.vertices
    return abs(_line_distance(B, C, complex(cfg.d, 0.0)) - cfg.r)


def inscribed_family(
    chordB: complex,
    chordC: complex,
    circle_center: complex = 0j,
    circle_radius: float = 1.0,
) -> Family:
    """Vertex A revolving on a circle over the fixed chord endpoints B, C.

    The parameter is A's position angle measured from C.  As A reaches C
    the triangle becomes a double point whose free argument is the tangent
    direction of the circle at C.
    """
    B, C = complex(chordB), complex(chordC)
    center, radius = complex(circle_center), float(circle_radius)
    for name, P in (("B", B), ("C", C)):
        if abs(abs(P - center) - radius) > 1e-9 * max(1.0, radius):
            raise ValueError(f"chord endpoint {name} is not on the circle")
    theta_c = cmath.phase(C - center)
    tangent = reduce_mod_pi(cmath.phase(1j * (C - center)))

    def _eval(t: float) -> TriangleVariable:
        A = center + radius * cmath.exp(1j * (theta_c + t))
        if abs(A - C) <= 1e-9 * radius:
            return from_vertices(C, B, C, free_arguments={"b": tangent})
        return from_vertices(A, B, C)

    return Family(
        label=f"inscribed[B={B}, C={C}]",
        eval=_eval,
        domain=(0.0, 2.0 * math.pi),
        limit_end=0.0,
    )


def constant_angle_family(alpha0: AngleModPi | float) -> Family:
    """Classes with fixed interior angle alpha0 at vertex A.

    A revolves on the unit circle over the chord from B = e^{-2 i alpha0}
    to C = 1; the inscribed-angle theorem keeps alpha constant.  At the
    parameter's lower end A reaches C: a double point over [1, 0, -1].
    """
    a0 = float(reduce_mod_pi(float(alpha0)))
    if a0 <= 0.0:
        raise ValueError("constant angle must be nonzero mod pi")
    B = cmath.exp(-2j * a0)
    tangent = reduce_mod_pi(math.pi / 2.0)

    def _eval(t: float) -> TriangleVariable:
        A = cmath.exp(2j * t)
        if abs(A - 1.0) <= 1e-9:
            return from_vertices(1.0, B, 1.0, free_arguments={"b": tangent})
        return from_vertices(A, B, 1.0)

    return Family(
        label=f"constant-angle[{a0}]",
        eval=_eval,
        domain=(0.0, math.pi - a0),
        limit_end=0.0,
    )


def constant_ratio_family(ratio: float) -> Family:
    """Classes with fixed side-length ratio |c| = ratio * |b|.

    B = 0 and C = 1 are pinned; A = x(t) + i t descends to the segment,
    flattening to a simple point as t -> 0.  The limiting side triple is
    proportional to [1 + ratio, -1, -ratio].
    """
    rr = float(ratio)
    if rr <= 0.0:
        raise ValueError("side ratio must be positive")

    def _apex_x(t: float) -> float:
        # |A| = ratio * |A - 1| with A = x + i t
        if rr == 1.0:
            return 0.5
        disc = rr**4 + (1.0 - rr**2) * (rr**2 - (1.0 - rr**2) * t**2)
        return (-(rr**2) + math.sqrt(disc)) / (1.0 - rr**2)

    def _eval(t: float) -> TriangleVariable:
        return from_vertices(complex(_apex_x(t), t), 0.0, 1.0)

    t_max = 10.0 if rr == 1.0 else rr / abs(1.0 - rr**2)
    return Family(
        label=f"constant-ratio[{rr}]",
        eval=_eval,
        domain=(0.0, t_max),
        limit_end=0.0,
    )


def limit_class(
    f: Family,
    schedule: Sequence[float] = DEFAULT_SCHEDULE,
    tol: float = LIMIT_TOL,
) -> ShapeClass:
    """Extrapolated limit of class_of(f.eval(t)) along a decreasing schedule.

    Sides are tracked in a fixed affine chart of the projective triple and
    angles as unwrapped real sequences; both get a last-two-point Richardson
    step, which knocks the leading O(t) error down to O(t^2).
    """
    ts = [float(t) for t in schedule]
    if len(ts) < 2 or any(t2 >= t1 for t1, t2 in zip(ts, ts[1:])):
        raise ValueError("schedule must be a decreasing sequence")
    classes = [class_of(f.eval(f.limit_end + t)) for t in ts]
    mods = classes[-1].sides.moduli()
    pivot = max(range(3), key=lambda i: (mods[i], -i))
    charts: list[tuple[complex, complex, complex]] = []
    angle_seqs: list[list[float]] = []
    for c in classes:
        v = c.sides.as_tuple()
        if abs(v[pivot]) == 0.0:
            raise ValueError("pivot side vanished along the schedule")
        charts.append(tuple(s / v[pivot] for s in v))
        reps = [float(x) for x in c.angles]
        if angle_seqs:
            prev = angle_seqs[-1]
            reps = [
                min((r + k * math.pi for k in (-1, 0, 1)), key=lambda w: abs(w - p))
                for r, p in zip(reps, prev)
            ]
        angle_seqs.append(reps)
    steps = [class_dist(c1, c2) for c1, c2 in zip(classes, classes[1:])]
    if steps[-1] > tol and steps[-1] > steps[0]:
        raise ValueError(f"family limit not converging; step distances {steps}")
    ratio = ts[-1] / ts[-2]
    sides = tuple(
        (x2 - ratio * x1) / (1.0 - ratio) for x1, x2 in zip(charts[-2], charts[-1])
    )
    angles = tuple(
        reduce_mod_pi((x2 - ratio * x1) / (1.0 - ratio))
        for x1, x2 in zip(angle_seqs[-2], angle_seqs[-1])
    )
    return ShapeClass(sides=ProjTripleC(*sides), angles=angles)


def separation_test(
    f1: Family,
    f2: Family,
    model: Model,
    schedule: Sequence[float] = DEFAULT_SCHEDULE,
    sep_threshold: float = SEPARATION_THRESHOLD,
    tol: float = LIMIT_TOL,
) -> SeparationReport:
    """Compare the degenerate limits of two families inside one model."""
    c1 = limit_class(f1, schedule, tol)
    c2 = limit_class(f2, schedule, tol)
    if model is Model.SPHERE:
        s1, s2 = to_sphere(c1), to_sphere(c2)
        p1, p2 = s1.as_tuple(), s2.as_tuple()
        distance = sphere_dist(s1, s2)
    elif model is Model.TORUS:
        t1, t2 = to_torus(c1), to_torus(c2)
        p1 = tuple(float(x) for x in t1.as_tuple())
        p2 = tuple(float(x) for x in t2.as_tuple())
        distance = torus_dist(t1, t2)
    else:
        p1 = tuple(
            v for z in c1.sides.as_tuple() for v in (z.real, z.imag)
        ) + tuple(float(x) for x in c1.angles)
        p2 = tuple(
            v for z in c2.sides.as_tuple() for v in (z.real, z.imag)
        ) + tuple(float(x) for x in c2.angles)
        distance = class_dist(c1, c2)
    verdict = "Separated" if distance > sep_threshold else "Merged"
    return SeparationReport(
        model=model, limit1=p1, limit2=p2, distance=distance, verdict=verdict
    )
