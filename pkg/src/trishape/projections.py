"""The two blowdown models of the moduli surface.

``to_sphere`` sends a similarity class to the unit sphere through a linear
change of side coordinates followed by the Hopf map; it separates simple
points but collapses each double-point fiber to one of three landmarks.
``to_torus`` keeps only the interior angles; it separates double points but
collapses every simple point to the origin.  ``torus_inverse`` and
``torus_fiber_limit`` recover classes and approach directions near that
collapsed point.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .angles import AngleModPi, angle_dist, reduce_mod_pi
from .shape import ProjTripleC, ShapeClass

DEFAULT_TOL = 1e-9

_K = 2.0 - math.sqrt(3.0)

#: Landmark images of the three double-point fibers.
DELTA_A = (-math.sqrt(3.0) / 2.0, 0.0, 0.5)
DELTA_B = (math.sqrt(3.0) / 2.0, 0.0, 0.5)
DELTA_C = (0.0, 0.0, -1.0)


@dataclass(frozen=True)
class SpherePoint:
    """A point of the unit sphere."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        n = math.sqrt(self.x**2 + self.y**2 + self.z**2)
        if abs(n - 1.0) > 1e-12:
            raise ValueError(f"not a unit vector: |({self.x}, {self.y}, {self.z})| = {n}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


def sphere_dist(s1: SpherePoint, s2: SpherePoint) -> float:
    return math.dist(s1.as_tuple(), s2.as_tuple())


@dataclass(frozen=True)
class TorusPoint:
    """An angle triple (p, q, r) mod pi with p + q + r = 0 mod pi."""

    p: AngleModPi
    q: AngleModPi
    r: AngleModPi

    def __post_init__(self) -> None:
        total = float(self.p) + float(self.q) + float(self.r)
        if angle_dist(total, 0.0) > 1e-9:
            raise ValueError(f"angle triple does not sum to 0 mod pi: {total}")

    def as_tuple(self) -> tuple[AngleModPi, AngleModPi, AngleModPi]:
        return (self.p, self.q, self.r)

    def is_origin(self, tol: float = DEFAULT_TOL) -> bool:
        return all(v.is_zero(tol) for v in self.as_tuple())


def torus_dist(t1: TorusPoint, t2: TorusPoint) -> float:
    """Euclidean distance on the torus built from per-coordinate wraparound
    distances."""
    return math.sqrt(
        sum(angle_dist(u, v) ** 2 for u, v in zip(t1.as_tuple(), t2.as_tuple()))
    )


class SphereLocus(enum.Enum):
    DEGENERATE_CIRCLE = "DegenerateCircle"
    ISOSCELES_A = "IsoscelesA"
    ISOSCELES_B = "IsoscelesB"
    ISOSCELES_C = "IsoscelesC"
    RIGHT_A = "RightA"
    RIGHT_B = "RightB"
    RIGHT_C = "RightC"
    EQUILATERAL_PLUS = "EquilateralPlus"
    EQUILATERAL_MINUS = "EquilateralMinus"
    DOUBLE_A = "DoubleA"
    DOUBLE_B = "DoubleB"
    DOUBLE_C = "DoubleC"


def hopf(u: complex, v: complex) -> SpherePoint:
    """The Hopf map on nonzero (u, v), scale-invariant for complex scalars.

    (u, v) -> (|u|^2 - |v|^2, -2 Im(conj(u) v), 2 Re(conj(u) v)) / (|u|^2 + |v|^2).
    """
    u, v = complex(u), complex(v)
    n = abs(u) ** 2 + abs(v) ** 2
    if n == 0.0:
        raise ValueError("hopf is undefined at (0, 0)")
    w = u.conjugate() * v
    return SpherePoint(
        (abs(u) ** 2 - abs(v) ** 2) / n, -2.0 * w.imag / n, 2.0 * w.real / n
    )


def to_sphere(c: ShapeClass) -> SpherePoint:
    """Project a class to the sphere through its side triple alone."""
    a, b, _ = c.sides.as_tuple()
    return hopf(a + _K * b, _K * a + b)


def classify_sphere_locus(s: SpherePoint, tol: float = DEFAULT_TOL) -> frozenset[SphereLocus]:
    """Flags for every special locus the point lies on, within tol.

    Circle and great-circle membership is tested by the defining linear
    equation's residual; landmark membership by euclidean proximity.
    """
    x, y, z = s.as_tuple()
    s3 = math.sqrt(3.0)
    flags = set()
    if abs(y) < tol:
        flags.add(SphereLocus.DEGENERATE_CIRCLE)
    # The odd-side-a circle passes through the double landmark with a = 0,
    # which fixes the sign pairing below.
    if abs(x + s3 * z) < tol:
        flags.add(SphereLocus.ISOSCELES_A)
    if abs(x - s3 * z) < tol:
        flags.add(SphereLocus.ISOSCELES_B)
    if abs(x) < tol:
        flags.add(SphereLocus.ISOSCELES_C)
    if abs(-s3 * x + z + 1.0) < tol:
        flags.add(SphereLocus.RIGHT_A)
    if abs(s3 * x + z + 1.0) < tol:
        flags.add(SphereLocus.RIGHT_B)
    if abs(z - 0.5) < tol:
        flags.add(SphereLocus.RIGHT_C)
    if math.dist((x, y, z), (0.0, -1.0, 0.0)) < tol:
        flags.add(SphereLocus.EQUILATERAL_PLUS)
    if math.dist((x, y, z), (0.0, 1.0, 0.0)) < tol:
        flags.add(SphereLocus.EQUILATERAL_MINUS)
    for landmark, flag in (
        (DELTA_A, SphereLocus.DOUBLE_A),
        (DELTA_B, SphereLocus.DOUBLE_B),
        (DELTA_C, SphereLocus.DOUBLE_C),
    ):
        if math.dist((x, y, z), landmark) < tol:
            flags.add(flag)
    return frozenset(flags)


def to_torus(c: ShapeClass) -> TorusPoint:
    """Project a class to the torus by forgetting its sides."""
    return TorusPoint(*c.angles)


def _torus_sides(alpha: float, beta: float) -> tuple[complex, complex, complex]:
    # vertices (e^{2 i beta}, e^{-2 i alpha}, 1) inscribed in the unit circle
    ea = cmath.exp(-2j * alpha)
    eb = cmath.exp(2j * beta)
    return (1.0 - ea, eb - 1.0, ea - eb)


def torus_inverse(t: TorusPoint, tol: float = DEFAULT_TOL) -> ShapeClass:
    """The class with interior angles t, for t away from the origin.

    Sides come from the triangle inscribed in the unit circle whose angles
    are t.  At the origin every simple point has been collapsed together,
    so no unique class exists there.
    """
    if t.is_origin(tol):
        raise ValueError("blown-down point: no unique class over the torus origin")
    alpha, beta, gamma = t.as_tuple()
    raw = _torus_sides(float(alpha), float(beta))
    zero = (alpha.is_zero(1e-12), beta.is_zero(1e-12), gamma.is_zero(1e-12))
    sides = tuple(0j if z else s for z, s in zip(zero, raw))
    if any(zero):
        angles = (alpha, beta, gamma)
    else:
        xi = tuple(reduce_mod_pi(cmath.phase(s)) for s in sides)
        angles = (xi[1] - xi[2], xi[2] - xi[0], xi[0] - xi[1])
    return ShapeClass(sides=ProjTripleC(*sides), angles=angles)


DEFAULT_SCHEDULE = (1e-3, 1e-4, 1e-5, 1e-6)


def torus_fiber_limit(
    direction: Sequence[float],
    schedule: Sequence[float] = DEFAULT_SCHEDULE,
    tol: float = 1e-6,
) -> tuple[float, float, float]:
    """Approach direction of the torus origin, resolved into a side triple.

    Walks toward the origin along t * direction, normalizes the side triple
    of each intermediate class, and extrapolates.  The limit is the real
    projective triple proportional to the direction itself.
    """
    d = tuple(float(v) for v in direction)
    if len(d) != 3 or max(abs(v) for v in d) == 0.0:
        raise ValueError("direction must be a nonzero real triple")
    if angle_dist(sum(d), 0.0) > 1e-9:
        raise ValueError(f"direction must sum to 0 mod pi: sum = {sum(d)}")
    ts = [float(t) for t in schedule]
    if len(ts) < 2 or any(t2 >= t1 for t1, t2 in zip(ts, ts[1:])) or ts[-1] <= 0.0:
        raise ValueError("schedule must be a decreasing sequence of positive values")
    pivot = max(range(3), key=lambda i: (abs(d[i]), -i))
    iterates: list[tuple[complex, complex, complex]] = []
    residuals: list[float] = []
    for t in ts:
        raw = _torus_sides(t * d[0], t * d[1])
        if abs(raw[pivot]) == 0.0:
            raise ValueError(f"side {pivot} vanished along the schedule at t = {t}")
        norm = tuple(s / raw[pivot] for s in raw)
        if iterates:
            residuals.append(max(abs(u - v) for u, v in zip(norm, iterates[-1])))
        iterates.append(norm)
    if len(residuals) >= 2 and residuals[-1] > residuals[0] and residuals[-1] > tol:
        raise ValueError(f"fiber limit not converging; residuals {residuals}")
    ratio = ts[-1] / ts[-2]
    extrap = tuple(
        (x2 - ratio * x1) / (1.0 - ratio)
        for x1, x2 in zip(iterates[-2], iterates[-1])
    )
    if max(abs(v.imag) for v in extrap) > tol:
        raise ValueError(
            f"fiber limit has non-real residue {extrap}; residuals {residuals}"
        )
    vals = [v.real for v in extrap]
    m = max(abs(v) for v in vals)
    vals = [v / m for v in vals]
    lead = next(v for v in vals if v != 0.0)
    if lead < 0.0:
        vals = [-v for v in vals]
    mean = sum(vals) / 3.0
    return tuple(v - mean for v in vals)


def lifted_angle_sum(c: ShapeClass) -> float:
    """Sum of the angle representatives in [0, pi): pi for positively
    oriented classes, 2*pi for negatively oriented ones, 0 or pi with a zero
    entry for degenerate classes."""
    return sum(float(x) for x in c.angles)
