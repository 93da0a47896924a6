"""Similarity classes and their blowup coordinates.

A similarity class keeps two things: the projective triple of side
directions in P(X) and the interior angles mod pi.  The pair is enough to
separate every degenerate class.  ``phi``/``psi`` translate between classes
and blowup coordinates ([a,b,c]; [xi_a, xi_b, xi_c]) where the angle triple
is taken modulo a common additive shift.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .angles import AngleModPi, angle_dist, reduce_mod_pi
from .triangle import (
    SLOTS,
    GroupElement,
    TriangleVariable,
    act,
    from_sides,
    interior_angles,
)

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ProjTripleC:
    """A point [a, b, c] of P(X): complex triple, not all zero, a+b+c = 0.

    Canonical form divides by the largest-modulus coordinate (alphabetical
    tie-break) and restores exact closure.
    """

    a: complex
    b: complex
    c: complex

    def __post_init__(self) -> None:
        vals = [complex(self.a), complex(self.b), complex(self.c)]
        scale = max(abs(v) for v in vals)
        if scale == 0.0:
            raise ValueError("projective triple cannot be all zero")
        if abs(sum(vals)) > 1e-6 * scale:
            raise ValueError(f"triple does not close: a+b+c = {sum(vals)}")
        pivot = max(range(3), key=lambda i: (abs(vals[i]), -i))
        vals = [v / vals[pivot] for v in vals]
        mean = sum(vals) / 3.0
        vals = [v - mean for v in vals]
        object.__setattr__(self, "a", vals[0])
        object.__setattr__(self, "b", vals[1])
        object.__setattr__(self, "c", vals[2])

    def as_tuple(self) -> tuple[complex, complex, complex]:
        return (self.a, self.b, self.c)

    def moduli(self) -> tuple[float, float, float]:
        return (abs(self.a), abs(self.b), abs(self.c))

    def to_json(self) -> list[list[float]]:
        return [[v.real, v.imag] for v in self.as_tuple()]


def proj_dist(t1: ProjTripleC, t2: ProjTripleC) -> float:
    """Chordal distance between points of P(X), independent of representatives.

    sin of the Fubini-Study angle: 0 for equal points, 1 for orthogonal ones.
    """
    v, w = t1.as_tuple(), t2.as_tuple()
    nv = math.sqrt(sum(abs(x) ** 2 for x in v))
    nw = math.sqrt(sum(abs(y) ** 2 for y in w))
    v = [x / nv for x in v]
    w = [y / nw for y in w]
    inner = sum(y.conjugate() * x for x, y in zip(v, w))
    # norm of the component of v orthogonal to w: sin of the angle, computed
    # without the cancellation that sqrt(1 - cos^2) suffers near zero
    residual = [x - inner * y for x, y in zip(v, w)]
    return min(1.0, math.sqrt(sum(abs(x) ** 2 for x in residual)))


@dataclass(frozen=True)
class ShapeClass:
    """A similarity class: ([a, b, c]; (alpha, beta, gamma))."""

    sides: ProjTripleC
    angles: tuple[AngleModPi, AngleModPi, AngleModPi]

    def to_json(self) -> dict:
        return {
            "sides": self.sides.to_json(),
            "angles": [float(x) for x in self.angles],
        }

    @staticmethod
    def from_json(data: dict) -> "ShapeClass":
        sides = ProjTripleC(*(complex(s[0], s[1]) for s in data["sides"]))
        angles = tuple(reduce_mod_pi(v) for v in data["angles"])
        return ShapeClass(sides=sides, angles=angles)


@dataclass(frozen=True)
class BlowupCoord:
    """([a, b, c]; [xi_a, xi_b, xi_c]) with the additive diagonal relation.

    The stored representative pins the xi of the largest-modulus side to 0.
    """

    sides: ProjTripleC
    xi: tuple[AngleModPi, AngleModPi, AngleModPi]

    def to_json(self) -> dict:
        return {
            "sides": self.sides.to_json(),
            "xi": [float(x) for x in self.xi],
            "gauge": "largest-side-zero",
        }


def _gauge_fix(
    sides: ProjTripleC, xi: tuple[AngleModPi, AngleModPi, AngleModPi]
) -> tuple[AngleModPi, AngleModPi, AngleModPi]:
    mods = sides.moduli()
    pivot = max(range(3), key=lambda i: (mods[i], -i))
    shift = xi[pivot]
    return tuple(x - shift for x in xi)


def class_of(T: TriangleVariable) -> ShapeClass:
    """Quotient map: forget the basepoint and projectivize the directions."""
    pa, pb, pc = T.direction_pairs()
    return ShapeClass(sides=ProjTripleC(pa, pb, pc), angles=interior_angles(T))


def class_dist(c1: ShapeClass, c2: ShapeClass) -> float:
    """Distance on the moduli surface: chordal side distance plus the
    euclidean combination of per-angle wraparound distances."""
    d2 = sum(angle_dist(x, y) ** 2 for x, y in zip(c1.angles, c2.angles))
    return proj_dist(c1.sides, c2.sides) + math.sqrt(d2)


def class_equal(c1: ShapeClass, c2: ShapeClass, tol: float = DEFAULT_TOL) -> bool:
    """Equality in P(X) x T: projective sides and all three angles agree."""
    if proj_dist(c1.sides, c2.sides) > tol:
        return False
    return all(angle_dist(x, y) <= tol for x, y in zip(c1.angles, c2.angles))


def phi(c: ShapeClass) -> BlowupCoord:
    """Class to blowup coordinate: angles (alpha, beta, gamma) -> [0, -gamma, beta]."""
    _alpha, beta, gamma = c.angles
    xi = (reduce_mod_pi(0.0), -gamma, beta)
    return BlowupCoord(sides=c.sides, xi=_gauge_fix(c.sides, xi))


def psi(b: BlowupCoord) -> ShapeClass:
    """Blowup coordinate to class via the cross-product relation.

    Independent of the diagonal representative of [xi_a, xi_b, xi_c].
    """
    xa, xb, xc = b.xi
    return ShapeClass(sides=b.sides, angles=(xb - xc, xc - xa, xa - xb))


def blowup_equal(b1: BlowupCoord, b2: BlowupCoord, tol: float = DEFAULT_TOL) -> bool:
    """Equality of blowup coordinates: sides agree and the xi triples differ
    by a constant diagonal shift."""
    if proj_dist(b1.sides, b2.sides) > tol:
        return False
    diffs = [x - y for x, y in zip(b1.xi, b2.xi)]
    return all(angle_dist(diffs[0], d) <= tol for d in diffs[1:])


def lift_class(c: ShapeClass) -> TriangleVariable:
    """A triangle representing the class (basepoint 0, unit scale).

    Free arguments at a zero side are reconstructed from the stored angles
    so that class_of(lift_class(c)) == c.
    """
    a, b, cc = c.sides.as_tuple()
    alpha, beta, gamma = c.angles
    scale = max(abs(a), abs(b), abs(cc))
    free: dict[str, AngleModPi] = {}
    mods = [abs(a), abs(b), abs(cc)]
    zero_tol = 1e-13 * scale
    for i, slot in enumerate(SLOTS):
        if mods[i] > zero_tol:
            continue
        # solve the cross-product relation for the missing argument
        others = [j for j in range(3) if j != i]
        ref = others[0]
        vref = (a, b, cc)[ref]
        xi_ref = reduce_mod_pi(math.atan2(vref.imag, vref.real))
        # alpha = xi_b - xi_c, beta = xi_c - xi_a, gamma = xi_a - xi_b
        if i == 0:  # xi_a = xi_b + gamma = xi_c - beta
            free["a"] = (xi_ref + gamma) if ref == 1 else (xi_ref - beta)
        elif i == 1:  # xi_b = xi_a - gamma = xi_c + alpha
            free["b"] = (xi_ref - gamma) if ref == 0 else (xi_ref + alpha)
        else:  # xi_c = xi_a + beta = xi_b - alpha
            free["c"] = (xi_ref + beta) if ref == 0 else (xi_ref - alpha)
    snapped = [0j if mods[i] <= zero_tol else (a, b, cc)[i] for i in range(3)]
    return from_sides(*snapped, free_arguments=free or None)


def act_class(g: GroupElement, c: ShapeClass) -> ShapeClass:
    """Induced symmetry on classes, computed through any lift."""
    return class_of(act(g, lift_class(c)))


def orbit(c: ShapeClass, tol: float = DEFAULT_TOL) -> list[ShapeClass]:
    """Deduplicated images of the class under all 12 symmetries."""
    out: list[ShapeClass] = []
    for g in GroupElement.all_elements():
        img = act_class(g, c)
        if not any(class_equal(img, seen, tol) for seen in out):
            out.append(img)
    return out


def _rep_key(c: ShapeClass) -> tuple:
    angles = tuple(sorted(round(float(x), 9) for x in c.angles))
    coords = tuple(
        round(v, 9) for z in c.sides.as_tuple() for v in (z.real, z.imag)
    )
    return angles + coords


def canonical_rep(c: ShapeClass, tol: float = DEFAULT_TOL) -> ShapeClass:
    """Deterministic orbit representative: lexicographic minimum over the
    orbit of (sorted angle values, canonical side coordinates)."""
    return min(orbit(c, tol), key=_rep_key)
