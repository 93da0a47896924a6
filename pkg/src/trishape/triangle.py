"""The geometric variable for labeled, oriented, possibly-degenerate triangles.

A triangle is recorded redundantly as (basepoint; side-vectors; projective
direction sextuple; mod-pi arguments).  The redundancy is what keeps
degenerate configurations apart: a zero side-vector still carries a
direction through its argument, and a triple point still carries a
direction sextuple.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .angles import PI, AngleModPi, angle_dist, reduce_mod_pi

SLOTS = ("a", "b", "c")

DEFAULT_TOL = 1e-9


class DegeneracyType(enum.Enum):
    NONDEGENERATE = "Nondegenerate"
    SIMPLE = "Simple"
    DOUBLE = "Double"
    TRIPLE = "Triple"
    TRIPLED_SIMPLE = "TripledSimple"
    DOUBLED_SIMPLE = "DoubledSimple"
    TRIPLED_DOUBLE = "TripledDouble"
    TRIPLED_DOUBLED_SIMPLE = "TripledDoubledSimple"


class Orientation(enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    ZERO = "Zero"


def canonical_directions(coords: Sequence[float]) -> tuple[float, ...]:
    """Canonicalize a point of P^5(R): max-abs coordinate 1, first nonzero
    coordinate positive."""
    vals = [float(v) for v in coords]
    if len(vals) != 6:
        raise ValueError("direction sextuple must have six coordinates")
    m = max(abs(v) for v in vals)
    if m == 0.0:
        raise ValueError("direction sextuple cannot be all zero")
    vals = [v / m for v in vals]
    lead = next(v for v in vals if v != 0.0)
    if lead < 0.0:
        vals = [-v for v in vals]
    return tuple(vals)


def _direction_pairs(directions: Sequence[float]) -> tuple[complex, complex, complex]:
    return (
        complex(directions[0], directions[1]),
        complex(directions[2], directions[3]),
        complex(directions[4], directions[5]),
    )


@dataclass(frozen=True)
class TriangleVariable:
    """Full geometric variable of a labeled, oriented triangle.

    Invariants (checked by :func:`validate`):
      * sides sum to zero;
      * if the sides are not all zero, the direction sextuple is their
        canonical projectivization;
      * the argument of every nonzero direction pair equals the direction's
        angle mod pi (arguments of zero pairs are free).
    """

    basepoint: complex
    sides: tuple[complex, complex, complex]
    directions: tuple[float, float, float, float, float, float]
    arguments: tuple[AngleModPi, AngleModPi, AngleModPi]

    @property
    def vertices(self) -> tuple[complex, complex, complex]:
        a, _b, c = self.sides
        return (self.basepoint - c, self.basepoint, self.basepoint + a)

    def direction_pairs(self) -> tuple[complex, complex, complex]:
        return _direction_pairs(self.directions)

    def to_json(self) -> dict:
        return {
            "basepoint": [self.basepoint.real, self.basepoint.imag],
            "sides": [[s.real, s.imag] for s in self.sides],
            "directions": list(self.directions),
            "arguments": [float(x) for x in self.arguments],
        }

    @staticmethod
    def from_json(data: dict) -> "TriangleVariable":
        try:
            sides = [complex(s[0], s[1]) for s in data["sides"]]
        except (KeyError, TypeError, IndexError) as exc:
            raise ValueError(f"malformed triangle JSON at 'sides': {exc}") from exc
        bp = data.get("basepoint", [0.0, 0.0])
        try:
            basepoint = complex(bp[0], bp[1])
        except (TypeError, IndexError) as exc:
            raise ValueError(f"malformed triangle JSON at 'basepoint': {exc}") from exc
        directions = data.get("directions")
        free = None
        if "arguments" in data:
            free = {
                SLOTS[i]: reduce_mod_pi(v) for i, v in enumerate(data["arguments"])
            }
        return from_sides(
            sides[0],
            sides[1],
            sides[2],
            basepoint=basepoint,
            directions=tuple(directions) if directions is not None else None,
            free_arguments=free,
        )


def from_sides(
    a: complex,
    b: complex,
    c: complex,
    basepoint: complex = 0j,
    directions: Sequence[float] | None = None,
    free_arguments: dict[str, AngleModPi] | None = None,
    tol: float = DEFAULT_TOL,
) -> TriangleVariable:
    """Build a triangle variable from side-vectors.

    The closure defect a + b + c is checked against ``tol`` and then removed
    exactly by setting c = -a - b.  Zero sides get their argument from
    ``free_arguments``; unspecified free arguments default to the direction
    of the line through the remaining vertices.
    """
    a, b, c = complex(a), complex(b), complex(c)
    scale = max(abs(a), abs(b), abs(c))
    if scale > 0.0 and abs(a + b + c) > tol * scale:
        raise ValueError(f"side-vectors do not close: a+b+c = {a + b + c}")
    if scale > 0.0:
        c = -a - b
        dirs = canonical_directions((a.real, a.imag, b.real, b.imag, c.real, c.imag))
    else:
        if directions is None:
            raise ValueError(
                "underdetermined triple point: zero side-vectors need an "
                "explicit direction sextuple"
            )
        dirs = canonical_directions(directions)
        s1 = dirs[0] + dirs[2] + dirs[4]
        s2 = dirs[1] + dirs[3] + dirs[5]
        if abs(s1) > tol or abs(s2) > tol:
            raise ValueError("direction triple violates a1+b1+c1 = a2+b2+c2 = 0")
    pairs = _direction_pairs(dirs)
    free_arguments = free_arguments or {}
    args: list[AngleModPi] = []
    for slot, pair in zip(SLOTS, pairs):
        if abs(pair) > 0.0:
            args.append(reduce_mod_pi(math.atan2(pair.imag, pair.real)))
        elif slot in free_arguments:
            args.append(reduce_mod_pi(float(free_arguments[slot])))
        else:
            # line through the two distinct vertices; the nonzero pairs of a
            # double point are opposite, so either one gives the same angle
            other = next(p for p in pairs if abs(p) > 0.0)
            args.append(reduce_mod_pi(math.atan2(other.imag, other.real)))
    return TriangleVariable(
        basepoint=complex(basepoint),
        sides=(a, b, c),
        directions=dirs,
        arguments=(args[0], args[1], args[2]),
    )


def from_vertices(
    A: complex,
    B: complex,
    C: complex,
    directions: Sequence[float] | None = None,
    free_arguments: dict[str, AngleModPi] | None = None,
) -> TriangleVariable:
    """Triangle with vertices (A, B, C): a = C-B, b = A-C, c = B-A, basepoint B."""
    A, B, C = complex(A), complex(B), complex(C)
    return from_sides(
        C - B,
        A - C,
        B - A,
        basepoint=B,
        directions=directions,
        free_arguments=free_arguments,
    )


def classify(T: TriangleVariable, tol: float = DEFAULT_TOL) -> DegeneracyType:
    """Degeneracy stratum of the triangle.

    Three conditions are tested on the canonical (unit-scale) data:
    all side-vectors zero; some direction pair zero; all three lines
    parallel (equal arguments mod pi).  Their eight combinations name the
    strata.
    """
    tpl = max(abs(s) for s in T.sides) == 0.0
    dbl = any(abs(p) <= tol for p in T.direction_pairs())
    xa, xb, xc = T.arguments
    smp = (
        angle_dist(xa, xb) <= tol
        and angle_dist(xb, xc) <= tol
        and angle_dist(xa, xc) <= tol
    )
    table = {
        (False, False, False): DegeneracyType.NONDEGENERATE,
        (False, False, True): DegeneracyType.SIMPLE,
        (False, True, False): DegeneracyType.DOUBLE,
        (True, False, False): DegeneracyType.TRIPLE,
        (True, False, True): DegeneracyType.TRIPLED_SIMPLE,
        (False, True, True): DegeneracyType.DOUBLED_SIMPLE,
        (True, True, False): DegeneracyType.TRIPLED_DOUBLE,
        (True, True, True): DegeneracyType.TRIPLED_DOUBLED_SIMPLE,
    }
    return table[(tpl, dbl, smp)]


def signed_area2(T: TriangleVariable) -> float:
    """Twice the signed area of the vertex triple (A, B, C)."""
    a, b, _c = T.sides
    return (a.conjugate() * b).imag


def orientation(T: TriangleVariable, tol: float = DEFAULT_TOL) -> Orientation:
    scale = max(abs(s) for s in T.sides)
    if scale == 0.0:
        return Orientation.ZERO
    s2 = signed_area2(T)
    if s2 > tol * scale * scale:
        return Orientation.POSITIVE
    if s2 < -tol * scale * scale:
        return Orientation.NEGATIVE
    return Orientation.ZERO


def interior_angles(T: TriangleVariable) -> tuple[AngleModPi, AngleModPi, AngleModPi]:
    """(alpha, beta, gamma) = (xi_b - xi_c, xi_c - xi_a, xi_a - xi_b) mod pi."""
    xa, xb, xc = T.arguments
    return (xb - xc, xc - xa, xa - xb)


def validate(T: TriangleVariable, tol: float = DEFAULT_TOL) -> list[str]:
    """Return a list of invariant violations (empty when consistent)."""
    problems: list[str] = []
    a, b, c = T.sides
    scale = max(abs(a), abs(b), abs(c))
    if scale > 0.0:
        if abs(a + b + c) > tol * scale:
            problems.append("side-vectors do not sum to zero")
        expected = canonical_directions(
            (a.real, a.imag, b.real, b.imag, c.real, c.imag)
        )
        if any(abs(u - v) > tol for u, v in zip(expected, T.directions)):
            problems.append("direction sextuple inconsistent with side-vectors")
    s1 = T.directions[0] + T.directions[2] + T.directions[4]
    s2 = T.directions[1] + T.directions[3] + T.directions[5]
    if abs(s1) > tol or abs(s2) > tol:
        problems.append("direction triple violates a1+b1+c1=0 or a2+b2+c2=0")
    for slot, pair, xi in zip(SLOTS, T.direction_pairs(), T.arguments):
        if abs(pair) > tol:
            expected_xi = reduce_mod_pi(math.atan2(pair.imag, pair.real))
            if angle_dist(expected_xi, xi) > tol:
                problems.append(f"argument xi_{slot} inconsistent with direction")
    return problems


# ---------------------------------------------------------------------------
# D6 = S3 x Z2 symmetry


@dataclass(frozen=True)
class GroupElement:
    """An element of the order-12 label/orientation symmetry group.

    ``perm`` relabels the alphabetical slots: slot i of the image is slot
    perm[i] of the source.  ``flip`` reverses orientation (mirror image).
    """

    perm: tuple[int, int, int]
    flip: bool

    def __post_init__(self) -> None:
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError(f"not a permutation of (0, 1, 2): {self.perm}")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        # act(self * other, T) == act(self, act(other, T))
        perm = tuple(other.perm[self.perm[i]] for i in range(3))
        return GroupElement(perm, self.flip ^ other.flip)

    def inverse(self) -> "GroupElement":
        inv = [0, 0, 0]
        for i, p in enumerate(self.perm):
            inv[p] = i
        return GroupElement(tuple(inv), self.flip)

    @property
    def parity_odd(self) -> bool:
        p = self.perm
        inversions = sum(
            1 for i, j in itertools.combinations(range(3), 2) if p[i] > p[j]
        )
        return inversions % 2 == 1

    @staticmethod
    def identity() -> "GroupElement":
        return GroupElement((0, 1, 2), False)

    @staticmethod
    def all_elements() -> list["GroupElement"]:
        return [
            GroupElement(p, f)
            for p in itertools.permutations(range(3))
            for f in (False, True)
        ]


def act(g: GroupElement, T: TriangleVariable) -> TriangleVariable:
    """Apply a symmetry to a triangle.

    The permutation shuffles the alphabetical slots of sides, direction
    pairs, and arguments.  The flip takes the mirror image (complex
    conjugation), which negates arguments mod pi and reverses orientation.
    """
    sides = tuple(T.sides[g.perm[i]] for i in range(3))
    pairs = T.direction_pairs()
    pairs = tuple(pairs[g.perm[i]] for i in range(3))
    args = tuple(T.arguments[g.perm[i]] for i in range(3))
    basepoint = T.basepoint
    if g.flip:
        sides = tuple(s.conjugate() for s in sides)
        pairs = tuple(p.conjugate() for p in pairs)
        args = tuple(-x for x in args)
        basepoint = basepoint.conjugate()
    dirs = canonical_directions(
        (
            pairs[0].real,
            pairs[0].imag,
            pairs[1].real,
            pairs[1].imag,
            pairs[2].real,
            pairs[2].imag,
        )
    )
    return TriangleVariable(basepoint=basepoint, sides=sides, directions=dirs, arguments=args)


def vertex_angle(T: TriangleVariable, slot: int) -> AngleModPi:
    """Interior angle measured directly at a vertex (signed, mod pi).

    Independent oracle for :func:`interior_angles`; only defined when the
    two sides at the vertex are nonzero.
    """
    A, B, C = T.vertices
    corners = {0: (A, B, C), 1: (B, C, A), 2: (C, A, B)}
    P, Q, R = corners[slot]
    u, v = Q - P, R - P
    if abs(u) == 0.0 or abs(v) == 0.0:
        raise ValueError("vertex angle undefined at a coincident vertex")
    return reduce_mod_pi(math.atan2((u.conjugate() * v).imag, (u.conjugate() * v).real))
