"""Multiplicity-4 semigroups as Apery points in the Kunz cone.

An Apery point ``(x1, x2, x3)`` has ``x_i > 4`` and ``x_i = i mod 4``; its
semigroup is ``<4, x1, x2, x3>``. The cone is cut out by

    x1 + x2 >= x3,  x3 + x2 >= x1,  2 x1 >= x2,  2 x3 >= x2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import InvalidKunzPoint, OutsideCone, WrongMultiplicity
from .semigroup import NumericalSemigroup, from_generators

# name -> normal vector a with the inequality a . x >= 0
INEQUALITIES: dict[str, tuple[int, int, int]] = {
    "x1+x2>=x3": (1, 1, -1),
    "x3+x2>=x1": (-1, 1, 1),
    "2x1>=x2": (2, -1, 0),
    "2x3>=x2": (0, -1, 2),
}


@dataclass(frozen=True, order=True)
class KunzPoint:
    x1: int
    x2: int
    x3: int

    def __post_init__(self):
        for i, x in enumerate(self.coords, start=1):
            if x <= 4 or x % 4 != i:
                raise InvalidKunzPoint(f"x{i}={x} must exceed 4 and be congruent to {i} mod 4")

    @property
    def coords(self) -> tuple[int, int, int]:
        return (self.x1, self.x2, self.x3)

    def __str__(self):
        return f"({self.x1},{self.x2},{self.x3})"


class Face(enum.Enum):
    INTERIOR = "interior"
    FACET = "facet"
    RAY = "ray"
    OUTSIDE = "outside"


class FaceClass(NamedTuple):
    face: Face
    binding: tuple[str, ...] = ()
    violated: tuple[str, ...] = ()


def _rank(rows) -> int:
    m = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def classify_face(p: KunzPoint) -> FaceClass:
    binding, violated = [], []
    for name, a in INEQUALITIES.items():
        slack = sum(ai * xi for ai, xi in zip(a, p.coords))
        if slack < 0:
            violated.append(name)
        elif slack == 0:
            binding.append(name)
    if violated:
        return FaceClass(Face.OUTSIDE, tuple(binding), tuple(violated))
    if not binding:
        return FaceClass(Face.INTERIOR)
    rank = _rank([INEQUALITIES[b] for b in binding])
    face = Face.FACET if rank == 1 else Face.RAY
    return FaceClass(face, tuple(binding))


def kunz_point_of(S: NumericalSemigroup) -> KunzPoint:
    if S.multiplicity != 4:
        raise WrongMultiplicity(f"multiplicity is {S.multiplicity}, expected 4")
    _, x1, x2, x3 = S.apery_set(4)
    return KunzPoint(x1, x2, x3)


def semigroup_of_point(p: KunzPoint) -> NumericalSemigroup:
    return from_generators((4,) + p.coords)


_FACE_TO_E = {Face.INTERIOR: 4, Face.FACET: 3, Face.RAY: 2}


def embedding_dim_from_face(p: KunzPoint) -> int:
    fc = classify_face(p)
    if fc.face is Face.OUTSIDE:
        raise OutsideCone(f"{p} violates {', '.join(fc.violated)}")
    return _FACE_TO_E[fc.face]


def enumerate_points(bound: int) -> list[tuple[KunzPoint, FaceClass]]:
    """All Apery points in the cone with every coordinate <= bound, lexicographic."""
    out = []
    for x1 in range(5, bound + 1, 4):
        for x2 in range(6, bound + 1, 4):
            for x3 in range(7, bound + 1, 4):
                p = KunzPoint(x1, x2, x3)
                fc = classify_face(p)
                if fc.face is not Face.OUTSIDE:
                    out.append((p, fc))
    return out


class Scaled(NamedTuple):
    """The real number ``numerator / denominator * sqrt(radicand)``."""

    numerator: int
    denominator: int
    radicand: int

    @classmethod
    def of(cls, q: Fraction, radicand: int) -> "Scaled":
        q = Fraction(q)
        return cls(q.numerator, q.denominator, radicand)

    def __float__(self):
        return self.numerator / self.denominator * self.radicand**0.5


def kite_projection(coords) -> tuple[Scaled, Scaled]:
    """Project onto the slice ``x1+x2+x3 = 1`` in an orthonormal basis.

    ``u = (a - c)/sqrt 2`` and ``v = (2b - a - c)/sqrt 6`` for the normalized
    point ``(a, b, c)``; both are returned as exact rationals times a root,
    i.e. ``u = (a - c)/2 * sqrt 2`` and ``v = (2b - a - c)/6 * sqrt 6``.
    """
    if isinstance(coords, KunzPoint):
        coords = coords.coords
    total = sum(coords)
    a, b, c = (Fraction(x, total) for x in coords)
    return Scaled.of((a - c) / 2, 2), Scaled.of((2 * b - a - c) / 6, 6)


# extreme rays of the cone, in kite order: left, top, right, bottom
KITE_VERTICES: tuple[tuple[int, int, int], ...] = ((1, 2, 3), (1, 2, 1), (3, 2, 1), (1, 0, 1))
