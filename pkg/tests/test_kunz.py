import math

import pytest

from oracles import brute_members, brute_minimal
from semigroup_forge import (
    Face,
    KunzPoint,
    classify_face,
    embedding_dim_from_face,
    enumerate_points,
    from_generators,
    kite_projection,
    kunz_point_of,
    semigroup_of_point,
)
from semigroup_forge.errors import InvalidKunzPoint, OutsideCone, WrongMultiplicity
from semigroup_forge.kunz import KITE_VERTICES


@pytest.mark.parametrize(
    "gens,point",
    [([4, 6, 13], (13, 6, 19)), ([4, 6, 13, 15], (13, 6, 15)), ([4, 5, 11], (5, 10, 11))],
)
def test_kunz_point_of(gens, point):
    assert kunz_point_of(from_generators(gens)).coords == point


def test_wrong_multiplicity():
    with pytest.raises(WrongMultiplicity):
        kunz_point_of(from_generators([3, 5]))


@pytest.mark.parametrize("coords", [(4, 6, 7), (5, 7, 7), (9, 6, 3), (5, 6, 8)])
def test_invalid_point(coords):
    with pytest.raises(InvalidKunzPoint):
        KunzPoint(*coords)


@pytest.mark.parametrize(
    "point,minimal",
    [((13, 6, 15), (4, 6, 13, 15)), ((13, 6, 19), (4, 6, 13)), ((5, 10, 11), (4, 5, 11)), ((5, 6, 11), (4, 5, 6))],
)
def test_semigroup_of_point(point, minimal):
    assert semigroup_of_point(KunzPoint(*point)).minimal_generators == minimal


def test_classify_examples():
    assert classify_face(KunzPoint(13, 6, 15)).face is Face.INTERIOR
    fc = classify_face(KunzPoint(13, 6, 19))
    assert fc.face is Face.FACET and fc.binding == ("x1+x2>=x3",)
    fc = classify_face(KunzPoint(5, 10, 11))
    assert fc.face is Face.FACET and fc.binding == ("2x1>=x2",)
    fc = classify_face(KunzPoint(5, 10, 15))
    assert fc.face is Face.RAY and set(fc.binding) == {"x1+x2>=x3", "2x1>=x2"}
    fc = classify_face(KunzPoint(5, 6, 15))
    assert fc.face is Face.OUTSIDE and fc.violated == ("x1+x2>=x3",)


def test_embedding_dim_from_face():
    assert embedding_dim_from_face(KunzPoint(13, 6, 15)) == 4
    assert embedding_dim_from_face(KunzPoint(13, 6, 19)) == 3
    assert embedding_dim_from_face(KunzPoint(5, 6, 11)) == 3
    assert embedding_dim_from_face(KunzPoint(21, 14, 7)) == 2
    with pytest.raises(OutsideCone):
        embedding_dim_from_face(KunzPoint(5, 6, 15))


def _brute_face(p):
    x1, x2, x3 = p
    slacks = [x1 + x2 - x3, x3 + x2 - x1, 2 * x1 - x2, 2 * x3 - x2]
    if min(slacks) < 0:
        return "outside"
    return {0: "interior", 1: "facet", 2: "ray"}[slacks.count(0)]


def test_enumerate_small_bounds():
    assert enumerate_points(5) == []
    pts = enumerate_points(7)
    assert [p.coords for p, _ in pts] == [(5, 6, 7)] and pts[0][1].face is Face.INTERIOR
    pts = enumerate_points(11)
    assert len(pts) == 8
    faces = [fc.face for _, fc in pts]
    assert faces.count(Face.INTERIOR) == 5 and faces.count(Face.RAY) == 0
    assert [p.coords for p, fc in pts if fc.face is Face.FACET] == [(5, 6, 11), (5, 10, 7), (5, 10, 11)]


@pytest.mark.parametrize("bound", [11, 21, 33])
def test_enumeration_against_brute_grid(bound):
    grid = [
        (x1, x2, x3)
        for x1 in range(5, bound + 1, 4)
        for x2 in range(6, bound + 1, 4)
        for x3 in range(7, bound + 1, 4)
    ]
    expected = [(p, _brute_face(p)) for p in grid if _brute_face(p) != "outside"]
    got = [(p.coords, fc.face.value) for p, fc in enumerate_points(bound)]
    assert got == expected


def test_bijection_and_round_trip():
    bound = 29
    pts = enumerate_points(bound)
    tables = set()
    for p, fc in pts:
        S = semigroup_of_point(p)
        assert kunz_point_of(S) == p
        assert embedding_dim_from_face(p) == S.embedding_dimension
        assert list(S.minimal_generators) == brute_minimal([4, *p.coords])
        tables.add(S.minimal_generators)
    assert len(tables) == len(pts)


def test_exclusion_rule():
    # x3 >= x1 + x2 forces x3 into <4, x1, x2>
    for x1 in range(5, 30, 4):
        for x2 in range(6, 30, 4):
            for x3 in range(x1 + x2, x1 + x2 + 20, 4):
                assert x3 in brute_members([4, x1, x2], x3)


def test_kite_projection_exact():
    u, v = kite_projection((1, 1, 1))
    assert (u.numerator, v.numerator) == (0, 0)
    u, v = kite_projection(KunzPoint(5, 6, 7))
    assert u == (-1, 18, 2) and v == (0, 1, 6)
    u, v = kite_projection(KunzPoint(13, 6, 19))
    assert float(u) < 0
    assert u == (-3, 38, 2) and v == (-5, 57, 6)


@pytest.mark.parametrize("p", [(5, 6, 7), (13, 6, 19), (9, 14, 19), (1, 2, 3)])
def test_kite_projection_matches_float_formula(p):
    s = sum(p)
    a, b, c = (x / s for x in p)
    u, v = kite_projection(p)
    assert math.isclose(float(u), (a - c) / math.sqrt(2), abs_tol=1e-12)
    assert math.isclose(float(v), (2 * b - a - c) / math.sqrt(6), abs_tol=1e-12)


def test_kite_vertices_are_cone_rays():
    from semigroup_forge.kunz import INEQUALITIES

    for v in KITE_VERTICES:
        slacks = [sum(a * x for a, x in zip(n, v)) for n in INEQUALITIES.values()]
        assert min(slacks) >= 0 and slacks.count(0) == 2
