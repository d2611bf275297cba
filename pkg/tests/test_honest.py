import random

import pytest
from hypothesis import given, settings, strategies as st

from semigroup_forge import (
    KunzPoint,
    Method,
    ParamCurve,
    enumerate_points,
    four_six_family_check,
    from_generators,
    minimal_embedding_dimension,
    ordering_case,
    pullback,
    semigroup_of_curve,
    semigroup_of_point,
    theorem1_test,
    witness_curve,
)
from semigroup_forge.errors import NotInterior, PreconditionFailed, WrongFamily
from semigroup_forge.honest import MeVerdict, _theorem1_condition
from semigroup_forge.kunz import Face


@pytest.mark.parametrize(
    "point,expected",
    [((13, 6, 15), True), ((9, 14, 19), True), ((9, 10, 7), False), ((5, 6, 7), False), ((25, 18, 11), True)],
)
def test_theorem1_examples(point, expected):
    assert theorem1_test(KunzPoint(*point)) is expected


def test_theorem1_requires_interior():
    with pytest.raises(NotInterior):
        theorem1_test(KunzPoint(13, 6, 19))


@pytest.mark.parametrize("point,case", [((9, 10, 7), 4), ((13, 6, 15), 2), ((9, 14, 19), 1), ((25, 18, 11), 6)])
def test_ordering_case(point, case):
    assert ordering_case(KunzPoint(*point)) == case


@pytest.mark.parametrize(
    "gens,curve,cert,terms",
    [
        ([4, 6, 13, 15], "x = t^4; y = t^6 + t^9; z = t^13", "y^2 - x^3", {15: 2, 18: 1}),
        ([4, 9, 14, 19], "x = t^4; y = t^9 + t^10; z = t^14", "y^2 - x*z", {19: 2, 20: 1}),
    ],
)
def test_witness_examples(gens, curve, cert, terms):
    w = witness_curve(from_generators(gens))
    assert str(w.curve) == curve
    assert w.certificate.format() == cert
    assert pullback(w.certificate, w.curve, 30).terms() == terms
    assert w.to_json() == {"curve": curve, "certificate": cert, "order": max(gens)}


@pytest.mark.parametrize("gens", [[4, 5, 6, 7], [4, 7, 9, 10], [4, 6, 13], [3, 4, 5]])
def test_witness_preconditions(gens):
    with pytest.raises(PreconditionFailed):
        witness_curve(from_generators(gens))


@pytest.mark.parametrize(
    "gens,me,method",
    [
        ([1], 1, Method.SMOOTH),
        ([2, 7], 2, Method.PLANAR_TEST),
        ([4, 6, 13], 2, Method.PLANAR_TEST),
        ([8, 20, 42, 89], 2, Method.PLANAR_TEST),
        ([9, 21, 22], 3, Method.PLANAR_TEST),
        ([3, 4, 5], 3, Method.PLANAR_TEST),
        ([4, 7, 9, 10], 4, Method.THEOREM1),
        ([4, 6, 13, 15], 3, Method.THEOREM1),
    ],
)
def test_me_examples(gens, me, method):
    v = minimal_embedding_dimension(from_generators(gens))
    assert v.exact and v.me == me and v.method is method
    assert (v.witness is not None) == (method is Method.THEOREM1 and me == 3)


def test_me_inexact_beyond_four():
    v = minimal_embedding_dimension(from_generators([5, 6, 7, 8, 9]))
    assert not v.exact and v.me is None
    assert v.lower == 3 and v.upper <= 5
    assert v.to_json()["me"] is None


def test_verdict_validation():
    with pytest.raises(ValueError):
        MeVerdict(3, 2, False, Method.E_CHAIN)
    with pytest.raises(ValueError):
        MeVerdict(2, 3, True, Method.E_CHAIN)


@pytest.mark.parametrize(
    "gens,ok",
    [((4, 6, 13, 15), True), ((4, 6, 9, 11), True), ((4, 6, 11, 13), True)],
)
def test_four_six_family(gens, ok):
    assert four_six_family_check(from_generators(gens)) is ok


def test_four_six_wrong_family():
    with pytest.raises(WrongFamily):
        four_six_family_check(from_generators([4, 6, 13]))
    with pytest.raises(WrongFamily):
        four_six_family_check(from_generators([4, 7, 9, 10]))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(2, 14), min_size=1, max_size=4).filter(lambda g: __import__("math").gcd(*g) == 1))
def test_me_chain(gens):
    S = from_generators(gens)
    v = minimal_embedding_dimension(S, trunc_max=8192)
    assert 1 <= v.lower <= v.upper <= S.embedding_dimension <= S.multiplicity
    if S.multiplicity <= 4:
        assert v.exact


@settings(max_examples=200)
@given(st.integers(1, 200), st.integers(1, 200), st.integers(1, 200))
def test_condition_symmetric_in_x1_x3(a, b, c):
    assert _theorem1_condition(a, b, c) == _theorem1_condition(c, b, a)


def test_cases_three_and_four_always_fail():
    for p, fc in enumerate_points(41):
        if fc.face is Face.INTERIOR and ordering_case(p) in (3, 4):
            assert not theorem1_test(p)


def _negative_points(bound):
    return [p for p, fc in enumerate_points(bound) if fc.face is Face.INTERIOR and not theorem1_test(p)]


def test_normal_form_samples_miss_negative_points():
    # curves x = t^4, y = t^n1 + a t^(n1+s) + ..., z = t^n2 + ...; none should realize S
    rng = random.Random(20240611)
    for p in _negative_points(21):
        S = semigroup_of_point(p)
        n1, n2, n3 = sorted(p.coords)
        for _ in range(6):
            y = {n1: 1}
            for k in rng.sample(range(n1 + 1, n3 + 8), 3):
                y[k] = rng.randint(-3, 3)
            z = {n2: 1}
            for k in rng.sample(range(n2 + 1, n3 + 8), 2):
                z[k] = rng.randint(-3, 3)
            curve = ParamCurve.from_polys([{4: 1}, y, z])
            assert semigroup_of_curve(curve, trunc_max=8192) != S
