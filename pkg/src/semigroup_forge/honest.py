"""Minimal ("honest") embedding dimension of a numerical semigroup.

Exact for multiplicity at most 4; for multiplicity 4 and embedding
dimension 4 the decision is the max/min criterion on the Apery point, and
every positive answer comes with a space curve checked by the value oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NotInterior, PreconditionFailed, WitnessVerificationFailed, WrongFamily
from .kunz import Face, KunzPoint, classify_face, kunz_point_of
from .puiseux import planar_e_bound, teissier_planarity, teissier_upper_bound
from .semigroup import NumericalSemigroup, from_generators
from .series import DEFAULT_TRUNC_MAX, MonomialPolynomial, ParamCurve, cached_semigroup_of_curve, pullback


class Method(str, enum.Enum):
    SMOOTH = "Smooth"
    PLANAR_TEST = "PlanarTest"
    THEOREM1 = "Theorem1"
    FACE_CLASS = "FaceClass"
    TEISSIER_BOUND = "TeissierBound"
    E_CHAIN = "EChain"


@dataclass(frozen=True)
class Witness:
    curve: ParamCurve
    certificate: MonomialPolynomial
    target: int

    def to_json(self) -> dict:
        return {
            "curve": str(self.curve),
            "certificate": self.certificate.format(self.curve.names),
            "order": self.target,
        }


@dataclass(frozen=True)
class MeVerdict:
    lower: int
    upper: int
    exact: bool
    method: Method
    witness: Witness | None = None

    def __post_init__(self):
        if not 1 <= self.lower <= self.upper:
            raise ValueError(f"bad bounds {self.lower}..{self.upper}")
        if self.exact and self.lower != self.upper:
            raise ValueError("an exact verdict needs lower == upper")

    @property
    def me(self) -> int | None:
        return self.lower if self.exact else None

    def to_json(self) -> dict:
        return {
            "me": self.me,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "method": self.method.value,
            "witness": self.witness.to_json() if self.witness else None,
        }


def _theorem1_condition(x1: int, x2: int, x3: int) -> bool:
    hi, lo = max(x1, x2, x3), min(x1, x2, x3)
    return hi != x2 and hi > 2 * lo


def theorem1_test(p: KunzPoint) -> bool:
    """For an interior point: is the minimal embedding dimension 3 (rather than 4)?"""
    if classify_face(p).face is not Face.INTERIOR:
        raise NotInterior(f"{p} is not in the interior of the Kunz cone")
    return _theorem1_condition(*p.coords)


_ORDERINGS = {
    (1, 2, 3): 1,
    (2, 1, 3): 2,
    (1, 3, 2): 3,
    (3, 1, 2): 4,
    (2, 3, 1): 5,
    (3, 2, 1): 6,
}


def ordering_case(p: KunzPoint) -> int:
    """Which of the six strict orderings of (x1, x2, x3) holds, numbered 1..6."""
    ranked = tuple(i for _, i in sorted(zip(p.coords, (1, 2, 3))))
    return _ORDERINGS[ranked]


def _sorted_apery(S: NumericalSemigroup) -> tuple[KunzPoint, int, int, int]:
    p = kunz_point_of(S)
    n1, n2, n3 = sorted(p.coords)
    return p, n1, n2, n3


def witness_curve(S: NumericalSemigroup, verify: bool = True, trunc_max: int = DEFAULT_TRUNC_MAX) -> Witness:
    """A space curve realizing an (m=4, e=4, me=3) semigroup, with its certificate.

    With ``n1 < n2 < n3`` the sorted Apery values and ``s = n3 - 2 n1``, the
    curve is ``(t^4, t^n1 + t^(n1+s), t^n2)``. The certificate ``y^2 - x^k``
    (``2 n1 = 0 mod 4``) or ``y^2 - x^k z`` pulls back to order ``n3``.
    """
    if S.multiplicity != 4 or S.embedding_dimension != 4:
        raise PreconditionFailed(f"{S} must have multiplicity 4 and embedding dimension 4")
    p, n1, n2, n3 = _sorted_apery(S)
    if not theorem1_test(p):
        raise PreconditionFailed(f"{S} fails the criterion (n3 = {n3}, 2 n1 = {2 * n1}, max = x2: {n3 == p.x2})")
    s = n3 - 2 * n1
    if not 1 <= s < n2 - n1:
        raise PreconditionFailed(f"s = {s} outside [1, {n2 - n1})")

    curve = ParamCurve.from_exponent_sums([4], [n1, n1 + s], [n2])
    x, y, z = MonomialPolynomial.variables(3)
    if (2 * n1) % 4 == 0:
        certificate = y**2 - x ** (2 * n1 // 4)
    else:
        certificate = y**2 - x ** ((2 * n1 - n2) // 4) * z
    w = Witness(curve, certificate, n3)
    if verify:
        _verify(w, S, trunc_max)
    return w


def _verify(w: Witness, S: NumericalSemigroup, trunc_max: int) -> None:
    got = pullback(w.certificate, w.curve, w.target + 1).order()
    if got != w.target:
        raise WitnessVerificationFailed(f"certificate order {got}, expected {w.target}")
    T = cached_semigroup_of_curve(w.curve, trunc_max)
    if T != S:
        raise WitnessVerificationFailed(f"witness curve has semigroup {T}, expected {S}")


def minimal_embedding_dimension(S: NumericalSemigroup, trunc_max: int = DEFAULT_TRUNC_MAX) -> MeVerdict:
    if S.is_whole():
        return MeVerdict(1, 1, True, Method.SMOOTH)
    e, m = S.embedding_dimension, S.multiplicity
    b = S.minimal_generators
    if e == 2:
        return MeVerdict(2, 2, True, Method.PLANAR_TEST)
    planar = planar_e_bound(b) and teissier_planarity(b).planar
    if planar:
        return MeVerdict(2, 2, True, Method.PLANAR_TEST)
    if e == 3:
        return MeVerdict(3, 3, True, Method.PLANAR_TEST)
    if m == 4:
        if theorem1_test(kunz_point_of(S)):
            return MeVerdict(3, 3, True, Method.THEOREM1, witness_curve(S, trunc_max=trunc_max))
        return MeVerdict(4, 4, True, Method.THEOREM1)
    bound = teissier_upper_bound(b)
    if bound is not None and bound.d < e:
        return MeVerdict(3, max(3, bound.d), False, Method.TEISSIER_BOUND)
    return MeVerdict(3, e, False, Method.E_CHAIN)


def four_six_family_check(S: NumericalSemigroup) -> bool:
    """For ``S = <4, 6, n2, n3>`` with e = 4: does ``me(S) = 3`` force ``n3 = n2 + 2``?"""
    gens = S.minimal_generators
    if len(gens) != 4 or gens[:2] != (4, 6) or gens[2] % 2 == 0 or gens[3] % 2 == 0:
        raise WrongFamily(f"{S} is not of the form <4, 6, n2, n3> with n2 < n3 odd")
    n2, n3 = gens[2], gens[3]
    return minimal_embedding_dimension(S).me != 3 or n3 == n2 + 2


def verdict_for_generators(gens, trunc_max: int = DEFAULT_TRUNC_MAX) -> MeVerdict:
    return minimal_embedding_dimension(from_generators(gens), trunc_max)
