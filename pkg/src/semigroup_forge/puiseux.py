"""Puiseux characteristics, the Puiseux/semigroup recursion and planarity.

A plane branch in the normal form ``x = t^m, y = sum a_k t^k`` has
characteristic ``[m; l1, ..., lg]``, read off its support by iterated gcd
sieving. The semigroup generators follow from the recursion

    b0 = l0,  b1 = l1,  b_i = l_i - l_{i-1} + n_{i-1} b_{i-1}

where ``n`` is the factor vector of the gcd chain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidCharacteristic, NotIncreasing, NotMinimalGenerators, NotPlanar, NotWellParameterized
from .semigroup import from_generators, in_generated, omega
from .series import ParamCurve


@dataclass(frozen=True)
class DivisorData:
    e_vec: tuple[int, ...]
    n_vec: tuple[int, ...]


def divisor_factor_vectors(b: Sequence[int]) -> DivisorData:
    b = list(b)
    if not b:
        raise NotIncreasing("empty list")
    if b[0] < 1 or any(x >= y for x, y in zip(b, b[1:])):
        raise NotIncreasing(f"{b} is not a strictly increasing list of positive integers")
    e = [b[0]]
    for x in b[1:]:
        e.append(math.gcd(e[-1], x))
    n = [e[i - 1] // e[i] for i in range(1, len(e))]
    return DivisorData(tuple(e), tuple(n))


@dataclass(frozen=True)
class Validity:
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


def validate_characteristic(lam: Sequence[int]) -> Validity:
    lam = list(lam)
    if lam == [1]:
        return Validity(True)
    if not lam:
        return Validity(False, "empty")
    if lam[0] <= 1:
        return Validity(False, "first entry must exceed 1")
    if any(x >= y for x, y in zip(lam, lam[1:])):
        return Validity(False, "not strictly increasing")
    e = divisor_factor_vectors(lam).e_vec
    if any(x <= y for x, y in zip(e, e[1:])):
        return Validity(False, "divisor vector not strictly decreasing")
    if e[-1] != 1:
        return Validity(False, f"divisor vector ends with {e[-1]}, not 1")
    return Validity(True)


@dataclass(frozen=True)
class PuiseuxCharacteristic:
    lam: tuple[int, ...]

    def __post_init__(self):
        v = validate_characteristic(self.lam)
        if not v:
            raise InvalidCharacteristic(f"{list(self.lam)}: {v.reason}")

    @property
    def multiplicity(self) -> int:
        return self.lam[0]

    @property
    def g(self) -> int:
        return len(self.lam) - 1

    def divisors(self) -> DivisorData:
        return divisor_factor_vectors(self.lam)

    def __str__(self):
        head, *rest = self.lam
        return f"[{head}; {', '.join(map(str, rest))}]" if rest else f"[{head}]"


def _as_characteristic(lam) -> PuiseuxCharacteristic:
    return lam if isinstance(lam, PuiseuxCharacteristic) else PuiseuxCharacteristic(tuple(lam))


def puiseux_to_generators(lam) -> tuple[int, ...]:
    lam = _as_characteristic(lam).lam
    n = divisor_factor_vectors(lam).n_vec
    b = list(lam[:2])
    for i in range(2, len(lam)):
        b.append(lam[i] - lam[i - 1] + n[i - 2] * b[i - 1])
        assert b[i] > lam[i]
    return tuple(b)


def generators_to_puiseux(b: Sequence[int]) -> PuiseuxCharacteristic:
    b = tuple(b)
    result = teissier_planarity(b)
    if not result.planar:
        raise NotPlanar(f"{list(b)} is not planar: {result.failed} fails at index {result.index}")
    n = result.n_vec
    lam = list(b[:2])
    for i in range(2, len(b)):
        lam.append(b[i] - n[i - 2] * b[i - 1] + lam[i - 1])
    return PuiseuxCharacteristic(tuple(lam))


@dataclass(frozen=True)
class Planarity:
    planar: bool
    e_vec: tuple[int, ...]
    n_vec: tuple[int, ...]
    failed: str | None = None  # "condition1" | "condition2" | "condition3"
    index: int | None = None
    detail: str | None = None

    def __bool__(self):
        return self.planar


def _check_minimal(b: tuple[int, ...]) -> None:
    S = from_generators(b, max_generator=None)
    if S.minimal_generators != b:
        raise NotMinimalGenerators(f"{list(b)} is not a minimal generating sequence (minimal: {list(S.minimal_generators)})")


def teissier_planarity(b: Sequence[int]) -> Planarity:
    """Decide whether ``<b>`` is the semigroup of a plane branch."""
    b = tuple(b)
    dd = divisor_factor_vectors(b)
    _check_minimal(b)
    e, n = dd.e_vec, dd.n_vec
    g = len(b) - 1

    def fail(cond, i, detail):
        return Planarity(False, e, n, cond, i, detail)

    for i in range(1, g + 1):
        if e[i] >= e[i - 1]:
            return fail("condition1", i, f"e_{i} = {e[i]} does not drop below e_{i-1} = {e[i-1]}")
    if e[-1] != 1:
        return fail("condition1", g, f"divisor vector ends with {e[-1]}")
    for i in range(1, g + 1):
        if not in_generated(n[i - 1] * b[i], b[:i]):
            return fail("condition2", i, f"n_{i} b_{i} = {n[i-1] * b[i]} not in <{', '.join(map(str, b[:i]))}>")
    for i in range(1, g):
        if not n[i - 1] * b[i] < b[i + 1]:
            return fail("condition3", i, f"n_{i} b_{i} = {n[i-1] * b[i]} >= b_{i+1} = {b[i+1]}")
    return Planarity(True, e, n)


def planar_e_bound(b: Sequence[int]) -> bool:
    """Necessary condition for planarity: ``len(b) <= 1 + Omega(b0)``."""
    return len(b) <= 1 + omega(b[0])


@dataclass(frozen=True)
class TeissierBound:
    d: int
    satisfied: tuple[int, ...]
    verified: bool = False


def teissier_upper_bound(b: Sequence[int]) -> TeissierBound | None:
    """Advisory upper bound on the minimal embedding dimension.

    Requires ``n_i b_i in <b_0..b_{i-1}>`` for every ``i``; then ``d`` is
    chosen so that ``g + 1 - d`` of the indices satisfy ``n_i b_i < b_{i+1}``.
    Position of those indices is not constrained.
    """
    b = tuple(b)
    _check_minimal(b)
    n = divisor_factor_vectors(b).n_vec
    g = len(b) - 1
    for i in range(1, g + 1):
        if not in_generated(n[i - 1] * b[i], b[:i]):
            return None
    satisfied = tuple(i for i in range(1, g) if n[i - 1] * b[i] < b[i + 1])
    return TeissierBound(g + 1 - len(satisfied), satisfied)


def m_sieve(m: int, A: Iterable[int]) -> set[int]:
    return {a for a in A if a % m}


def characteristic_from_support(m: int, A: Iterable[int]) -> PuiseuxCharacteristic:
    """Characteristic of ``x = t^m, y = sum_{k in A} a_k t^k`` with all ``a_k != 0``."""
    if m == 1:
        return PuiseuxCharacteristic((1,))
    lam = [m]
    e = m
    rest = m_sieve(m, A)
    while e > 1:
        if not rest:
            raise NotWellParameterized(f"support exhausted with gcd {e}", e)
        nxt = min(rest)
        lam.append(nxt)
        e = math.gcd(e, nxt)
        rest = m_sieve(e, rest)
    return PuiseuxCharacteristic(tuple(lam))


def canonical_plane_curve(lam) -> ParamCurve:
    """``x = t^l0, y = t^l1 + ... + t^lg``."""
    lam = _as_characteristic(lam).lam
    return ParamCurve.from_exponent_sums([lam[0]], lam[1:])
