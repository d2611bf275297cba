"""Exact truncated power series and the value semigroup of a curve.

Curves are tuples of exact polynomials in ``t`` with rational coefficients.
The value semigroup is computed as the set of pivot columns of the row
echelon form of all pulled-back monomials, truncated at ``t^N``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import Divergence, NotWellParameterized
from .semigroup import NumericalSemigroup, from_generators

INF = math.inf
DEFAULT_TRUNC_MAX = 4096


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of ``t^0 .. t^trunc``; anything beyond is unknown."""

    trunc: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("coefficient vector must have trunc + 1 entries")

    @classmethod
    def from_terms(cls, terms: Mapping[int, object] | Iterable[tuple[int, object]], trunc: int) -> "TruncatedSeries":
        if isinstance(terms, Mapping):
            terms = terms.items()
        coeffs = [Fraction(0)] * (trunc + 1)
        for k, c in terms:
            if k < 0:
                raise ValueError("negative exponent")
            if k <= trunc:
                coeffs[k] += Fraction(c)
        return cls(trunc, tuple(coeffs))

    @classmethod
    def zero(cls, trunc: int) -> "TruncatedSeries":
        return cls(trunc, (Fraction(0),) * (trunc + 1))

    def order(self):
        """Least exponent with a nonzero coefficient, or ``INF`` if zero up to ``trunc``."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return INF

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def terms(self) -> dict[int, Fraction]:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def _align(self, other: "TruncatedSeries"):
        n = min(self.trunc, other.trunc)
        return n, self.coeffs[: n + 1], other.coeffs[: n + 1]

    def __add__(self, other):
        n, a, b = self._align(other)
        return TruncatedSeries(n, tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other):
        n, a, b = self._align(other)
        return TruncatedSeries(n, tuple(x - y for x, y in zip(a, b)))

    def __neg__(self):
        return TruncatedSeries(self.trunc, tuple(-x for x in self.coeffs))

    def scale(self, c) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries(self.trunc, tuple(c * x for x in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        n, a, b = self._align(other)
        out = [Fraction(0)] * (n + 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += x * b[j]
        return TruncatedSeries(n, tuple(out))

    __rmul__ = scale

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = TruncatedSeries.from_terms({0: 1}, self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self):
        return format_poly(self.terms()) + f" + O(t^{self.trunc + 1})"


def format_poly(terms: Mapping[int, Fraction], var: str = "t") -> str:
    if not terms:
        return "0"
    parts = []
    for k in sorted(terms):
        c = Fraction(terms[k])
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if k == 0:
            body = str(c)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if c == 1 else f"{c}*{mono}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _default_names(d: int) -> tuple[str, ...]:
    if d <= 4:
        return ("x", "y", "z", "w")[:d]
    return tuple(f"x{i}" for i in range(1, d + 1))


@dataclass(frozen=True)
class ParamCurve:
    """A germ ``t -> (x_1(t), ..., x_d(t))`` with exact polynomial coordinates.

    Each coordinate is stored as a sorted tuple of ``(exponent, coefficient)``
    pairs with nonzero coefficients.
    """

    coords: tuple[tuple[tuple[int, Fraction], ...], ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.coords:
            raise ValueError("a curve needs at least one coordinate")
        if not self.names:
            object.__setattr__(self, "names", _default_names(len(self.coords)))
        if len(self.names) != len(self.coords):
            raise ValueError("one name per coordinate")
        for name, poly in zip(self.names, self.coords):
            if any(k == 0 for k, _ in poly):
                raise ValueError(f"coordinate {name} has a nonzero constant term")
        if all(not poly for poly in self.coords):
            raise ValueError("at least one coordinate must be nonzero")

    @classmethod
    def from_polys(cls, polys: Sequence[Mapping[int, object]], names: Sequence[str] = ()) -> "ParamCurve":
        coords = []
        for poly in polys:
            acc: dict[int, Fraction] = {}
            for k, c in poly.items():
                acc[int(k)] = acc.get(int(k), Fraction(0)) + Fraction(c)
            coords.append(tuple(sorted((k, c) for k, c in acc.items() if c)))
        return cls(tuple(coords), tuple(names))

    @classmethod
    def monomial(cls, *exponents: int) -> "ParamCurve":
        """The curve ``(t^n1, ..., t^nd)``."""
        return cls.from_polys([{n: 1} for n in exponents])

    @classmethod
    def from_exponent_sums(cls, *supports: Iterable[int]) -> "ParamCurve":
        """Each coordinate is a sum of ``t^k`` with coefficient one."""
        return cls.from_polys([{k: 1 for k in supp} for supp in supports])

    @property
    def dim(self) -> int:
        return len(self.coords)

    def orders(self) -> tuple:
        return tuple(poly[0][0] if poly else INF for poly in self.coords)

    def degree(self) -> int:
        return max(poly[-1][0] for poly in self.coords if poly)

    def support_gcd(self) -> int:
        return math.gcd(*(k for poly in self.coords for k, _ in poly))

    def series(self, i: int, trunc: int) -> TruncatedSeries:
        return TruncatedSeries.from_terms(self.coords[i], trunc)

    def __str__(self):
        return "; ".join(f"{name} = {format_poly(dict(poly))}" for name, poly in zip(self.names, self.coords))


class MonomialPolynomial:
    """A polynomial in ``d`` variables, stored as ``{exponent vector: coefficient}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, terms: Mapping[Sequence[int], object], nvars: int | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        for alpha, c in terms.items():
            alpha = tuple(int(a) for a in alpha)
            c = Fraction(c)
            if c:
                clean[alpha] = clean.get(alpha, Fraction(0)) + c
        clean = {a: c for a, c in clean.items() if c}
        if nvars is None:
            nvars = len(next(iter(terms))) if terms else 0
        if any(len(a) != nvars or min(a, default=0) < 0 for a in clean):
            raise ValueError("exponent vectors must be nonnegative and of length nvars")
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def variables(cls, d: int) -> tuple["MonomialPolynomial", ...]:
        return tuple(cls({tuple(int(i == j) for j in range(d)): 1}, d) for i in range(d))

    @classmethod
    def constant(cls, c, d: int) -> "MonomialPolynomial":
        return cls({(0,) * d: c}, d)

    def _coerce(self, other):
        if isinstance(other, MonomialPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MonomialPolynomial.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms.get(a, Fraction(0)) + c
        return MonomialPolynomial(terms, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return MonomialPolynomial({a: -c for a, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for a, c in self.terms.items():
            for b, e in other.terms.items():
                k = tuple(x + y for x, y in zip(a, b))
                terms[k] = terms.get(k, Fraction(0)) + c * e
        return MonomialPolynomial(terms, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = MonomialPolynomial.constant(1, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        return isinstance(other, MonomialPolynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or _default_names(self.nvars)
        if not self.terms:
            return "0"
        parts = []
        # positive terms first: y^2 - x^3 rather than -x^3 + y^2
        for alpha in sorted(self.terms, key=lambda a: (self.terms[a] < 0, tuple(-x for x in a))):
            c = self.terms[alpha]
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, alpha) if e)
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if not mono:
                body = str(c)
            else:
                body = mono if c == 1 else f"{c}*{mono}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MonomialPolynomial({self.format()})"


def pullback(p: MonomialPolynomial, c: ParamCurve, trunc: int) -> TruncatedSeries:
    """``p o c`` expanded exactly up to ``t^trunc``."""
    if p.nvars != c.dim:
        raise ValueError(f"polynomial has {p.nvars} variables, curve has {c.dim} coordinates")
    if trunc < 0:
        raise ValueError("truncation must be nonnegative")
    coord_series = [c.series(i, trunc) for i in range(c.dim)]
    one = TruncatedSeries.from_terms({0: 1}, trunc)
    powers: list[dict[int, TruncatedSeries]] = [{0: one} for _ in range(c.dim)]

    def power(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = power(i, k - 1) * coord_series[i]
        return cache[k]

    total = TruncatedSeries.zero(trunc)
    for alpha, coeff in p.terms.items():
        term = one
        for i, k in enumerate(alpha):
            if k:
                term = term * power(i, k)
        total = total + term.scale(coeff)
    return total


def order(f: TruncatedSeries):
    return f.order()


# --- value semigroup -------------------------------------------------------


def _integer_coords(c: ParamCurve) -> list[list[tuple[int, int]]]:
    # scaling a coordinate by a nonzero constant rescales each monomial row,
    # which leaves the row space (hence the pivot set) unchanged
    out = []
    for poly in c.coords:
        den = math.lcm(*(Fraction(a).denominator for _, a in poly)) if poly else 1
        out.append([(k, int(a * den)) for k, a in poly])
    return out


def _monomial_rows(coords, weights, trunc):
    """Yield ``(weighted order, dense integer row)`` for every monomial of order <= trunc."""
    d = len(coords)
    row0 = [0] * (trunc + 1)
    row0[0] = 1

    def times(row, poly, lo):
        out = [0] * (trunc + 1)
        for j in range(lo, trunc + 1):
            a = row[j]
            if a:
                for k, b in poly:
                    if j + k > trunc:
                        break
                    out[j + k] += a * b
        return out

    def rec(i, row, w):
        if i == d:
            yield w, row
            return
        yield from rec(i + 1, row, w)
        if weights[i] is INF:
            return
        while True:
            w += weights[i]
            if w > trunc:
                return
            row = times(row, coords[i], w - weights[i])
            yield from rec(i + 1, row, w)

    yield from rec(0, row0, 0)


def _pivot_set(rows, trunc) -> set[int]:
    """Pivot columns of the row space, by leading-term elimination over the integers."""
    basis: dict[int, list[int]] = {}
    # every column in [top, trunc] is a pivot; rows reduced into it add nothing
    top = trunc + 1
    for w, row in sorted(rows, key=lambda item: -item[0]):
        if w >= top:
            continue
        row = list(row)
        lead = w
        while lead < top:
            if lead not in basis:
                g = math.gcd(*row[lead:])
                if g > 1:
                    row = [a // g for a in row]
                basis[lead] = row
                while top - 1 in basis:
                    top -= 1
                break
            b = basis[lead]
            la, lb = row[lead], b[lead]
            g = math.gcd(la, lb)
            la, lb = la // g, lb // g
            new = [0] * (trunc + 1)
            for j in range(lead + 1, trunc + 1):
                new[j] = lb * row[j] - la * b[j]
            row = new
            lead += 1
            while lead <= trunc and not row[lead]:
                lead += 1
    return set(basis)


def value_pivots(c: ParamCurve, trunc: int) -> set[int]:
    """Orders ``<= trunc`` of pullbacks of polynomials: ``{s in S : s <= trunc}``."""
    weights = c.orders()
    if any(w != INF and w <= 0 for w in weights):
        raise ValueError("every coordinate must vanish at t = 0")
    coords = _integer_coords(c)
    rows = list(_monomial_rows(coords, weights, trunc))
    return _pivot_set(rows, trunc)


def _start_trunc(c: ParamCurve) -> int:
    return 4 * c.degree()


def semigroup_of_curve(c: ParamCurve, trunc_max: int = DEFAULT_TRUNC_MAX, start: int | None = None) -> NumericalSemigroup:
    """The value semigroup of a polynomial curve germ.

    Truncation starts at ``start`` (default four times the largest degree)
    and doubles until the pivots generate a numerical semigroup ``S'`` with
    conductor at most half the truncation.
    """
    if any(w != INF and w <= 0 for w in c.orders()):
        raise ValueError("every coordinate must vanish at t = 0")
    g = c.support_gcd()
    if g > 1:
        # every pullback is a series in t^g
        raise NotWellParameterized(
            f"all exponents are divisible by {g}; substitute t -> t^(1/{g}) to well-parameterize", g
        )
    trunc = start if start is not None else _start_trunc(c)
    trunc = max(trunc, 1)
    last_gcd = None
    while True:
        if trunc > trunc_max:
            if last_gcd and last_gcd > 1:
                raise NotWellParameterized(
                    f"orders up to t^{trunc // 2} all divisible by {last_gcd}; "
                    f"substitute t -> t^(1/{last_gcd}) (heuristic: truncation cannot prove this)",
                    last_gcd,
                )
            raise Divergence(f"value semigroup not stable below truncation {trunc_max}")
        pivots = value_pivots(c, trunc)
        positive = sorted(p for p in pivots if p > 0)
        last_gcd = math.gcd(*positive) if positive else 0
        if last_gcd == 1:
            candidate = from_generators(positive, max_generator=None)
            generated = set(candidate.elements(trunc))
            if generated != pivots:
                raise AssertionError("pivot set is not additively closed")  # enumeration bug
            if trunc >= 2 * candidate.conductor:
                return candidate
            trunc = max(2 * trunc, 2 * candidate.conductor)
        else:
            trunc *= 2


@lru_cache(maxsize=4096)
def cached_semigroup_of_curve(c: ParamCurve, trunc_max: int = DEFAULT_TRUNC_MAX) -> NumericalSemigroup:
    return semigroup_of_curve(c, trunc_max)


def verify_witness(S: NumericalSemigroup, curve: ParamCurve, certificate: MonomialPolynomial, target: int,
                   trunc_max: int = DEFAULT_TRUNC_MAX) -> bool:
    """Check ``ord(certificate o curve) == target`` and that the curve's semigroup is ``S``."""
    if pullback(certificate, curve, target + 1).order() != target:
        return False
    return cached_semigroup_of_curve(curve, trunc_max) == S
