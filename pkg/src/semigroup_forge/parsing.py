"""Text formats for generator lists and curves.

Curves are written ``x = t^4; y = t^6 + 2/3*t^7``: one ``name = poly``
per coordinate, separated by ``;``. Terms are ``c*t^k``, ``t^k``, ``t`` or a
bare constant ``c`` (``a`` or ``a/b``).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DuplicateCoordinate, NonzeroConstantTerm, ParseError, ZeroOrNegative
from .series import ParamCurve

_INT_LIST_TOKEN = re.compile(r"\s*([+-]?\d+)\s*([,;]|\s|$)")


def parse_int_list(text: str) -> list[int]:
    """Comma, semicolon or space separated integers, in the order given."""
    out = []
    pos = 0
    text = text.rstrip()
    if not text.strip():
        raise ParseError("expected at least one integer", 0, "integer")
    while pos < len(text):
        m = _INT_LIST_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected {text[pos:pos + 1]!r}", pos, "integer")
        out.append(int(m.group(1)))
        pos = m.end()
    return out


def parse_generators(text: str) -> list[int]:
    """Positive integers, deduplicated and sorted."""
    values = parse_int_list(text)
    bad = [v for v in values if v <= 0]
    if bad:
        raise ZeroOrNegative(f"generators must be positive, got {bad[0]}")
    return sorted(set(values))


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[=;+\-*/^])
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            out.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _CurveParser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind, value=None, expected=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = expected or (repr(value) if value else kind)
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want}, got {got!r}", tok[2], want)
        self.i += 1
        return tok

    def at(self, kind, value=None):
        tok = self.peek()
        return tok[0] == kind and (value is None or tok[1] == value)

    def curve(self):
        names, polys = [], []
        while True:
            name_tok = self.take("ident", expected="coordinate name")
            name = name_tok[1]
            if name in names:
                raise DuplicateCoordinate(f"coordinate {name!r} given twice (offset {name_tok[2]})")
            self.take("op", "=")
            poly, const_pos = self.poly()
            if poly.get(0):
                raise NonzeroConstantTerm(f"coordinate {name!r} has constant term {poly[0]} (offset {const_pos})")
            poly.pop(0, None)
            names.append(name)
            polys.append(poly)
            if self.at("op", ";"):
                self.i += 1
                if self.at("end"):
                    break
                continue
            self.take("end", expected="';' or end of input")
            break
        return names, polys

    def poly(self):
        terms: dict[int, Fraction] = {}
        const_pos = None
        sign = 1
        if self.at("op", "+") or self.at("op", "-"):
            sign = -1 if self.take("op")[1] == "-" else 1
        while True:
            pos = self.peek()[2]
            k, c = self.term()
            if k == 0 and const_pos is None:
                const_pos = pos
            terms[k] = terms.get(k, Fraction(0)) + sign * c
            if self.at("op", "+") or self.at("op", "-"):
                sign = -1 if self.take("op")[1] == "-" else 1
                continue
            break
        return {k: c for k, c in terms.items() if c}, const_pos

    def term(self):
        if self.at("num"):
            c = Fraction(int(self.take("num")[1]))
            if self.at("op", "/"):
                self.i += 1
                den_tok = self.take("num", expected="denominator")
                if int(den_tok[1]) == 0:
                    raise ParseError("zero denominator", den_tok[2])
                c /= int(den_tok[1])
            if self.at("op", "*"):
                self.i += 1
                return self.monomial(), c
            return 0, c
        return self.monomial(), Fraction(1)

    def monomial(self):
        self.take("ident", "t", expected="'t'")
        if self.at("op", "^"):
            self.i += 1
            return int(self.take("num", expected="exponent")[1])
        return 1


def parse_curve(text: str) -> ParamCurve:
    names, polys = _CurveParser(text).curve()
    try:
        return ParamCurve.from_polys(polys, names)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
