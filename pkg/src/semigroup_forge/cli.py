"""Command-line interface: ``semigroup-forge <command> ...``.

Every command prints one JSON document (sorted keys) or, with
``--format text``, a short human-readable summary. Exit codes: 0 success,
1 internal failure, 2 bad input, 3 undecided or advisory-only verdict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .errors import Divergence, InputError, SemigroupForgeError
from .honest import minimal_embedding_dimension, witness_curve
from .kite import emit_kite_svg, point_record, point_records
from .kunz import KunzPoint, classify_face, kunz_point_of, semigroup_of_point
from .parsing import parse_curve, parse_generators, parse_int_list
from .puiseux import (
    divisor_factor_vectors,
    generators_to_puiseux,
    planar_e_bound,
    puiseux_to_generators,
    teissier_planarity,
    teissier_upper_bound,
)
from .semigroup import DEFAULT_MAX_GENERATOR, from_generators
from .series import DEFAULT_TRUNC_MAX, semigroup_of_curve

TRUNC_ENV = "SEMIGROUP_FORGE_TRUNC_MAX"

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2, 3


def _default_trunc_max() -> int:
    raw = os.environ.get(TRUNC_ENV)
    return int(raw) if raw else DEFAULT_TRUNC_MAX


def _semigroup(args):
    if getattr(args, "point", None):
        return semigroup_of_point(_point(args.point))
    if not getattr(args, "gens", None):
        raise InputError("one of --gens or --point is required")
    return from_generators(parse_generators(args.gens), max_generator=args.max_gen)


def _point(text: str) -> KunzPoint:
    values = parse_int_list(text)
    if len(values) != 3:
        raise InputError(f"a Kunz point has three coordinates, got {len(values)}")
    return KunzPoint(*values)


def cmd_info(args):
    S = _semigroup(args)
    return {
        "gens": list(S.generators),
        "min_gens": list(S.minimal_generators),
        "multiplicity": S.multiplicity,
        "embedding_dim": S.embedding_dimension,
        "frobenius": S.frobenius,
        "conductor": S.conductor,
        "genus": S.genus,
        "gaps": list(S.gaps),
        "apery": list(S.apery_set()),
        "self_dual": S.is_self_dual(),
    }, EXIT_OK


def cmd_me(args):
    S = _semigroup(args)
    verdict = minimal_embedding_dimension(S, args.trunc_max)
    doc = {"min_gens": list(S.minimal_generators), **verdict.to_json()}
    return doc, EXIT_OK if verdict.exact else EXIT_UNDECIDED


def cmd_planar(args):
    S = _semigroup(args)
    b = S.minimal_generators
    result = teissier_planarity(b)
    bound = teissier_upper_bound(b)
    return {
        "min_gens": list(b),
        "planar": result.planar,
        "failed": result.failed,
        "index": result.index,
        "detail": result.detail,
        "e_vec": list(result.e_vec),
        "n_vec": list(result.n_vec),
        "e_bound": planar_e_bound(b),
        "teissier_bound": None if bound is None else {
            "d": bound.d, "satisfied": list(bound.satisfied), "verified": bound.verified,
        },
    }, EXIT_OK


def cmd_puiseux2sg(args):
    lam = parse_int_list(args.characteristic)
    b = puiseux_to_generators(lam)
    dd = divisor_factor_vectors(lam)
    return {
        "characteristic": lam,
        "generators": list(b),
        "e_vec": list(dd.e_vec),
        "n_vec": list(dd.n_vec),
    }, EXIT_OK


def cmd_sg2puiseux(args):
    b = parse_generators(args.generators)
    lam = generators_to_puiseux(b)
    return {"generators": b, "characteristic": list(lam.lam), "display": str(lam)}, EXIT_OK


def cmd_curve_sg(args):
    curve = parse_curve(args.curve)
    S = semigroup_of_curve(curve, args.trunc_max)
    return {
        "curve": str(curve),
        "min_gens": list(S.minimal_generators),
        "conductor": S.conductor,
        "frobenius": S.frobenius,
        "genus": S.genus,
    }, EXIT_OK


def cmd_kunz_classify(args):
    if args.point:
        p = _point(args.point)
    else:
        p = kunz_point_of(_semigroup(args))
    fc = classify_face(p)
    if fc.face.value == "outside":
        return {
            "x": list(p.coords), "face": "outside", "binding": list(fc.binding),
            "violated": list(fc.violated), "e": None, "me": None,
        }, EXIT_OK
    return point_record(p, fc, args.trunc_max), EXIT_OK


def cmd_kunz_enumerate(args):
    return point_records(args.bound, args.trunc_max), EXIT_OK


def cmd_kite_svg(args):
    records = emit_kite_svg(args.bound, args.out, args.trunc_max)
    counts = {str(me): sum(1 for r in records if r["me"] == me) for me in (2, 3, 4)}
    return {"out": str(args.out), "points": len(records), "counts": counts}, EXIT_OK


def cmd_witness(args):
    S = _semigroup(args)
    w = witness_curve(S, trunc_max=args.trunc_max)
    return {"min_gens": list(S.minimal_generators), **w.to_json(), "verified": True}, EXIT_OK


def _render_text(doc) -> str:
    if isinstance(doc, list):
        return "\n".join(_render_text(d) for d in doc)
    return "\n".join(f"{k}: {json.dumps(v, sort_keys=True) if not isinstance(v, str) else v}"
                     for k, v in sorted(doc.items()))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--trunc-max", type=int, default=_default_trunc_max(),
                        help=f"truncation ceiling for the value oracle (env {TRUNC_ENV})")
    common.add_argument("--max-gen", type=int, default=DEFAULT_MAX_GENERATOR,
                        help="largest generator accepted")

    parser = argparse.ArgumentParser(
        prog="semigroup-forge",
        description="Numerical semigroups, curve value semigroups and minimal embedding dimension.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, gens=False, point=False):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        if gens:
            p.add_argument("--gens", help="generators, e.g. 4,6,13")
        if point:
            p.add_argument("--point", help="Apery point x1,x2,x3 (multiplicity 4)")
        return p

    add("info", cmd_info, "invariants of a semigroup", gens=True, point=True)
    add("me", cmd_me, "minimal embedding dimension", gens=True, point=True)
    add("planar", cmd_planar, "planarity test", gens=True, point=True)
    add("puiseux2sg", cmd_puiseux2sg, "Puiseux characteristic -> generators").add_argument(
        "characteristic", help="e.g. 8,20,22,27 or '8;20,22,27'")
    add("sg2puiseux", cmd_sg2puiseux, "planar generators -> Puiseux characteristic").add_argument(
        "generators", help="e.g. 8,20,42,89")
    add("curve-sg", cmd_curve_sg, "value semigroup of a curve").add_argument(
        "--curve", required=True, help="e.g. 'x=t^4; y=t^6+t^7'")
    add("kunz-classify", cmd_kunz_classify, "Kunz cone face of a point", gens=True, point=True)
    add("kunz-enumerate", cmd_kunz_enumerate, "all Apery points up to a bound").add_argument(
        "--bound", type=int, required=True)
    p = add("kite-svg", cmd_kite_svg, "SVG of the kite slice")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--out", required=True)
    add("witness", cmd_witness, "verified space curve for an m=4, me=3 semigroup", gens=True, point=True)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        doc, code = args.func(args)
    except InputError as exc:
        doc, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_INPUT
    except Divergence as exc:
        doc, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_UNDECIDED
    except SemigroupForgeError as exc:
        doc, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_INTERNAL
    except OSError as exc:
        doc, code = {"error": "IoError", "message": str(exc)}, EXIT_INPUT
    if isinstance(doc, dict) and "error" in doc:
        print(f"error: {doc['message']}", file=stderr)
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True), file=stdout)
    else:
        print(_render_text(doc), file=stdout)
    return code


def main() -> None:
    sys.exit(run())
