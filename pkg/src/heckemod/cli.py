"""Command-line interface: enumeration, construction, verification,
classification and twisting, with JSON files in and JSON on stdout.

Exit codes: 0 success; 1 malformed input or usage; 2 mathematical rejection
(invalid shape, failed weight condition, unplaceable weight); 3 verification
failure or internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import classify as cl
from . import modules as md
from . import shapes as sh
from .cyclo import fraction_to_str
from .errors import (ConditionFailed, DimensionMismatch, HeckemodError,
                     MismatchedField, NoAddablePosition, NotScalar,
                     NotStandard, ShapeError)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on malformed flags, not argparse's 2
        raise _UsageError(message)


def _emit(data) -> None:
    json.dump(data, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load_json(path: str):
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def _load_shape(path: str) -> sh.SkewShapeL:
    return sh.shape_from_json(_load_json(path))


def _partitions_of(shape: sh.SkewShapeL) -> list[list[int]]:
    parts: list[list[int]] = [[] for _ in range(shape.ell)]
    for comp in shape.components:
        rows: dict[int, int] = {}
        for r, _ in comp.cells:
            rows[r] = rows.get(r, 0) + 1
        parts[comp.beta] = [rows[r] for r in sorted(rows)]
    return parts


# ---------------------------------------------------------------------------
# subcommands

def _cmd_shapes(args) -> int:
    shapes = sh.enumerate_shapes(args.ell, args.n, args.window)
    _emit({"ell": args.ell, "n": args.n, "window": args.window,
           "count": len(shapes), "shapes": [sh.shape_to_json(s) for s in shapes]})
    return 0


def _cmd_syt(args) -> int:
    shape = _load_shape(args.shape)
    tableaux = sh.enumerate_syt(shape)
    data = {"shape": sh.shape_to_json(shape), "count": len(tableaux),
            "tableaux": [sh.tableau_to_json(t) for t in tableaux]}
    if md.is_partition_shape(shape):
        data["hook_dimension"] = sh.hook_dimension(shape.ell, _partitions_of(shape))
    _emit(data)
    return 0


def _cmd_build(args) -> int:
    module = md.build_module(_load_shape(args.shape))
    dump = args.dump_matrices or args.dense
    _emit(md.module_to_json(module, include_matrices=dump, dense=args.dense))
    return 0


def _cmd_verify(args) -> int:
    shape = _load_shape(args.shape)
    module = md.build_module(shape)
    data = {"relations": md.verify_relations(module).to_json()}
    ok = data["relations"]["ok"]
    if args.intertwiners:
        data["intertwiners"] = md.verify_intertwiners(module).to_json()
        ok = ok and data["intertwiners"]["ok"]
    if args.jm:
        data["jucys_murphy"] = md.jm_consistency(module).to_json()
        ok = ok and data["jucys_murphy"]["ok"]
    if args.commutant:
        dim = md.commutant_dimension(module)
        data["commutant_dimension"] = dim
        data["irreducible"] = dim == 1
        ok = ok and dim == 1
    data["ok"] = ok
    _emit(data)
    return 0 if ok else 3


def _cmd_classify(args) -> int:
    weight, ell = sh.weight_from_json(_load_json(args.weight))
    violation = cl.check_weight_condition(weight, ell)
    if violation is not None:
        _emit({"rejected": violation.to_json()})
        return 2
    try:
        shape, tableau = cl.reconstruct(weight, ell)
    except NoAddablePosition as exc:
        _emit({"rejected": {"kind": "NoAddablePosition", "detail": str(exc)}})
        return 2
    _emit({"shape": sh.shape_to_json(shape), "tableau": sh.tableau_to_json(tableau)})
    return 0


def _cmd_twist(args) -> int:
    shape = _load_shape(args.shape)
    module = md.build_module(shape)
    if args.t is not None:
        kappa = Fraction(args.t)
        twisted = md.twist(module, "t", kappa)
        auto = {"kind": "t", "kappa": fraction_to_str(kappa)}
    else:
        twisted = md.twist(module, "rho")
        auto = {"kind": "rho"}
    reconstructed = {cl.reconstruct(w, shape.ell)[0] for w in md.module_weights(twisted)}
    if len(reconstructed) != 1:
        raise NotScalar("twisted module weights classify to several shapes")
    _emit({"automorphism": auto,
           "input_shape": sh.shape_to_json(shape),
           "twisted_shape": sh.shape_to_json(next(iter(reconstructed)))})
    return 0


def _cmd_jm_check(args) -> int:
    module = md.build_module(_load_shape(args.shape))
    report = md.jm_consistency(module)
    _emit(report.to_json())
    return 0 if report.ok else 3


def _cmd_suite(args) -> int:
    rows = []
    all_ok = True
    for n in range(1, args.max_n + 1):
        shapes = sh.enumerate_shapes(args.ell, n, n)
        counts = {"relations": 0, "intertwiners": 0, "commutant": 0,
                  "central_character": 0, "roundtrip": 0, "jucys_murphy": 0,
                  "hook_dimension": 0}
        fails = dict.fromkeys(counts, 0)
        for shape in shapes:
            module = md.build_module(shape)
            counts["relations"] += 1
            fails["relations"] += not md.verify_relations(module).ok
            counts["intertwiners"] += 1
            fails["intertwiners"] += not md.verify_intertwiners(module).ok
            counts["commutant"] += 1
            fails["commutant"] += md.commutant_dimension(module) != 1
            counts["central_character"] += 1
            try:
                md.central_character(module)
            except NotScalar:
                fails["central_character"] += 1
            counts["roundtrip"] += 1
            fails["roundtrip"] += not cl.classify_roundtrip(shape).ok
            if md.is_partition_shape(shape):
                counts["jucys_murphy"] += 1
                fails["jucys_murphy"] += not md.jm_consistency(module).ok
                counts["hook_dimension"] += 1
                fails["hook_dimension"] += (
                    sh.hook_dimension(shape.ell, _partitions_of(shape))
                    != len(sh.enumerate_syt(shape)))
        for check in counts:
            if counts[check]:
                ok = fails[check] == 0
                all_ok = all_ok and ok
                rows.append((check, n, counts[check], "pass" if ok else
                             f"FAIL ({fails[check]})"))
    width = max(len(r[0]) for r in rows)
    print(f"{'check'.ljust(width)}  n  shapes  result")
    for check, n, count, result in rows:
        print(f"{check.ljust(width)}  {n}  {count:6d}  {result}")
    print(f"suite: {'pass' if all_ok else 'FAIL'} (ell={args.ell}, n<={args.max_n})")
    return 0 if all_ok else 3


# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="heckemod",
                     description="Exact seminormal modules on skew tableaux: "
                                 "build, verify, classify, twist.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shapes", help="enumerate canonical shapes")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", type=int, required=True)
    p.set_defaults(func=_cmd_shapes)

    p = sub.add_parser("syt", help="list standard tableaux of a shape")
    p.add_argument("--shape", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_syt)

    p = sub.add_parser("build", help="construct the module of a shape")
    p.add_argument("--shape", required=True, metavar="FILE")
    p.add_argument("--dump-matrices", action="store_true")
    p.add_argument("--dense", action="store_true",
                   help="dump matrices densely (implies --dump-matrices)")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("verify", help="check the defining relations")
    p.add_argument("--shape", required=True, metavar="FILE")
    p.add_argument("--intertwiners", action="store_true")
    p.add_argument("--jm", action="store_true",
                   help="also compare Jucys-Murphy sums with the u-action")
    p.add_argument("--commutant", action="store_true",
                   help="also compute the commutant dimension")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", help="reconstruct shape and tableau from a weight")
    p.add_argument("--weight", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("twist", help="classify an automorphism twist of a module")
    p.add_argument("--shape", required=True, metavar="FILE")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--t", metavar="KAPPA", help="shift contents by the rational KAPPA")
    group.add_argument("--rho", action="store_true", help="reverse indices")
    p.set_defaults(func=_cmd_twist)

    p = sub.add_parser("jm-check", help="Jucys-Murphy consistency for a partition shape")
    p.add_argument("--shape", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_jm_check)

    p = sub.add_parser("suite", help="run the verification corpus")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ShapeError, NotStandard, ConditionFailed, NoAddablePosition) as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 2
    except (NotScalar, DimensionMismatch, MismatchedField, HeckemodError) as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return 3
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        print(f"error: malformed input: {exc!r}", file=sys.stderr)
        return 1


def console_main(argv=None) -> None:
    raise SystemExit(main(argv))
