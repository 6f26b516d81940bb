"""Command-line interface.

Exit codes: 0 success (integral / engines agree), 1 not integral,
2 engine disagreement, 3 usage or input error. JSON output is the stable
machine contract and is byte-identical across identical invocations
(including the seed); text output is for humans.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .atoms import (
    SymbolSet,
    all_atoms,
    all_skew_atoms,
    parse_symbol_set,
)
from .cyclotomic import ambient_order
from .groups import (
    DEFAULT_DENSE_LIMIT,
    DEFAULT_ENUMERATION_LIMIT,
    Group,
    ParseError,
    SizeLimitExceeded,
    div4_elements,
    format_element,
    format_element_set,
    parse_group_spec,
)
from .integrality import (
    cross_validate,
    enumerate_integral_sets,
    is_integral,
    is_integral_checked,
)
from .spectrum import (
    exact_spectrum,
    hermitian_matrix,
    matrix_to_csv,
    matrix_to_dot,
    numeric_spectrum,
)

EXIT_OK = 0
EXIT_NOT_INTEGRAL = 1
EXIT_DISAGREEMENT = 2
EXIT_USAGE = 3

ENV_MAX_ORDER = "MIXEDCAYLEY_MAX_ORDER"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits with code 2
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="mixedcayley", description=__doc__)
    parser.add_argument("--version", action="version", version=f"mixedcayley {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_set=True, with_format=("text", "json")):
        p.add_argument("group", help="group spec, e.g. Z4, Z2xZ4 or 2,4")
        if with_set:
            p.add_argument(
                "--set",
                default="",
                help='symbol set, e.g. "1;2" or "1,1;1,3"; empty means the empty set',
            )
        if with_format:
            p.add_argument("--format", choices=with_format, default="text")
        p.add_argument(
            "--max-order",
            type=int,
            default=None,
            help=f"dense-operation guardrail (default {DEFAULT_DENSE_LIMIT}, "
            f"or ${ENV_MAX_ORDER})",
        )

    p = sub.add_parser("group-info", help="order, exponent and set-algebra census")
    add_common(p, with_set=False)

    p = sub.add_parser("check", help="decide integrality of a mixed Cayley graph")
    add_common(p)
    p.add_argument(
        "--spectral-verify",
        action="store_true",
        help="also run the exact spectral engine and require agreement",
    )

    p = sub.add_parser("spectrum", help="exact and numeric spectrum of a symbol set")
    add_common(p, with_format=("text", "json", "csv"))

    p = sub.add_parser("matrix", help="Hermitian adjacency matrix of a symbol set")
    add_common(p, with_format=("text", "json", "csv"))

    p = sub.add_parser("enumerate", help="all integral symbol sets of a group")
    add_common(p, with_set=False)
    p.add_argument(
        "--enum-limit",
        type=int,
        default=DEFAULT_ENUMERATION_LIMIT,
        help=f"enumeration guardrail on the group order (default {DEFAULT_ENUMERATION_LIMIT})",
    )

    p = sub.add_parser("atoms", help="atom partition of the group")
    add_common(p, with_set=False)

    p = sub.add_parser("classes", help="skew atoms of the order-divisible-by-4 elements")
    add_common(p, with_set=False)

    p = sub.add_parser("crosscheck", help="compare the structural and spectral engines")
    add_common(p, with_set=False)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--budget", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("export-dot", help="DOT rendering of the mixed Cayley graph")
    add_common(p, with_format=None)

    return parser


def _dense_limit(args) -> int:
    if getattr(args, "max_order", None) is not None:
        return args.max_order
    env = os.environ.get(ENV_MAX_ORDER)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"{ENV_MAX_ORDER} must be an integer, got {env!r}") from exc
    return DEFAULT_DENSE_LIMIT


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _parse_inputs(args) -> tuple[Group, SymbolSet]:
    group = parse_group_spec(args.group)
    symbols = parse_symbol_set(group, args.set)
    return group, symbols


def _cmd_group_info(args) -> int:
    group = parse_group_spec(args.group)
    atoms = all_atoms(group)
    classes = all_skew_atoms(group)
    info = {
        "group": str(group),
        "order": group.order,
        "exponent": group.exponent,
        "order_div4_elements": len(div4_elements(group)),
        "atoms": len(atoms),
        "skew_classes": len(classes),
        "ambient_order": ambient_order(group),
    }
    if args.format == "json":
        _emit_json(info)
    else:
        print(f"group: {info['group']}")
        print(f"order: {info['order']}")
        print(f"exponent: {info['exponent']}")
        print(f"elements with order divisible by 4: {info['order_div4_elements']}")
        print(f"atoms: {info['atoms']}")
        print(f"skew classes: {info['skew_classes']}")
    return EXIT_OK


def _cmd_check(args) -> int:
    group, symbols = _parse_inputs(args)
    if args.spectral_verify:
        verdict = is_integral_checked(symbols, _dense_limit(args))
    else:
        verdict = is_integral(symbols)
    payload = verdict.to_json()
    payload["group"] = str(group)
    payload["set"] = [list(x) for x in symbols.sorted_elements()]
    if args.format == "json":
        _emit_json(payload)
    else:
        print("integral" if verdict.verdict else "not integral")
        sym_status = verdict.symmetric_part
        skew_status = verdict.skew_part
        if sym_status.atoms:
            reps = " ".join(format_element(rep) for rep, _ in sym_status.atoms)
            print(f"symmetric part: union of atoms [{reps}]")
        if sym_status.residue:
            print(
                "symmetric part offenders: "
                + format_element_set(sym_status.residue)
            )
        if skew_status.classes:
            reps = " ".join(format_element(rep) for rep, _ in skew_status.classes)
            print(f"skew part: union of skew atoms [{reps}]")
        if skew_status.residue:
            print("skew part offenders: " + format_element_set(skew_status.residue))
        if verdict.method == "both":
            if verdict.disagreement is None:
                print("spectral verification: agrees")
            else:
                print(f"spectral verification: DISAGREES ({verdict.disagreement})")
    if verdict.disagreement is not None:
        return EXIT_DISAGREEMENT
    return EXIT_OK if verdict.verdict else EXIT_NOT_INTEGRAL


def _render_exact_value(entry) -> str:
    if entry.integer is not None:
        return str(entry.integer)
    return f"{entry.value.complex_value().real:.9f}"


def _cmd_spectrum(args) -> int:
    group, symbols = _parse_inputs(args)
    limit = _dense_limit(args)
    spec = exact_spectrum(group, symbols, limit)
    numeric = numeric_spectrum(hermitian_matrix(group, symbols, limit))
    if args.format == "json":
        payload = spec.to_json()
        payload["numeric"] = numeric
        _emit_json(payload)
    elif args.format == "csv":
        lines = ["char,undirected,directed,value,integer"]
        for e in spec.entries:
            integer = "" if e.integer is None else str(e.integer)
            lines.append(
                f"{format_element(e.char)},"
                f"{e.undirected.complex_value().real:.9f},"
                f"{e.directed.complex_value().real:.9f},"
                f"{e.value.complex_value().real:.9f},"
                f"{integer}"
            )
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        print(f"group {group}  set {format_element_set(symbols.elements) or '(empty)'}")
        print("char | undirected | directed | value")
        for e in spec.entries:
            und = e.undirected.as_integer()
            dirv = e.directed.as_integer()
            und_s = str(und) if und is not None else f"{e.undirected.complex_value().real:.6f}"
            dir_s = str(dirv) if dirv is not None else f"{e.directed.complex_value().real:.6f}"
            print(f"{format_element(e.char)} | {und_s} | {dir_s} | {_render_exact_value(e)}")
        print("numeric spectrum: " + " ".join(f"{v:.9f}" for v in numeric))
        print("integral" if spec.is_integral else "not integral")
    return EXIT_OK


def _cmd_matrix(args) -> int:
    group, symbols = _parse_inputs(args)
    matrix = hermitian_matrix(group, symbols, _dense_limit(args))
    if args.format == "csv":
        sys.stdout.write(matrix_to_csv(matrix))
    elif args.format == "json":
        _emit_json(
            {
                "group": str(group),
                "set": [list(x) for x in symbols.sorted_elements()],
                "entries": [
                    [matrix.entry_text(u, v) for v in range(matrix.dimension)]
                    for u in range(matrix.dimension)
                ],
            }
        )
    else:
        for u in range(matrix.dimension):
            print(" ".join(f"{matrix.entry_text(u, v):>2}" for v in range(matrix.dimension)))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    group = parse_group_spec(args.group)
    sets = list(enumerate_integral_sets(group, args.enum_limit))
    if args.format == "json":
        _emit_json(
            {
                "group": str(group),
                "count": len(sets),
                "sets": [[list(x) for x in s.sorted_elements()] for s in sets],
            }
        )
    else:
        print(f"{len(sets)} integral symbol sets in {group}")
        for s in sets:
            print(format_element_set(s.elements) or "(empty)")
    return EXIT_OK


def _cmd_atoms(args) -> int:
    group = parse_group_spec(args.group)
    atoms = all_atoms(group)
    if args.format == "json":
        _emit_json(
            {
                "group": str(group),
                "atoms": [[list(x) for x in sorted(a)] for a in atoms],
            }
        )
    else:
        for a in atoms:
            print(format_element_set(a))
    return EXIT_OK


def _cmd_classes(args) -> int:
    group = parse_group_spec(args.group)
    classes = all_skew_atoms(group)
    if args.format == "json":
        _emit_json(
            {
                "group": str(group),
                "classes": [[list(x) for x in sorted(c)] for c in classes],
            }
        )
    else:
        for c in classes:
            print(format_element_set(c))
    return EXIT_OK


def _cmd_crosscheck(args) -> int:
    group = parse_group_spec(args.group)
    try:
        report = cross_validate(
            group,
            mode=args.mode,
            budget=args.budget,
            seed=args.seed,
            max_order=_dense_limit(args),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        print(f"{report.agreements}/{report.total} agree, {report.integral_count} integral")
        for d in report.disagreements:
            print(f"DISAGREEMENT: {d}")
    return EXIT_OK if report.agree else EXIT_DISAGREEMENT


def _cmd_export_dot(args) -> int:
    group, symbols = _parse_inputs(args)
    matrix = hermitian_matrix(group, symbols, _dense_limit(args))
    sys.stdout.write(matrix_to_dot(matrix))
    return EXIT_OK


_HANDLERS = {
    "group-info": _cmd_group_info,
    "check": _cmd_check,
    "spectrum": _cmd_spectrum,
    "matrix": _cmd_matrix,
    "enumerate": _cmd_enumerate,
    "atoms": _cmd_atoms,
    "classes": _cmd_classes,
    "crosscheck": _cmd_crosscheck,
    "export-dot": _cmd_export_dot,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, SizeLimitExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
