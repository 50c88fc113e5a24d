"""Command-line interface: ``pancakegroups <subcommand> ...``.

Data goes to stdout, diagnostics to stderr. Exit status: 0 success,
1 verification mismatch, 2 usage error, 3 resource cap exceeded.

Caps can be raised through environment variables (see ``CAP_ENV``) or
lifted altogether with ``--unsafe-caps``.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import TextIO

from . import cayley, closed_forms, reflections
from .errors import PancakeError, ResourceCapError
from .perm_core import Family, cycle_decomposition

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

CAP_ENV = {
    "graph_unsigned": "PANCAKEGROUPS_CAP_GRAPH_UNSIGNED",
    "graph_signed": "PANCAKEGROUPS_CAP_GRAPH_SIGNED",
    "reflections_unsigned": "PANCAKEGROUPS_CAP_REFLECTIONS_UNSIGNED",
    "reflections_signed": "PANCAKEGROUPS_CAP_REFLECTIONS_SIGNED",
}
DEFAULT_CAPS = {
    "graph_unsigned": cayley.DEFAULT_CAPS[Family.UNSIGNED],
    "graph_signed": cayley.DEFAULT_CAPS[Family.SIGNED],
    "reflections_unsigned": reflections.DEFAULT_CAPS["unsigned_pancake"],
    "reflections_signed": reflections.DEFAULT_CAPS["signed_pancake"],
}
NO_CAP = 10**9

SUITES = ("orders2", "orders2b", "orders3", "reflections", "cycles", "girth")
SUITE_DEFAULT_MAX = {
    "orders2": 99, "orders2b": 79, "orders3": 60, "reflections": 7, "cycles": 4, "girth": 4,
}


def resolve_caps(unsafe: bool, environ=os.environ) -> dict[str, int]:
    if unsafe:
        return dict.fromkeys(DEFAULT_CAPS, NO_CAP)
    caps = {}
    for key, default in DEFAULT_CAPS.items():
        raw = environ.get(CAP_ENV[key])
        if raw is None:
            caps[key] = default
            continue
        try:
            caps[key] = int(raw)
        except ValueError:
            raise PancakeError(f"{CAP_ENV[key]} must be an integer, got {raw!r}") from None
        if caps[key] < 1:
            raise PancakeError(f"{CAP_ENV[key]} must be positive")
    return caps


def _emit_json(out: TextIO, payload: dict) -> None:
    out.write(json.dumps(payload, sort_keys=True) + "\n")


# -- matrices ------------------------------------------------------------------


def _cmd_matrix(args, out, caps) -> int:
    builder = {
        "matrix": closed_forms.pancake_matrix,
        "triple-matrix": closed_forms.triple_matrix_f1,
        "burnt-matrix": closed_forms.burnt_matrix,
    }[args.command]
    m = builder(args.n)
    if args.format == "json":
        _emit_json(out, {"command": args.command, **m.to_dict()})
    elif args.format == "csv":
        out.write(m.to_csv())
    else:
        out.write(m.to_text())
    return EXIT_OK


# -- verification sweeps -------------------------------------------------------


def _verify_orders2(hi: int, signed: bool):
    formula = (
        closed_forms.order_two_burnt_flips_formula if signed else closed_forms.order_two_flips_formula
    )
    oracle = closed_forms.two_burnt_flips_oracle if signed else closed_forms.two_flips_oracle
    low = 0 if signed else 1
    checked, mismatches = 0, []
    for b in range(low + 1, hi + 1):
        for a in range(low, b):
            res = formula(a, b)
            truth = oracle(a, b)
            checked += 1
            if res.value != truth:
                mismatches.append(
                    {"gens": [a, b], "formula": res.value, "oracle": truth, "case_label": res.case_label}
                )
    return checked, mismatches, {}


def _verify_orders3(hi: int):
    checked, mismatches, uncovered = 0, [], []
    for c in range(3, hi + 1):
        for b in range(2, c):
            truth = closed_forms.three_flips_oracle(1, b, c)
            branches = closed_forms.three_flip_branches(b, c)
            if not branches:
                uncovered.append({"gens": [1, b, c], "oracle": truth})
                continue
            checked += 1
            for label, value in branches:
                if value != truth:
                    mismatches.append(
                        {"gens": [1, b, c], "formula": value, "oracle": truth, "case_label": label}
                    )
            if len({v for _, v in branches}) > 1:
                mismatches.append(
                    {"gens": [1, b, c], "formula": None, "oracle": truth,
                     "case_label": "conflict:" + "|".join(label for label, _ in branches)}
                )
    return checked, mismatches, {"uncovered": uncovered}


def _verify_reflections(hi: int, hi_signed: int, caps):
    checked, mismatches, counts = 0, [], []
    for n in range(2, hi + 1):
        refl = reflections.pancake_reflections(n, caps["reflections_unsigned"])
        invs = reflections.involutions(n, max(caps["reflections_unsigned"], 8))
        formula = reflections.involution_count_formula(n)
        checked += 1
        counts.append({"family": "unsigned", "n": n, "enumerated": len(refl), "formula": formula})
        if refl.elements != invs.elements or len(refl) != formula:
            mismatches.append({"family": "unsigned", "n": n, "enumerated": len(refl),
                               "involutions": len(invs), "formula": formula,
                               "case_label": "T2"})
    for n in range(1, hi_signed + 1):
        enumerated = len(reflections.burnt_reflections(n, caps["reflections_signed"]))
        formula = reflections.burnt_reflection_count_formula(n)
        checked += 1
        counts.append({"family": "signed", "n": n, "enumerated": enumerated, "formula": formula})
        if enumerated != formula:
            mismatches.append({"family": "signed", "n": n, "enumerated": enumerated,
                               "formula": formula, "case_label": "T4.count"})
    return checked, mismatches, {"counts": counts}


def _verify_cycles(hi: int, caps):
    checked, mismatches = 0, []
    for family, low, cap_key in ((Family.SIGNED, 2, "graph_signed"), (Family.UNSIGNED, 3, "graph_unsigned")):
        for n in range(low, hi + 1):
            graph = cayley.build_graph(family, n, caps[cap_key])
            gens = graph.generators
            for x, a in enumerate(gens):
                for b in gens[x + 1:]:
                    checked += 1
                    try:
                        fam = cayley.two_generator_cycles(graph, a, b)
                    except AssertionError as exc:
                        mismatches.append({"family": str(family), "n": n, "gens": [a, b],
                                           "case_label": "T5", "error": str(exc)})
                        continue
                    chorded = sum(1 for c in fam.cycles if not cayley.verify_chord_free(graph, c))
                    if chorded:
                        mismatches.append({"family": str(family), "n": n, "gens": [a, b],
                                           "case_label": "chord", "chorded_cycles": chorded})
    return checked, mismatches, {}


def _verify_girth(hi: int, caps):
    checked, mismatches, values = 0, [], []
    plan = [(Family.SIGNED, n, 8, "graph_signed") for n in range(2, hi + 1)]
    plan += [(Family.UNSIGNED, n, 6, "graph_unsigned") for n in range(3, hi + 3)]
    for family, n, expected, cap_key in plan:
        g = cayley.girth(cayley.build_graph(family, n, caps[cap_key]))
        checked += 1
        values.append({"family": str(family), "n": n, "girth": g})
        if g != expected:
            mismatches.append({"family": str(family), "n": n, "girth": g, "expected": expected,
                               "case_label": "girth"})
    return checked, mismatches, {"values": values}


def _cmd_verify(args, out, caps) -> int:
    hi = args.max if args.max is not None else SUITE_DEFAULT_MAX[args.suite]
    if args.suite == "orders2":
        checked, mismatches, extra = _verify_orders2(hi, signed=False)
    elif args.suite == "orders2b":
        checked, mismatches, extra = _verify_orders2(hi, signed=True)
    elif args.suite == "orders3":
        checked, mismatches, extra = _verify_orders3(hi)
    elif args.suite == "reflections":
        checked, mismatches, extra = _verify_reflections(hi, args.max_signed, caps)
    elif args.suite == "cycles":
        checked, mismatches, extra = _verify_cycles(hi, caps)
    else:
        checked, mismatches, extra = _verify_girth(hi, caps)
    ok = not mismatches
    if args.format == "json":
        _emit_json(out, {"command": "verify", "suite": args.suite, "max": hi, "checked": checked,
                         "ok": ok, "mismatches": mismatches, **extra})
    else:
        for item in mismatches:
            out.write("MISMATCH " + json.dumps(item, sort_keys=True) + "\n")
        for item in extra.get("uncovered", []):
            print(f"uncovered {item['gens']} oracle={item['oracle']}", file=sys.stderr)
        out.write(f"suite={args.suite} max={hi} checked={checked} "
                  f"mismatches={len(mismatches)} {'OK' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


# -- graphs ----------------------------------------------------------------------


def _graph(args, caps) -> cayley.CayleyGraph:
    family = Family(args.family)
    cap = caps["graph_unsigned" if family is Family.UNSIGNED else "graph_signed"]
    if args.unsafe_caps:
        size = cayley.vertex_count(family, args.n)
        print(f"estimated graph size: {size} vertices, about {size * 200 // 2**20} MiB",
              file=sys.stderr)
    return cayley.build_graph(family, args.n, cap)


def _cmd_diameter(args, out, caps) -> int:
    report = cayley.diameter(_graph(args, caps))
    if args.format == "json":
        _emit_json(out, {"command": "diameter", **report.to_dict()})
    elif args.format == "csv":
        out.write("distance,count\n")
        out.writelines(f"{d},{c}\n" for d, c in enumerate(report.histogram))
    else:
        out.write(f"family={report.family} n={report.n} diameter={report.diameter}\n")
        out.write("histogram " + " ".join(map(str, report.histogram)) + "\n")
        if report.lower_bound is not None:
            out.write(f"bounds {report.lower_bound:g} <= d <= {report.upper_bound:g}: "
                      f"lower={'ok' if report.within_lower else 'violated'} "
                      f"upper={'ok' if report.within_upper else 'violated'}\n")
    return EXIT_OK


def _cmd_girth(args, out, caps) -> int:
    value = cayley.girth(_graph(args, caps))
    if args.format == "json":
        _emit_json(out, {"command": "girth", "family": args.family, "n": args.n, "girth": value})
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def _parse_gens(text: str) -> tuple[int, int]:
    try:
        a, b = (int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--gens expects 'a,b', got {text!r}") from None
    return a, b


def _cmd_cycles(args, out, caps) -> int:
    graph = _graph(args, caps)
    a, b = args.gens
    fam = cayley.two_generator_cycles(graph, a, b)
    chord_free = all(cayley.verify_chord_free(graph, c) for c in fam.cycles)
    if args.format == "json":
        _emit_json(out, {"command": "cycles", "family": args.family, "n": args.n,
                         **fam.to_dict(), "chord_free": chord_free,
                         "cycles": [list(c) for c in fam.cycles]})
    else:
        out.write(f"gens={fam.a},{fam.b} length={fam.length} count={len(fam.cycles)} "
                  f"chord_free={'yes' if chord_free else 'no'}\n")
        for c in fam.cycles:
            out.write(" ".join(map(str, c)) + "\n")
    return EXIT_OK


def _cmd_reflections(args, out, caps) -> int:
    n = args.n
    if args.family == "unsigned":
        refl = reflections.pancake_reflections(n, caps["reflections_unsigned"])
        formula = reflections.involution_count_formula(n)
    elif args.family == "signed":
        refl = reflections.burnt_reflections(n, caps["reflections_signed"])
        formula = reflections.burnt_reflection_count_formula(n)
    else:
        refl = reflections.coxeter_reflections_signed(n, caps["reflections_signed"])
        formula = n * n
    if args.format == "csv":
        out.write("n,enumerated,formula\n")
        out.write(f"{n},{len(refl)},{formula}\n")
        return EXIT_OK
    strings = [] if args.count_only else refl.cycle_strings()
    if args.format == "json":
        payload = {"command": "reflections", "family": args.family, "n": n,
                   "count": len(refl), "formula": formula}
        if not args.count_only:
            payload["elements"] = strings
        _emit_json(out, payload)
    else:
        out.writelines(s + "\n" for s in strings)
        out.write(f"count {len(refl)} formula {formula}\n")
    return EXIT_OK


def _cmd_export(args, out, caps) -> int:
    out.write(cayley.export(_graph(args, caps), args.graph_format))
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pancakegroups",
        description="Orders, reflections and Cayley graphs of pancake generators.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--unsafe-caps", action="store_true",
                        help="lift all enumeration and graph size caps")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("matrix", "orders of f_a f_b in S_n"),
        ("triple-matrix", "orders of f_1 f_b f_c in S_n"),
        ("burnt-matrix", "orders of burnt f_a f_b in B_n"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--n", type=int, required=True)
        p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("verify", parents=[common], help="formula-vs-oracle sweeps")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--max", type=int, default=None,
                   help="upper end of the sweep (subscript, or degree for graph suites)")
    p.add_argument("--max-signed", type=int, default=5,
                   help="largest n for the burnt reflection count check")
    p.set_defaults(func=_cmd_verify)

    for name, func in (("diameter", _cmd_diameter), ("girth", _cmd_girth)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--family", choices=("unsigned", "signed"), required=True)
        p.add_argument("--n", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("cycles", parents=[common], help="alternating two-generator cycles")
    p.add_argument("--family", choices=("unsigned", "signed"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gens", type=_parse_gens, required=True)
    p.set_defaults(func=_cmd_cycles)

    p = sub.add_parser("reflections", parents=[common])
    p.add_argument("--family", choices=("unsigned", "signed", "signed-coxeter"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_reflections)

    p = sub.add_parser("export", help="serialize a Cayley graph")
    p.add_argument("--family", choices=("unsigned", "signed"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", dest="graph_format", choices=cayley.EXPORT_FORMATS,
                   default="edge_list")
    p.add_argument("--unsafe-caps", action="store_true")
    p.set_defaults(func=_cmd_export)
    return parser


def run(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "max", None) is not None and args.max < 1:
        print("--max must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        caps = resolve_caps(args.unsafe_caps)
        return args.func(args, out, caps)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PancakeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
