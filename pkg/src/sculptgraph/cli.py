"""Command-line interface.

Exit codes: 0 success / PASS, 1 verification FAIL, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys

from . import schemefile
from .caterpillar import CaterpillarSpec
from .central_path import path_digraph
from .compiler import CompiledScheme, compile_spec, operator_of
from .errors import SculptError
from .graphs import (
    check_epm,
    check_genuine_conditions,
    count_directed_pms,
    digraph_to_bigraph,
    enumerate_directed_pms,
    export_dot,
)
from .verifier import run_ghz, run_pipeline, simulate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _leaves(text: str) -> CaterpillarSpec:
    try:
        return CaterpillarSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(text: str, out) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(g, fmt: str, name: str) -> str:
    return export_dot(g, name) if fmt == "dot" else schemefile.dumps(g)


def cmd_compile(args) -> int:
    scheme = compile_spec(args.leaves)
    _emit(_render(scheme.digraph, args.format, f"caterpillar {args.leaves}"), args.out)
    return EXIT_OK


def cmd_simulate(args) -> int:
    scheme = CompiledScheme.from_digraph(schemefile.read(args.scheme))
    print(f"operator: {operator_of(scheme)}")
    sim = simulate(scheme)
    print(f"no-bunching: {'yes' if sim.no_bunching else 'no'}")
    if sim.qubit_state is None:
        print(f"fock state: {sim.fock_final}")
        return EXIT_FAIL
    print(f"qubits: {' '.join(scheme.qubit_order)}")
    print(f"state: {sim.qubit_state}")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_pipeline(args.leaves)
    scheme = report.scheme
    print(f"caterpillar [{args.leaves}]: {scheme.n_qubits} qubits, {scheme.n_modes} modes, "
          f"{scheme.initial_bosons} initial bosons")
    print(f"directed PMs: {report.pm_count}")
    print(f"no-bunching: {'yes' if report.no_bunching else 'no'}")
    if report.qubit_state is not None:
        print(f"state ({len(report.qubit_state)} terms): {report.qubit_state}")
    if report.passed:
        print(f"PASS lambda={report.oracle_match}")
        return EXIT_OK
    print("FAIL output does not match the caterpillar graph state")
    return EXIT_FAIL


def cmd_pm(args) -> int:
    g = schemefile.read(args.scheme)
    if args.list:
        for pm in enumerate_directed_pms(g):
            print(" ".join(f"{s}->{t}" for s, t in pm.pairs()))
    else:
        print(count_directed_pms(g))
    return EXIT_OK


def cmd_check(args) -> int:
    g = schemefile.read(args.scheme)
    if args.which == "epm":
        report = check_epm(digraph_to_bigraph(g), semantic=args.semantic)
        for label, form in report.forms.items():
            print(f"{label}: {form}")
        if report.semantic_no_bunching is not None:
            print(f"simulated no-bunching: {'yes' if report.semantic_no_bunching else 'no'}")
        ok = report.passed and report.semantic_no_bunching is not False
    else:
        report = check_genuine_conditions(g)
        for label, flag in report.per_vertex_color_ok.items():
            note = " (exempt)" if label in report.exempt else ""
            print(f"{label}: {'ok' if flag else 'single color'}{note}")
        print(f"strongly connected: {'yes' if report.strongly_connected else 'no'}")
        ok = report.passed
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_path_digraph(args) -> int:
    if args.l < 1:
        print("error: path length must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    _emit(_render(path_digraph(args.l), args.format, f"P({args.l})"), args.out)
    return EXIT_OK


def cmd_ghz(args) -> int:
    if args.n < 2:
        print("error: GHZ needs n >= 2", file=sys.stderr)
        return EXIT_USAGE
    report = run_ghz(args.n)
    print(f"state: {report.qubit_state}")
    print(f"directed PMs: {report.pm_count}")
    print(f"relative sign of |1...1>: {report.relative_sign}")
    print(f"genuine-entanglement conditions: {'met' if report.genuine.passed else 'not met'}")
    print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sculptgraph",
        description="Compile caterpillar graph states into heralded sculpting schemes and verify them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="compile a caterpillar into a sculpting digraph")
    p.add_argument("--leaves", type=_leaves, required=True, help="leaf counts, e.g. 2,0,4")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("simulate", help="simulate a scheme file")
    p.add_argument("scheme")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="compile, simulate and compare with the graph-state oracle")
    p.add_argument("--leaves", type=_leaves, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pm", help="directed perfect matchings of a scheme file")
    p.add_argument("scheme")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the number of PMs (default)")
    mode.add_argument("--list", action="store_true", help="list every PM as source->target pairs")
    p.set_defaults(func=cmd_pm)

    p = sub.add_parser("check", help="structural checks on a scheme file")
    p.add_argument("scheme")
    p.add_argument("--which", choices=("epm", "genuine"), default="epm")
    p.add_argument("--semantic", action="store_true", help="also simulate and test no-bunching (epm)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("path-digraph", help="central path digraph of length l")
    p.add_argument("l", type=int)
    p.add_argument("--format", choices=("json", "dot"), default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_path_digraph)

    p = sub.add_parser("ghz", help="simulate the n-qubit GHZ scheme")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_ghz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SculptError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
