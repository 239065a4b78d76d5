"""Command-line interface: energy computation, derived-graph construction,
and verification of the closed-form scaling laws.

Exit codes: 0 success (all checks passed for verify), 1 verification
failure, 2 usage or input error.  Floating-point values in JSON/CSV output
carry 15 significant digits.  The VEL_EIG_TOL environment variable
overrides the eigensolver tolerance (default 1e-12).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .derived import m_shadow, m_splitting
from .graphs import (
    Graph,
    GraphFormatError,
    adjacency_matrix,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    to_graph6,
    vertex_label,
)
from .spectral import DEFAULT_EIG_TOL, eigendecompose_symmetric, graph_energy, vertex_energies
from .verify import DEFAULT_TOL, run_suite

SCHEMA_VERSION = "1.0"
EIG_TOL_ENV = "VEL_EIG_TOL"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


class InputError(Exception):
    """Unreadable or undecodable input; maps to exit code 2."""


def _round15(x: float) -> float:
    """Round a float to 15 significant digits (the emitted precision)."""
    return float(f"{x:.15g}")


def _fmt15(x: float) -> str:
    return f"{_round15(x):.15g}"


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read_source(path)
    if fmt == "graph6":
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise InputError(
                f"expected exactly one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _eig_tol() -> float:
    raw = os.environ.get(EIG_TOL_ENV)
    if raw is None:
        return DEFAULT_EIG_TOL
    try:
        value = float(raw)
    except ValueError:
        raise InputError(f"invalid {EIG_TOL_ENV}={raw!r}: not a number") from None
    if not value > 0.0:
        raise InputError(f"invalid {EIG_TOL_ENV}={raw!r}: must be positive")
    return value


def _record(command: str, inputs: dict, results: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }


def _emit_json(record: dict) -> None:
    print(json.dumps(record, indent=2))


def _emit_graph(g: Graph, fmt: str) -> str:
    return to_graph6(g) + "\n" if fmt == "graph6" else format_edge_list(g)


# ---------------------------------------------------------------------------
# energy
# ---------------------------------------------------------------------------

def _cmd_energy(args: argparse.Namespace) -> int:
    eig_tol = _eig_tol()
    g = _load_graph(args.input, args.format)
    if g.n == 0:
        energies: list[float] = []
        total = 0.0
    else:
        spectrum = eigendecompose_symmetric(adjacency_matrix(g), eig_tol)
        energies = [float(v) for v in vertex_energies(spectrum)]
        total = graph_energy(spectrum)
    record = _record(
        "energy",
        {"source": args.input, "format": args.format,
         "eig_tol": _round15(eig_tol)},
        {"n": g.n, "edge_count": g.num_edges,
         "vertex_energies": [_round15(v) for v in energies],
         "total_energy": _round15(total)},
    )
    if args.output == "json":
        _emit_json(record)
    elif args.output == "csv":
        print("vertex,energy")
        for k, v in enumerate(energies):
            print(f"{k},{_fmt15(v)}")
        print(f"total,{_fmt15(total)}")
    else:
        print("vertex  energy")
        for k, v in enumerate(energies):
            print(f"{k:<6d}  {_fmt15(v)}")
        print(f"total   {_fmt15(total)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# derive
# ---------------------------------------------------------------------------

def _cmd_derive(args: argparse.Namespace) -> int:
    if args.m < 1:
        raise InputError(f"--m must be >= 1, got {args.m}")
    g = _load_graph(args.input, args.format)
    derived = m_splitting(g, args.m) if args.op == "splitting" else m_shadow(g, args.m)
    labels = []
    for flat in range(derived.n):
        label = vertex_label(flat, g.n)
        labels.append({"flat": flat, "copy": label.copy_index,
                       "base": label.base_index})
    graph_text = _emit_graph(derived, args.emit)
    record = _record(
        "derive",
        {"source": args.input, "format": args.format, "op": args.op,
         "m": args.m, "emit": args.emit},
        {"base_n": g.n, "n": derived.n, "edge_count": derived.num_edges,
         "graph": graph_text, "labels": labels},
    )
    if args.output == "json":
        _emit_json(record)
    elif args.output == "csv":
        print("flat,copy,base")
        for row in labels:
            print(f"{row['flat']},{row['copy']},{row['base']}")
    else:
        sys.stdout.write(graph_text)
        print()
        print("flat  copy  base")
        for row in labels:
            print(f"{row['flat']:<4d}  {row['copy']:<4d}  {row['base']}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _cmd_verify(args: argparse.Namespace) -> int:
    eig_tol = _eig_tol()
    if args.m_max < 0:
        raise InputError(f"--m-max must be >= 0, got {args.m_max}")
    if not args.tol > 0.0:
        raise InputError(f"--tol must be positive, got {args.tol}")
    if args.corpus is not None and args.input is not None:
        raise InputError("give either an input graph or --corpus=default, not both")
    m_values = tuple(range(1, args.m_max + 1))
    if args.corpus is not None:
        inputs: dict = {"corpus": args.corpus, "seed": args.seed}
        reports = run_suite(None, m_values, args.tol, args.seed, eig_tol=eig_tol)
    elif args.input is not None:
        descriptor = "stdin" if args.input == "-" else args.input
        g = _load_graph(args.input, args.format)
        inputs = {"source": args.input, "format": args.format}
        reports = run_suite([(g, descriptor)], m_values, args.tol, args.seed,
                            eig_tol=eig_tol)
    else:
        raise InputError("nothing to verify: give an input graph or --corpus=default")
    inputs.update({"m_max": args.m_max, "tol": _round15(args.tol),
                   "eig_tol": _round15(eig_tol)})
    all_passed = all(r.passed for r in reports)

    if args.output == "json":
        payload = []
        for r in reports:
            row = {"claim_id": r.claim_id, "graph": r.graph_descriptor, "m": r.m,
                   "max_abs_deviation": _round15(r.max_abs_deviation),
                   "tolerance": _round15(r.tolerance), "passed": r.passed}
            if r.per_vertex_deviations is not None:
                row["per_vertex_deviations"] = [
                    _round15(d) for d in r.per_vertex_deviations]
            payload.append(row)
        _emit_json(_record("verify", inputs,
                           {"passed": all_passed, "report_count": len(reports),
                            "reports": payload}))
    elif args.output == "csv":
        print("claim_id,graph,m,max_abs_deviation,tolerance,passed")
        for r in reports:
            print(f"{r.claim_id},{r.graph_descriptor},{r.m},"
                  f"{_fmt15(r.max_abs_deviation)},{_fmt15(r.tolerance)},{r.passed}")
    else:
        width = max(len(r.graph_descriptor) for r in reports)
        print(f"{'claim':<24}  {'graph':<{width}}  m  {'max_dev':>12}  "
              f"{'tol':>9}  status")
        for r in reports:
            print(f"{r.claim_id:<24}  {r.graph_descriptor:<{width}}  {r.m}  "
                  f"{r.max_abs_deviation:>12.3e}  {r.tolerance:>9.1e}  "
                  f"{'PASS' if r.passed else 'FAIL'}")
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{len(reports)} checks passed")
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vel",
        description="Vertex energies of graphs and their splitting/shadow "
                    "derived graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    energy = sub.add_parser(
        "energy", help="per-vertex energies and total energy of a graph")
    energy.add_argument("input", nargs="?", default="-",
                        help="input path, or '-' for stdin (default)")
    energy.add_argument("--format", choices=("edgelist", "graph6"),
                        default="edgelist", help="input encoding")
    energy.add_argument("--output", choices=("text", "json", "csv"),
                        default="text")
    energy.set_defaults(func=_cmd_energy)

    derive = sub.add_parser(
        "derive", help="construct the m-splitting or m-shadow graph")
    derive.add_argument("input", nargs="?", default="-")
    derive.add_argument("--format", choices=("edgelist", "graph6"),
                        default="edgelist")
    derive.add_argument("--op", choices=("splitting", "shadow"), required=True)
    derive.add_argument("--m", type=int, default=1, help="number of copies")
    derive.add_argument("--emit", choices=("edgelist", "graph6"),
                        default="edgelist", help="output graph encoding")
    derive.add_argument("--output", choices=("text", "json", "csv"),
                        default="text")
    derive.set_defaults(func=_cmd_derive)

    verify = sub.add_parser(
        "verify", help="certify the scaling laws numerically")
    verify.add_argument("input", nargs="?", default=None,
                        help="input path or '-'; mutually exclusive with --corpus")
    verify.add_argument("--corpus", choices=("default",), default=None,
                        help="verify the built-in graph corpus")
    verify.add_argument("--format", choices=("edgelist", "graph6"),
                        default="edgelist")
    verify.add_argument("--m-max", dest="m_max", type=int, default=4)
    verify.add_argument("--tol", type=float, default=DEFAULT_TOL)
    verify.add_argument("--seed", type=int, default=42,
                        help="seed for the default corpus's random graphs")
    verify.add_argument("--output", choices=("text", "json", "csv"),
                        default="text")
    verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphFormatError) as exc:
        print(f"vel {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
