"""Command-line interface.

Subcommands: validate, cycles, count, synth, run, verify.  All outputs are
JSON on stdout (QASM goes to the file named by --qasm); diagnostics go to
stderr.  Exit codes: 0 success, 1 verification/validation failure, 2 usage
or input error.

Bitstring convention everywhere: character position i is edge i (leftmost
character is e_0), 1 = reference direction, 0 = reversed.  This matches
the little-endian qubit layout, so measured integers read directly as
orientation bitstrings.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import query as query_mod
from .qasm import export_qasm
from .topology import (
    Topology,
    TopologyError,
    chordless_cycles,
    enumerate_causal,
    validate_topology,
)


def _read_raw(path: str) -> dict:
    """Read and parse the file; failures here are input errors (exit 2)."""
    try:
        return json.loads(Path(path).read_text())
    except OSError as err:
        raise ValueError(f"cannot read {path}: {err}") from err
    except json.JSONDecodeError as err:
        raise ValueError(f"{path} is not valid JSON: {err}") from err


def _load_topology(path: str) -> Topology:
    return validate_topology(_read_raw(path))


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _iterations_arg(value: str):
    if value == "auto":
        return "auto"
    try:
        r = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'auto' or an integer, got {value!r}")
    if r < 0:
        raise argparse.ArgumentTypeError("iterations must be >= 0")
    return r


def _cmd_validate(args) -> int:
    raw = _read_raw(args.file)
    try:
        topology = validate_topology(raw)
    except TopologyError as err:
        print(f"invalid: {err}", file=sys.stderr)
        return 1
    _emit(
        {
            "name": topology.name,
            "valid": True,
            "vertices": len(topology.vertices),
            "edges": topology.n,
            "fixed": _fixed_dict(topology.fixed),
        }
    )
    return 0


def _fixed_dict(fixed):
    if fixed is None:
        return None
    return {"edge": fixed[0], "value": fixed[1]}


def _cmd_cycles(args) -> int:
    topology = _load_topology(args.file)
    payload = [
        {
            "edges": list(c.edges),
            "vertices": list(c.vertices),
            "alignments": list(c.alignments),
        }
        for c in chordless_cycles(topology)
    ]
    _emit(payload)
    return 0


def _cmd_count(args) -> int:
    topology = _load_topology(args.file)
    unconstrained = dataclasses.replace(topology, fixed=None)
    acyclic_total = len(enumerate_causal(unconstrained))
    effective = query_mod.effective_topology(topology)
    causal = len(enumerate_causal(effective))
    _emit(
        {
            "n": topology.n,
            "N": 1 << topology.n,
            "acyclic_total": acyclic_total,
            "causal_M": causal,
        }
    )
    return 0


def _cmd_synth(args) -> int:
    topology = _load_topology(args.file)
    plan, spec, circuit, _ = query_mod.build_query(topology, args.iterations)
    Path(args.qasm).write_text(export_qasm(circuit))
    layout = circuit.layout
    _emit(
        {
            "topology": topology.name,
            "qasm": args.qasm,
            "iterations": plan.r,
            "layout": {
                "n_e": layout.n_e,
                "n_c": layout.n_c,
                "n_a": layout.n_a,
                "out": layout.out_qubit,
                "total": layout.total,
            },
        }
    )
    return 0


def _cmd_run(args) -> int:
    topology = _load_topology(args.file)
    report = query_mod.run_query(
        topology,
        shots=args.shots,
        seed=args.seed,
        r=args.iterations,
        single_precision=args.single_precision,
    )
    _emit(report_to_dict(report, topology))
    return 0


def report_to_dict(report: query_mod.QueryReport, topology: Topology) -> dict:
    """The QueryReport JSON document."""
    return {
        "topology": report.topology,
        "N": report.plan.N,
        "M": report.plan.M,
        "r": report.plan.r,
        "theta": report.plan.theta,
        "p_success": report.plan.p_success,
        "prng": {"algorithm": report.prng_algorithm, "seed": report.seed},
        "shots": report.shots,
        "histogram": dict(sorted(report.histogram.counts.items())),
        "marked_fraction": report.marked_fraction,
        "causal_configurations": [
            {"bits": bits, "edges": query_mod.resolve_edges(topology, bits)}
            for bits in report.causal_configurations
        ],
        "wall_time_ms": report.wall_time_ms,
    }


def _cmd_verify(args) -> int:
    topology = _load_topology(args.file)
    report = query_mod.verify(topology)
    _emit(
        {
            "topology": report.topology,
            "passed": report.passed,
            "marked": list(report.marked),
            "expected": list(report.expected),
            "missing": list(report.missing),
            "extra": list(report.extra),
            "ancilla_leakage": report.ancilla_leakage,
        }
    )
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="causalgrover",
        description=(
            "Synthesize and simulate Grover queries for the causal (acyclic) "
            "orientations of a multiloop topology."
        ),
        epilog=(
            "Bitstrings: character i is edge i (leftmost = e_0); "
            "1 = reference direction, 0 = reversed."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a topology file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("cycles", help="list chordless cycles as JSON")
    p.add_argument("file")
    p.set_defaults(func=_cmd_cycles)

    p = sub.add_parser("count", help="count acyclic and causal orientations")
    p.add_argument("file")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("synth", help="compile the query and write OpenQASM 3.0")
    p.add_argument("file")
    p.add_argument("--qasm", required=True, metavar="OUT")
    p.add_argument("--iterations", type=_iterations_arg, default="auto")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("run", help="simulate the query and sample a histogram")
    p.add_argument("file")
    p.add_argument("--shots", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--iterations", type=_iterations_arg, default="auto")
    p.add_argument("--single-precision", action="store_true")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("verify", help="cross-check marked states against enumeration")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TopologyError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ValueError, MemoryError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
