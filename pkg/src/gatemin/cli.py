"""Command-line front end: synth, verify, bench, baseline, emit-gams."""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional

from .baseline import ExpansionKind, expand
from .circuit import verify
from .emit import circuit_from_json, circuit_to_dict, emit_dot, emit_gams, emit_json
from .model import encode
from .problem import ProblemFormatError, grow, load_problem
from .search import (FEASIBLE, INFEASIBLE, OPTIMAL, TIMEOUT, SearchConfig,
                     SolveResult, solve_and_check)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_TIMEOUT = 3

_TIME_SUFFIX = {"s": 1.0, "m": 60.0, "h": 3600.0}


def parse_time_limit(text: str) -> float:
    s = text.strip().lower()
    scale = 1.0
    if s and s[-1] in _TIME_SUFFIX:
        scale = _TIME_SUFFIX[s[-1]]
        s = s[:-1]
    try:
        value = float(s) * scale
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad time limit {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("time limit must be positive")
    return value


def _result_dict(result: SolveResult) -> Dict:
    data = {
        "status": result.status,
        "cost": result.cost,
        "nodes_explored": result.nodes_explored,
        "wall_time": round(result.wall_time, 6),
    }
    if result.circuit is not None:
        data["circuit"] = circuit_to_dict(result.circuit)
    return data


def _exit_code(status: str) -> int:
    return {OPTIMAL: EXIT_OK, FEASIBLE: EXIT_OK,
            INFEASIBLE: EXIT_INFEASIBLE, TIMEOUT: EXIT_TIMEOUT}[status]


def _write_artifacts(args, spec, arch, mode, result: SolveResult) -> None:
    stem = Path(args.spec).stem if isinstance(args.spec, str) else "result"
    outdir = Path(args.out) if args.out else Path(".")
    outdir.mkdir(parents=True, exist_ok=True)
    for target in args.emit or []:
        if target == "json" and result.circuit is not None:
            (outdir / f"{stem}.circuit.json").write_text(emit_json(result.circuit))
        elif target == "dot" and result.circuit is not None:
            (outdir / f"{stem}.dot").write_text(emit_dot(result.circuit))
        elif target == "gams":
            (outdir / f"{stem}.gms").write_text(emit_gams(encode(spec, arch, mode)))


def cmd_synth(args) -> int:
    try:
        spec, arch, mode = load_problem(args.spec)
    except (OSError, ProblemFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.objective:
        mode = args.objective
    config = SearchConfig(time_limit=args.time_limit, threads=args.threads,
                          initial_upper_bound=args.upper_bound)
    attempts = 0
    while True:
        result = solve_and_check(encode(spec, arch, mode), config)
        if result.status != INFEASIBLE or attempts >= args.grow:
            break
        attempts += 1
        print(f"infeasible on {list(arch.per_level_width)}; growing "
              f"(attempt {attempts}/{args.grow})", file=sys.stderr)
        arch = grow(arch, attempts)
    _write_artifacts(args, spec, arch, mode, result)
    print(json.dumps(_result_dict(result), indent=2))
    return _exit_code(result.status)


def cmd_verify(args) -> int:
    try:
        spec, _, mode = load_problem(args.spec)
        circuit = circuit_from_json(Path(args.circuit).read_text())
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = verify(circuit, spec, mode)
    print(json.dumps({
        "pass": report.passed,
        "cost": report.cost,
        "mismatches": [list(m) for m in report.mismatches],
    }, indent=2))
    return EXIT_OK if report.passed else EXIT_INFEASIBLE


def cmd_baseline(args) -> int:
    try:
        spec, _, mode = load_problem(args.spec)
    except (OSError, ProblemFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    kind = ExpansionKind(args.kind)
    report = []
    for q, f in enumerate(spec.outputs):
        circuit = expand(f, spec.n, kind)
        single = spec.__class__(spec.n, (f,), spec.dc.__class__(spec.n, 0))
        check = verify(circuit, single, mode)
        if not check.passed:
            print(f"error: baseline circuit for output {q} failed verification",
                  file=sys.stderr)
            return EXIT_USAGE
        report.append({
            "output": q,
            "cost": check.cost,
            "bound_3n": 3 ** spec.n,
            "circuit": circuit_to_dict(circuit),
        })
    print(json.dumps({"kind": kind.value, "outputs": report}, indent=2))
    return EXIT_OK


def cmd_emit_gams(args) -> int:
    try:
        spec, arch, mode = load_problem(args.spec)
        text = emit_gams(encode(spec, arch, mode),
                         reslim=args.reslim, threads=args.threads)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def load_suite(path: Optional[str]) -> List[Dict]:
    if path:
        data = json.loads(Path(path).read_text())
    else:
        data = json.loads(
            resources.files("gatemin.data").joinpath("table1.json").read_text())
    return data["cases"]


def cmd_bench(args) -> int:
    try:
        cases = load_suite(args.suite)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    for case in cases:
        if case.get("stretch") and not args.stretch:
            rows.append((case["name"], "skipped (stretch)", "-",
                         case.get("reference_cost", "-"), "", "-"))
            continue
        spec, arch, mode = load_problem(case["spec"])
        limit = args.time_limit or case.get("time_limit")
        config = SearchConfig(
            time_limit=limit, threads=args.threads,
            initial_upper_bound=case.get("reference_cost"))
        started = time.monotonic()
        result = solve_and_check(encode(spec, arch, mode), config)
        elapsed = time.monotonic() - started
        ref = case.get("reference_cost")
        flag = ""
        if result.cost is not None and ref is not None and result.cost > ref:
            flag = "WORSE-THAN-REFERENCE"
        elif result.cost is None:
            flag = "NO-CIRCUIT"
        rows.append((case["name"], result.status,
                     "-" if result.cost is None else result.cost,
                     "-" if ref is None else ref, flag, f"{elapsed:.1f}s"))
    header = ("case", "status", "cost", "reference", "flag", "time")
    widths = [max(len(str(row[i])) for row in rows + [header])
              for i in range(len(header))]
    for row in [header] + rows:
        print("  ".join(str(col).ljust(w) for col, w in zip(row, widths)).rstrip())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gatemin",
        description="Exact synthesis of minimal multi-level two-input gate circuits.")
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="encode, solve and verify a problem file")
    synth.add_argument("spec", help="problem JSON file")
    synth.add_argument("--time-limit", type=parse_time_limit, default=None,
                       help="wall-clock budget, e.g. 30s, 10m, 2h")
    synth.add_argument("--threads", type=int, default=1)
    synth.add_argument("--objective", choices=["gate-count", "transistor"])
    synth.add_argument("--emit", action="append", choices=["dot", "gams", "json"])
    synth.add_argument("--out", help="directory for emitted artifacts")
    synth.add_argument("--grow", type=int, default=0, metavar="N",
                       help="retry up to N enlarged architectures when infeasible")
    synth.add_argument("--upper-bound", type=int, default=None,
                       help="known feasible cost used to steer the incumbent dive")
    synth.set_defaults(func=cmd_synth)

    ver = sub.add_parser("verify", help="check a circuit JSON against a problem file")
    ver.add_argument("circuit")
    ver.add_argument("spec")
    ver.set_defaults(func=cmd_verify)

    base = sub.add_parser("baseline", help="constructive expansion upper bound")
    base.add_argument("spec")
    base.add_argument("--kind", default="shannon",
                      choices=[k.value for k in ExpansionKind])
    base.set_defaults(func=cmd_baseline)

    gams = sub.add_parser("emit-gams", help="emit the GAMS model for a problem file")
    gams.add_argument("spec")
    gams.add_argument("--reslim", type=int, default=500)
    gams.add_argument("--threads", type=int, default=4)
    gams.add_argument("--out")
    gams.set_defaults(func=cmd_emit_gams)

    bench = sub.add_parser("bench", help="run a benchmark suite")
    bench.add_argument("suite", nargs="?", default=None,
                       help="suite JSON (defaults to the built-in table)")
    bench.add_argument("--stretch", action="store_true",
                       help="also run cases marked as stretch targets")
    bench.add_argument("--threads", type=int, default=1)
    bench.add_argument("--time-limit", type=parse_time_limit, default=None,
                       help="override per-case budgets")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RuntimeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
