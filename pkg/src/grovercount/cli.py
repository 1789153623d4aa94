"""Command-line interface: ``grovercount {plan,simulate,sweep,bound,compare}``.

Exit codes: 0 on success, 1 on usage or domain errors, 2 when ``plan`` is
asked for a threshold that cannot be reached.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any, Optional, Sequence

from grovercount import planner
from grovercount.circuit import MAX_QUBITS, SearchSpec, build_grover
from grovercount.statevector import grover_success_curve, run_grover, success_probability_of

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNATTAINABLE = 2

JSON_DIGITS = 12
CSV_DIGITS = 10
# floating-point residue below this prints as an exact zero
ZERO_SNAP = 1e-14


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _round_sig(x: float, digits: int) -> float:
    if not math.isfinite(x) or abs(x) < ZERO_SNAP:
        return 0.0 if math.isfinite(x) else x
    return float(f"{x:.{digits}g}")


def _clean(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, float):
        return _round_sig(obj, JSON_DIGITS)
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def to_json(doc: Any) -> str:
    return json.dumps(_clean(doc), indent=2) + "\n"


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        x = _round_sig(v, CSV_DIGITS)
        return f"{x:.{CSV_DIGITS}g}"
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return ";".join(_csv_cell(x) for x in v)
    return str(v)


def to_csv(rows: Sequence[dict], header: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(row[h]) for h in header])
    return buf.getvalue()


def parse_targets(text: str, n: int) -> list[int]:
    """Comma-separated targets.

    A token of exactly ``n`` characters from {0, 1} is a ket-order bitstring
    (leftmost character is qubit n-1); any other run of digits is a decimal
    basis index.
    """
    out = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            raise UsageError(f"empty target in {text!r}")
        if len(tok) == n and set(tok) <= {"0", "1"}:
            out.append(int(tok, 2))
        elif tok.isdigit():
            out.append(int(tok))
        else:
            raise UsageError(f"target {tok!r} is neither a {n}-bit string nor a decimal index")
    return out


def resolve_spec(args) -> SearchSpec:
    if (args.targets is None) == (args.m is None):
        raise UsageError("give exactly one of --targets or --m")
    if args.targets is not None:
        return SearchSpec(args.n, tuple(parse_targets(args.targets, args.n)))
    N = 1 << args.n
    if not 1 <= args.m <= N:
        raise UsageError(f"--m must be in [1, {N}] for n={args.n}")
    return SearchSpec.random(args.n, args.m, seed=args.seed)


def _problem_size(args) -> tuple[int, int]:
    if args.targets is None and args.m is not None:
        N = 1 << args.n
        if not 1 <= args.m <= N:
            raise UsageError(f"--m must be in [1, {N}] for n={args.n}")
        return N, args.m
    spec = resolve_spec(args)
    return spec.N, spec.M


def _bound_doc(b: planner.BoundReport) -> dict:
    return {
        "rational": b.rational,
        "a_over_b": list(b.a_over_b) if b.a_over_b else None,
        "achievable_set": list(b.achievable_set) if b.achievable_set else None,
        "supremum": b.supremum,
        "supremum_attained": b.supremum_attained,
    }


def _emit(doc_or_rows, header, fmt: str, out) -> None:
    if fmt == "json":
        out.write(to_json(doc_or_rows))
    elif isinstance(doc_or_rows, dict):
        out.write(to_csv([doc_or_rows], header or list(doc_or_rows)))
    else:
        out.write(to_csv(doc_or_rows, header))


def cmd_plan(args, out) -> int:
    if args.delta is None:
        raise UsageError("plan requires --delta")
    N, M = _problem_size(args)
    pl = planner.plan(N, M, args.delta)
    kb = planner.baseline_k(N, M)
    doc = {
        "n": args.n,
        "N": N,
        "M": M,
        "theta": pl.theta,
        "delta": pl.delta,
        "p": pl.p_opt,
        "k": pl.k_opt,
        "predicted_success": pl.predicted_success,
        "attainable": pl.attainable,
        "degenerate_half": pl.degenerate_half,
        "baseline_k": kb,
        "baseline_success": planner.success_probability(pl.theta, kb),
        "reason": pl.reason,
        "bound": _bound_doc(pl.bound) if pl.bound else None,
    }
    if args.format == "csv":
        doc = {k: v for k, v in doc.items() if k != "bound"}
    _emit(doc, None, args.format, out)
    return EXIT_OK if pl.attainable else EXIT_UNATTAINABLE


def simulate_doc(spec: SearchSpec, k: int, per_state: bool = False) -> dict:
    state = run_grover(spec, k)
    probs = state.probabilities()
    success = success_probability_of(state, spec.targets)
    doc = {
        "n": spec.n,
        "N": spec.N,
        "M": spec.M,
        "k": k,
        "success_probability": success,
        "analytic_success": planner.success_probability(planner.theta(spec.N, spec.M), k),
        "per_target": [
            {"target": b, "probability": float(probs[t])}
            for b, t in zip(spec.bitstrings, spec.targets)
        ],
        "others_combined": max(0.0, 1.0 - success),
    }
    if per_state:
        doc["per_state"] = [float(p) for p in probs]
    return doc


def cmd_simulate(args, out) -> int:
    if args.k is None:
        raise UsageError("simulate requires --k")
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    spec = resolve_spec(args)
    doc = simulate_doc(spec, args.k, args.per_state)
    if args.dump_circuit:
        with open(args.dump_circuit, "w") as fh:
            fh.write(build_grover(spec, args.k).dump())
    if args.format == "csv":
        row = dict(doc)
        row["targets"] = [t["target"] for t in doc["per_target"]]
        row["per_target"] = [t["probability"] for t in doc["per_target"]]
        header = ["n", "N", "M", "k", "success_probability", "analytic_success",
                  "targets", "per_target", "others_combined"]
        if args.per_state:
            header.append("per_state")
        out.write(to_csv([row], header))
    else:
        out.write(to_json(doc))
    if args.plot:
        from grovercount.plotting import plot_target_split

        plot_target_split([f"k={args.k}"], [doc["success_probability"]], args.plot,
                          title=f"N={spec.N}, M={spec.M}")
    return EXIT_OK


SWEEP_HEADER = ["k", "analytic_success", "simulated_success"]


def sweep_rows(spec: SearchSpec, k_max: int) -> list[dict]:
    th = planner.theta(spec.N, spec.M)
    sim = grover_success_curve(spec, k_max)
    return [
        {"k": k, "analytic_success": planner.success_probability(th, k), "simulated_success": s}
        for k, s in enumerate(sim)
    ]


def cmd_sweep(args, out) -> int:
    if args.k_max is None:
        raise UsageError("sweep requires --k-max")
    if args.k_max < 0:
        raise UsageError("--k-max must be non-negative")
    spec = resolve_spec(args)
    rows = sweep_rows(spec, args.k_max)
    _emit(rows, SWEEP_HEADER, args.format, out)
    if args.plot:
        from grovercount.plotting import plot_sweep

        plot_sweep(rows, args.plot, title=f"N={spec.N}, M={spec.M}", delta=args.delta)
    return EXIT_OK


def cmd_bound(args, out) -> int:
    N, M = _problem_size(args)
    doc = {"n": args.n, "N": N, "M": M, "theta": planner.theta(N, M)}
    doc.update(_bound_doc(planner.achievable_bound(N, M)))
    _emit(doc, None, args.format, out)
    return EXIT_OK


COMPARE_HEADER = ["m", "baseline_k", "baseline_success", "k_opt", "opt_success", "delta",
                  "status"]


def compare_rows(n: int, delta: float) -> list[dict]:
    N = 1 << n
    rows = []
    for m in range(1, N + 1):
        th = planner.theta(N, m)
        kb = planner.baseline_k(N, m)
        pl = planner.plan(N, m, delta)
        if pl.degenerate_half:
            status = "degenerate"
        elif not pl.attainable:
            status = "unattainable"
        else:
            status = "ok"
        rows.append({
            "m": m,
            "baseline_k": kb,
            "baseline_success": planner.success_probability(th, kb),
            "k_opt": pl.k_opt,
            "opt_success": pl.predicted_success,
            "delta": delta,
            "status": status,
        })
    return rows


def cmd_compare(args, out) -> int:
    delta = 0.95 if args.delta is None else args.delta
    if not 0.0 < delta <= 1.0:
        raise UsageError("--delta must lie in (0, 1]")
    rows = compare_rows(args.n, delta)
    _emit(rows, COMPARE_HEADER, args.format, out)
    if args.plot:
        from grovercount.plotting import plot_compare

        plot_compare(rows, args.plot, title=f"N={1 << args.n}, threshold {delta:g}")
    return EXIT_OK


COMMANDS = {
    "plan": (cmd_plan, "json", "optimal iteration count for a success threshold"),
    "simulate": (cmd_simulate, "json", "exact statevector run for a fixed iteration count"),
    "sweep": (cmd_sweep, "csv", "analytic vs simulated success for k = 0..k-max"),
    "bound": (cmd_bound, "json", "achievable success probabilities for (n, m)"),
    "compare": (cmd_compare, "csv", "textbook vs planned iteration counts for every m"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grovercount",
                     description="Plan and simulate Grover's search with exact iteration counts.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, default_fmt, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--n", type=int, required=True, help="number of qubits")
        if name != "compare":
            g = p.add_mutually_exclusive_group()
            g.add_argument("--targets", help="comma-separated bitstrings (e.g. 1101,0011) "
                                             "or decimal indices")
            g.add_argument("--m", type=int, help="number of targets, drawn with --seed")
            p.add_argument("--seed", type=int, default=0, help="seed for --m target draws")
        if name in ("plan", "sweep", "compare"):
            p.add_argument("--delta", type=float, help="success threshold in (0, 1]")
        if name == "simulate":
            p.add_argument("--k", type=int, help="number of Grover iterations")
            p.add_argument("--per-state", action="store_true",
                           help="include all 2^n basis-state probabilities")
            p.add_argument("--dump-circuit", metavar="PATH",
                           help="write the gate list, one gate per line")
        if name == "sweep":
            p.add_argument("--k-max", type=int, help="largest iteration count in the sweep")
        if name in ("simulate", "sweep", "compare"):
            p.add_argument("--plot", metavar="PATH", help="also render a figure to PATH")
        p.add_argument("--format", choices=("json", "csv"), default=default_fmt)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    if not 1 <= args.n <= MAX_QUBITS:
        print(f"error: --n must be in [1, {MAX_QUBITS}]", file=sys.stderr)
        return EXIT_ERROR
    handler = COMMANDS[args.command][0]
    try:
        return handler(args, out)
    except (UsageError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
