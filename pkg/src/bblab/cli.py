"""Command-line front end: run, scan, check-sim, enumerate.

Exit codes: 0 clean completion, 1 a sought-for anomaly was found (scan
counterexample, simulation mismatch, undecided machines), 2 input or
space errors.  `--format json` emits one well-formed JSON document with
stable field names; timing fields are explicitly labeled and are the
only non-deterministic output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import machines, search, simcheck, ternary, tm
from .errors import BBLabError


def _load_machine(args) -> tm.MachineTable:
    if args.builtin:
        return machines.builtin(args.builtin)
    with open(args.file) as fh:
        return machines.parse_machine(fh.read(), name=args.file)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)


def _parse_window(spec: str) -> tuple[int, int]:
    lo, _, hi = spec.partition(":")
    return int(lo), int(hi)


def cmd_run(args) -> int:
    m = _load_machine(args)
    started = time.perf_counter()
    lines = []
    payload = {"command": "run", "machine": m.name, "budget": args.budget}
    if args.checkpoints:
        targets = sorted(int(x) for x in args.checkpoints.split(","))
        snaps = tm.run_trace(m, targets)
        payload["checkpoints"] = []
        for snap in snaps:
            window = tm.window_str(m, snap, snap.tape.lo, snap.tape.hi)
            payload["checkpoints"].append({
                "step": snap.step_count, "state": m.states[snap.state],
                "head": snap.head, "tape": window, "halted": snap.halted})
            lines.append(f"step {snap.step_count}: "
                         f"state {m.states[snap.state]}, head {snap.head}, "
                         f"tape [{snap.tape.lo}..{snap.tape.hi}] = {window}")
        final = snaps[-1]
        outcome = tm.RunOutcome("halted" if final.halted else "running",
                                final.step_count, final)
    else:
        outcome = tm.run(m, args.budget)
    payload["outcome"] = outcome.kind
    payload["steps"] = outcome.step_count
    if outcome.halted:
        lines.append(f"halted at {outcome.step_count}")
    else:
        lines.append(f"running after {outcome.step_count} steps")
    final = outcome.config
    payload["state"] = m.states[final.state]
    payload["head"] = final.head
    if args.show_window:
        lo, hi = _parse_window(args.show_window)
        window = " ".join(m.symbols[s] for s in tm.tape_window(final, lo, hi))
        payload["window"] = {"lo": lo, "hi": hi, "symbols": window}
        lines.append(window)
    payload["elapsed_seconds"] = time.perf_counter() - started
    _emit(args, payload, lines)
    return 0


def cmd_scan(args) -> int:
    report = ternary.scan_erdos(args.max_n)
    payload = {"command": "scan", **report.to_dict(),
               "elapsed_seconds": report.elapsed_seconds}
    lines = [f"scanned exponents 0..{report.bound}",
             "digit-2-free exponents: "
             + " ".join(str(n) for n in report.free_exponents)]
    if report.counterexample is not None:
        lines.append(f"counterexample exponent: {report.counterexample}")
    _emit(args, payload, lines)
    return 1 if report.counterexample is not None else 0


def cmd_check_sim(args) -> int:
    big = machines.builtin_m152()
    small = machines.builtin_m54()
    started = time.perf_counter()
    transcript = simcheck.verify_simulation(big, small,
                                            simcheck.DEFAULT_ENCODING,
                                            args.steps)
    payload = {
        "command": "check-sim", "steps": args.steps,
        "status": transcript.status, "verified_to": transcript.n_verified,
        "elapsed_seconds": time.perf_counter() - started,
    }
    if transcript.ok:
        f_n = transcript.time_scale(transcript.n_verified)
        payload["f"] = f_n
        lines = [f"verified, f({transcript.n_verified})={f_n}"]
    else:
        payload["mismatch"] = {k: str(v) for k, v in
                               transcript.mismatch.items()}
        lines = [transcript.summary()]
    _emit(args, payload, lines)
    return 0 if transcript.ok else 1


def cmd_enumerate(args) -> int:
    started = time.perf_counter()
    summary = search.enumerate_and_classify(args.n, args.k, args.budget,
                                            reduced=not args.raw)
    payload = {"command": "enumerate", **summary.to_dict(),
               "elapsed_seconds": time.perf_counter() - started}
    lines = [
        f"space: {args.n} states x {args.k} symbols, budget {args.budget}, "
        + ("raw" if args.raw else "reduced"),
        f"classified: {summary.total}",
        f"counts: {summary.counts}",
        f"BB candidate: {summary.max_steps}, "
        f"undecided: {summary.counts['undecided']}",
        "confirmed" if summary.confirmed else "NOT confirmed "
        "(undecided machines remain)",
    ]
    if summary.undecided and args.undecided_out:
        with open(args.undecided_out, "w") as fh:
            for m in summary.undecided:
                fh.write(machines.serialize_machine(m))
                fh.write("\n")
        lines.append(f"undecided machines written to {args.undecided_out}")
        payload["undecided_path"] = args.undecided_out
    _emit(args, payload, lines)
    return 0 if summary.confirmed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bblab",
        description="busy-beaver laboratory: run, scan, verify, enumerate")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a machine for a bounded number "
                                       "of steps")
    group = p_run.add_mutually_exclusive_group(required=True)
    group.add_argument("--builtin", choices=machines.BUILTIN_NAMES)
    group.add_argument("--file", help="machine file in the canonical format")
    p_run.add_argument("--budget", type=int, required=True)
    p_run.add_argument("--show-window", metavar="LO:HI",
                       help="print tape cells LO..HI after the run")
    p_run.add_argument("--checkpoints", metavar="N,N,...",
                       help="snapshot the configuration at these steps")
    p_run.set_defaults(func=cmd_run)

    p_scan = sub.add_parser("scan", help="scan powers of two for missing "
                                         "ternary digit 2")
    p_scan.add_argument("--max-n", type=int, required=True)
    p_scan.set_defaults(func=cmd_scan)

    p_sim = sub.add_parser("check-sim", help="verify the 2-symbol machine "
                                             "tracks the 4-symbol machine")
    p_sim.add_argument("--steps", type=int, required=True,
                       help="simulated (4-symbol) steps to verify")
    p_sim.set_defaults(func=cmd_check_sim)

    p_enum = sub.add_parser("enumerate", help="classify a whole machine "
                                              "space and report the max")
    p_enum.add_argument("-n", type=int, required=True, help="state count")
    p_enum.add_argument("-k", type=int, required=True, help="symbol count")
    p_enum.add_argument("--budget", type=int, required=True)
    p_enum.add_argument("--raw", action="store_true",
                        help="enumerate the full raw space instead of the "
                             "canonical subset")
    p_enum.add_argument("--undecided-out", metavar="PATH",
                        help="write undecided machines to this file")
    p_enum.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BBLabError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
