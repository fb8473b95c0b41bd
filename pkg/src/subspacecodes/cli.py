"""Command-line front end.

Usage:
    subspacecodes enumerate --q 2 --m 2
    subspacecodes distance --q 2 --m 2 --a '[[0,1]]' --b '[[1,0]]'
    subspacecodes bounds --q 2 --m 2 --n 3 --d 1 --sweep 6
    subspacecodes multilevel --q 2 --m 2 --n 3 --d 2 --component odd-parity -o c3.json
    subspacecodes search --q 2 --m 2 --n 3 --d 2 --mode bnb
    subspacecodes verify --code c3.json --detect-weight 1
    subspacecodes embed --code c3.json

Payloads go to stdout (or ``--output``); diagnostics go to stderr.  Exit
status is 0 on success, 1 on a domain error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from typing import Sequence

from . import bounds, channel, multilevel, search
from .galois import field_of_order
from .multishot import MultishotCode, SubspaceTuple, embed
from .subspace import projective_space, rref, subspace_distance

FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=False) + "\n"


def _read_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _subspace_arg(field, m: int, text: str):
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--a/--b must be a JSON list of basis rows: {exc}") from None
    return rref(field, m, rows)


def cmd_enumerate(args) -> str:
    space = projective_space(field_of_order(args.q), args.m)
    fmt = args.format or "json"
    if fmt == "json":
        return _dump({"q": args.q, "m": args.m, "count": len(space), "subspaces": [V.to_json() for V in space]})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "dim", "basis"])
        for i, V in enumerate(space):
            w.writerow([i, V.dim, json.dumps(V.to_json(), separators=(",", ":"))])
        return buf.getvalue()
    return "".join(f"{i}\tdim={V.dim}\t{json.dumps(V.to_json(), separators=(',', ':'))}\n" for i, V in enumerate(space))


def cmd_distance(args) -> str:
    f = field_of_order(args.q)
    a, b = _subspace_arg(f, args.m, args.a), _subspace_arg(f, args.m, args.b)
    dist = subspace_distance(a, b)
    if (args.format or "json") == "json":
        return _dump({"a": a.to_json(), "b": b.to_json(), "distance": dist})
    return f"{dist}\n"


def cmd_bounds(args) -> str:
    dmax = args.sweep if args.sweep is not None else args.d
    if dmax < args.d:
        raise UsageError("--sweep must be at least --d")
    reports = [bounds.bounds_report(args.q, args.m, args.n, d) for d in range(args.d, dmax + 1)]
    fmt = args.format or "csv"
    if fmt == "json":
        return _dump([r.to_json() for r in reports])
    if fmt == "csv":
        return bounds.bounds_table(reports)
    return "".join(" ".join(f"{k}={v}" for k, v in r.row().items()) + "\n" for r in reports)


def _component_arg(value: str):
    if value in multilevel.FAMILIES:
        return value
    data = _read_json(value)
    if isinstance(data, dict):
        data = data.get("components", [data])
    return [multilevel.ComponentCode.from_json(c) for c in data]


def cmd_multilevel(args) -> str:
    space = projective_space(field_of_order(args.q), args.m)
    if args.tree:
        tree = multilevel.PartitionTree.from_json(_read_json(args.tree), space)
    else:
        tree = multilevel.default_tree(space)
    design = multilevel.plan(tree, args.n, args.d, _component_arg(args.component))
    code = multilevel.assemble(design)
    expected = multilevel.cardinality(design)
    if expected != len(code):
        raise ArithmeticError(f"assembled {len(code)} codewords but the cardinality formula gives {expected}")
    print(f"multilevel: cutoff L'={design.cutoff}, |C|={len(code)}", file=sys.stderr)
    if len(code) >= 2:
        print(f"multilevel: verified minimum distance {code.minimum_distance}", file=sys.stderr)
    if args.design_output:
        with open(args.design_output, "w") as fh:
            fh.write(_dump(design.to_json()))
    return _dump(code.to_json())


def cmd_search(args) -> str:
    mode = {"greedy": "greedy-lex", "bnb": "clique-bnb"}[args.mode]
    order = "seeded-shuffle" if args.shuffle else "canonical"
    config = search.SearchConfig(args.q, args.m, args.n, args.d, mode, args.budget, order, args.seed or 0)
    if mode == "greedy-lex":
        code, cert = search.greedy_code(config), None
    else:
        code, cert = search.max_code_bnb(config)
    print(f"search: {mode} found |C|={len(code)}", file=sys.stderr)
    out = code.to_json()
    if cert is not None:
        out["certificate"] = cert.to_json()
    return _dump(out)


def cmd_verify(args) -> str:
    code = MultishotCode.from_json(_read_json(args.code))
    report = channel.SimulationReport(code.q, code.m, code.n, len(code), code.minimum_distance if len(code) >= 2 else None)
    if args.detect_weight is not None:
        channel.verify_detection(code, args.detect_weight, report)
    if args.correct_weight is not None:
        channel.verify_correction(code, args.correct_weight, report)
    if args.samples:
        _sample_channel(code, args.samples, args.seed, report)
    return _dump(report.to_json())


def _sample_channel(code: MultishotCode, samples: int, seed: int | None, report: channel.SimulationReport) -> None:
    """Random single-shot weight-1 errors; counts detections (every sample must be flagged if d >= 2)."""
    rng = random.Random(seed)
    for _ in range(samples):
        word = rng.choice(code.codewords)
        weights = [0] * code.n
        weights[rng.randrange(code.n)] = 1
        received = channel.transmit(code, word, channel.ErrorEvent(tuple(weights)), rng)
        report.events_tested += 1
        if channel.detect(code, received) == "detected":
            report.detected += 1
        elif report.min_distance is not None and report.min_distance >= 2:
            report.failures.append({"kind": "undetected", "sent": word.to_json(), "received": received.to_json()})


def cmd_embed(args) -> str:
    code = MultishotCode.from_json(_read_json(args.code))
    image = MultishotCode(SubspaceTuple((embed(w),)) for w in code.codewords)
    return _dump(image.to_json())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="RNG seed for randomized steps")
    common.add_argument("-o", "--output", default=None, help="write the payload here instead of stdout")
    common.add_argument("--format", choices=FORMATS, default=None)

    parser = argparse.ArgumentParser(prog="subspacecodes", description="Multishot subspace codes for network coding.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    def qm(p: argparse.ArgumentParser) -> None:
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--m", type=int, required=True)

    def qmnd(p: argparse.ArgumentParser) -> None:
        qm(p)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)

    qm(add("enumerate", cmd_enumerate, "list P(F_q^m) in canonical order"))

    p = add("distance", cmd_distance, "subspace distance between two subspaces")
    qm(p)
    p.add_argument("--a", required=True, help="JSON list of basis rows")
    p.add_argument("--b", required=True, help="JSON list of basis rows")

    p = add("bounds", cmd_bounds, "bounds on the largest code size")
    qmnd(p)
    p.add_argument("--sweep", type=int, default=None, metavar="DMAX", help="report every d from --d to DMAX")

    p = add("multilevel", cmd_multilevel, "multilevel construction")
    qmnd(p)
    p.add_argument("--tree", default=None, help="partition tree JSON (default: dimension-parity tree)")
    p.add_argument("--component", default="parity", help="full|parity|odd-parity|repetition or a JSON file")
    p.add_argument("--design-output", default=None, help="also write the design JSON here")

    p = add("search", cmd_search, "greedy or branch-and-bound code search")
    qmnd(p)
    p.add_argument("--mode", choices=("greedy", "bnb"), default="greedy")
    p.add_argument("--budget", type=int, default=1_000_000, help="branch-and-bound node budget")
    p.add_argument("--shuffle", action="store_true", help="scan tuples in a seeded random order")

    p = add("verify", cmd_verify, "minimum distance and error-control sweeps of a code file")
    p.add_argument("--code", required=True)
    p.add_argument("--detect-weight", type=int, default=None)
    p.add_argument("--correct-weight", type=int, default=None)
    p.add_argument("--samples", type=int, default=0, help="random weight-1 channel trials (uses --seed)")

    p = add("embed", cmd_embed, "one-shot image of a code in P(F_q^{mn})")
    p.add_argument("--code", required=True)
    return parser


def _validate(args) -> None:
    for name in ("q", "m", "n", "d", "sweep", "budget", "detect_weight", "correct_weight", "samples"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be non-negative, got {value}")
    if getattr(args, "q", None) is not None and args.q < 2:
        raise UsageError(f"--q must be a prime power >= 2, got {args.q}")
    if getattr(args, "n", None) is not None and args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
        payload = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (ValueError, KeyError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
