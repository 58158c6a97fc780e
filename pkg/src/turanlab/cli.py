"""Command-line entry point: ``turanlab {count,contains,construct,formula,oracle,verify}``.

Exit status is 0 on success, 2 on usage errors and 1 when a verify audit
reports a violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from .constructions import ConstructionSpec, build
from .errors import TuranLabError
from .formulas import (
    DoubleStarParams,
    best_complete_bipartite,
    best_complete_bipartite_plus,
    cnc_value,
    count_in_complete_bipartite,
    f_value,
    klikks_value,
    r_value,
)
from .graph import Graph
from .graph6 import decode_graph6, encode_graph6
from .oracle import DEFAULT_WITNESS_LIMIT, ex_exhaustive, ex_stochastic
from .patterns import Pattern, contains_pattern, count_pattern
from .verify import LEMMAS, THEOREMS, audit_lemma, audit_theorem

FORMULA_KINDS = ("f", "bipartite", "best-bipartite", "best-bipartite-plus", "klikks", "r", "cnc")


class UsageError(Exception):
    pass


def _pattern_arg(text: str) -> Pattern:
    try:
        return Pattern.parse(text)
    except TuranLabError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _graph_arg(text: str) -> Graph:
    """``g6:<graph6>`` or any construction spec such as ``kbipartite:3,3``."""
    try:
        if text.startswith("g6:"):
            return decode_graph6(text[3:])
        return build(ConstructionSpec.parse(text))
    except TuranLabError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _spec_arg(text: str) -> ConstructionSpec:
    try:
        return ConstructionSpec.parse(text)
    except TuranLabError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="turanlab", description=__doc__.splitlines()[0], allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("count", help="count copies of a pattern", allow_abbrev=False)
    p.add_argument("--graph", type=_graph_arg, required=True, help="g6:<graph6> or a construction spec")
    p.add_argument("--pattern", type=_pattern_arg, required=True)
    common(p)

    p = sub.add_parser("contains", help="test whether a graph contains a pattern", allow_abbrev=False)
    p.add_argument("--graph", type=_graph_arg, required=True)
    p.add_argument("--pattern", type=_pattern_arg, required=True)
    common(p)

    p = sub.add_parser("construct", help="build a named construction", allow_abbrev=False)
    p.add_argument("--spec", type=_spec_arg, required=True)
    p.add_argument("--format", choices=("json", "csv", "graph6"), default="json")
    p.add_argument("--out")

    p = sub.add_parser("formula", help="evaluate a closed-form count", allow_abbrev=False)
    p.add_argument("--kind", choices=FORMULA_KINDS, required=True)
    for name in ("n", "m", "x", "y", "a", "b", "c", "d", "k"):
        p.add_argument(f"--{name}", type=int)
    common(p)

    p = sub.add_parser("oracle", help="compute ex(n, H, F)", allow_abbrev=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--H", type=_pattern_arg, required=True, help="pattern to count")
    p.add_argument("--F", type=_pattern_arg, help="forbidden pattern (omit for all graphs)")
    p.add_argument("--mode", choices=("exhaustive", "stochastic"), default="exhaustive")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--witness-limit", type=int, default=DEFAULT_WITNESS_LIMIT)
    p.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)
    p.add_argument("--dump", help="also write every enumerated graph as graph6 to this path")
    common(p)

    p = sub.add_parser("verify", help="audit a theorem or lemma", allow_abbrev=False)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--theorem", choices=THEOREMS)
    which.add_argument("--lemma", choices=LEMMAS)
    for name in ("a", "b", "c", "d", "k"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--F", type=_pattern_arg, help="forbidden pattern for cce")
    p.add_argument("--nmin", type=int)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)
    p.add_argument("--csv", dest="csv_out", help="also write the per-n table as CSV to this path")
    common(p)
    return parser


def _need(args: argparse.Namespace, *names: str) -> list[int]:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--kind {args.kind} requires {', '.join(missing)}")
    return [getattr(args, n) for n in names]


def _formula(args: argparse.Namespace) -> dict:
    kind = args.kind
    if kind == "r":
        a, b, c, d = _need(args, "a", "b", "c", "d")
        rv = r_value(a, b, c, d)
        return {
            "params": {"a": a, "b": b, "c": c, "d": d},
            "value": str(rv.r),
            "nice": rv.nice,
            "clique_term": str(rv.clique_term),
            "regular_term": str(rv.regular_term),
        }
    a, b = _need(args, "a", "b")
    p = DoubleStarParams.of(a, b)
    params: dict = {"a": p.a, "b": p.b}
    if kind == "f":
        x, y = _need(args, "x", "y")
        params.update(x=x, y=y)
        return {"params": params, "value": str(f_value(x, y, p))}
    if kind == "bipartite":
        m, n = _need(args, "m", "n")
        params.update(m=m, n=n)
        return {"params": params, "m": m, "value": str(count_in_complete_bipartite(m, n, p))}
    if kind in ("best-bipartite", "best-bipartite-plus"):
        (n,) = _need(args, "n")
        params["n"] = n
        fn = best_complete_bipartite if kind == "best-bipartite" else best_complete_bipartite_plus
        m, value = fn(n, p)
        return {"params": params, "m": m, "value": str(value)}
    if kind == "klikks":
        n, k = _need(args, "n", "k")
        params.update(n=n, k=k)
        return {"params": params, "value": str(klikks_value(n, k, p))}
    n, c = _need(args, "n", "c")
    params.update(n=n, c=c)
    return {"params": params, "m": c, "value": str(cnc_value(n, p, c))}


def _to_csv(obj: dict) -> str:
    flat = {}
    for key, value in obj.items():
        if isinstance(value, dict):
            for k2, v2 in value.items():
                flat[f"{key}.{k2}"] = v2
        elif isinstance(value, list):
            flat[key] = " ".join(str(v) for v in value)
        else:
            flat[key] = value
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(flat.keys())
    writer.writerow("" if v is None else v for v in flat.values())
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(obj: dict, fmt: str) -> str:
    if fmt == "csv":
        return _to_csv(obj)
    return json.dumps(obj) + "\n"


def run(args: argparse.Namespace) -> int:
    cmd = args.command
    if cmd == "count":
        _emit(_render({"value": str(count_pattern(args.graph, args.pattern))}, args.format), args.out)
        return 0
    if cmd == "contains":
        _emit(_render({"value": contains_pattern(args.graph, args.pattern)}, args.format), args.out)
        return 0
    if cmd == "construct":
        g = build(args.spec)
        if args.format == "graph6":
            _emit(encode_graph6(g) + "\n", args.out)
        else:
            obj = {"spec": str(args.spec), "n": g.n, "edges": g.num_edges(), "graph6": encode_graph6(g)}
            _emit(_render(obj, args.format), args.out)
        return 0
    if cmd == "formula":
        _emit(_render(_formula(args), args.format), args.out)
        return 0
    if cmd == "oracle":
        if args.mode == "exhaustive":
            if args.dump:
                from .oracle import enumerate_forbidden_free

                for _ in enumerate_forbidden_free(args.n, args.F, threads=args.threads, dump=args.dump):
                    pass
            record = ex_exhaustive(args.n, args.H, args.F, witness_limit=args.witness_limit, threads=args.threads)
        else:
            record = ex_stochastic(args.n, args.H, args.F, args.seed, args.budget, witness_limit=args.witness_limit)
        _emit(_render(record.to_dict(), args.format), args.out)
        return 0
    # verify
    if args.theorem:
        params = {name: getattr(args, name) for name in ("a", "b", "c", "d", "k") if getattr(args, name) is not None}
        if args.F is not None:
            params["F"] = args.F
        for name in ("a", "b"):
            if name not in params:
                raise UsageError(f"--theorem {args.theorem} requires --{name}")
        if args.theorem in ("neww", "cnc"):
            for name in ("c", "d"):
                if name not in params:
                    raise UsageError(f"--theorem {args.theorem} requires --{name}")
        if args.theorem == "klikks" and "k" not in params:
            raise UsageError("--theorem klikks requires --k")
        if args.theorem == "cce" and args.F is None:
            raise UsageError("--theorem cce requires --F")
        nmin = args.nmin if args.nmin is not None else args.nmax
        report = audit_theorem(args.theorem, params, range(nmin, args.nmax + 1), threads=args.threads)
    else:
        report = audit_lemma(args.lemma, args.nmax, threads=args.threads, n_min=args.nmin)
    text = report.to_csv() if args.format == "csv" else report.to_json()
    _emit(text, args.out)
    if args.csv_out:
        _emit(report.to_csv(), args.csv_out)
    return 1 if report.violated else 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except UsageError as exc:
        parser.exit(2, f"turanlab {args.command}: error: {exc}\n")
    except TuranLabError as exc:
        parser.exit(2, f"turanlab {args.command}: error: {exc}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
