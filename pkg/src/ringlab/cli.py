"""Command-line front door.

Subcommands compose over pipes: build emits a ring as JSON, graph and
export read one back from stdin. All JSON output is stable-key-ordered
and newline-terminated, so identical invocations produce identical
bytes. Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice

from .builders import (
    cyclic_ring,
    direct_product,
    first_row_ring,
    full_matrix_ring,
    null_ring,
)
from .enumeration import EnumerationTask, enum_cap, enumerate_order, enumerate_rings
from .errors import OrderTooLarge, RingLabError
from .rings import FiniteRing, ring_from_json
from .verify import has_failures, reports_to_jsonl, run_suite, summarize
from .zdgraph import build_graph, graph_to_dot, graph_to_json_dict

# orders past this need an explicit flag; they are exact but slow
LARGE_ORDER_THRESHOLD = 8


def _ring_from_spec(spec: str) -> FiniteRing:
    """Build a ring from a compact spec such as cyclic:6 or null:2,2."""
    name, _, arg_str = spec.partition(":")
    args = [int(a) for a in arg_str.split(",") if a] if arg_str else []
    if name == "cyclic" and len(args) == 1:
        return cyclic_ring(args[0])
    if name == "null" and args:
        return null_ring(args)
    if name == "first_row" and len(args) == 2:
        return first_row_ring(args[0], args[1])
    if name == "full_matrix" and len(args) == 2:
        return full_matrix_ring(args[0], args[1])
    raise RingLabError(f"cannot parse ring spec {spec!r}")


def _parse_orders(text: str) -> list[int]:
    """A single order or an inclusive A..B range."""
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            start, stop = int(lo), int(hi)
        else:
            start = stop = int(lo)
    except ValueError:
        raise RingLabError(f"cannot parse order range {text!r}") from None
    if start < 1 or stop < start:
        raise RingLabError(f"bad order range {text!r}")
    return list(range(start, stop + 1))


def _gate_orders(orders, allow_large: bool) -> None:
    top = max(orders, default=0)
    if top > enum_cap():
        raise OrderTooLarge(f"order {top} exceeds the enumeration cap {enum_cap()}")
    if top > LARGE_ORDER_THRESHOLD and not allow_large:
        raise RingLabError(
            f"order {top} exceeds {LARGE_ORDER_THRESHOLD}; pass --allow-large "
            "(exhaustive search grows steeply with the order)"
        )
    if top > LARGE_ORDER_THRESHOLD:
        print(f"warning: order {top} enumeration may take a long time", file=sys.stderr)


def _emit(text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    sys.stdout.write(text)


def _read_ring_stdin() -> FiniteRing:
    data = sys.stdin.read()
    if not data.strip():
        raise RingLabError("expected ring JSON on stdin")
    return ring_from_json(data)


def _cmd_build(args) -> int:
    family = args.family
    params = args.params
    if family == "cyclic":
        if len(params) != 1:
            raise RingLabError("cyclic takes one parameter: the order")
        ring = cyclic_ring(int(params[0]))
    elif family == "null":
        if not params:
            raise RingLabError("null takes the invariant factors, e.g. null 2 2")
        ring = null_ring([int(p) for p in params])
    elif family == "first_row":
        if len(params) != 2:
            raise RingLabError("first_row takes two parameters: width and modulus")
        ring = first_row_ring(int(params[0]), int(params[1]))
    elif family == "full_matrix":
        if len(params) != 2:
            raise RingLabError("full_matrix takes two parameters: size and prime")
        ring = full_matrix_ring(int(params[0]), int(params[1]))
    elif family == "product":
        if len(params) < 2:
            raise RingLabError("product takes two or more ring specs, e.g. cyclic:2 cyclic:3")
        factors = [_ring_from_spec(p) for p in params]
        ring = factors[0]
        for extra in factors[1:]:
            ring = direct_product(ring, extra)
    else:
        raise RingLabError(f"unknown family {family!r}")
    _emit(ring.to_json())
    return 0


def _cmd_enumerate(args) -> int:
    orders = _parse_orders(args.order)
    if len(orders) != 1:
        raise RingLabError("enumerate takes a single order, not a range")
    order = orders[0]
    _gate_orders([order], args.allow_large)
    if args.count:
        if args.no_dedup:
            task = EnumerationTask(order, dedup=False)
            total = sum(1 for _ in enumerate_rings(task))
        else:
            total = len(enumerate_order(order, shards=args.shards))
        _emit(str(total))
        return 0
    if args.no_dedup or args.limit is not None:
        task = EnumerationTask(order, dedup=not args.no_dedup)
        stream = enumerate_rings(task)
        if args.limit is not None:
            stream = islice(stream, args.limit)
        for ring in stream:
            _emit(ring.to_json())
        return 0
    for ring in enumerate_order(order, shards=args.shards):
        _emit(ring.to_json())
    return 0


def _cmd_graph(args) -> int:
    ring = _read_ring_stdin()
    graph = build_graph(ring)
    if args.dot:
        _emit(graph_to_dot(graph))
    else:
        _emit(json.dumps(graph_to_json_dict(graph), sort_keys=True))
    return 0


def _cmd_verify(args) -> int:
    orders = _parse_orders(args.orders) if args.orders else []
    if orders:
        _gate_orders(orders, args.allow_large)
    claims = []
    for chunk in args.claims or []:
        claims.extend(c for c in chunk.split(",") if c)
    reports = run_suite(
        orders=orders,
        include_families=not args.no_families,
        claims=claims or None,
        convention=args.convention,
        fail_fast=args.fail_fast,
    )
    if args.jsonl:
        sys.stdout.write(reports_to_jsonl(reports))
    else:
        sys.stdout.write(summarize(reports))
    return 1 if has_failures(reports) else 0


def _cmd_export(args) -> int:
    ring = _read_ring_stdin()
    if args.format == "ring":
        payload = ring.to_json() + "\n"
    elif args.format == "graph":
        payload = json.dumps(graph_to_json_dict(build_graph(ring)), sort_keys=True) + "\n"
    else:
        payload = graph_to_dot(build_graph(ring))
    if args.out == "-":
        sys.stdout.write(payload)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="finite rings, their zero-divisor graphs, and claim verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="emit a family ring as JSON")
    p_build.add_argument("family",
                         choices=["cyclic", "null", "first_row", "full_matrix", "product"])
    p_build.add_argument("params", nargs="*",
                         help="family parameters; product takes specs like cyclic:6")
    p_build.set_defaults(func=_cmd_build)

    p_enum = sub.add_parser("enumerate", help="enumerate rings of one order as JSONL")
    p_enum.add_argument("order", help="ring order")
    p_enum.add_argument("--no-dedup", action="store_true",
                        help="emit every table found, not one per isomorphism class")
    p_enum.add_argument("--limit", type=int, default=None, help="stop after this many rings")
    p_enum.add_argument("--count", action="store_true", help="print only the count")
    p_enum.add_argument("--shards", type=int, default=None,
                        help="parallel worker count (output is identical regardless)")
    p_enum.add_argument("--allow-large", action="store_true",
                        help=f"permit orders above {LARGE_ORDER_THRESHOLD}")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_graph = sub.add_parser("graph", help="ring JSON on stdin to graph JSON or DOT")
    p_graph.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p_graph.set_defaults(func=_cmd_graph)

    p_verify = sub.add_parser("verify", help="run the claim suite, exit 1 on any fail")
    p_verify.add_argument("--orders", default=None, help="inclusive range A..B or one order")
    p_verify.add_argument("--claims", action="append", default=None,
                          help="comma-separated claim ids; repeatable")
    p_verify.add_argument("--convention", choices=["simple", "loop", "both"], default="both",
                          help="loop handling for edge-count comparisons")
    p_verify.add_argument("--fail-fast", action="store_true",
                          help="stop at the first fail verdict")
    p_verify.add_argument("--no-families", action="store_true",
                          help="skip the built family rings")
    p_verify.add_argument("--jsonl", action="store_true",
                          help="one JSON report per line instead of the table")
    p_verify.add_argument("--allow-large", action="store_true",
                          help=f"permit orders above {LARGE_ORDER_THRESHOLD}")
    p_verify.set_defaults(func=_cmd_verify)

    p_export = sub.add_parser("export", help="re-emit a ring from stdin in another format")
    p_export.add_argument("--format", choices=["ring", "graph", "dot"], default="graph")
    p_export.add_argument("--out", default="-", help="output path, - for stdout")
    p_export.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OrderTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RingLabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
