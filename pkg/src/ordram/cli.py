"""Command-line interface: construct, verify, solve, bound, analyze.

Exit codes: 0 success / avoiding, 1 verified violation, 2 usage or parse
error, 3 I/O failure.  All output is ASCII with stable field order.  The
results ledger is an append-only text file `results.ledger` inside the
ledger directory (flag --ledger or environment variable ORDRAM_LEDGER),
one record per solved instance:

  result <demand-digest> N=<v> status=<exact|lo> nodes=<n> seconds=<s> witness=<relpath>
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
from collections import Counter
from pathlib import Path

from . import bounds as bounds_mod
from . import constructions
from .containment import avoids
from .core import (
    FormatError,
    OrderedGraph,
    ParameterError,
    SchemeSpec,
    bandwidth,
    build_scheme,
    coloring_to_oc,
    degeneracy,
    edge_lengths,
    graph_to_og,
    interval_chromatic_number,
    is_decomposable,
    oc_to_coloring,
    og_to_graph,
)
from .solver import Budget, ramsey_number

TOOL_VERSION = "ordram 0.1.0"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_IO = 3


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Pattern mini-language
# ---------------------------------------------------------------------------


def _int_params(text: str, field: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad integer parameters in {field}: {text!r}") from exc


def parse_pattern(spec: str) -> OrderedGraph:
    """Parse `mon-path:5`, `star:3,2`, `c4:B`, `file:path.og` and friends."""
    if ":" not in spec:
        raise UsageError(f"pattern spec needs a ':': {spec!r}")
    head, rest = spec.split(":", 1)
    if head == "file":
        try:
            text = Path(rest).read_text(encoding="ascii")
        except OSError as exc:
            raise UsageError(f"cannot read pattern file {rest!r}: {exc}") from exc
        return og_to_graph(text)
    if head == "c4":
        return build_scheme(SchemeSpec("c4", (rest,)))
    if head in ("mon-path", "alt-path", "mon-cycle", "star", "matching-shift",
                "matching-nest", "complete", "multipartite"):
        return build_scheme(SchemeSpec(head, _int_params(rest, head)))
    raise UsageError(f"unknown pattern family {head!r}")


def pattern_spec_string(pattern: OrderedGraph) -> str:
    """Canonical mini-language string; generic patterns serialize explicitly."""
    n = pattern.n
    from .core import (
        alternating_path,
        c4_ordering,
        complete,
        matching_nest,
        matching_shift,
        monotone_cycle,
        monotone_path,
        star,
    )

    if pattern.edges == monotone_path(n).edges:
        return f"mon-path:{n}"
    if n >= 2 and pattern.edges == alternating_path(n).edges:
        return f"alt-path:{n}"
    if n >= 3 and pattern.edges == monotone_cycle(n).edges:
        return f"mon-cycle:{n}"
    if pattern.edges == complete(n).edges and n >= 3:
        return f"complete:{n}"
    if n == 4:
        for which in "ABC":
            if pattern.edges == c4_ordering(which).edges:
                return f"c4:{which}"
    if n >= 2 and n % 2 == 0:
        if pattern.edges == matching_shift(n).edges:
            return f"matching-shift:{n}"
        if pattern.edges == matching_nest(n).edges:
            return f"matching-nest:{n}"
    for s in range(1, n + 1):
        if pattern.edges == star(n - s + 1, s).edges:
            return f"star:{n - s + 1},{s}"
    body = ",".join(f"{i}-{j}" for i, j in pattern.sorted_edges())
    return f"og{n}({body})"


def parse_demand(text: str):
    """`<pattern-spec>:<color>` -> (OrderedGraph, color)."""
    head, _, tail = text.rpartition(":")
    if not head:
        raise UsageError(f"demand needs a trailing color: {text!r}")
    try:
        color = int(tail)
    except ValueError as exc:
        raise UsageError(f"bad demand color in {text!r}") from exc
    if color < 1:
        raise UsageError(f"demand color must be >= 1: {text!r}")
    return parse_pattern(head), color


def demand_digest(demands) -> str:
    """Canonical order-independent serialization of a demand list."""
    return "+".join(
        sorted(f"{pattern_spec_string(p)}@{col}" for p, col in demands)
    )


# ---------------------------------------------------------------------------
# Ledger
# ---------------------------------------------------------------------------


def ledger_dir(args) -> Path:
    if getattr(args, "ledger", None):
        return Path(args.ledger)
    env = os.environ.get("ORDRAM_LEDGER")
    if env:
        return Path(env)
    return Path("ordram-ledger")


def ledger_file(directory: Path) -> Path:
    return directory / "results.ledger"


def read_ledger(directory: Path) -> list:
    path = ledger_file(directory)
    if not path.exists():
        return []
    entries = []
    for line in path.read_text(encoding="ascii").splitlines():
        parts = line.split()
        if len(parts) != 7 or parts[0] != "result":
            continue
        fields = dict(p.split("=", 1) for p in parts[2:])
        entries.append(
            {
                "digest": parts[1],
                "N": int(fields["N"]),
                "status": fields["status"],
                "nodes": int(fields["nodes"]),
                "seconds": float(fields["seconds"]),
                "witness": fields["witness"],
            }
        )
    return entries


def append_ledger(directory: Path, digest: str, value: int, status: str,
                  nodes: int, seconds: float, witness: str) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    line = (
        f"result {digest} N={value} status={status} nodes={nodes} "
        f"seconds={seconds:.3f} witness={witness}\n"
    )
    with open(ledger_file(directory), "a", encoding="ascii", newline="\n") as fh:
        fh.write(line)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_construct(args) -> int:
    name = args.name
    params = args.params
    try:
        if name == "monotone-cycle":
            cert = constructions.monotone_cycle_construction(*_ints(params, 2))
        elif name == "alt-parity":
            cert = constructions.alternating_parity(*_ints(params, 1))
        elif name == "star":
            cert = constructions.star_coloring(*_ints(params))
        elif name == "mon-path-grid":
            cert = constructions.monotone_path_grid(*_ints(params))
        elif name == "star-blowup":
            cert = constructions.star_blowup(*_ints(params, 3))
        elif name == "matching":
            r, k = _ints(params, 2)
            base = None
            if args.base:
                base = oc_to_coloring(Path(args.base).read_text(encoding="ascii"))
            level = constructions.matching_construction(r, k, base)
            cert = level.certified
            pattern_path = Path(args.out).with_suffix(".og")
            pattern_path.write_text(graph_to_og(level.matching), encoding="ascii")
            print(f"pattern {pattern_path}")
        else:
            print(f"unknown construction {name!r}", file=sys.stderr)
            return EXIT_USAGE
    except (ParameterError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cert.write_oc(args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"construction {cert.name} {' '.join(str(p) for p in cert.params)}")
    print(f"vertices {cert.coloring.N} colors {cert.coloring.c}")
    for pattern, color in cert.avoided:
        print(f"avoids {pattern_spec_string(pattern)}:{color}")
    print(f"wrote {args.out}")
    return EXIT_OK


def _ints(params, expect: int | None = None) -> tuple:
    try:
        values = tuple(int(p) for p in params)
    except ValueError as exc:
        raise UsageError(f"integer parameters expected: {params}") from exc
    if expect is not None and len(values) != expect:
        raise UsageError(f"expected {expect} parameters, got {len(values)}")
    return values


def cmd_verify(args) -> int:
    try:
        coloring = oc_to_coloring(Path(args.coloring).read_text(encoding="ascii"))
        demands = [parse_demand(d) for d in args.avoid]
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (FormatError, ParameterError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for _, color in demands:
        if color > coloring.c:
            print(f"error: demand color {color} exceeds coloring colors "
                  f"{coloring.c}", file=sys.stderr)
            return EXIT_USAGE
    ok, violation = avoids(coloring, demands)
    if ok:
        print(f"avoiding: {len(demands)} demand(s) verified on "
              f"{coloring.N} vertices")
        return EXIT_OK
    spec = pattern_spec_string(violation.pattern)
    print(f"violation: {spec}:{violation.color} embedding "
          f"{list(violation.embedding)}")
    return EXIT_VIOLATION


def cmd_solve(args) -> int:
    try:
        demands = [parse_demand(d) for d in args.avoid]
        if not demands:
            raise UsageError("need at least one --avoid demand")
    except (FormatError, ParameterError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    digest = demand_digest(demands)
    directory = ledger_dir(args)
    if not args.force:
        for entry in read_ledger(directory):
            if entry["digest"] == digest and entry["status"] == "exact":
                print(f"cached: R = {entry['N']} (exact)")
                print(f"nodes {entry['nodes']} seconds {entry['seconds']:.3f}")
                print(f"witness {entry['witness']}")
                return EXIT_OK
    budget = Budget(args.budget_nodes, args.budget_seconds)
    try:
        result = _solve_capped(demands, args.max_n, budget, args.threads)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    witness_rel = "-"
    try:
        if result.witness is not None:
            directory.mkdir(parents=True, exist_ok=True)
            short = hashlib.sha256(digest.encode()).hexdigest()[:16]
            witness_rel = f"witness-{short}.oc"
            result.witness.write_oc(directory / witness_rel)
        if result.status == "exact":
            print(f"R = {result.value} (exact)")
            append_ledger(directory, digest, result.value, "exact",
                          result.nodes, result.seconds, witness_rel)
        else:
            hi = result.hi if result.hi is not None else "inf"
            print(f"R >= {result.lo} (bounds: lo={result.lo} hi={hi})")
            append_ledger(directory, digest, result.lo, "lo",
                          result.nodes, result.seconds, witness_rel)
    except OSError as exc:
        print(f"error: ledger write failed: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"nodes {result.nodes} seconds {result.seconds:.3f}")
    print(f"witness {witness_rel}")
    return EXIT_OK


def _solve_capped(demands, max_n, budget, workers):
    from .solver import FOUND, NONE_EXISTS, Budget, RamseyResult, exists_avoiding_parallel

    if max_n is None:
        return ramsey_number(demands, budget=budget, workers=workers)
    # capped iteration: same climb, but give up (with bounds) beyond max_n
    import time as _time

    start = _time.monotonic()
    demands = tuple(demands)
    witness = None
    witness_n = None
    total_nodes = 0
    N = 1
    while N <= max_n:
        remaining = budget
        if budget.max_seconds is not None:
            remaining = Budget(
                budget.max_nodes,
                max(0.0, budget.max_seconds - (_time.monotonic() - start)),
            )
        res = exists_avoiding_parallel(demands, N, remaining, workers)
        total_nodes += res.nodes
        if res.status == FOUND:
            witness = res.coloring
            witness_n = N
            N += 1
            continue
        if res.status == NONE_EXISTS:
            cert = None
            if witness is not None and witness_n == N - 1:
                cert = constructions.CertifiedColoring(
                    witness, demands, "solver-witness", (witness_n,))
            return RamseyResult(demands, "exact", N, N, N, cert, total_nodes,
                                _time.monotonic() - start)
        break
    cert = None
    if witness is not None:
        cert = constructions.CertifiedColoring(
            witness, demands, "solver-witness", (witness_n,))
    lo = (witness_n + 1) if witness_n is not None else 1
    return RamseyResult(demands, "bounds", None, lo, None, cert, total_nodes,
                        _time.monotonic() - start)


def cmd_bound(args) -> int:
    family = args.family
    p = args.params
    try:
        values = _bound_values(family, p)
    except (ParameterError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for bv in values:
        extra = f" real={bv.real:.4f}" if bv.real is not None else ""
        print(f"{bv.kind} {bv.value}{extra} ({bv.source})")
    return EXIT_OK


def _bound_values(family: str, p) -> list:
    ints = _ints(p)
    if family == "monotone-paths":
        return [bounds_mod.monotone_paths_exact(*ints)]
    if family == "stars":
        return [bounds_mod.stars_multicolor_exact(*ints)]
    if family == "stars-pair":
        return [bounds_mod.stars_pair_exact(*_expect(ints, 4))]
    if family == "monotone-cycles":
        return [bounds_mod.monotone_cycles_exact(*_expect(ints, 2))]
    if family == "geometric-cycle":
        return [bounds_mod.geometric_cycle_exact(*_expect(ints, 1))]
    if family == "path-clique":
        return [bounds_mod.path_vs_clique_exact(*_expect(ints, 2))]
    if family == "alt-path":
        ab = bounds_mod.alt_path_bounds(*_expect(ints, 1))
        return [ab.lower, ab.upper, ab.conjectured]
    if family == "probabilistic":
        return [bounds_mod.probabilistic_lower(*_expect(ints, 3))]
    if family == "star-blowup":
        return [bounds_mod.star_blowup_lower(*_expect(ints, 3))]
    if family == "decomposable":
        return [bounds_mod.decomposable_upper(*_expect(ints, 5))]
    if family == "bandwidth":
        return [bounds_mod.bandwidth_upper(*_expect(ints, 3))]
    if family == "degenerate":
        return [bounds_mod.degenerate_upper(*_expect(ints, 3))]
    if family == "partition":
        d, n, max_entry = _expect(ints, 3)
        count = bounds_mod.partition_count(d, n, max_entry)
        return [bounds_mod.BoundValue(
            bounds_mod.EXACT, max(count, 1),
            f"number of {d}-dimensional side-{n} partitions with entries "
            f"0..{max_entry}")]
    if family == "hyperpath":
        return [bounds_mod.hyperpath_exact(*_expect(ints, 2))]
    if family == "matching-lb":
        r, big_r = _expect(ints, 2)
        res = constructions.matching_lb_params(r, big_r)
        if not res.applicable:
            raise UsageError(f"inequality not applicable: k = {res.k} < 1")
        kind = bounds_mod.LOWER
        value = res.N if res.inequality_holds else 1
        note = "holds" if res.inequality_holds else "fails"
        return [bounds_mod.BoundValue(
            kind, max(value, 1),
            f"matching blocks: k={res.k} n={res.n} margin {note} "
            f"({res.margin:.3f})")]
    raise UsageError(f"unknown bound family {family!r}")


def _expect(values: tuple, count: int) -> tuple:
    if len(values) != count:
        raise UsageError(f"expected {count} parameters, got {len(values)}")
    return values


def cmd_analyze(args) -> int:
    try:
        if args.graph.startswith("file:"):
            path = args.graph[len("file:"):]
            g = og_to_graph(Path(path).read_text(encoding="ascii"))
        else:
            g = parse_pattern(args.graph)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (FormatError, ParameterError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"vertices {g.n}")
    print(f"edges {g.m}")
    hist = Counter(edge_lengths(g))
    for length in sorted(hist):
        print(f"length {length}: {hist[length]}")
    bw = bandwidth(g)
    print(f"bandwidth {bw}")
    k, _ = degeneracy(g)
    print(f"degeneracy {k}")
    print(f"interval-chromatic-number {interval_chromatic_number(g)}")
    if bw >= 1:
        flag, _ = is_decomposable(g, bw, 2)
        print(f"decomposable k={bw} q=2: {'yes' if flag else 'no'}")
    else:
        print("decomposable k=1 q=2: yes")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordram",
        description="Ordered Ramsey numbers: construct, verify, solve, bound, analyze.",
    )
    parser.add_argument("--version", action="version", version=TOOL_VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser("construct", help="write a certified coloring")
    p_construct.add_argument("name")
    p_construct.add_argument("params", nargs="*")
    p_construct.add_argument("--out", required=True)
    p_construct.add_argument("--base", help=".oc base coloring (matching only)")
    p_construct.set_defaults(fn=cmd_construct)

    p_verify = sub.add_parser("verify", help="check a coloring against demands")
    p_verify.add_argument("coloring")
    p_verify.add_argument("--avoid", action="append", default=[],
                          metavar="PATTERN:COLOR", required=True)
    p_verify.set_defaults(fn=cmd_verify)

    p_solve = sub.add_parser("solve", help="compute an ordered Ramsey number")
    p_solve.add_argument("--avoid", action="append", default=[],
                         metavar="PATTERN:COLOR", required=True)
    p_solve.add_argument("--max-n", type=int, default=None)
    p_solve.add_argument("--budget-seconds", type=float, default=None)
    p_solve.add_argument("--budget-nodes", type=int, default=None)
    p_solve.add_argument("--threads", type=int, default=1,
                         help="worker processes for the tree fan-out")
    p_solve.add_argument("--ledger", default=None)
    p_solve.add_argument("--force", action="store_true")
    p_solve.set_defaults(fn=cmd_solve)

    p_bound = sub.add_parser("bound", help="evaluate formula oracles")
    p_bound.add_argument("family")
    p_bound.add_argument("params", nargs="*")
    p_bound.set_defaults(fn=cmd_bound)

    p_analyze = sub.add_parser("analyze", help="structural report for a graph")
    p_analyze.add_argument("graph", help="scheme spec (mon-path:6) or file:path.og")
    p_analyze.set_defaults(fn=cmd_analyze)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize --version/help to 0
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (ParameterError, FormatError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
