"""Command-line front end: classify, sweep, verify, export.

Exit codes: 0 for a decided verdict (or successful verify/export), 2 for
Unknown / failed verification, 1 for usage errors.  Sweeps write one JSON
object per instance (no timing fields, so outputs are byte-identical across
--jobs settings) and print a human summary to stdout.
"""

import argparse
import json
import multiprocessing
import os
import sys
import time
from typing import Optional

from .construct import (
    REPRESENTABLE,
    UNKNOWN,
    classification_json,
    classify,
)
from .errors import WordrepError
from .graph import (
    CirculantSpec,
    build_circulant,
    five_regular_spec,
    graph_to_dot,
    is_connected_circulant,
)
from .orientation import (
    DEFAULT_SEARCH_BUDGET,
    FOUND,
    orientation_to_dot,
    search_semi_transitive,
)
from .words import read_word_file, represents

LONG_RUN_BUDGET = 10**9


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the documented contract is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _default_budget() -> int:
    env = os.environ.get("WORDREP_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            print(f"warning: ignoring non-integer WORDREP_BUDGET={env!r}", file=sys.stderr)
    return DEFAULT_SEARCH_BUDGET


def _parse_range(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo > hi or lo < 3:
        raise ValueError(f"invalid range {text!r}: need 3 <= lo <= hi")
    return lo, hi


def _spec_from_args(args) -> CirculantSpec:
    if args.jumps is not None:
        if args.n_vertices is None:
            raise ValueError("--jumps needs --n-vertices")
        jumps = tuple(int(tok) for tok in args.jumps.split(","))
        return CirculantSpec(args.n_vertices, tuple(sorted(jumps)))
    if args.n is None or args.a is None or args.b is None:
        raise ValueError("give either --n-vertices with --jumps, or --n/--a/--b")
    return five_regular_spec(args.n, args.a, args.b)


def _add_spec_arguments(sub, five_regular_only=False):
    sub.add_argument("--n", type=int, help="half-order n of C_2n(a, b, n)")
    sub.add_argument("--a", type=int, help="first jump")
    sub.add_argument("--b", type=int, help="second jump")
    if not five_regular_only:
        sub.add_argument("--n-vertices", type=int, help="vertex count of a general circulant")
        sub.add_argument("--jumps", help="comma-separated jump set of a general circulant")


def cmd_classify(args) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    mode = "auto"
    if args.long_run:
        budget = max(budget, LONG_RUN_BUDGET)
        mode = "exhaustive"
    t0 = time.perf_counter()
    result = classify(args.n, args.a, args.b, budget=budget, search_mode=mode)
    elapsed_ms = round((time.perf_counter() - t0) * 1000.0, 3)
    print(json.dumps(classification_json(result, elapsed_ms=elapsed_ms)))
    return 0 if result.verdict != UNKNOWN else 2


def _sweep_instances(lo, hi, a_filter, b_filter):
    for n in range(lo, hi + 1):
        for a in range(1, n):
            if a_filter is not None and a != a_filter:
                continue
            for b in range(a + 1, n):
                if b_filter is not None and b != b_filter:
                    continue
                if is_connected_circulant(five_regular_spec(n, a, b)):
                    yield n, a, b


def _sweep_worker(job):
    n, a, b, budget = job
    result = classify(n, a, b, budget=budget)
    return n, a, b, result.verdict, result.theorem_tag, json.dumps(classification_json(result))


def cmd_sweep(args) -> int:
    lo, hi = _parse_range(args.n)
    budget = args.budget if args.budget is not None else _default_budget()
    jobs = [(n, a, b, budget) for n, a, b in _sweep_instances(lo, hi, args.a, args.b)]
    t0 = time.perf_counter()
    if args.jobs > 1 and len(jobs) > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            rows = pool.map(_sweep_worker, jobs, chunksize=1)
    else:
        rows = [_sweep_worker(job) for job in jobs]
    rows.sort(key=lambda r: (r[0], r[1], r[2]))
    elapsed = time.perf_counter() - t0

    try:
        with open(args.out, "w") as fh:
            for row in rows:
                fh.write(row[5] + "\n")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1

    verdicts = {}
    tags = {}
    for _, _, _, verdict, tag, _ in rows:
        verdicts[verdict] = verdicts.get(verdict, 0) + 1
        tags[tag] = tags.get(tag, 0) + 1
    print(f"sweep n={lo}..{hi}: {len(rows)} connected instances in {elapsed:.2f}s")
    for verdict in sorted(verdicts):
        print(f"  {verdict}: {verdicts[verdict]}")
    for tag in sorted(tags):
        print(f"  tag {tag}: {tags[tag]}")
    print(f"wrote {args.out}")
    return 0


def cmd_verify(args) -> int:
    spec = _spec_from_args(args)
    g = build_circulant(spec)
    words = read_word_file(args.word_file)
    if not words:
        print(f"error: no words in {args.word_file}", file=sys.stderr)
        return 1
    all_ok = True
    for i, w in enumerate(words):
        ok, violations = represents(w, g)
        all_ok = all_ok and ok
        line = f"word {i}: represents C_{spec.n_vertices}{spec.jumps}: {str(ok).lower()}"
        if not ok:
            shown = ", ".join(
                f"pair {pair} adjacent={adj} alternates={alt}"
                for pair, adj, alt in violations[:5]
            )
            more = "" if len(violations) <= 5 else f" (+{len(violations) - 5} more)"
            line += f" [{shown}{more}]"
        print(line)
    return 0 if all_ok else 2


def cmd_export(args) -> int:
    spec = _spec_from_args(args)
    g = build_circulant(spec)
    if args.orient:
        budget = args.budget if args.budget is not None else _default_budget()
        out = search_semi_transitive(g, budget=budget, vertex_transitive=True)
        if out.status != FOUND:
            print(f"error: no semi-transitive orientation found ({out.status})", file=sys.stderr)
            return 2
        text = orientation_to_dot(out.orientation)
    else:
        text = graph_to_dot(g)
    try:
        with open(args.out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wordrep", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one 5-regular circulant C_2n(a, b, n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="search node budget")
    p.add_argument("--deterministic", action="store_true",
                   help="accepted for compatibility; runs are always deterministic")
    p.add_argument("--long-run", action="store_true",
                   help="exhaustive search mode with at least a 1e9-node budget")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="classify every connected instance in a range of n")
    p.add_argument("--n", required=True, help="single n or inclusive range lo..hi")
    p.add_argument("--a", type=int, default=None, help="restrict to this first jump")
    p.add_argument("--b", type=int, default=None, help="restrict to this second jump")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True, help="output path (JSON lines)")
    p.add_argument("--deterministic", action="store_true",
                   help="accepted for compatibility; runs are always deterministic")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check words in a file against a circulant")
    p.add_argument("--word-file", required=True)
    _add_spec_arguments(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a graph (or found orientation) as DOT")
    _add_spec_arguments(p)
    p.add_argument("--orient", action="store_true",
                   help="search for a semi-transitive orientation and export it")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WordrepError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
