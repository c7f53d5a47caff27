"""Command-line toolkit for closed-substring analysis.

Subcommands: `mcs` lists maximal closed spans, `arrays` prints the
border, repeated-prefix, and closedness rows, `stats` summarizes one
text, `gen` emits deterministic test inputs, and `bench` times the
engines over a size ladder.

Inputs are raw bytes from a file or stdin; exactly one trailing newline
is stripped unless --keep-newline is given.  Data goes to the output
stream, diagnostics to the error stream.  Exit codes: 0 success, 1
usage error, 2 unreadable or empty input, 3 engine disagreement under
--algo both.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from .core import Span, border_array, oc_array, oc_runs, repeated_prefix_array
from .extremal import extremal_string
from .fast import mcs_fast, singleton_mcs
from .oracle import mcs_oracle, suffix_one_run_total

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3

ORACLE_BENCH_LIMIT = 100_000


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits 1 on usage errors instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _size_list(value: str) -> list[int]:
    try:
        sizes = [int(part) for part in value.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError("sizes must be comma-separated integers")
    if not sizes or any(n < 1 for n in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def _read_text(args) -> bytes | None:
    src = args.input
    try:
        if src == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(src, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        print(f"cannot read {src}: {exc}", file=sys.stderr)
        return None
    if not args.keep_newline and data.endswith(b"\n"):
        data = data[:-1]
    if not data:
        print("input is empty", file=sys.stderr)
        return None
    return data


def _write(args, payload: bytes) -> int:
    if args.output == "-":
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
        return EXIT_OK
    try:
        with open(args.output, "wb") as fh:
            fh.write(payload)
    except OSError as exc:
        print(f"cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def _report_mismatch(fast: list[Span], oracle: list[Span]) -> None:
    print(
        f"engines disagree: fast={len(fast)} spans, oracle={len(oracle)} spans",
        file=sys.stderr,
    )
    for a, b in zip(fast, oracle):
        if a != b:
            print(
                f"first differing span: fast=({a.start},{a.end})"
                f" oracle=({b.start},{b.end})",
                file=sys.stderr,
            )
            return
    longer, name = (fast, "fast") if len(fast) > len(oracle) else (oracle, "oracle")
    s = longer[min(len(fast), len(oracle))]
    print(
        f"first differing span: ({s.start},{s.end}) only in {name}", file=sys.stderr
    )


def _spans_for(args, text: bytes) -> list[Span] | None:
    """Spans under the selected algo, or None on a both-mode mismatch."""
    if args.algo == "oracle":
        return mcs_oracle(text)
    if args.algo == "fast":
        return mcs_fast(text)
    fast = mcs_fast(text)
    oracle = mcs_oracle(text)
    if fast != oracle:
        _report_mismatch(fast, oracle)
        return None
    return fast


def cmd_mcs(args) -> int:
    text = _read_text(args)
    if text is None:
        return EXIT_INPUT
    spans = _spans_for(args, text)
    if spans is None:
        return EXIT_MISMATCH
    payload = "".join(f"{s.start}\t{s.end}\n" for s in spans).encode("ascii")
    return _write(args, payload)


def cmd_arrays(args) -> int:
    text = _read_text(args)
    if text is None:
        return EXIT_INPUT
    b = border_array(text)
    lines = [
        "B: " + " ".join(map(str, b)),
        "P: " + " ".join(map(str, repeated_prefix_array(b))),
        "OC: " + " ".join(map(str, oc_array(text))),
    ]
    return _write(args, ("\n".join(lines) + "\n").encode("ascii"))


def cmd_stats(args) -> int:
    text = _read_text(args)
    if text is None:
        return EXIT_INPUT
    spans = _spans_for(args, text)
    if spans is None:
        return EXIT_MISMATCH
    items = [
        ("n", len(text)),
        ("mcs_count", len(spans)),
        ("singleton_count", len(singleton_mcs(text))),
        ("oc_one_runs", oc_runs(oc_array(text)).one_runs),
        ("suffix_run_total", suffix_one_run_total(text)),
    ]
    payload = "".join(f"{k}: {v}\n" for k, v in items).encode("ascii")
    return _write(args, payload)


def cmd_gen(args) -> int:
    if args.kind == "extremal":
        data = extremal_string(args.length)
    else:
        try:
            alphabet = args.alphabet.encode("latin-1")
        except UnicodeEncodeError:
            print("alphabet must be single-byte characters", file=sys.stderr)
            return EXIT_USAGE
        rng = random.Random(args.seed)
        data = bytes(rng.choices(alphabet, k=args.length))
    if args.newline:
        data += b"\n"
    return _write(args, data)


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    rows = []
    for n in args.sizes:
        text = bytes(rng.choices(b"ab", k=n))
        algos = ("fast", "oracle") if args.algo == "both" else (args.algo,)
        for algo in algos:
            if algo == "oracle" and n > ORACLE_BENCH_LIMIT:
                continue
            runner = mcs_fast if algo == "fast" else mcs_oracle
            start = time.perf_counter()
            spans = runner(text)
            millis = (time.perf_counter() - start) * 1000.0
            rows.append(f"{n}\t{algo}\t{millis:.2f}\t{len(spans)}")
    return _write(args, ("\n".join(rows) + "\n").encode("ascii"))


def _add_io_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", default="-", help="input file, - for stdin")
    p.add_argument("-o", "--output", default="-", help="output file, - for stdout")
    p.add_argument(
        "--keep-newline",
        action="store_true",
        help="treat a trailing newline as an ordinary input byte",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="closedstr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_mcs = sub.add_parser("mcs", help="list maximal closed spans, one per line")
    _add_io_arguments(p_mcs)
    p_mcs.add_argument("--algo", choices=("fast", "oracle", "both"), default="fast")
    p_mcs.set_defaults(func=cmd_mcs)

    p_arrays = sub.add_parser("arrays", help="print B, P, and OC rows")
    _add_io_arguments(p_arrays)
    p_arrays.set_defaults(func=cmd_arrays)

    p_stats = sub.add_parser("stats", help="summary counts for one text")
    _add_io_arguments(p_stats)
    p_stats.add_argument("--algo", choices=("fast", "oracle", "both"), default="fast")
    p_stats.set_defaults(func=cmd_stats)

    p_gen = sub.add_parser("gen", help="generate deterministic test inputs")
    p_gen.add_argument("kind", choices=("extremal", "random"))
    p_gen.add_argument("--length", type=_positive_int, required=True)
    p_gen.add_argument("--alphabet", default="ab")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument(
        "--newline", action="store_true", help="append a trailing newline"
    )
    p_gen.add_argument("-o", "--output", default="-")
    p_gen.set_defaults(func=cmd_gen)

    p_bench = sub.add_parser("bench", help="time the engines on random binary texts")
    p_bench.add_argument("--sizes", type=_size_list, required=True)
    p_bench.add_argument("--algo", choices=("fast", "oracle", "both"), default="both")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("-o", "--output", default="-")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
