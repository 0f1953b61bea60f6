"""Command-line front end: build, query, verify, bench, gen-corpus."""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time

from .corpus import Text, encode_pattern, load_text
from .errors import CpmatchError
from .generate import generate_repetitive
from .index import (
    CpmIndex,
    ContextMatch,
    MappingStrategy,
    build_index,
    enumerate_occurrences,
    query,
)
from .oracle import oracle_contexts
from .persistence import load_index, save_index
from .rmq import QueryStats
from .suffixes import compute_bwt_runs


def parse_pattern(text: str) -> bytes:
    """Decode a command-line pattern, honouring \\xNN and \\\\ escapes.

    Raises ValueError for malformed escapes or characters above U+00FF.
    """
    out = bytearray()
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\":
            if text[i + 1 : i + 2] == "\\":
                out.append(0x5C)
                i += 2
                continue
            if text[i + 1 : i + 2] == "x" and i + 4 <= len(text):
                out.append(int(text[i + 2 : i + 4], 16))
                i += 4
                continue
            raise ValueError(f"bad escape at offset {i}: {text[i:i+4]!r}")
        code = ord(ch)
        if code > 0xFF:
            raise ValueError(f"character {ch!r} is not a single byte")
        out.append(code)
        i += 1
    return bytes(out)


def render_symbols(codes, byte_for_code) -> str:
    """Printable form of a code sequence; terminators show as '$'."""
    parts = []
    for code in codes:
        if code == 0:
            parts.append("$")
            continue
        if code >= len(byte_for_code):
            parts.append(f"#{code}")
            continue
        b = byte_for_code[code]
        if b == 0x5C:
            parts.append("\\\\")
        elif b == 0x24:
            parts.append("\\x24")
        elif 0x20 <= b <= 0x7E:
            parts.append(chr(b))
        else:
            parts.append(f"\\x{b:02x}")
    return "".join(parts)


def _load_text_file(path: str) -> Text:
    with open(path, "rb") as fh:
        return load_text(fh.read())


def _run_counts(ix: CpmIndex) -> tuple[int, int, int]:
    r = compute_bwt_runs(ix.fwd)
    r_rev = compute_bwt_runs(ix.rev)
    return r, r_rev, max(r, r_rev)


def cmd_build(args: argparse.Namespace) -> int:
    t = _load_text_file(args.text)
    ix = build_index(t)
    with open(args.output, "wb") as fh:
        save_index(ix, fh)
    r, r_rev, r_max = _run_counts(ix)
    print(f"n={t.n} sigma={t.sigma} r={r} r_rev={r_rev} r_max={r_max}")
    return 0


def _emit_match(args: argparse.Namespace, ix: CpmIndex, match: ContextMatch) -> None:
    rendered = render_symbols(match.context, ix.text.byte_for_code)
    positions = enumerate_occurrences(ix, match) if args.enumerate else None
    if args.format == "json":
        record = {
            "context": rendered,
            "ds": match.ds,
            "de": match.de,
            "count": match.count,
            "rep_position": match.rep_position,
        }
        if positions is not None:
            record["positions"] = positions
        print(json.dumps(record))
        return
    fields = [rendered, match.ds, match.de, match.count, match.rep_position]
    if positions is not None:
        fields.append(",".join(str(p) for p in positions))
    print("\t".join(str(f) for f in fields))


def cmd_query(args: argparse.Namespace) -> int:
    if args.context < 0:
        print("error: context length must be >= 0", file=sys.stderr)
        return 2
    try:
        raw = parse_pattern(args.pattern)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not raw:
        print("error: pattern must be nonempty", file=sys.stderr)
        return 2
    with open(args.index, "rb") as fh:
        ix = load_index(fh)
    codes = encode_pattern(ix.text, raw)
    if codes is None:
        return 0
    strategy = MappingStrategy(args.strategy)
    for match in query(ix, codes, args.context, strategy=strategy):
        _emit_match(args, ix, match)
    return 0


def _sample_pattern(rng: random.Random, t: Text) -> list[int]:
    """Mostly substrings of the text, sometimes arbitrary code strings."""
    if rng.random() < 0.7:
        start = rng.randint(1, t.n - 1)
        length = rng.randint(1, min(8, t.n - start))
        return t.symbols[start : start + length]
    length = rng.randint(1, 4)
    return [rng.randint(1, t.sigma + 1) for _ in range(length)]


def _excerpt(t: Text) -> str:
    head = render_symbols(t.symbols[1 : min(t.n, 80) + 1], t.byte_for_code)
    return head + ("..." if t.n > 80 else "")


def cmd_verify(args: argparse.Namespace) -> int:
    t = _load_text_file(args.text)
    ix = build_index(t)
    rng = random.Random(args.seed)
    for _ in range(args.queries):
        p = _sample_pattern(rng, t)
        ell = rng.randint(0, args.max_ell)
        expected = oracle_contexts(t, p, ell)
        got_by_strategy = {}
        for strategy in MappingStrategy:
            matches = query(ix, p, ell, strategy=strategy)
            got_by_strategy[strategy] = {
                m.context: sorted(enumerate_occurrences(ix, m)) for m in matches
            }
        agree = got_by_strategy[MappingStrategy.PSV_NSV] == got_by_strategy[
            MappingStrategy.CMIN
        ]
        if not agree or got_by_strategy[MappingStrategy.PSV_NSV] != expected:
            rendered_p = render_symbols(p, t.byte_for_code)
            print("mismatch:", file=sys.stderr)
            print(f"  text   {_excerpt(t)}", file=sys.stderr)
            print(f"  P      {rendered_p}  ell={ell}", file=sys.stderr)
            print(f"  expect {sorted(expected.items())}", file=sys.stderr)
            for strategy, got in got_by_strategy.items():
                print(f"  {strategy.value:7} {sorted(got.items())}", file=sys.stderr)
            return 1
    print(f"verified {args.queries} queries, seed {args.seed}: OK")
    return 0


def _bench_queries(args: argparse.Namespace, ix: CpmIndex):
    """Yield (codes, ell) pairs from a pattern file or a seeded sampler."""
    if args.patterns:
        with open(args.patterns, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.rstrip("\n")
                if not line or line.startswith("#"):
                    continue
                pattern_text, _, ell_text = line.rpartition("\t")
                codes = encode_pattern(ix.text, parse_pattern(pattern_text))
                if codes:
                    yield codes, int(ell_text)
        return
    rng = random.Random(args.seed)
    for _ in range(args.random):
        yield _sample_pattern(rng, ix.text), rng.randint(0, 8)


def cmd_bench(args: argparse.Namespace) -> int:
    with open(args.index, "rb") as fh:
        ix = load_index(fh)
    r, r_rev, r_max = _run_counts(ix)
    n = ix.text.n
    with open(args.csv, "w", newline="") as out:
        writer = csv.writer(out)
        writer.writerow(
            [
                "m", "ell", "c", "occ", "wall_s",
                "rmq_calls", "psv_calls", "nsv_calls",
                "r", "r_rev", "r_max", "n",
            ]
        )
        for codes, ell in _bench_queries(args, ix):
            stats = QueryStats()
            t0 = time.perf_counter()
            matches = query(ix, codes, ell, stats=stats)
            dt = time.perf_counter() - t0
            writer.writerow(
                [
                    len(codes), ell, len(matches),
                    sum(m.count for m in matches), f"{dt:.6f}",
                    stats.rmq_calls, stats.psv_calls, stats.nsv_calls,
                    r, r_rev, r_max, n,
                ]
            )
    return 0


def cmd_gen_corpus(args: argparse.Namespace) -> int:
    try:
        blob = generate_repetitive(args.base, args.copies, args.mut_rate, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    with open(args.output, "wb") as fh:
        fh.write(blob)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpmatch",
        description="Contextual pattern matching over suffix arrays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="index a text file")
    p_build.add_argument("text", help="input text (binary, no 0x00 bytes)")
    p_build.add_argument("-o", "--output", required=True, help="index file to write")
    p_build.set_defaults(func=cmd_build)

    p_query = sub.add_parser("query", help="report distinct pattern contexts")
    p_query.add_argument("index", help="index file from build")
    p_query.add_argument("--pattern", required=True, help="pattern (\\xNN escapes)")
    p_query.add_argument("--context", required=True, type=int, help="context length")
    p_query.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p_query.add_argument(
        "--enumerate", action="store_true", help="list every occurrence position"
    )
    p_query.add_argument(
        "--strategy", choices=("psv-nsv", "cmin"), default="psv-nsv",
        help="interval mapping variant",
    )
    p_query.set_defaults(func=cmd_query)

    p_verify = sub.add_parser("verify", help="compare queries against a scan oracle")
    p_verify.add_argument("text", help="text to index and cross-check")
    p_verify.add_argument("--queries", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--max-ell", type=int, default=8)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time queries, write CSV")
    p_bench.add_argument("index", help="index file from build")
    source = p_bench.add_mutually_exclusive_group(required=True)
    source.add_argument("--patterns", help="file of PATTERN<TAB>ELL lines")
    source.add_argument("--random", type=int, help="sample this many queries")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--csv", required=True, help="output CSV path")
    p_bench.set_defaults(func=cmd_bench)

    p_gen = sub.add_parser("gen-corpus", help="emit a repetitive test text")
    p_gen.add_argument("--base", type=int, required=True, help="base string length")
    p_gen.add_argument("--copies", type=int, required=True)
    p_gen.add_argument("--mut-rate", type=float, required=True)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("-o", "--output", required=True)
    p_gen.set_defaults(func=cmd_gen_corpus)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CpmatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
