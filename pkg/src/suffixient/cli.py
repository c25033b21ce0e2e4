"""Streaming command line: stream, check, gen, bench.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Input is raw
bytes from a file or stdin.  Trace output is JSONL, one record per letter;
benchmark output is CSV with per-step operation counts.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import random
import sys

from . import corpus, oracle
from .counters import OpCounters
from .errors import SentinelError, SuffixientError, UsageError
from .ltr import LeftToRightMaintainer
from .rtl import RightToLeftMaintainer
from .weiner import ENGINES

log = logging.getLogger("suffixient")


def _setup_logging():
    level = os.environ.get("SUFFIXIENT_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(message)s")


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as f:
        return f.read()


def _parse_sentinel(spec: str) -> int | None:
    if spec == "none":
        return None
    if spec.startswith("0x"):
        value = int(spec, 16)
    elif spec.isdigit():
        value = int(spec)
    elif len(spec) == 1:
        value = ord(spec)
    else:
        raise UsageError(f"bad sentinel spec {spec!r}")
    if not 0 <= value <= 255:
        raise UsageError("sentinel byte out of range")
    return value


def _apply_sentinel(data: bytes, sentinel: int | None) -> tuple[bytes, int]:
    """Returns (data ending in its sentinel, the sentinel byte)."""
    if not data:
        raise SentinelError("empty input cannot be sentinel-terminated")
    if sentinel is None:
        last = data[-1]
        if data.count(last) != 1:
            raise SentinelError(
                "sentinel disabled but the last input byte is not unique"
            )
        return data, last
    if data[-1] == sentinel:
        body = data[:-1]
    else:
        body = data
        data = data + bytes([sentinel])
    if sentinel in body:
        raise SentinelError(f"sentinel byte {sentinel} occurs in the body")
    return data, sentinel


def _make_maintainer(direction: str, engine: str, data: bytes, sentinel_spec: str,
                     counters: OpCounters | None = None):
    """Returns (maintainer, letters in feed order)."""
    if direction == "rtl":
        data, sentinel = _apply_sentinel(data, _parse_sentinel(sentinel_spec))
        m = RightToLeftMaintainer(sentinel=sentinel, engine=engine, counters=counters)
        return m, bytes(reversed(data))
    return LeftToRightMaintainer(engine=engine, counters=counters), data


def _delta_json(report) -> str:
    def changes(entries):
        return [{"u_len": e.u_len, "x": e.letter, "position": e.position} for e in entries]

    return json.dumps(
        {
            "step": report.step,
            "letter": report.letter,
            "added": changes(report.added),
            "removed": changes(report.removed),
            "chi": report.chi,
        },
        separators=(",", ":"),
    )


# ----------------------------------------------------------------------
# subcommands

def cmd_stream(args) -> int:
    data = _read_input(args.input)
    m, letters = _make_maintainer(args.direction, args.engine, data, args.sentinel)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        for b in letters:
            report = m.feed(b)
            if args.emit == "deltas":
                out.write(_delta_json(report) + "\n")
        if args.emit == "chi":
            out.write(f"{m.chi}\n")
        elif args.emit == "sss":
            out.write(" ".join(map(str, m.current_sss())) + "\n")
    finally:
        if args.out:
            out.close()
    return 0


def verify_string(s: bytes, engines=("fringe", "naive-walk")) -> str | None:
    """Every-step oracle comparison for one string; None when clean.

    Runs the left-to-right maintainer on the string and the right-to-left
    maintainer on the sentinel-terminated string, with every engine, and
    cross-checks live pairs, chi, and the emitted position sets.
    """
    for engine in engines:
        m = LeftToRightMaintainer(engine=engine)
        for k, b in enumerate(s, 1):
            m.feed(b)
            prefix = s[:k]
            if m.live_pairs() != oracle.supermaximal_extensions(prefix):
                return f"ltr[{engine}] step {k}: live set diverged"
            if set(m.current_sss()) != oracle.canonical_sss(prefix, oracle.LEFTMOST):
                return f"ltr[{engine}] step {k}: position set diverged"
    sentinel = next((b for b in range(256) if b not in s), None)
    if sentinel is None:
        return None  # no free byte; skip the RTL side
    t = s + bytes([sentinel])
    for engine in engines:
        m = RightToLeftMaintainer(sentinel=sentinel, engine=engine)
        for k, b in enumerate(reversed(t), 1):
            m.feed(b)
            cur = t[len(t) - k :]
            if m.live_pairs() != oracle.supermaximal_extensions(cur):
                return f"rtl[{engine}] step {k}: live set diverged"
            if set(m.current_sss()) != oracle.canonical_sss(cur, oracle.RIGHTMOST):
                return f"rtl[{engine}] step {k}: position set diverged"
    return None


def _shrink(s: bytes, failure: str) -> tuple[bytes, str]:
    """Greedy shrink: drop halves, then single letters, while still failing."""
    improved = True
    while improved and len(s) > 1:
        improved = False
        candidates = [s[: len(s) // 2], s[len(s) // 2 :]]
        candidates += [s[:i] + s[i + 1 :] for i in range(len(s))]
        for cand in candidates:
            if not cand:
                continue
            f = verify_string(cand)
            if f is not None:
                s, failure, improved = cand, f, True
                break
    return s, failure


def cmd_check(args) -> int:
    if args.input:
        cases = [_read_input(args.input)]
    else:
        rng = random.Random(args.seed)
        cases = [
            bytes(rng.randrange(97, 97 + args.sigma) for _ in range(rng.randrange(1, args.max_n + 1)))
            for _ in range(args.fuzz)
        ]
    for i, s in enumerate(cases):
        failure = verify_string(s)
        if failure is not None:
            small, failure = _shrink(s, failure)
            print(f"FAIL case {i}: minimal input {small!r}: {failure}")
            return 1
        log.info("case %d ok (n=%d)", i, len(s))
    print(f"ok: {len(cases)} case(s) verified")
    return 0


def cmd_gen(args) -> int:
    if args.kind == "fibonacci":
        data = corpus.fibonacci_word(args.n)
    elif args.kind == "debruijn":
        data = corpus.de_bruijn(args.sigma, args.n)  # --n is the order here
    else:
        data = corpus.random_string(args.n, args.sigma, args.seed)
    if args.out:
        with open(args.out, "wb") as f:
            f.write(data)
    else:
        sys.stdout.buffer.write(data)
    return 0


def cmd_bench(args) -> int:
    data = _read_input(args.input)
    counters = OpCounters()
    m, letters = _make_maintainer(args.direction, args.engine, data, args.sentinel, counters)
    rows = []
    prev = counters.snapshot()
    for step, b in enumerate(letters, 1):
        m.feed(b)
        cur = counters.snapshot()
        rows.append((step, b, cur[0] - prev[0], cur[1] - prev[1], cur[2] - prev[2]))
        prev = cur
    if args.report:
        with open(args.report, "w", newline="") as f:
            w = csv.writer(f)
            w.writerow(["step", "letter", "list_ops", "lca_steps", "tree_updates"])
            w.writerows(rows)
    totals = sorted(r[2] + r[3] + r[4] for r in rows)
    if totals:
        mx = totals[-1]
        p999 = totals[min(len(totals) - 1, int(len(totals) * 0.999))]
        mean = sum(totals) / len(totals)
        print(f"steps={len(totals)} max={mx} p99.9={p999} mean={mean:.2f} chi={m.chi}")
    return 0


# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="suffixient", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    st = sub.add_parser("stream", help="feed an input and emit traces or results")
    st.add_argument("input", help="input file, or - for stdin")
    st.add_argument("--direction", choices=["rtl", "ltr"], required=True)
    st.add_argument("--engine", choices=list(ENGINES), default="fringe")
    st.add_argument("--emit", choices=["chi", "deltas", "sss"], default="deltas")
    st.add_argument("--sentinel", default="0x00",
                    help="sentinel byte for rtl (char, decimal, 0xNN, or 'none')")
    st.add_argument("--out", help="write output to this path instead of stdout")
    st.set_defaults(fn=cmd_stream)

    ck = sub.add_parser("check", help="cross-validate the engines against the oracle")
    ck.add_argument("--fuzz", type=int, default=100, help="number of random cases")
    ck.add_argument("--max-n", type=int, default=64)
    ck.add_argument("--sigma", type=int, default=4)
    ck.add_argument("--seed", type=int, default=0)
    ck.add_argument("--input", help="verify this single input instead of fuzzing")
    ck.set_defaults(fn=cmd_check)

    gn = sub.add_parser("gen", help="generate corpus strings")
    gn.add_argument("--kind", choices=["fibonacci", "debruijn", "random"], required=True)
    gn.add_argument("--n", type=int, required=True,
                    help="length (fibonacci/random) or order (debruijn)")
    gn.add_argument("--sigma", type=int, default=2)
    gn.add_argument("--seed", type=int, default=0)
    gn.add_argument("--out")
    gn.set_defaults(fn=cmd_gen)

    be = sub.add_parser("bench", help="per-letter operation counts")
    be.add_argument("--direction", choices=["rtl", "ltr"], required=True)
    be.add_argument("--engine", choices=list(ENGINES), default="fringe")
    be.add_argument("--input", required=True)
    be.add_argument("--report", help="CSV output path")
    be.add_argument("--sentinel", default="0x00")
    be.set_defaults(fn=cmd_bench)
    return p


def main(argv=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SuffixientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():  # console-script wrapper
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
