"""Command-line front end: check, equal, diagram, bench, relcheck."""

from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import bench
from .cvcd import canonical_serialize, expand, stats
from .cvcd_action import apply_word_condensed
from .solver import TRIVIAL, are_equal, diagram, is_trivial
from .vcd import canonical_text
from .word import RELATION_FAMILIES, WordSyntaxError, parse_word, relations, render

DEFAULT_SEED = 42
EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _word(text: str, n: int):
    try:
        return parse_word(text, n)
    except (WordSyntaxError, ValueError) as e:
        raise UsageError(f"bad word {text!r}: {e}") from None


def cmd_check(args) -> int:
    cert = is_trivial(_word(args.word, args.n))
    print(cert.verdict)
    if args.certificate:
        q = cert.quick
        print(f"canonical: {cert.canonical}")
        print(f"permutation: {q.permutation}")
        print(f"virtual_permutation: {q.virtual_permutation}")
        print(f"exponent_sum: {q.exponent_sum}")
        s = cert.stats
        print(f"stats: m={s.arcs} r={s.max_weight} digits={s.weight_digits}")
        a = cert.bound_audit
        print(f"bounds: arcs={a.arcs_ok} weight={a.weight_ok} digits={a.digits_ok}")
    return EXIT_OK if cert.verdict == TRIVIAL else EXIT_NO


def cmd_equal(args) -> int:
    w1, w2 = _word(args.first, args.n), _word(args.second, args.n)
    same = are_equal(w1, w2)
    print("equal" if same else "distinct")
    return EXIT_OK if same else EXIT_NO


def cmd_diagram(args) -> int:
    c = diagram(_word(args.word, args.n))
    if not args.uncondensed:
        print(canonical_serialize(c))
        return EXIT_OK
    s = stats(c)
    if s.max_weight > args.cap:
        print(f"error: a bundle weight has {s.weight_digits} digits, "
              f"over the expansion cap {args.cap}", file=sys.stderr)
        return EXIT_CAP
    print(canonical_text(expand(c, args.cap)))
    return EXIT_OK


def _lengths(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --lengths {text!r}") from None
    if not out:
        raise UsageError("--lengths must list at least one length")
    return out


def cmd_bench(args) -> int:
    lengths = _lengths(args.lengths)
    print(f"seed {args.seed}", file=sys.stderr)
    try:
        rep = bench.scaling_run(args.n, lengths, args.samples, args.seed, args.jobs)
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(rep.tsv())
    if rep.slope is not None:
        print(f"# slope\t{rep.slope:.3f}")
    return EXIT_OK


def _relcheck_sample(task):
    n, maxlen, seed = task
    rng = random.Random(seed)
    base = bench.random_word(n, rng.randint(0, maxlen), rng.getrandbits(32))
    start = diagram(base)
    failures = []
    for family, lhs, rhs in relations(n):
        if apply_word_condensed(start, lhs) != apply_word_condensed(start, rhs):
            failures.append((family, render(base), render(lhs), render(rhs)))
    return failures


def cmd_relcheck(args) -> int:
    if args.samples < 1 or args.maxlen < 0:
        raise UsageError("--samples must be positive and --maxlen non-negative")
    print(f"seed {args.seed}", file=sys.stderr)
    tasks = [(args.n, args.maxlen, bench.sample_seed(args.seed, args.maxlen, k))
             for k in range(args.samples)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_relcheck_sample, tasks))
    else:
        results = [_relcheck_sample(t) for t in tasks]
    bad = {}
    for fails in results:
        for family, base, lhs, rhs in fails:
            bad.setdefault(family, (base, lhs, rhs))
    status = EXIT_OK
    for family in RELATION_FAMILIES:
        if family in bad:
            base, lhs, rhs = bad[family]
            print(f"FAIL {family}: base {base!r}: {lhs!r} != {rhs!r}")
            status = EXIT_NO
        else:
            print(f"PASS {family}")
    return status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _strands(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("need at least 2 strands")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="virtbraid", description="Virtual braid word problem solver.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="decide whether a word is trivial")
    c.add_argument("-n", "--n", type=_strands, required=True)
    c.add_argument("word")
    c.add_argument("--certificate", action="store_true")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("equal", help="decide whether two words are equal")
    e.add_argument("-n", "--n", type=_strands, required=True)
    e.add_argument("first")
    e.add_argument("second")
    e.set_defaults(func=cmd_equal)

    d = sub.add_parser("diagram", help="print the simplified diagram of a word")
    d.add_argument("-n", "--n", type=_strands, required=True)
    d.add_argument("word")
    d.add_argument("--uncondensed", action="store_true")
    d.add_argument("--cap", type=int, default=10 ** 6)
    d.set_defaults(func=cmd_diagram)

    b = sub.add_parser("bench", help="time random words of growing length")
    b.add_argument("-n", "--n", type=_strands, default=8)
    b.add_argument("--lengths", default="250,500,1000")
    b.add_argument("--samples", type=int, default=3)
    b.add_argument("--seed", type=int, default=DEFAULT_SEED)
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(func=cmd_bench)

    r = sub.add_parser("relcheck", help="check the defining relations on random diagrams")
    r.add_argument("-n", "--n", type=_strands, default=4)
    r.add_argument("--samples", type=int, default=100)
    r.add_argument("--maxlen", type=int, default=20)
    r.add_argument("--seed", type=int, default=DEFAULT_SEED)
    r.add_argument("--jobs", type=int, default=1)
    r.set_defaults(func=cmd_relcheck)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
