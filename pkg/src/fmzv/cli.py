"""Command line front end.

Exit codes: 0 success, 2 input or validation error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from . import hoffman, oracle
from .corpus import CorpusSpec, run_corpus
from .errors import FMZVError
from .reducer import reduce
from .serialize import dumps, load_pair

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3


def parse_tuple(text: str) -> tuple[int, ...]:
    """``"2,1"`` -> ``(2, 1)``; the empty string is the empty tuple."""
    text = text.strip()
    if not text:
        return ()
    try:
        out = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    return out


def parse_positive_tuple(text: str) -> tuple[int, ...]:
    out = parse_tuple(text)
    if any(k < 1 for k in out):
        raise argparse.ArgumentTypeError(f"indices must be positive, got {text!r}")
    return out


def parse_primes(text: str) -> tuple[int, ...]:
    primes = parse_tuple(text)
    if not primes:
        raise argparse.ArgumentTypeError("at least one prime is required")
    return primes


def _emit(args, payload, pretty_text: str):
    print(pretty_text if args.pretty else dumps(payload))


def _report_text(report: oracle.VerificationReport) -> str:
    lines = [f"{'p':>5} {'lhs':>6} {'rhs':>6}  ok"]
    for c in report.checks:
        lines.append(f"{c.p:>5} {c.lhs:>6} {c.rhs:>6}  {'yes' if c.passed else 'NO'}")
    lines.append("PASS" if report.passed else "FAIL")
    return "\n".join(lines)


def cmd_reduce(args) -> int:
    tree, k = load_pair(args.tree)
    red = reduce(tree, k)
    _emit(args, red.to_json(), f"sign {red.sign:+d}\n{red.comb.pretty_z()}")
    return EXIT_OK


def cmd_eval(args) -> int:
    tree, k = load_pair(args.tree)
    values = {str(p): oracle.eval_tree_mod_p(tree, k, p) for p in args.primes}
    _emit(args, values, "\n".join(f"p={p}: {v}" for p, v in values.items()))
    return EXIT_OK


def cmd_mt_eval(args) -> int:
    values = {str(p): oracle.eval_mt_mod_p(args.ks, args.k_last, p) for p in args.primes}
    _emit(args, values, "\n".join(f"p={p}: {v}" for p, v in values.items()))
    return EXIT_OK


def cmd_verify(args) -> int:
    tree, k = load_pair(args.tree)
    report = oracle.verify_reduction(tree, k, args.primes)
    _emit(args, report.to_json(), _report_text(report))
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_shuffle(args) -> int:
    comb = hoffman.shuffle(hoffman.z_word(args.t), hoffman.z_word(args.u))
    payload = {"words": comb.to_json(), "terms": comb.to_z_json()}
    _emit(args, payload, f"{comb.pretty_z()}\n{comb}")
    return EXIT_OK


def cmd_shuffle_relation(args) -> int:
    report = oracle.verify_shuffle_relation(args.t, args.u, args.primes)
    _emit(args, report.to_json(), _report_text(report))
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_corpus(args) -> int:
    spec = CorpusSpec(args.max_edges, args.max_weight, args.primes)
    result = run_corpus(spec)
    text = f"pairs {result.pairs}, checks {result.checks}, failures {len(result.failures)}"
    for f in result.failures:
        text += "\n" + dumps(f)
    _emit(args, result.to_json(), text)
    return EXIT_OK if result.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    mode = output.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    mode.add_argument("--pretty", dest="pretty", action="store_true", help="human-readable text")
    output.set_defaults(pretty=False)

    primes = argparse.ArgumentParser(add_help=False)
    primes.add_argument("--primes", type=parse_primes, default=oracle.DEFAULT_PRIMES,
                        help="comma-separated odd primes (default 5,7,11,13)")

    parser = argparse.ArgumentParser(prog="fmzv", description="Finite multiple zeta values of 2-colored rooted trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[output], help="reduce a tree to a signed combination of FMZVs")
    p.add_argument("tree")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("eval", parents=[output, primes], help="tree value modulo each prime")
    p.add_argument("tree")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[output, primes], help="check the reduction of a tree")
    p.add_argument("tree")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mt-eval", parents=[output, primes], help="Mordell-Tornheim type value")
    p.add_argument("ks", type=parse_positive_tuple)
    p.add_argument("k_last", type=int)
    p.set_defaults(func=cmd_mt_eval)

    p = sub.add_parser("shuffle", parents=[output], help="shuffle product of two z-words")
    p.add_argument("t", type=parse_positive_tuple)
    p.add_argument("u", type=parse_positive_tuple)
    p.set_defaults(func=cmd_shuffle)

    p = sub.add_parser("shuffle-relation", parents=[output, primes], help="check the shuffle relation")
    p.add_argument("t", type=parse_positive_tuple)
    p.add_argument("u", type=parse_positive_tuple)
    p.set_defaults(func=cmd_shuffle_relation)

    p = sub.add_parser("corpus", parents=[output, primes], help="verify every small tree")
    p.add_argument("--max-edges", type=int, default=3)
    p.add_argument("--max-weight", type=int, default=4)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FMZVError as exc:
        print(exc.describe(), file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
