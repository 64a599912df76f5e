"""Command-line interface.

Exit codes: 0 success, 1 usage or parse problem, 2 resource budget exhausted,
3 verification mismatch (including the golden-table regression).  Output is
deterministic for identical inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import engine
from .certificates import (
    certificate_dumps,
    certificate_loads,
    check_certificate,
    decode_path,
    encode_path,
    format_quadruples,
    parse_quadruples,
)
from .debruijn import debruijn, verify_debruijn
from .errors import DomainError, DupdistError, ResourceBudgetError
from .golden import BINARY_MAX_DISTANCE
from .repeats import find_approx_repeat, find_exact_repeat, greedy_dedup_path, longest_exact_repeat
from .words import QString, parse_beta, read_strings

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; 2 is reserved for budgets here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("-q", type=int, default=2, help="alphabet size (default 2)")
    p.add_argument("--beta", default="0", help="rational budget 'num/den', '0' or '1'")
    p.add_argument("--budget-states", type=int, default=engine.DEFAULT_STATE_BUDGET,
                   help="maximum explored/allocated states")
    p.add_argument("--budget-mb", type=int, default=engine.DEFAULT_MEMORY_MB,
                   help="memory budget in MiB for table builds")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--seed", type=int, default=0,
                   help="seed recorded for reproducibility of randomized runs")


def _emit(args, obj: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        for line in text_lines:
            print(line)


def _input_strings(args) -> list[QString]:
    if args.string is not None:
        return [QString.parse(args.string, args.q)]
    with open(args.input, encoding="utf-8") as fh:
        return read_strings(fh.read(), q=args.q)


def _add_string_io(p: argparse.ArgumentParser) -> None:
    p.add_argument("string", nargs="?", default=None, help="string in 0-9a-z form")
    p.add_argument("--input", help="file with one string per line (optional q=<int> header)")


# ---------------------------------------------------------------------------


def cmd_distance(args) -> int:
    beta = parse_beta(args.beta)
    strings = _input_strings(args)
    results = []
    for x in strings:
        f, cert = engine.distance(x, beta, state_budget=args.budget_states)
        results.append((x, f, cert))
    label = "f" if beta == 0 else "f_beta"
    for x, f, cert in results:
        if args.format == "json":
            print(json.dumps({"string": str(x), label: f,
                              "certificate": json.loads(certificate_dumps(cert))}, indent=2))
        else:
            print(f"{label}={f}")
            print(certificate_dumps(cert))
    return EXIT_OK


def cmd_table(args) -> int:
    beta = parse_beta(args.beta)
    table = engine.max_distance_table(
        args.q, args.n, beta,
        state_budget=args.budget_states, memory_mb=args.budget_mb,
    )
    _emit(args, table.to_obj(), table.to_text_lines())
    if args.check_table1:
        if args.q != 2 or beta != 0:
            print("--check-table1 applies to q=2, beta=0 only", file=sys.stderr)
            return EXIT_USAGE
        bad = []
        for n in range(1, min(args.n, 32) + 1):
            got = table.entries[n].fmax
            want = BINARY_MAX_DISTANCE[n]
            if got != want:
                bad.append((n, want, got, str(table.entries[n].witness)))
        if bad:
            print("golden-table regression FAILED; full witness dump:", file=sys.stderr)
            for n, want, got, wit in bad:
                print(f"  n={n}: expected {want}, got {got}, witness {wit}", file=sys.stderr)
            return EXIT_VERIFY
        print(f"golden-table check passed for n <= {min(args.n, 32)}")
    return EXIT_OK


def cmd_greedy(args) -> int:
    beta = parse_beta(args.beta)
    for x in _input_strings(args):
        cert = greedy_dedup_path(x, beta)
        if args.format == "json":
            print(certificate_dumps(cert))
        else:
            print(f"steps={len(cert.steps)} root={cert.root}")
            print(certificate_dumps(cert))
    return EXIT_OK


def cmd_debruijn(args) -> int:
    if args.verify is not None:
        y = QString.parse(args.verify, args.q)
        ok = verify_debruijn(y, args.k)
        _emit(args, {"sequence": str(y), "q": args.q, "k": args.k, "valid": ok},
              [f"{y}", f"valid={'true' if ok else 'false'} length={len(y)} expected={args.q ** args.k}"])
        return EXIT_OK if ok else EXIT_VERIFY
    seq = debruijn(args.q, args.k)
    ok = verify_debruijn(seq, args.k)
    _emit(args, {"sequence": str(seq), "q": args.q, "k": args.k, "valid": ok},
          [f"q={args.q}", f"{seq}",
           f"valid={'true' if ok else 'false'} length={len(seq)} kgrams={args.q ** args.k}"])
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_bounds(args) -> int:
    beta = parse_beta(args.beta)
    report = bounds_mod.bound_report(args.q, args.n, beta)
    _emit(args, report.to_obj(), report.to_text_lines())
    return EXIT_OK


def cmd_repeat(args) -> int:
    beta = parse_beta(args.beta)
    x = QString.parse(args.string, args.q)
    if beta != 0 and args.k is None:
        print("approximate search needs -k", file=sys.stderr)
        return EXIT_USAGE
    if beta != 0:
        hit = find_approx_repeat(x, args.k, beta)
    elif args.k is not None:
        hit = find_exact_repeat(x, args.k)
    else:
        hit = longest_exact_repeat(x)
    if hit is None:
        _emit(args, {"hit": None}, ["no repeat"])
        return EXIT_OK
    d = hit.decomposition
    obj = {
        "hit": {
            "a_len": d.a_len, "b_len": d.b_len, "c_len": d.c_len,
            "hamming": hit.hamming, "rule": hit.rule, "via": hit.via,
        }
    }
    _emit(args, obj, [
        f"b_len={d.b_len} left={d.left_start} right={d.right_start} "
        f"hamming={hit.hamming} rule={hit.rule} via={hit.via}"
    ])
    return EXIT_OK


def cmd_codec(args) -> int:
    beta = parse_beta(args.beta) if args.beta is not None else None
    if args.action == "encode":
        if args.certificate is None:
            print("encode needs a certificate file", file=sys.stderr)
            return EXIT_USAGE
        with open(args.certificate, encoding="utf-8") as fh:
            cert = certificate_loads(fh.read())
        b = beta if beta is not None else cert.beta
        quads = encode_path(cert, b)
        obj = {
            "q": cert.q, "root": str(cert.root),
            "beta": f"{Fraction(b).numerator}/{Fraction(b).denominator}",
            "quads": format_quadruples(quads),
        }
        _emit(args, obj, [obj["quads"]])
        return EXIT_OK
    # decode
    if args.root is None or args.quads is None:
        print("decode needs --root and --quads", file=sys.stderr)
        return EXIT_USAGE
    steps = parse_quadruples(args.quads)
    root = QString.parse(args.root, args.q)
    target = decode_path(args.q, root, steps, beta if beta is not None else 0)
    _emit(args, {"target": str(target)}, [str(target)])
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.certificate, encoding="utf-8") as fh:
        cert = certificate_loads(fh.read())
    failure = check_certificate(cert)
    if failure is None:
        _emit(args, {"valid": True}, ["valid=true"])
        return EXIT_OK
    _emit(args, {"valid": False, "reason": failure}, [f"valid=false reason={failure}"])
    return EXIT_VERIFY


# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="dupdist",
                     description="duplication-with-transposition distances to the root")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", parents=[], help="exact distance with certificate")
    _common_options(p)
    _add_string_io(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("table", help="max distance per length, with witnesses")
    _common_options(p)
    p.add_argument("-n", type=int, required=True, help="largest length")
    p.add_argument("--check-table1", action="store_true",
                   help="compare q=2 results against the golden values and exit 3 on mismatch")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("greedy", help="greedy deduplication certificate")
    _common_options(p)
    _add_string_io(p)
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("debruijn", help="generate or verify a de Bruijn sequence")
    _common_options(p)
    p.add_argument("-k", type=int, required=True, help="order")
    p.add_argument("--verify", metavar="SEQ", help="verify this sequence instead of generating")
    p.set_defaults(func=cmd_debruijn)

    p = sub.add_parser("bounds", help="formula bounds for (q, n, beta)")
    _common_options(p)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("repeat", help="find a duplicated block")
    _common_options(p)
    p.add_argument("string", help="string in 0-9a-z form")
    p.add_argument("-k", type=int, default=None, help="block length (longest repeat if absent)")
    p.set_defaults(func=cmd_repeat)

    p = sub.add_parser("codec", help="encode/decode certificates as quadruple sequences")
    p.add_argument("action", choices=["encode", "decode"])
    p.add_argument("certificate", nargs="?", help="certificate JSON file (encode)")
    p.add_argument("--quads", help="compact 'p,l,t,j;...' sequence (decode)")
    p.add_argument("--root", help="root string (decode)")
    p.add_argument("-q", type=int, default=2)
    p.add_argument("--beta", default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_codec)

    p = sub.add_parser("verify", help="verify a certificate file")
    p.add_argument("certificate")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    for budget_attr in ("budget_states", "budget_mb"):
        if getattr(args, budget_attr, 1) <= 0:
            print(f"error: --{budget_attr.replace('_', '-')} must be positive",
                  file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except ResourceBudgetError as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        if e.states_explored is not None:
            print(f"  states explored: {e.states_explored}", file=sys.stderr)
        if e.largest_completed_n is not None:
            print(f"  largest completed n: {e.largest_completed_n}", file=sys.stderr)
        if e.best_lower_bound is not None or e.best_upper_bound is not None:
            print(f"  best bounds so far: lower={e.best_lower_bound} "
                  f"upper={e.best_upper_bound}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, DupdistError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
