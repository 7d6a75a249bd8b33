"""Command-line front end.

Exit status: 0 on success or a positive answer, 1 when the answer is "not HH"
or "family none", 2 on usage, input or scope errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .digraph import Digraph, k_copies, make_complete, make_cycle, make_loop_vertex
from .enumeration import DEFAULT_MAX_N, ENUM_MAX_N, EnumFilter, enumerate_digraphs, verify_corollary
from .formats import DigraphFormatError, parse_digraph, write_digraph, write_digraph_stream
from .homs import is_hh
from .recognizer import ScopeError, classify_hh_irreflexive

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> Digraph:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    try:
        return parse_digraph(text)
    except DigraphFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj) + "\n"


def cmd_check(args) -> int:
    verdict = is_hh(_read(args.file))
    _emit(_dump(verdict.to_dict()), None)
    return EXIT_OK if verdict.hh else EXIT_NO


def cmd_classify(args) -> int:
    d = _read(args.file)
    try:
        family = classify_hh_irreflexive(d)
    except ValueError as exc:  # ScopeError included
        raise UsageError(str(exc)) from None
    _emit(_dump(family.to_dict()), None)
    return EXIT_OK if family.is_hh else EXIT_NO


def cmd_witness(args) -> int:
    verdict = is_hh(_read(args.file))
    if verdict.hh:
        _emit("hh\n", None)
        return EXIT_OK
    _emit(_dump(verdict.witness.to_dict()), None)
    return EXIT_NO


def _check_size(n: int, allow_large: bool, flag: str) -> None:
    if n > ENUM_MAX_N:
        raise UsageError(f"{flag} is capped at {ENUM_MAX_N}")
    if n > DEFAULT_MAX_N and not allow_large:
        raise UsageError(f"{flag} {n} is slow; pass --allow-large to run it")
    if n < 1:
        raise UsageError(f"{flag} must be at least 1")


def cmd_enumerate(args) -> int:
    _check_size(args.n, args.allow_large, "--n")
    filt = EnumFilter(
        irreflexive_only=args.irreflexive,
        graphs=args.kind == "graph",
        proper=args.kind == "proper",
        improper=args.kind == "improper",
    )
    chunks = write_digraph_stream(enumerate_digraphs(args.n, filt))
    if args.out is None:
        for chunk in chunks:
            sys.stdout.write(chunk)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.writelines(chunks)
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_size(args.max_n, args.allow_large, "--max-n")
    report = verify_corollary(
        args.max_n,
        progress=lambda n, total: print(f"n={n}: {total} digraphs checked", file=sys.stderr),
    )
    if args.out is None:
        _emit(_dump(report.to_dict()), None)
    else:
        _emit(_dump(report.to_dict()), args.out)
        print(report.summary_table())
    return EXIT_OK if not report.disagreements else EXIT_NO


def _ints(params: Sequence[str], names: Sequence[str]) -> list[int]:
    if len(params) != len(names):
        raise UsageError(f"expected parameters: {' '.join(names) or '(none)'}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UsageError(f"parameters must be integers: {' '.join(params)}") from None


def build_family(family: str, params: Sequence[str]) -> Digraph:
    try:
        if family == "kKn":
            k, n = _ints(params, ["k", "n"])
            if k < 1:
                raise UsageError("k must be at least 1")
            return k_copies(k, make_complete(n))
        if family == "kC3":
            (k,) = _ints(params, ["k"])
            if k < 1:
                raise UsageError("k must be at least 1")
            return k_copies(k, make_cycle(3))
        if family == "Cn":
            (n,) = _ints(params, ["n"])
            return make_cycle(n)
        if family == "one-loop":
            _ints(params, [])
            return make_loop_vertex()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown family {family!r}; choose kKn, kC3, Cn or one-loop")


def cmd_gen(args) -> int:
    _emit(write_digraph(build_family(args.family, args.params)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hhdigraph",
        description="Homomorphism-homogeneity of finite digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, text in (
        ("check", cmd_check, "decide HH; prints the verdict as JSON"),
        ("classify", cmd_classify, "closed-form family of an irreflexive digraph"),
        ("witness", cmd_witness, "print a non-extendable homomorphism, or 'hh'"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("file", help="digraph file, '-' for stdin")
        p.set_defaults(func=fn)

    p = sub.add_parser("enumerate", help="all digraphs on n vertices up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--irreflexive", action="store_true")
    p.add_argument("--kind", choices=("graph", "proper", "improper"))
    p.add_argument("--out")
    p.add_argument("--allow-large", action="store_true", help=f"permit n > {DEFAULT_MAX_N}")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="compare the HH checker with the classifier")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--allow-large", action="store_true", help=f"permit max-n > {DEFAULT_MAX_N}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a digraph from a named family")
    p.add_argument("family", help="kKn K N | kC3 K | Cn N | one-loop")
    p.add_argument("params", nargs="*")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "allow_large", False):
        logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(message)s")
    try:
        return args.func(args)
    except (UsageError, ScopeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
