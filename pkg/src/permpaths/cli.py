"""
Command-line front end.

Exit codes, uniformly: 0 success, 1 malformed input or usage, 2 a domain or
verification failure (the input was well-formed but the answer is "no"),
3 a refused oversize sweep.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys
from typing import Callable, Sequence

from .counting import (
    SizeGuard,
    schroeder_number,
    schroeder_number_by_binomial_sum,
    unrank_schroeder,
    verify_bijection,
)
from .paths import (
    FLAT,
    InvalidCode,
    InvalidPath,
    NotAPeak,
    parse_path,
    render_ascii,
    semilength,
)
from .permutations import (
    EmptyPermutation,
    NotAPermutation,
    format_permutation,
    is_class_member,
    parse_permutation,
)
from .mdd import Not321Avoiding
from .schroeder import NotInClass, phi, phi_inverse, phi_trace


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; this tool reserves 2 for domain
    # failures, so usage problems become exit 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_map(args: argparse.Namespace) -> int:
    perm = parse_permutation(args.perm)
    path = phi(perm)
    _emit(args, {"perm": list(perm), "schroeder": path}, path)
    return 0


def _cmd_unmap(args: argparse.Namespace) -> int:
    path = parse_path(args.path)
    perm = phi_inverse(path)
    _emit(args, {"schroeder": path, "perm": list(perm)}, format_permutation(perm))
    return 0


def _cmd_trace(args: argparse.Namespace) -> int:
    trace = phi_trace(parse_permutation(args.perm))
    if args.format == "json":
        print(json.dumps(dataclasses.asdict(trace), indent=2))
        return 0
    lines = [
        ("input", format_permutation(trace.input)),
        ("lr minima", " ".join(f"({i},{v})" for i, v in trace.lr_minima)),
        ("blocks", " | ".join(format_permutation(b) for b in trace.blocks)),
        ("f", format_permutation(trace.f)),
        ("f'", format_permutation(trace.f_prime)),
        ("nonexc positions", " ".join(map(str, trace.nonexcedances[0]))),
        ("nonexc values", " ".join(map(str, trace.nonexcedances[1]))),
        ("code", trace.code),
        ("dyck", trace.dyck),
        ("designated peaks", " ".join(map(str, trace.designated_peaks))),
        ("schroeder", trace.schroeder),
    ]
    width = max(len(label) for label, _ in lines)
    for label, value in lines:
        print(f"{label.ljust(width)}  {value}")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    if (args.perm is None) == (args.path is None):
        _fail("check needs exactly one of --perm or --path")
        return 1
    if args.perm is not None:
        perm = parse_permutation(args.perm)
        if is_class_member(perm):
            _emit(args, {"perm": list(perm), "member": True}, "member")
            return 0
        try:
            phi(perm)
        except NotInClass as exc:
            _emit(
                args,
                {
                    "perm": list(perm),
                    "member": False,
                    "witness_values": list(exc.witness_values),
                },
                f"not a member: {exc}",
            )
        return 2
    try:
        path = parse_path(args.path)
    except InvalidPath as exc:
        _emit(args, {"path": args.path, "valid": False, "reason": str(exc)},
              f"invalid: {exc}")
        return 2
    kind = "dyck" if FLAT not in path else "schroeder"
    _emit(
        args,
        {"path": path, "valid": True, "kind": kind, "semilength": semilength(path)},
        f"valid {kind} path, semilength {semilength(path)}",
    )
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    value = schroeder_number(args.n)
    if not args.oracle:
        _emit(args, {"n": args.n, "schroeder": value}, str(value))
        return 0
    other = schroeder_number_by_binomial_sum(args.n)
    payload = {"n": args.n, "schroeder": value, "binomial_sum": other,
               "agree": value == other}
    if value != other:
        _emit(args, payload, f"MISMATCH: recurrence {value}, binomial sum {other}")
        return 2
    _emit(args, payload, f"{value} (binomial-sum cross-check agrees)")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify_bijection(args.max_n, limit_override=args.limit_override)
    if args.format == "json":
        print(json.dumps(
            {"rows": [dataclasses.asdict(r) | {"ok": r.ok} for r in report.rows],
             "ok": report.ok},
            indent=2,
        ))
        return 0 if report.ok else 2
    for r in report.rows:
        verdict = "ok" if r.ok else "FAIL"
        print(
            f"n={r.n}: {r.class_size} members -> {r.distinct_images} distinct "
            f"paths (expected {r.expected}); "
            f"image {'complete' if r.image_complete else 'INCOMPLETE'}; "
            f"round-trip {'ok' if r.round_trips else 'FAIL'}; {verdict}"
        )
    print("all sizes verified" if report.ok else "verification FAILED")
    return 0 if report.ok else 2


def _cmd_render(args: argparse.Namespace) -> int:
    print(render_ascii(parse_path(args.path)))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    total = schroeder_number(args.n)
    for _ in range(args.count):
        path = unrank_schroeder(args.n, rng.randrange(total))
        print(f"{path}\t{format_permutation(phi_inverse(path))}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="permpaths",
        description="Bijections between restricted permutations and "
                    "Dyck/Schroeder lattice paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, handler: Callable) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("map", "permutation -> Schroeder path", _cmd_map)
    p.add_argument("--perm", required=True, help="one-line notation, e.g. '2 1 3'")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("unmap", "Schroeder path -> permutation", _cmd_unmap)
    p.add_argument("--path", required=True, help="step string over U, D, F")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("trace", "show every intermediate of the forward map", _cmd_trace)
    p.add_argument("--perm", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("check", "test class membership or path validity", _cmd_check)
    p.add_argument("--perm")
    p.add_argument("--path")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("count", "Schroeder number of a given semilength", _cmd_count)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the independent binomial sum")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("verify", "exhaustively verify the bijection up to a size", _cmd_verify)
    p.add_argument("--max-n", type=int, default=5,
                   help="largest path semilength to sweep (default 5)")
    p.add_argument("--limit-override", type=int, default=None,
                   help="raise the built-in sweep caps")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("render", "draw a path", _cmd_render)
    p.add_argument("--path", required=True)

    p = add("gen", "sample uniform random paths with their permutations", _cmd_gen)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True,
                   help="RNG seed; same seed, same sample")
    p.add_argument("--count", type=int, default=1)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (NotAPermutation, EmptyPermutation, InvalidPath, InvalidCode, NotAPeak) as exc:
        _fail(str(exc))
        return 1
    except (NotInClass, Not321Avoiding) as exc:
        _fail(str(exc))
        return 2
    except SizeGuard as exc:
        _fail(str(exc))
        return 3


if __name__ == "__main__":
    sys.exit(main())
