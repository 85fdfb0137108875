"""Command-line front end: ``dtj {jones,compare,kz,bailey,verify}``.

Exit codes: 0 success, 1 verification failure or mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Callable

from . import bailey, cjp, kzseries, verify
from .knots import MINUSMINUS, MINUSPLUS, TwoBridge, two_bridge_params
from .qalgebra import LaurentPoly, lp_invert_q
from .takata import takata_colored_jones

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

Evaluator = Callable[[int, int, int], LaurentPoly]

# name -> (uses m, evaluator(m, p, N))
FAMILIES: dict[str, tuple[bool, Evaluator]] = {
    "thm1": (True, cjp.jones_thm1),
    "thm2": (True, cjp.jones_thm2),
    "thm3pos": (True, cjp.jones_thm3_pos),
    "thm3neg": (True, cjp.jones_thm3_neg),
    "torus": (False, lambda m, p, N: cjp.jones_torus(p, N)),
    "walsh": (True, cjp.walsh_colored_jones),
}

# extra names accepted by ``compare``
COMPARE_FAMILIES: dict[str, tuple[bool, Evaluator]] = {
    **FAMILIES,
    "walshneg": (True, lambda m, p, N: cjp.walsh_colored_jones(m, -p, N)),
    "habiro": (False, lambda m, p, N: cjp.habiro_left_torus_check(p, N)),
    "takata": (True, lambda m, p, N: takata_colored_jones(two_bridge_params(m, p, MINUSMINUS), N)),
    "takata-plus": (True, lambda m, p, N: takata_colored_jones(two_bridge_params(m, p, MINUSPLUS), N)),
}

_SPEC_RE = re.compile(r"^(?P<name>[a-z0-9-]+?)(?P<shift>[+-]\d+)?(?P<invert>:invert)?$")


class UsageError(Exception):
    pass


class FamilySpec:
    """``name[+k][:invert]``: evaluate ``name`` at m+k, then optionally send q to 1/q."""

    def __init__(self, text: str):
        match = _SPEC_RE.match(text.strip())
        if not match or match.group("name") not in COMPARE_FAMILIES:
            raise UsageError(
                f"bad family spec {text!r}; expected NAME[+k][:invert] with NAME in {sorted(COMPARE_FAMILIES)}")
        self.text = text
        self.name = match.group("name")
        self.shift = int(match.group("shift") or 0)
        self.invert = bool(match.group("invert"))
        self.uses_m, self._fn = COMPARE_FAMILIES[self.name]

    def __call__(self, m: int, p: int, N: int) -> LaurentPoly:
        value = self._fn(m + self.shift, p, N)
        return lp_invert_q(value) if self.invert else value


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj, sort_keys=True))


# -- subcommands ----------------------------------------------------------------


def cmd_jones(args) -> int:
    if args.family == "takata":
        if args.l is None or args.t is None:
            raise UsageError("--family takata needs --l and --t")
        poly = takata_colored_jones(TwoBridge(args.l, args.t), args.N)
    else:
        uses_m, fn = FAMILIES[args.family]
        if args.p is None:
            raise UsageError(f"--family {args.family} needs -p")
        if uses_m and args.m is None:
            raise UsageError(f"--family {args.family} needs -m")
        poly = fn(args.m if uses_m else 0, args.p, args.N)
    if args.format == "json":
        _emit_json(poly.to_json())
    else:
        _emit(poly.to_text())
    return EXIT_OK


def cmd_compare(args) -> int:
    left, right = FamilySpec(args.left), FamilySpec(args.right)
    g = verify.Grid.parse(args.grid)
    m_values = range(1, g.m + 1) if (left.uses_m or right.uses_m) else range(1, 2)
    count = 0
    for m in m_values:
        for p in range(1, g.p + 1):
            for N in range(1, g.N + 1):
                a, b = left(m, p, N), right(m, p, N)
                count += 1
                if a != b:
                    _emit(f"mismatch at m={m} p={p} N={N}")
                    _emit(f"  {left.text}: {a.to_text()}")
                    _emit(f"  {right.text}: {b.to_text()}")
                    return EXIT_FAIL
    _emit(f"{left.text} == {right.text} at all {count} grid points")
    return EXIT_OK


def cmd_kz(args) -> int:
    if args.check_duality is not None:
        check = kzseries.check_duality_1 if args.check_duality == 1 else kzseries.check_duality_2
        holds = check(args.m, args.p, args.N, args.divisor)
        _emit_json({"duality": args.check_duality, "m": args.m, "p": args.p, "N": args.N,
                    "divisor": args.divisor, "holds": holds})
        return EXIT_OK if holds else EXIT_FAIL
    value = kzseries.series_at_root(args.series, args.m, args.p, args.N, args.divisor)
    _emit_json(kzseries.RootOfUnitySeriesValue(args.series, args.m, args.p, args.N, value).to_json())
    return EXIT_OK


def cmd_bailey(args) -> int:
    if args.iterate < 0 or args.check_n < 0:
        raise UsageError("--iterate and --check-n must be nonnegative")
    bp = bailey.iterate_limit(bailey.base_pair(args.pair), args.iterate)
    relation = bailey.verify_bailey_pair(bp, args.check_n)
    closed = bailey.pairs_agree(bp, bailey.iterated_pair(args.pair, args.iterate + 1), args.check_n)
    _emit_json({"pair": args.pair, "iterate": args.iterate, "check_n": args.check_n,
                "relation_holds": relation, "matches_closed_form": closed})
    return EXIT_OK if relation and closed else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        verify.collect(args.suite, args.grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = verify.run_suite(args.suite, args.grid, jobs=args.jobs)
    _emit(report.dumps(timing=not args.no_timing))
    return EXIT_OK if report.passed else EXIT_FAIL


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dtj", description="Exact colored Jones polynomials of double twist knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jones", help="evaluate one colored Jones polynomial")
    p.add_argument("--family", required=True, choices=[*FAMILIES, "takata"])
    p.add_argument("-m", type=int)
    p.add_argument("-p", type=int)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--l", type=int, help="2-bridge l (takata only)")
    p.add_argument("--t", type=int, help="2-bridge t (takata only)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("compare", help="compare two families over a grid",
                       description="Family specs are NAME[+k][:invert], e.g. thm3neg+1:invert.")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--grid", required=True, help="mMax,pMax,NMax")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("kz", help="root of unity series values and dualities")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--series", choices=kzseries.SERIES)
    what.add_argument("--check-duality", type=int, choices=[1, 2])
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--divisor", type=int)
    p.set_defaults(func=cmd_kz)

    p = sub.add_parser("bailey", help="iterate a Bailey pair and check it")
    p.add_argument("--pair", required=True, choices=["slater", "walsh"])
    p.add_argument("--iterate", type=int, default=0, help="number of rho -> infinity steps")
    p.add_argument("--check-n", type=int, default=10)
    p.set_defaults(func=cmd_bailey)

    p = sub.add_parser("verify", help="run an invariant suite and print a JSON report")
    p.add_argument("--suite", default="all", choices=["all", *verify.SUITES])
    p.add_argument("--grid", help=f"mMax,pMax,NMax (default: ${verify.GRID_ENV} or per-suite bounds)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms so reports diff cleanly")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:  # HypothesisError is a ValueError
        sys.stderr.write(f"dtj {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
