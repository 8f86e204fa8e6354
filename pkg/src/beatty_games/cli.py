"""Command-line front end.

Exit codes: 0 for GOOD / MATCH / pass, 1 for NOT_GOOD / MISMATCH / fail,
2 for UNDECIDED and errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .beatty import (
    InvalidTuple,
    WitnessNotFound,
    check_superadditivity,
    derive_tuple,
    make_tuple,
    sequence_table_tsv,
    tuple_record,
    validate_tuple,
)
from .exactreal import ParseError, PrecisionExhausted, precision_cap
from .game import build_moveset, build_pset, solve_pgrid, verify_invariance
from .goodness import decide_good
from .productword import build_word, word_table_tsv
from .sturmian import TorusPoint, region_coding
from .torus import DEFAULT_SCAN_BUDGET, torus_svg

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(name):
    def conv(text):
        v = int(text)
        if v <= 0:
            raise argparse.ArgumentTypeError(f"{name} must be positive")
        return v
    return conv


def _tuple_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("tuple (expression strings, e.g. \"1.99+sqrt(5)/2\")")
    g.add_argument("--beta", required=True)
    g.add_argument("--alpha")
    g.add_argument("--gamma")
    g.add_argument("--delta")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--precision-bits", type=_positive("precision-bits"), default=None,
                   help="cap on interval refinement bits")
    p.add_argument("--scan-budget", type=_positive("scan-budget"), default=DEFAULT_SCAN_BUDGET)
    p.add_argument("--out", help="write the artifact here instead of stdout")
    p.add_argument("--format", choices=("json", "tsv", "svg"), default=None)


def _tuple_from(args, validate: bool = True):
    if args.alpha is not None:
        if args.gamma is None or args.delta is None:
            raise UsageError("--alpha needs --gamma and --delta as well")
        return make_tuple(args.alpha, args.beta, args.gamma, args.delta, validate=validate)
    if (args.gamma is None) == (args.delta is None):
        raise UsageError("give exactly one of --gamma and --delta")
    return derive_tuple(args.beta, gamma=args.gamma, delta=args.delta, validate=validate)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=list) + "\n"


def cmd_derive(args) -> int:
    t = _tuple_from(args, validate=False)
    rep = validate_tuple(t)
    _emit(args, _dump({"tuple": tuple_record(t), "validation": rep.as_dict()}))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_decide(args) -> int:
    t = _tuple_from(args)
    v = decide_good(t, budget=args.scan_budget)
    _emit(args, v.to_json() + "\n")
    return {"GOOD": EXIT_OK, "NOT_GOOD": EXIT_FAIL}.get(v.verdict, EXIT_ERROR)


def cmd_verify(args) -> int:
    t = _tuple_from(args)
    rep = verify_invariance(t, args.bound)
    if args.format == "tsv":
        grid = solve_pgrid(build_moveset(build_pset(t, args.bound)), args.bound)
        _emit(args, grid.to_tsv())
        sys.stderr.write(f"{rep.status}\n")
    else:
        _emit(args, _dump(rep.as_dict()))
    return EXIT_OK if rep.status == "MATCH" else EXIT_FAIL


def cmd_word(args) -> int:
    t = _tuple_from(args)
    w = build_word(t, args.length)
    if args.format == "json":
        _emit(args, _dump({"word": w.prefix(args.length), "sign": w.sign}))
    else:
        _emit(args, word_table_tsv(w, args.length))
    return EXIT_OK


def cmd_seq(args) -> int:
    t = _tuple_from(args)
    if args.format == "json":
        _emit(args, _dump({"A": t.A_upto(args.length), "B": t.B_upto(args.length)}))
    else:
        _emit(args, sequence_table_tsv(t, args.length))
    return EXIT_OK


def cmd_superadd(args) -> int:
    t = _tuple_from(args)
    rep = check_superadditivity(t, args.horizon)
    _emit(args, _dump(rep.as_dict()))
    return EXIT_OK if rep.status == "B1_superadditive" else EXIT_FAIL


def cmd_plot_torus(args) -> int:
    t = _tuple_from(args)
    svg = torus_svg(t, args.steps)
    _emit(args, svg)
    coding = region_coding(t.alpha, t.beta, TorusPoint(t.gamma, t.delta), args.steps)
    sys.stderr.write(f"regions: {coding}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="beatty-games",
                                 description="Invariant games from complementary Beatty pairs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, aliases=(), **extra):
        p = sub.add_parser(name, help=help_text, aliases=list(aliases))
        _tuple_args(p)
        _common(p)
        for flag, kw in extra.items():
            p.add_argument(flag, **kw)
        p.set_defaults(func=func)
        return p

    add("derive", cmd_derive, "complete and validate a 4-tuple")
    add("decide", cmd_decide, "decide whether the tuple is good")
    add("verify", cmd_verify, "compare the solved game grid with the P set",
        **{"--bound": dict(type=_positive("bound"), default=300)})
    add("word", cmd_word, "product word table",
        **{"--length": dict(type=_positive("length"), default=20)})
    add("seq", cmd_seq, "A_n, B_n table", aliases=("table",),
        **{"--length": dict(type=_positive("length"), default=15)})
    add("superadd", cmd_superadd, "superadditivity report",
        **{"--horizon": dict(type=_positive("horizon"), default=200)})
    add("plot-torus", cmd_plot_torus, "SVG of the orbit on the torus",
        **{"--steps": dict(type=_positive("steps"), default=10)})
    return ap


_TUPLE_FLAGS = ("--alpha", "--beta", "--gamma", "--delta")


def _bind_values(argv: list[str]) -> list[str]:
    """Attach the token after a tuple flag to it, so that expressions such as
    ``-1-sqrt(2)`` are not mistaken for options."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _TUPLE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = ap.parse_args(_bind_values(argv))
    try:
        if args.precision_bits:
            with precision_cap(args.precision_bits):
                return args.func(args)
        return args.func(args)
    except InvalidTuple as exc:
        sys.stderr.write(f"error: {exc}\n")
        for c in exc.report.failures:
            sys.stderr.write(f"  {c.name}: {c.detail}\n")
        return EXIT_ERROR
    except (UsageError, ParseError, ValueError, PrecisionExhausted, WitnessNotFound) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
