"""Command-line surface.

Subcommands: lex, omega, cascade, bounds, verify, search, complement.
Exit codes: 0 on success, 1 on validation or usage errors, 2 when an
enumeration exceeds its candidate budget.  The default budget can be
overridden with the OMEGA_LEX_BUDGET environment variable; an explicit
--budget flag wins over both.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .cascade import cascade_decompose, last_lex_set
from .combinat import (
    Family,
    FamilyParseError,
    format_family,
    lex_segment,
    load_family,
    save_family,
)
from .constructions import ak_best, bey_bound, quasi_complete, quasi_star
from .omega import (
    degree_vector,
    disjoint_pairs,
    full_stars,
    minimum_cover,
    omega,
    omega_via_degrees,
)
from .verify import (
    DEFAULT_BUDGET,
    DEFAULT_COUNT_LIMIT,
    BudgetExceededError,
    local_search,
    records_to_csv,
    verify_table,
)

COVER_PRINT_LIMIT = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want exit code 1
        raise UsageError(message)


def _fmt_set(elements) -> str:
    return "{" + " ".join(str(e) for e in sorted(elements)) + "}"


def _write_family(f: Family, path: str | None) -> None:
    if path:
        save_family(f, path)
    else:
        sys.stdout.write(format_family(f))


def _default_budget() -> int:
    env = os.environ.get("OMEGA_LEX_BUDGET")
    if env is None:
        return DEFAULT_BUDGET
    try:
        value = int(env)
    except ValueError:
        raise UsageError(f"OMEGA_LEX_BUDGET must be an integer, got {env!r}") from None
    if value < 1:
        raise UsageError(f"OMEGA_LEX_BUDGET must be positive, got {value}")
    return value


def _cmd_lex(args) -> int:
    _write_family(lex_segment(args.n, args.k, args.m), args.output)
    return 0


def _cmd_omega(args) -> int:
    f = load_family(args.file)
    print(f"n: {f.universe}")
    print(f"k: {f.arity}")
    print(f"m: {f.size}")
    print(f"omega: {omega(f)}")
    print("degrees:", " ".join(str(d) for d in degree_vector(f).counts))
    print(f"disjoint_pairs: {disjoint_pairs(f)}")
    stars = full_stars(f)
    print("full_stars:", _fmt_set(stars) if stars else "none")
    cover = minimum_cover(f, min(COVER_PRINT_LIMIT, f.universe))
    if cover is None:
        print(f"minimum_cover: none within size {COVER_PRINT_LIMIT}")
    else:
        print(f"minimum_cover: {_fmt_set(cover)}")
    return 0


def _cmd_cascade(args) -> int:
    form = cascade_decompose(args.n, args.k, args.m)
    terms = " + ".join(f"C({a},{j})" for a, j in form.terms) or "0"
    print(f"n: {args.n}")
    print(f"k: {args.k}")
    print(f"m: {args.m}")
    print(f"terms: {terms}")
    print("r_values:", "(" + ", ".join(str(r) for r in form.r_values) + ")")
    print(f"cascade_end: {form.end}")
    print(f"last_lex_set: {last_lex_set(args.n, args.k, args.m)}")
    return 0


def _cmd_bounds(args) -> int:
    n, k, m = args.n, args.k, args.m
    bound = bey_bound(n, k, m)
    print(f"bey_bound: {bound.numerator}/{bound.denominator}")
    if k == 2:
        w_c = omega(quasi_complete(n, m))
        w_s = omega(quasi_star(n, m))
        w_lex = omega(lex_segment(n, k, m))
        best = ak_best(n, m)
        print(f"omega_quasi_complete: {w_c}")
        print(f"omega_quasi_star: {w_s}")
        print(f"omega_lex: {w_lex}")
        print(f"ak_best: {best.value} ({best.which})")
    return 0


def _cmd_verify(args) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    records = verify_table(
        args.n,
        args.k,
        range(args.m_from, args.m_to + 1),
        budget=budget,
        count_limit=args.count_limit,
        seed=args.seed,
    )
    for r in records:
        if r.error is not None:
            print(f"n={r.n} k={r.k} m={r.m} omega_lex={r.omega_lex} error={r.error}")
            continue
        parts = [
            f"n={r.n}",
            f"k={r.k}",
            f"m={r.m}",
            f"cascade_end={'-' if r.cascade_end is None else r.cascade_end}",
            f"omega_lex={r.omega_lex}",
            f"omega_max={r.omega_oracle_max}",
            f"lex_is_optimal={'true' if r.lex_is_optimal else 'false'}",
            f"optimum_count={r.optimum_count}",
            f"hypothesis_met={'-' if r.hypothesis_met is None else str(r.hypothesis_met).lower()}",
        ]
        print(" ".join(parts))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(records_to_csv(records))
    return 0


def _cmd_search(args) -> int:
    start = load_family(args.file)
    trace = local_search(start, max_steps=args.max_steps)
    print(f"start_omega: {omega_via_degrees(start)}")
    for i, step in enumerate(trace.steps, start=1):
        print(f"step {i}: out {step.removed} in {step.added} delta +{step.delta}")
    print(f"steps: {len(trace.steps)}")
    print(f"final_omega: {trace.final_omega}")
    for s in trace.final.members:
        print(" ".join(str(e) for e in s.elements))
    return 0


def _cmd_complement(args) -> int:
    from .combinat import complement_family

    _write_family(complement_family(load_family(args.file)), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="omegalex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lex", help="write the first-m lex segment as a family file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_lex)

    p = sub.add_parser("omega", help="weight, degrees, covers of a family file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_omega)

    p = sub.add_parser("cascade", help="cascade decomposition of C(n,k) - m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_cascade)

    p = sub.add_parser("bounds", help="upper bound and k=2 construction weights")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify", help="oracle verification table over a range of m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m-from", type=int, required=True)
    p.add_argument("--m-to", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--count-limit", type=int, default=DEFAULT_COUNT_LIMIT)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="hill-climbing swap search from a family file")
    p.add_argument("file")
    p.add_argument("--max-steps", type=int, default=10_000)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("complement", help="complement of a family file")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_complement)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 2
    except FamilyParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
