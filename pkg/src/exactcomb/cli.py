"""Command-line surface: exact coefficients, table dumps, enumeration
dumps, poset/sieve tools, toy RSA, and the self-check suites.

All commands are one-shot; numbers are printed as exact decimal strings
(rationals as "p/q"), and JSON output keeps integers as strings so that
consumers cannot silently lose precision.  Exit codes: 0 ok, 1
verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import NamedTuple, Optional, Sequence

from . import counting as ct
from . import enumeration as en
from . import number_theory as nt
from .exact_core import format_rational, parse_int
from .poset_mobius import FinitePoset, PosetError, SubsetFamily
from .poset_mobius import invert, invert_dual, jordan_counts, mobius
from .poset_mobius import sylvester_count, sylvester_numbers
from .recursive_matrix import binomial_matrix, gentile_matrix
from .recursive_matrix import multiset_matrix
from .verify import SUITES, run_suites


class CommandResult(NamedTuple):
    code: int  # 0 ok, 1 verification failure, 2 usage error
    payload: str


def _ints(args: Sequence[str], want: int, family: str) -> list[int]:
    if len(args) != want:
        raise ValueError(f"{family} expects {want} integer argument(s), got {len(args)}")
    return [parse_int(a) for a in args]


def _type_vector(args: Sequence[str]) -> ct.TypeVector:
    if not args:
        raise ValueError("expected: n nu1 [nu2 ...]")
    n, *nu = (parse_int(a) for a in args)
    return ct.TypeVector(n, nu)


# ---------------------------------------------------------------------------
# coeff
# ---------------------------------------------------------------------------


def _cmd_coeff(args: argparse.Namespace) -> CommandResult:
    family, rest = args.family, args.args
    if family == "binomial":
        n, k = _ints(rest, 2, family)
        return CommandResult(0, str(ct.binomial(n, k)))
    if family == "multiset":
        n, k = _ints(rest, 2, family)
        return CommandResult(0, str(ct.multiset_coeff(n, k)))
    if family == "gentile":
        p, n, k = _ints(rest, 3, family)
        return CommandResult(0, str(ct.gentile_coeff(p, n, k)))
    if family == "multinomial":
        if len(rest) < 1:
            raise ValueError("multinomial expects: n h1 [h2 ...]")
        n, *parts = (parse_int(a) for a in rest)
        return CommandResult(0, str(ct.multinomial(n, parts)))
    if family == "stirling1":
        n, k = _ints(rest, 2, family)
        return CommandResult(0, str(ct.stirling1_signed(n, k)))
    if family == "stirling2":
        n, k = _ints(rest, 2, family)
        return CommandResult(0, str(ct.stirling2(n, k)))
    if family == "cycles":
        n, k = _ints(rest, 2, family)
        return CommandResult(0, str(ct.cycle_count(n, k)))
    if family == "bell":
        (n,) = _ints(rest, 1, family)
        return CommandResult(0, str(ct.bell(n)))
    if family == "faa":
        return CommandResult(0, str(ct.faa_di_bruno(_type_vector(rest))))
    if family == "cauchy":
        return CommandResult(0, str(ct.cauchy_count(_type_vector(rest))))
    if family == "derangement":
        (n,) = _ints(rest, 1, family)
        return CommandResult(0, str(ct.derangement(n)))
    if family == "dnk":
        n, k = _ints(rest, 2, family)
        return CommandResult(0, str(ct.derangement_fixed(n, k)))
    if family == "surjections":
        k, n = _ints(rest, 2, family)
        return CommandResult(0, str(ct.surjection_count(k, n)))
    if family == "gergonne":
        n, k, m = _ints(rest, 3, family)
        count, prob = ct.gergonne(ct.GergonneQuery(n, k, m, circular=args.circular))
        return CommandResult(0, f"{count} {format_rational(prob)}")
    if family == "touchard":
        (n,) = _ints(rest, 1, family)
        return CommandResult(0, str(ct.touchard(n)))
    if family == "menage":
        (n,) = _ints(rest, 1, family)
        return CommandResult(0, str(ct.menage_count(n)))
    if family == "phi":
        (n,) = _ints(rest, 1, family)
        return CommandResult(0, str(nt.euler_phi(n)))
    if family == "mobius":
        (n,) = _ints(rest, 1, family)
        return CommandResult(0, str(nt.mobius_classical(n)))
    if family == "birthday":
        (k,) = _ints(rest, 1, family)
        return CommandResult(0, format_rational(ct.birthday_probability(k, args.days)))
    if family == "graph":
        if len(rest) not in (2, 3):
            raise ValueError("graph expects: kind n [k]")
        kind = rest[0]
        n = parse_int(rest[1])
        k = parse_int(rest[2]) if len(rest) == 3 else None
        return CommandResult(0, str(ct.graph_count(kind, n, k)))
    raise ValueError(f"unknown coefficient family {family!r}")


COEFF_FAMILIES = (
    "binomial multiset gentile multinomial stirling1 stirling2 cycles bell "
    "faa cauchy derangement dnk surjections gergonne touchard menage phi "
    "mobius birthday graph"
).split()


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def _table_rows(family: str, rows: int, cols: int, p: Optional[int]) -> list[list[int]]:
    order = max(cols - 1, 0)
    if family == "binomial":
        return binomial_matrix(order).table(rows, cols)
    if family == "multiset":
        return multiset_matrix(order).table(rows, cols)
    if family == "gentile":
        if p is None:
            raise ValueError("gentile tables need --p")
        return gentile_matrix(p, order).table(rows, cols)
    pointwise = {
        "stirling1": ct.stirling1_signed,
        "stirling2": ct.stirling2,
        "cycles": ct.cycle_count,
    }
    if family in pointwise:
        fn = pointwise[family]
        return [[fn(n, k) for k in range(cols)] for n in range(rows)]
    raise ValueError(f"unknown table family {family!r}")


def _cmd_table(args: argparse.Namespace) -> CommandResult:
    if args.rows < 1 or args.cols < 1:
        raise ValueError("--rows and --cols must be >= 1")
    if args.rows > 2000 or args.cols > 2000:
        raise ValueError("table dumps are capped at 2000 rows/columns")
    table = _table_rows(args.family, args.rows, args.cols, args.p)
    if args.format == "json":
        payload = json.dumps(
            {"family": args.family, "rows": [[str(v) for v in row] for row in table]}
        )
    else:
        payload = "\n".join(",".join(str(v) for v in row) for row in table)
    return CommandResult(0, payload)


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------


def _cmd_enumerate(args: argparse.Namespace) -> CommandResult:
    family, rest = args.family, args.args
    lines: list[str] = []
    if family == "functions":
        k, n = _ints(rest, 2, family)
        items = (en.as_word(f) for f in en.enumerate_functions(k, n, args.mode))
    elif family == "subsets":
        if len(rest) == 1:
            (n,) = _ints(rest, 1, family)
            items = (en.as_word(s) for s in en.enumerate_subsets(n))
        else:
            n, k = _ints(rest, 2, family)
            items = (en.as_word(s) for s in en.enumerate_subsets(n, k))
    elif family == "multisets":
        n, k = _ints(rest, 2, family)
        items = (
            f"{en.multiset_word(r)} {r}" for r in en.enumerate_multisets(n, k)
        )
    elif family == "partitions":
        (n,) = _ints(rest, 1, family)
        items = (
            "|".join("{" + ",".join(map(str, b)) + "}" for b in part)
            for part in en.enumerate_set_partitions(n, k=args.blocks)
        )
    elif family == "permutations":
        (n,) = _ints(rest, 1, family)
        items = (
            en.as_word(p)
            for p in en.enumerate_permutations(
                n, cycles=args.cycles, derangement_only=args.derangements
            )
        )
    elif family == "gergonne":
        n, k, m = _ints(rest, 3, family)
        q = ct.GergonneQuery(n, k, m, circular=args.circular)
        items = (en.as_word(s) for s in en.enumerate_gergonne(q))
    elif family == "menage":
        (n,) = _ints(rest, 1, family)
        items = (en.as_word(f) for f in en.enumerate_menage(n))
    else:
        raise ValueError(f"unknown enumeration family {family!r}")
    for i, line in enumerate(items):
        if args.limit and i >= args.limit:
            lines.append("...")
            break
        lines.append(line)
    return CommandResult(0, "\n".join(lines))


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> CommandResult:
    if args.list:
        return CommandResult(0, "\n".join(SUITES))
    verbose = bool(os.environ.get("EXACTCOMB_VERBOSE"))
    started = time.perf_counter()
    try:
        results = run_suites(args.suites or ["all"])
    except KeyError as exc:
        raise ValueError(
            f"unknown suite {exc.args[0]!r}; available: all, {', '.join(SUITES)}"
        ) from None
    if verbose:
        print(f"ran {len(results)} checks in "
              f"{time.perf_counter() - started:.2f}s", file=sys.stderr)
    lines = []
    failures = 0
    for suite, check in results:
        tag = "PASS" if check.ok else "FAIL"
        failures += not check.ok
        detail = f"  [{check.detail}]" if check.detail else ""
        lines.append(f"{tag}  {suite}: {check.name}{detail}")
    lines.append(
        f"{len(results) - failures}/{len(results)} checks passed"
        + (f", {failures} FAILED" if failures else "")
    )
    return CommandResult(1 if failures else 0, "\n".join(lines))


# ---------------------------------------------------------------------------
# poset
# ---------------------------------------------------------------------------


def _load_poset(path: str) -> FinitePoset:
    with open(path, encoding="utf-8") as fh:
        return FinitePoset.from_json(fh.read())


def _cmd_poset(args: argparse.Namespace) -> CommandResult:
    if args.subcmd == "mobius":
        P = _load_poset(args.poset)
        mu = mobius(P)
        rank = {e: i for i, e in enumerate(P.linear_extension())}
        triples = [
            [x, y, str(mu(x, y))]
            for x in P.elements
            for y in sorted(P.up(x), key=rank.__getitem__)
        ]
        if args.format == "json":
            return CommandResult(0, json.dumps({"mobius": triples}))
        return CommandResult(
            0, "\n".join(f"{x},{y},{v}" for x, y, v in triples)
        )
    if args.subcmd == "invert":
        P = _load_poset(args.poset)
        with open(args.values, encoding="utf-8") as fh:
            raw = json.load(fh)
        from .exact_core import parse_rational

        g = {}
        for e in P.elements:
            key = str(e)
            if key not in raw:
                raise ValueError(f"missing value for element {key!r}")
            g[e] = parse_rational(str(raw[key]))
        f = invert_dual(P, g) if args.dual else invert(P, g)
        out = {str(e): format_rational(f[e]) for e in P.elements}
        return CommandResult(0, json.dumps(out))
    if args.subcmd == "sieve":
        with open(args.family, encoding="utf-8") as fh:
            fam = SubsetFamily.from_json(fh.read())
        payload = json.dumps(
            {
                "sylvester": [str(v) for v in sylvester_numbers(fam)],
                "survivors": str(sylvester_count(fam)),
                "exactly": [str(v) for v in jordan_counts(fam)],
            }
        )
        return CommandResult(0, payload)
    raise ValueError(f"unknown poset subcommand {args.subcmd!r}")


# ---------------------------------------------------------------------------
# rsa
# ---------------------------------------------------------------------------


def _cmd_rsa(args: argparse.Namespace) -> CommandResult:
    if args.subcmd == "keygen":
        key = nt.rsa_keygen(args.p, args.q, args.e)
        payload = json.dumps(
            {
                "p": str(key.p),
                "q": str(key.q),
                "n": str(key.n),
                "phi": str(key.phi),
                "e": str(key.e),
                "d": str(key.d),
                "note": "toy parameters, no cryptographic security",
            }
        )
        return CommandResult(0, payload)
    if args.subcmd == "encrypt":
        return CommandResult(0, str(nt.rsa_encrypt(args.n, args.e, args.m)))
    if args.subcmd == "decrypt":
        return CommandResult(0, str(nt.rsa_decrypt(args.n, args.d, args.c)))
    raise ValueError(f"unknown rsa subcommand {args.subcmd!r}")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactcomb",
        description="Exact combinatorial coefficients, tables, enumerations, "
        "poset inversion, sieves, and self-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_coeff = sub.add_parser("coeff", help="print one exact coefficient")
    p_coeff.add_argument("family", choices=COEFF_FAMILIES)
    p_coeff.add_argument("args", nargs="*")
    p_coeff.add_argument("--circular", action="store_true",
                         help="circular variant (gergonne)")
    p_coeff.add_argument("--days", type=int, default=365,
                         help="year length (birthday)")
    p_coeff.set_defaults(fn=_cmd_coeff)

    p_table = sub.add_parser("table", help="dump a coefficient table")
    p_table.add_argument(
        "family",
        choices=["binomial", "multiset", "gentile", "stirling1", "stirling2", "cycles"],
    )
    p_table.add_argument("--rows", type=int, required=True)
    p_table.add_argument("--cols", type=int, required=True)
    p_table.add_argument("--p", type=int, default=None,
                         help="occupancy bound (gentile)")
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")
    p_table.set_defaults(fn=_cmd_table)

    p_enum = sub.add_parser("enumerate", help="dump a family, one object per line")
    p_enum.add_argument(
        "family",
        choices=[
            "functions", "subsets", "multisets", "partitions",
            "permutations", "gergonne", "menage",
        ],
    )
    p_enum.add_argument("args", nargs="*")
    p_enum.add_argument("--mode", choices=["all", "injective", "surjective"],
                        default="all", help="filter (functions)")
    p_enum.add_argument("--blocks", type=int, default=None, help="block count (partitions)")
    p_enum.add_argument("--cycles", type=int, default=None, help="cycle count (permutations)")
    p_enum.add_argument("--derangements", action="store_true",
                        help="fixed-point-free only (permutations)")
    p_enum.add_argument("--circular", action="store_true", help="round table (gergonne)")
    p_enum.add_argument("--limit", type=int, default=0, help="cap output lines (0 = all)")
    p_enum.set_defaults(fn=_cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run self-check suites")
    p_verify.add_argument("suites", nargs="*", help="suite names (default: all)")
    p_verify.add_argument("--list", action="store_true", help="list suite names")
    p_verify.set_defaults(fn=_cmd_verify)

    p_poset = sub.add_parser("poset", help="Mobius tables, inversion, sieve")
    poset_sub = p_poset.add_subparsers(dest="subcmd", required=True)
    pp = poset_sub.add_parser("mobius", help="Mobius function of a poset JSON file")
    pp.add_argument("poset")
    pp.add_argument("--format", choices=["csv", "json"], default="csv")
    pp.set_defaults(fn=_cmd_poset)
    pi = poset_sub.add_parser("invert", help="Mobius inversion of a value table")
    pi.add_argument("poset")
    pi.add_argument("values", help='JSON file {"element": "p/q", ...}')
    pi.add_argument("--dual", action="store_true", help="invert on the reversed order")
    pi.set_defaults(fn=_cmd_poset)
    ps = poset_sub.add_parser("sieve", help="Sylvester/Jordan counts of a family")
    ps.add_argument("family", help='JSON file {"universe": N, "sets": [[...], ...]}')
    ps.set_defaults(fn=_cmd_poset)

    p_rsa = sub.add_parser("rsa", help="toy RSA (no security!)")
    rsa_sub = p_rsa.add_subparsers(dest="subcmd", required=True)
    rk = rsa_sub.add_parser("keygen")
    rk.add_argument("--p", type=int, required=True)
    rk.add_argument("--q", type=int, required=True)
    rk.add_argument("--e", type=int, required=True)
    rk.set_defaults(fn=_cmd_rsa)
    re_ = rsa_sub.add_parser("encrypt")
    re_.add_argument("--n", type=int, required=True)
    re_.add_argument("--e", type=int, required=True)
    re_.add_argument("--m", type=int, required=True)
    re_.set_defaults(fn=_cmd_rsa)
    rd = rsa_sub.add_parser("decrypt")
    rd.add_argument("--n", type=int, required=True)
    rd.add_argument("--d", type=int, required=True)
    rd.add_argument("--c", type=int, required=True)
    rd.set_defaults(fn=_cmd_rsa)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """Parse and execute; usage and input errors come back as code 2."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(2 if exc.code else 0, "")
    try:
        return args.fn(args)
    except PosetError as exc:
        return CommandResult(2, f"error: not a partial order: {exc} (witness {exc.witness})")
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        return CommandResult(2, f"error: {exc}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(argv)
    if result.payload:
        stream = sys.stderr if result.code == 2 else sys.stdout
        print(result.payload, file=stream)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
