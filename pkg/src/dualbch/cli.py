"""Command-line interface.

Four subcommands:

``cosets``
    Coset partition and largest leaders modulo n, with closed-form
    cross-checks where a formula exists.
``dual-bound``
    Lower bounds on the minimum distance of the dual of a narrow-sense BCH
    code, optionally certified against the true distance.
``dually-bch``
    Per-delta verdicts on whether the dual is itself a BCH code, over a
    single delta or an inclusive range.
``verify``
    Regression run of every pinned reference value plus the property-check
    grids; exits 2 on any mismatch.

Exit codes: 0 success, 1 precondition violation (including bad flags),
2 verification mismatch.  Output formats: aligned text table (default),
csv (one block per section, ``#section:<name>`` headers), or json (stable
schema, ``json.dumps(..., indent=2, sort_keys=True)``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field

from .bch import bch_spec, defining_set, dual_code_params, dual_defining_set, generator_matrix
from .cyclotomic import (
    coset_table,
    largest_leaders,
    largest_leaders_closed_form,
    multiplicative_order,
)
from .dualtools import bound_report, dual_lower_bound, dually_bch_closed, dually_bch_direct
from .gf import field_new, prime_power
from .mindist import DEFAULT_BUDGET, DEFAULT_TRIALS, certify
from .propchecks import load_grid_manifest, run_grid

NO_CLOSED_FORM_S = "n/a (s>1: no closed form)"
NO_CLOSED_FORM_M = "n/a (m<4: no closed form)"


class CliError(Exception):
    """Precondition violation; rendered to stderr with exit code 1."""


# ---------------------------------------------------------------------------
# Report assembly and rendering
# ---------------------------------------------------------------------------

@dataclass
class Section:
    name: str
    columns: list
    rows: list


@dataclass
class Report:
    command: str
    inputs: dict
    sections: list = field(default_factory=list)

    def add(self, name, columns, rows):
        self.sections.append(Section(name, list(columns), [list(r) for r in rows]))

    def to_obj(self):
        return {
            "command": self.command,
            "inputs": self.inputs,
            "sections": [
                {"name": s.name, "columns": s.columns, "rows": s.rows}
                for s in self.sections
            ],
        }


def _fmt(value):
    if value is None:
        return ""
    if value is True:
        return "yes"
    if value is False:
        return "no"
    return str(value)


def render_table(report: Report) -> str:
    out = []
    for sec in report.sections:
        out.append(f"== {sec.name} ==")
        cells = [[_fmt(c) for c in sec.columns]]
        cells += [[_fmt(v) for v in row] for row in sec.rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(sec.columns))]
        for j, row in enumerate(cells):
            out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
            if j == 0:
                out.append("  ".join("-" * w for w in widths))
        out.append("")
    return "\n".join(out)


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for sec in report.sections:
        buf.write(f"#section:{sec.name}\n")
        writer.writerow(sec.columns)
        for row in sec.rows:
            writer.writerow([_fmt(v) for v in row])
        buf.write("\n")
    return buf.getvalue()


def render_json(report: Report) -> str:
    return json.dumps(report.to_obj(), indent=2, sort_keys=True)


RENDERERS = {"table": render_table, "csv": render_csv, "json": render_json}


def emit(report: Report, fmt: str) -> None:
    print(RENDERERS[fmt](report))


# ---------------------------------------------------------------------------
# Argument plumbing
# ---------------------------------------------------------------------------

class Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; remap to 1 (2 is reserved for
    verification mismatches)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("DUALBCH_THREADS", "1")))
    except ValueError:
        return 1


def _add_common(parser):
    parser.add_argument("--format", choices=("table", "csv", "json"),
                        default="table", help="output format")
    parser.add_argument("--threads", type=int, default=_default_threads(),
                        help="worker cap for internal sweeps "
                             "(default: DUALBCH_THREADS or 1)")


def _add_family(parser):
    parser.add_argument("--q", type=int, required=True, help="field size")
    parser.add_argument("--m", type=int, required=True,
                        help="extension degree (code length divides q^m-1)")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--lambda", dest="lam", type=int,
                       help="length n = (q^m-1)/lambda with lambda | q-1")
    group.add_argument("--s", type=int,
                       help="length n = (q^m-1)/(q^s-1) with s | m")


def _spec_from_args(args, delta):
    try:
        return bch_spec(args.q, args.m, delta, lam=args.lam, s=args.s)
    except ValueError as e:
        raise CliError(str(e)) from None


def _parse_delta_range(text):
    try:
        lo, hi = text.split(":", 1)
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise CliError(f"--delta-range expects A:B, got {text!r}") from None
    if lo > hi:
        raise CliError(f"empty delta range {text!r}")
    return lo, hi


# ---------------------------------------------------------------------------
# cosets
# ---------------------------------------------------------------------------

def _closed_form_leaders(q, m, lam, s, count):
    """Closed-form values for the largest leaders, or an n/a reason string.

    Formulas exist for lambda = 1 (three leaders), lambda = q-1 with q >= 3
    (one leader) and lambda = 2 with q odd (two leaders), all needing m >= 4.
    The lambda = 2, q = 3 length admits both of the last two; they agree on
    the shared leader, and the longer list wins.
    """
    if s is not None and s > 1:
        return NO_CLOSED_FORM_S
    if m < 4:
        return NO_CLOSED_FORM_M
    values = {}
    families = []
    if lam == 1:
        families.append("full")
    if lam == q - 1 and q >= 3:
        families.append("q_minus_1")
    if lam == 2 and q % 2 == 1:
        families.append("half")
    if not families:
        return f"n/a (lambda={lam}: no closed form)"
    for family in families:
        for rank, value in enumerate(largest_leaders_closed_form(q, m, family)):
            assert values.setdefault(rank, value) == value
    return [values[r] if r in values else None for r in range(count)]


def cmd_cosets(args) -> int:
    q = args.q
    if args.n is not None:
        if args.m is not None or args.lam is not None or args.s is not None:
            raise CliError("--n replaces --m/--lambda/--s")
        n = args.n
        if n < 1 or q < 2 or math.gcd(n, q) != 1:
            raise CliError(f"need n >= 1 and gcd(n, q) = 1, got n={n}, q={q}")
        m = multiplicative_order(q, n)
        lam = (q**m - 1) // n
        s = None
    else:
        if args.m is None:
            raise CliError("need --n, or --m with --lambda or --s")
        m = args.m
        if args.s is not None:
            s, lam = args.s, None
            if m % s:
                raise CliError(f"s={s} does not divide m={m}")
            n = (q**m - 1) // (q**s - 1)
            lam = q**s - 1
        elif args.lam is not None:
            s = None
            lam = args.lam
            if lam < 1 or (q**m - 1) % lam:
                raise CliError(f"lambda={lam} does not divide q^m-1={q**m - 1}")
            n = (q**m - 1) // lam
        else:
            raise CliError("need --lambda or --s alongside --m")
    try:
        table = coset_table(n, q)
    except ValueError as e:
        raise CliError(str(e)) from None

    report = Report("cosets", {"q": q, "n": n, "m": m, "lambda": lam})
    num_cosets = len(table.cosets)
    report.add("summary", ["n", "q", "m", "lambda", "cosets"],
               [[n, q, m, lam, num_cosets]])

    top = largest_leaders(table, min(args.top, num_cosets))
    closed = _closed_form_leaders(q, m, lam, s, len(top)) if args.closed_form else None
    rows = []
    for rank, leader in enumerate(top):
        row = [rank + 1, int(leader)]
        if args.closed_form:
            if isinstance(closed, str):
                row += [closed, None]
            elif closed[rank] is None:
                row += ["n/a (no formula at this rank)", None]
            else:
                row += [closed[rank], closed[rank] == int(leader)]
        rows.append(row)
    columns = ["rank", "leader"] + (["closed_form", "agree"] if args.closed_form else [])
    report.add("largest_leaders", columns, rows)

    if args.members:
        rows = [[leader, len(members), " ".join(str(x) for x in members)]
                for leader, members in sorted(table.cosets.items())]
        report.add("cosets", ["leader", "size", "members"], rows)

    emit(report, args.format)
    return 0


# ---------------------------------------------------------------------------
# dual-bound
# ---------------------------------------------------------------------------

def cmd_dual_bound(args) -> int:
    spec = _spec_from_args(args, args.delta)
    if not args.force_direct:
        try:
            dual_lower_bound(spec)
        except ValueError as e:
            raise CliError(f"{e} (pass --force-direct for the direct scan only)") from None
    table = coset_table(spec.n, spec.q)
    rep = bound_report(spec, table)
    t = defining_set(spec, table)

    report = Report("dual-bound", {
        "q": spec.q, "m": spec.m, "lambda": spec.lam, "delta": spec.delta,
        "n": spec.n,
    })
    report.add("parameters", ["n", "dim", "dual_dim", "delta"],
               [[spec.n, spec.n - len(t), len(t), spec.delta]])
    report.add(
        "dual_distance_bounds",
        ["i_delta_direct", "i_delta_closed", "lower_bound_direct", "lower_bound_closed"],
        [[rep.i_delta_direct, rep.i_delta_closed,
          rep.lower_bound_direct, rep.lower_bound_closed]],
    )
    report.add("prior_bounds", ["name", "value", "vacuous"],
               [[b.name, b.value, b.vacuous] for b in rep.prior_bounds])
    report.add(
        "dually_bch",
        ["direct", "witness", "closed_form", "delta1", "delta2"],
        [[rep.dually_bch_direct, rep.dually_bch_witness, rep.dually_bch_closed,
          rep.delta1, rep.delta2]],
    )

    if args.certify:
        p, e = prime_power(spec.q)
        try:
            ctx = field_new(p, e * spec.m)
        except ValueError as err:
            raise CliError(f"cannot build GF({spec.q}^{spec.m}): {err}") from None
        params = dual_code_params(spec, ctx, table)
        cert = certify(params, rep, budget=args.budget, trials=args.trials,
                       seed=args.seed)
        report.add(
            "distance_certificate",
            ["lower", "upper", "status", "method", "lower_source",
             "witness_weight", "seed"],
            [[cert.lower, cert.upper, cert.status, cert.method,
              cert.lower_source,
              sum(1 for c in cert.witness if c), cert.seed]],
        )

    emit(report, args.format)
    return 0


# ---------------------------------------------------------------------------
# dually-bch
# ---------------------------------------------------------------------------

def _dually_bch_row(q, m, lam, s, table, delta):
    spec = bch_spec(q, m, delta, lam=lam, s=s)
    t_perp = dual_defining_set(defining_set(spec, table))
    verdict, witness = dually_bch_direct(t_perp, table)
    try:
        closed = dually_bch_closed(spec, table)
    except ValueError:
        closed = None
    return [delta, verdict, witness, closed]


def cmd_dually_bch(args) -> int:
    if (args.delta is None) == (args.delta_range is None):
        raise CliError("need exactly one of --delta or --delta-range")
    spec0 = _spec_from_args(args, 2)
    n = spec0.n
    if args.delta_range is not None:
        lo, hi = _parse_delta_range(args.delta_range)
    else:
        lo = hi = args.delta
    if not (2 <= lo and hi <= n):
        raise CliError(f"delta range [{lo}, {hi}] outside [2, {n}]")

    table = coset_table(n, args.q)
    deltas = range(lo, hi + 1)
    if args.threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(
                lambda d: _dually_bch_row(args.q, args.m, args.lam, args.s, table, d),
                deltas))
    else:
        rows = [_dually_bch_row(args.q, args.m, args.lam, args.s, table, d)
                for d in deltas]

    report = Report("dually-bch", {
        "q": args.q, "m": args.m, "lambda": spec0.lam,
        "delta_range": [lo, hi], "n": n,
    })
    report.add("verdicts", ["delta", "dually_bch", "witness", "closed_form"], rows)

    intervals = []
    for delta, verdict, _, _ in rows:
        if verdict:
            if intervals and intervals[-1][1] == delta - 1:
                intervals[-1][1] = delta
            else:
                intervals.append([delta, delta])
    report.add("true_intervals", ["start", "end"], intervals)
    threshold = intervals[-1][0] - 1 if intervals and intervals[-1][1] == n else None
    report.add("summary", ["threshold"], [[threshold]])

    emit(report, args.format)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

VERIFY_SECTIONS = ("leaders", "closed_forms", "bounds", "certify",
                   "dually_bch", "grids")

LEADER_CASES = [(3, 91, 49), (3, 757, 388), (5, 312, 247), (7, 114, 95)]
CLOSED_FORM_CASES = [
    (2, 6, "full", [31, 27, 23]),
    (3, 4, "q_minus_1", [25]),
    (3, 4, "half", [25, 22]),
]
BOUND_CASES = [
    # (q, m, delta, lam, expected bound, expected true dual distance)
    (2, 6, 3, 1, 32, 32),
    (2, 6, 15, 1, 8, 8),
    (3, 3, 5, 1, 9, 9),
    (5, 2, 3, 1, 15, 16),
]
DUALLY_BCH_CASES = [
    # (q, m, {lam|s}, threshold): dually-BCH iff threshold < delta <= n
    (3, 6, {"s": 2}, 49),
    (3, 9, {"s": 3}, 388),
    (5, 4, {"lam": 2}, 247),
    (7, 3, {"lam": 3}, 95),
]

_FAMILY_MODULUS = {
    "full": lambda q, m: q**m - 1,
    "q_minus_1": lambda q, m: (q**m - 1) // (q - 1),
    "half": lambda q, m: (q**m - 1) // 2,
}


def _verify_rows(only, grids_path, threads):
    rows = []

    def check(section, name, expected, computed):
        rows.append([section, name, _fmt(expected), _fmt(computed),
                     "OK" if expected == computed else "FAIL"])

    if "leaders" in only:
        for q, n, expected in LEADER_CASES:
            table = coset_table(n, q)
            check("leaders", f"largest leader mod {n}, base {q}",
                  expected, int(largest_leaders(table, 1)[0]))
    if "closed_forms" in only:
        for q, m, family, expected in CLOSED_FORM_CASES:
            got = [int(v) for v in largest_leaders_closed_form(q, m, family)]
            check("closed_forms", f"q={q} m={m} family={family}", expected, got)
            n = _FAMILY_MODULUS[family](q, m)
            brute = [int(v) for v in largest_leaders(coset_table(n, q), len(expected))]
            check("closed_forms", f"q={q} m={m} family={family} vs brute force",
                  got, brute)
    if "bounds" in only:
        for q, m, delta, lam, expected, _ in BOUND_CASES:
            spec = bch_spec(q, m, delta, lam=lam)
            check("bounds", f"dual distance bound q={q} m={m} delta={delta}",
                  expected, dual_lower_bound(spec))
    if "certify" in only:
        for q, m, delta, lam, _, true_distance in BOUND_CASES:
            spec = bch_spec(q, m, delta, lam=lam)
            table = coset_table(spec.n, q)
            p, e = prime_power(q)
            params = dual_code_params(spec, field_new(p, e * m), table)
            cert = certify(params, bound_report(spec, table))
            check("certify", f"true dual distance q={q} m={m} delta={delta}",
                  f"{true_distance} (exact)", f"{cert.upper} ({cert.status})")
    if "dually_bch" in only:
        for q, m, kind, threshold in DUALLY_BCH_CASES:
            spec = bch_spec(q, m, 2, **kind)
            table = coset_table(spec.n, q)
            name = " ".join(f"{k}={v}" for k, v in kind.items())
            for delta, expected in [(threshold, False), (threshold + 1, True),
                                    (spec.n, True)]:
                s2 = bch_spec(q, m, delta, **kind)
                verdict, _ = dually_bch_direct(
                    dual_defining_set(defining_set(s2, table)), table)
                check("dually_bch", f"q={q} m={m} {name} delta={delta}",
                      expected, verdict)
                check("dually_bch", f"q={q} m={m} {name} delta={delta} closed form",
                      expected, dually_bch_closed(s2, table))
    if "grids" in only:
        manifest = load_grid_manifest(grids_path)
        results = run_grid(manifest, threads=threads)
        cases = [(g["lemma_id"], c) for g in manifest["grids"] for c in g["cases"]]
        for (lemma_id, case), result in zip(cases, results):
            name = " ".join(f"{k}={v}" for k, v in case.items())
            check("grids", f"{result.lemma_id} {name}",
                  "0 failures", f"{len(result.failures)} failures")
    return rows


def cmd_verify(args) -> int:
    only = tuple(args.only) if args.only else VERIFY_SECTIONS
    for section in only:
        if section not in VERIFY_SECTIONS:
            raise CliError(f"unknown section {section!r}; "
                           f"choose from {', '.join(VERIFY_SECTIONS)}")
    rows = _verify_rows(set(only), args.grids, args.threads)
    report = Report("verify", {"only": list(only)})
    report.add("checks", ["section", "name", "expected", "computed", "status"], rows)
    failures = sum(1 for r in rows if r[-1] != "OK")
    report.add("summary", ["checks", "failures"], [[len(rows), failures]])
    emit(report, args.format)
    return 2 if failures else 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> Parser:
    parser = Parser(prog="dualbch",
                    description="Narrow-sense BCH codes and bounds on their duals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    p = sub.add_parser("cosets", help="coset partition and largest leaders")
    p.add_argument("--q", type=int, required=True, help="field size")
    p.add_argument("--n", type=int, help="modulus (must be coprime to q)")
    p.add_argument("--m", type=int, help="extension degree, with --lambda or --s")
    p.add_argument("--lambda", dest="lam", type=int,
                   help="modulus n = (q^m-1)/lambda")
    p.add_argument("--s", type=int, help="modulus n = (q^m-1)/(q^s-1)")
    p.add_argument("--top", type=int, default=3, help="how many largest leaders")
    p.add_argument("--closed-form", action=argparse.BooleanOptionalAction,
                   default=True,
                   help="compare the largest leaders against the closed forms")
    p.add_argument("--members", action="store_true",
                   help="list the full coset partition")
    _add_common(p)
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("dual-bound", help="bounds on the dual distance")
    _add_family(p)
    p.add_argument("--delta", type=int, required=True, help="designed distance")
    p.add_argument("--certify", action="store_true",
                   help="also determine or bracket the true dual distance")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="codeword cap for exhaustive search")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS,
                   help="information-set trials when exhaustion is too large")
    p.add_argument("--seed", type=int, default=0, help="search seed")
    p.add_argument("--force-direct", action="store_true",
                   help="proceed without closed forms when the theorem "
                        "hypotheses fail")
    _add_common(p)
    p.set_defaults(func=cmd_dual_bound)

    p = sub.add_parser("dually-bch", help="is the dual itself a BCH code?")
    _add_family(p)
    p.add_argument("--delta", type=int, help="single designed distance")
    p.add_argument("--delta-range", help="inclusive range A:B of designed distances")
    _add_common(p)
    p.set_defaults(func=cmd_dually_bch)

    p = sub.add_parser("verify", help="re-check all pinned reference values")
    p.add_argument("--only", action="append", metavar="SECTION",
                   help=f"restrict to a section (repeatable): "
                        f"{', '.join(VERIFY_SECTIONS)}")
    p.add_argument("--grids", help="path to a property-grid manifest "
                                   "(default: packaged grids)")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"dualbch {args.command}: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
