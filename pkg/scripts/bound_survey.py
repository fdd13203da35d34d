#!/usr/bin/env python3
"""Sweep delta for one code family and tabulate every dual-distance bound.

For each designed distance the script reports I(delta) (direct scan and
closed form), the resulting lower bound on the dual distance, the direct
cyclic-run bound on the dual defining set, the best applicable prior bound,
and the dually-BCH verdict.

    python3 scripts/bound_survey.py --q 2 --m 6 --lambda 1
    python3 scripts/bound_survey.py --q 3 --m 6 --s 2 --deltas 2:20
"""

import argparse

from dualbch.bch import bch_spec
from dualbch.cyclotomic import coset_table
from dualbch.dualtools import bound_report


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--q", type=int, required=True)
    parser.add_argument("--m", type=int, required=True)
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--lambda", dest="lam", type=int)
    group.add_argument("--s", type=int)
    parser.add_argument("--deltas", default=None,
                        help="inclusive range A:B (default: all of [2, n])")
    args = parser.parse_args()

    spec0 = bch_spec(args.q, args.m, 2, lam=args.lam, s=args.s)
    n = spec0.n
    lo, hi = 2, n
    if args.deltas:
        lo, hi = (int(t) for t in args.deltas.split(":"))
    table = coset_table(n, args.q)

    print(f"n = {n}, q = {args.q}, m = {args.m}, lambda = {spec0.lam}")
    print(f"{'delta':>6} {'I_direct':>8} {'I_closed':>8} {'bound':>6} "
          f"{'run_bound':>9} {'best_prior':>18} {'dually_bch':>10}")
    for delta in range(lo, hi + 1):
        spec = bch_spec(args.q, args.m, delta, lam=args.lam, s=args.s)
        rep = bound_report(spec, table)
        useful = [b for b in rep.prior_bounds if not b.vacuous]
        prior = max(useful, key=lambda b: b.value) if useful else None
        prior_txt = f"{prior.value} ({prior.name[:12]})" if prior else "-"
        print(f"{delta:>6} {rep.i_delta_direct:>8} "
              f"{rep.i_delta_closed if rep.i_delta_closed is not None else '-':>8} "
              f"{rep.lower_bound_closed if rep.lower_bound_closed is not None else '-':>6} "
              f"{rep.lower_bound_direct:>9} {prior_txt:>18} "
              f"{'yes' if rep.dually_bch_direct else 'no':>10}")


if __name__ == "__main__":
    main()
