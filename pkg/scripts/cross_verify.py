#!/usr/bin/env python3
"""Sweep the independent evaluation routes against each other and report
per-case timings.

Usage:
    python scripts/cross_verify.py [--max-part 4] [--max-len 3] [--max-vars 3] [--lgv]

Every (shape, inner shape, variable split) in the budget is evaluated by the
inner-sum definition, the tableau sum, the branching chains, and the Pfaffian
formula; with --lgv the lattice-path oracle joins in.  Exits nonzero on the
first disagreement.
"""

from __future__ import annotations

import argparse
import sys
import time

from qsym import QContext, lgv_weight_sum, qI_jp, qI_routes
from qsym.checks import qi_cases


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-part", type=int, default=4)
    parser.add_argument("--max-len", type=int, default=3)
    parser.add_argument("--max-vars", type=int, default=3)
    parser.add_argument("--lgv", action="store_true", help="include the lattice-path oracle")
    parser.add_argument("--verbose", action="store_true")
    args = parser.parse_args(argv)

    ctx = QContext()
    cases = 0
    start = time.time()
    for lam, mu, spec in qi_cases(args.max_part, args.max_len, args.max_vars):
        t0 = time.time()
        routes = qI_routes(lam, mu, spec, ["definition", "tableau", "branch"], ctx)
        if lam.length >= 2:
            routes["pfaffian"] = qI_jp(lam, mu, spec, ctx)
        if args.lgv:
            routes["lgv"] = lgv_weight_sum(lam, mu, spec)
        values = list(routes.values())
        cases += 1
        if any(v != values[0] for v in values):
            print(f"DISAGREEMENT at lam={lam or '()'} mu={mu or '()'} "
                  f"spec=({spec.k},{spec.m})")
            for name, val in routes.items():
                print(f"  {name}: {val}")
            return 1
        if args.verbose:
            print(f"ok lam={str(lam) or '()':9} mu={str(mu) or '()':7} "
                  f"spec=({spec.k},{spec.m})  terms={len(values[0].terms):4}  "
                  f"{time.time() - t0:6.2f}s")
    print(f"{cases} cases agree across all routes in {time.time() - start:.1f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
