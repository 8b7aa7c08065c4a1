"""Growth functions and rates of the dodecahedron family and its contracted limit."""

from __future__ import annotations

import argparse

from coxgrowth.growth3d import format_ratfunc, polyhedral_growth
from coxgrowth.polyhedron import DODECAHEDRON_MARKED_EDGE, contract_ridge, gen_dodecahedron


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=8)
    ap.add_argument("--digits", type=int, default=10)
    args = ap.parse_args()

    for m in range(2, args.max_m + 1):
        rep = polyhedral_growth(gen_dodecahedron(m))
        print(f"m={m:<3} tau={rep.tau.decimal(args.digits):<16} {rep.tau_class.describe():<40} f={format_ratfunc(rep.f)}")
    limit = polyhedral_growth(contract_ridge(gen_dodecahedron(2), DODECAHEDRON_MARKED_EDGE))
    print(f"m=inf tau={limit.tau.decimal(args.digits):<16} {limit.tau_class.describe():<40} f={format_ratfunc(limit.f)}")


if __name__ == "__main__":
    main()
