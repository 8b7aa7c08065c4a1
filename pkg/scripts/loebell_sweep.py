"""Label sweeps along one vertical edge of L(n) for several n."""

from __future__ import annotations

import argparse

from coxgrowth.growth3d import deformation_sweep
from coxgrowth.polyhedron import gen_loebell, loebell_vertical_edges


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[5, 6, 7])
    ap.add_argument("--to", type=int, default=12)
    ap.add_argument("--digits", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    for n in args.sizes:
        L = gen_loebell(n)
        e = loebell_vertical_edges(n)[0]
        print(f"L({n}), edge {e[0]}-{e[1]}")
        print(deformation_sweep(L, e, 2, args.to, digits=args.digits, jobs=args.jobs).text(args.digits))
        print()


if __name__ == "__main__":
    main()
