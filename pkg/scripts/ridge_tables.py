"""Differences 1/f_1 - 1/f_2 for ridge pairs differing in the middle label."""

from __future__ import annotations

import argparse
import itertools

from coxgrowth.errors import NotAdmissible
from coxgrowth.growth3d import format_ratfunc, ridge_pair_difference
from coxgrowth.polyhedron import RidgeDescriptor, canonical_type


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-side", type=int, default=5, help="largest side label k, l")
    ap.add_argument("--max-n", type=int, default=5, help="largest middle label")
    args = ap.parse_args()

    seen = set()
    sides = range(2, args.max_side + 1)
    for k1, k2, l1, l2 in itertools.product(sides, repeat=4):
        for n in range(2, args.max_n):
            h1 = canonical_type(k1, k2, n, l1, l2)
            if h1 in seen:
                continue
            seen.add(h1)
            r1 = RidgeDescriptor.of(*h1)
            r2 = r1.with_label(n + 1)
            try:
                d = ridge_pair_difference(r1, r2)
            except NotAdmissible:
                continue
            print(f"<{','.join(map(str, r1.type))}> -> <{','.join(map(str, r2.type))}>: {format_ratfunc(d)}")


if __name__ == "__main__":
    main()
