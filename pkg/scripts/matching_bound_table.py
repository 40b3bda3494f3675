#!/usr/bin/env python3
"""Tabulate the matching upper bound of the F-gadget family against n."""

from __future__ import annotations

import argparse

from penta2p.generators import gadget_F, host_vertices, theorem2_pentagulation
from penta2p.graph import matching_upper_bound
from penta2p.op2planar import abstract_graph, insert_pentagrams


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--l", dest="ells", type=int, nargs="+", default=[5, 6, 8, 10, 20, 51, 52, 60])
    args = ap.parse_args()

    print(f"{'l':>4} {'n':>6} {'odd':>5} {'bound':>6} {'bound/n':>9}")
    for ell in args.ells:
        g = abstract_graph(insert_pentagrams(theorem2_pentagulation(ell, gadget_F()), kappa=3))
        odd, bound = matching_upper_bound(g, host_vertices(ell))
        print(f"{ell:>4} {g.n:>6} {odd:>5} {bound:>6} {bound / g.n:>9.5f}")
    print(f"limit 25/51 = {25 / 51:.5f}")


if __name__ == "__main__":
    main()
