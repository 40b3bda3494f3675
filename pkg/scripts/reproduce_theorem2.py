#!/usr/bin/env python3
"""Non-Hamiltonian 3-connected optimal 2-planar graphs from planted gadgets.

A stacked triangulation on l vertices has 2l-4 faces; planting a gadget in
each and inserting pentagrams gives an op-graph whose host vertices form a
cut with more components than vertices.
"""

from __future__ import annotations

import argparse
import json

from penta2p.generators import GADGETS, host_vertices, theorem2_pentagulation
from penta2p.graph import vertex_connectivity
from penta2p.hamiltonicity import non_hamiltonian_certificate
from penta2p.op2planar import abstract_graph, insert_pentagrams


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--l", dest="ells", type=int, nargs="+", default=[5, 6, 8, 10])
    ap.add_argument("--gadget", choices=sorted(GADGETS), default="h")
    args = ap.parse_args()

    gadget = GADGETS[args.gadget]()
    for ell in args.ells:
        pm = theorem2_pentagulation(ell, gadget)
        kappa = vertex_connectivity(pm.graph)
        g = abstract_graph(insert_pentagrams(pm, kappa))
        cert = non_hamiltonian_certificate(g, host_vertices(ell))
        row = {"l": ell, "n": g.n, "m": g.m, "kappa": kappa, **cert.to_json()}
        row.pop("cut")
        print(json.dumps(row))


if __name__ == "__main__":
    main()
