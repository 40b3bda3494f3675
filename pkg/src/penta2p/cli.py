"""Command line for penta2p.

Exit status: 0 for success or a positive verdict, 1 for a negative verdict,
2 for usage and input errors. ``--in``/``--out`` default to the standard
streams so commands compose with pipes::

    penta2p gen thm2 --l 5 --gadget h | penta2p op | penta2p certify --cut auto-corners
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import combinations
from typing import Any, Sequence

from . import io
from .errors import Penta2pError
from .generators import (
    GADGETS,
    cube,
    dodecahedron,
    k4,
    prism,
    stacked_triangulation,
    theorem2_pentagulation,
)
from .graph import connectivity_upper_bound, girth, vertex_connectivity
from .hamiltonicity import (
    Theorem1Pipeline,
    Verdict,
    hamiltonian_cycle,
    hamiltonian_path,
    is_hamiltonian_connected,
    non_hamiltonian_certificate,
)
from .op2planar import (
    OpDrawing,
    abstract_graph,
    check_optimal_edge_count,
    crossings_per_edge,
    insert_pentagrams,
)
from .planemap import (
    PlaneMap,
    face_chords_absent,
    is_pentagulation,
    is_triangulation,
    separating_triangles,
    triangles,
    validate_map,
)
from .stellation import (
    StellatedMap,
    check_consecutive_property,
    check_wheel_property,
    stellate,
    stellating_independent,
    stellation_four_connected,
)


class UsageError(Exception):
    pass


def _read(path: str) -> io.Serializable:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    try:
        return io.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse JSON from {path!r}: {exc}") from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _emit(args: argparse.Namespace, payload: dict[str, Any], human: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _plane(obj: io.Serializable) -> PlaneMap:
    if isinstance(obj, PlaneMap):
        return obj
    if isinstance(obj, StellatedMap):
        return obj.map
    if isinstance(obj, OpDrawing):
        return obj.skeleton
    raise UsageError("this command needs a plane map or op-drawing, got an abstract graph")


def _drawing(obj: io.Serializable) -> OpDrawing:
    if isinstance(obj, OpDrawing):
        return obj
    if isinstance(obj, PlaneMap):
        return insert_pentagrams(obj)
    raise UsageError("this command needs an op-drawing or a pentagulation")


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "dodecahedron":
        obj = dodecahedron()
    elif kind == "cube":
        obj = cube()
    elif kind == "k4":
        obj = k4()
    elif kind == "prism":
        obj = prism(_need(args.s, "--s"))
    elif kind == "stacked":
        obj = stacked_triangulation(_need(args.l, "--l"))
    elif kind in ("gadget-h", "gadget-f"):
        obj = GADGETS[kind[-1]]().map
    elif kind == "thm2":
        obj = theorem2_pentagulation(_need(args.l, "--l"), GADGETS[args.gadget]())
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown generator {kind}")
    _write(args.out, io.dumps(obj))
    return 0


def _need(value: int | None, flag: str) -> int:
    if value is None:
        raise UsageError(f"{flag} is required for this generator")
    return value


def cmd_op(args: argparse.Namespace) -> int:
    _write(args.out, io.dumps(insert_pentagrams(_plane(_read(args.inp)))))
    return 0


def cmd_stellate(args: argparse.Namespace) -> int:
    _write(args.out, io.dumps(stellate(_plane(_read(args.inp)))))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    obj = _read(args.inp)
    what = args.what
    info: dict[str, Any] = {"check": what}
    if what == "optimal":
        g = io.as_graph(obj)
        ok = check_optimal_edge_count(g)
        info.update(n=g.n, m=g.m, target=5 * g.n - 10)
        human = f"n={g.n} m={g.m} 5n-10={5 * g.n - 10}"
    elif what == "crossings":
        counts = crossings_per_edge(_drawing(obj))
        chord_counts = sorted({c for c in counts.values() if c})
        ok = max(counts.values()) <= 2
        info.update(edges=len(counts), max=max(counts.values()),
                    uncrossed=sum(1 for c in counts.values() if c == 0))
        human = f"{len(counts)} edges, max crossings {info['max']}, chord counts {chord_counts}"
    elif what == "skeleton":
        d = _drawing(obj)
        sk = d.skeleton
        kappa = vertex_connectivity(sk.graph)
        ok = is_pentagulation(sk) and kappa >= 3
        info.update(n=sk.n, m=sk.m, kappa=kappa)
        human = f"skeleton n={sk.n} m={sk.m} kappa={kappa} pentagulation={is_pentagulation(sk)}"
    elif what in ("pentagulation", "triangulation"):
        pm = _plane(obj)
        ok = is_pentagulation(pm) if what == "pentagulation" else is_triangulation(pm)
        human = f"{what}: {ok}"
    elif what == "valid":
        report = validate_map(_plane(obj))
        ok = report.ok
        info.update(n=report.n, m=report.m, f=report.f, violations=report.violations)
        human = "valid" if ok else "\n".join(report.violations)
    elif what == "separating":
        tris = separating_triangles(_plane(obj))
        ok = not tris
        info["separating_triangles"] = [list(t) for t in tris]
        human = f"{len(tris)} separating triangles"
    elif what == "chord-free":
        ok = face_chords_absent(_plane(obj))
        human = f"face boundaries chord-free: {ok}"
    elif what == "four-connected":
        ok, reason = stellation_four_connected(_plane(obj))
        info["reason"] = reason.value
        human = f"stellation 4-connected: {ok} ({reason.value})"
    elif what == "lemmas":
        ok, info = _lemma_report(obj)
        human = "\n".join(f"{k}: {v}" for k, v in info.items())
    else:  # pragma: no cover
        raise UsageError(f"unknown check {what}")
    info["ok"] = ok
    _emit(args, info, human)
    return 0 if ok else 1


def _lemma_report(obj: io.Serializable) -> tuple[bool, dict[str, Any]]:
    """Structural lemma checks for a 3-connected map (or an op-drawing's skeleton)."""
    pm = _plane(obj)
    g = pm.graph
    kappa = vertex_connectivity(g)
    gz = girth(g)
    out: dict[str, Any] = {"kappa": kappa, "girth": None if gz == float("inf") else gz}
    if kappa >= 3:
        out["chord_free_faces"] = face_chords_absent(pm, kappa)
        s = stellate(pm, kappa)
        out["stellating_independent"] = stellating_independent(s)
        out["wheels"] = check_wheel_property(s)
        out["triangle_path_dichotomy"] = check_consecutive_property(s)
    if isinstance(obj, OpDrawing) or is_pentagulation(pm):
        d = obj if isinstance(obj, OpDrawing) else insert_pentagrams(pm, kappa)
        ag = abstract_graph(d)
        out["face_cliques"] = all(
            ag.has_edge(u, v) for p in d.pentagrams for u, v in combinations(p.boundary, 2)
        )
    ok = all(v for k, v in out.items() if isinstance(v, bool))
    return ok, out


def _budget(args: argparse.Namespace) -> int | None:
    return args.budget


def cmd_ham(args: argparse.Namespace) -> int:
    g = io.as_graph(_read(args.inp))
    if args.mode == "cycle":
        w = hamiltonian_cycle(g, _budget(args))
        payload = {"found": w is not None, "witness": w.to_json() if w else None}
        human = f"cycle: {list(w.vertices)}" if w else "no Hamiltonian cycle"
        _emit(args, payload, human)
        return 0 if w else 1
    if args.mode == "path":
        if args.src is None or args.dst is None:
            raise UsageError("ham path needs --from and --to")
        w = hamiltonian_path(g, args.src, args.dst, _budget(args))
        payload = {"found": w is not None, "witness": w.to_json() if w else None}
        human = f"path: {list(w.vertices)}" if w else f"no Hamiltonian {args.src}-{args.dst} path"
        _emit(args, payload, human)
        return 0 if w else 1
    verdict, witnesses = is_hamiltonian_connected(g, _budget(args), args.threads)
    failing = [list(p) for p, w in witnesses.items() if w is None]
    payload = {"hamiltonian_connected": verdict, "pairs_checked": len(witnesses), "failing": failing}
    human = (
        f"Hamiltonian-connected ({len(witnesses)} pairs)" if verdict
        else f"not Hamiltonian-connected: no path for pair {failing[0]}"
    )
    _emit(args, payload, human)
    return 0 if verdict else 1


def cmd_pipeline(args: argparse.Namespace) -> int:
    d = _drawing(_read(args.inp))
    pipe = Theorem1Pipeline(d, _budget(args))
    if args.src is not None and args.dst is not None:
        pairs = [(args.src, args.dst)]
    elif args.src is None and args.dst is None:
        pairs = list(combinations(range(d.skeleton.n), 2))
    else:
        raise UsageError("give both --from and --to, or neither for all pairs")
    witnesses = {p: pipe.path(*p) for p in pairs}
    if len(pairs) == 1:
        w = witnesses[pairs[0]]
        _emit(args, w.to_json(), f"path: {list(w.vertices)}")
    else:
        _emit(
            args,
            {"pairs": len(pairs), "stellation_kappa": pipe.kappa},
            f"lifted Hamiltonian paths verified for all {len(pairs)} pairs "
            f"(stellation kappa = {pipe.kappa})",
        )
    return 0


def _parse_cut(spec: str, obj: io.Serializable) -> list[int]:
    if spec == "auto-corners":
        # V(H') of a planted construction: the skeleton vertices lying on triangles
        pm = _plane(obj)
        return sorted({v for t in triangles(pm.graph) for v in t})
    try:
        return [int(tok) for tok in spec.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"bad --cut {spec!r}") from None


def cmd_certify(args: argparse.Namespace) -> int:
    obj = _read(args.inp)
    g = io.as_graph(obj)
    cut = _parse_cut(args.cut, obj)
    cert = non_hamiltonian_certificate(g, cut)
    payload = cert.to_json()
    payload["n"] = g.n
    human = (
        f"cut |S|={len(cert.cut)} -> {cert.component_count} components "
        f"({cert.odd_component_count} odd); verdict {cert.verdict.value}; "
        f"matching number <= {cert.matching_bound}"
    )
    _emit(args, payload, human)
    return 1 if cert.verdict is Verdict.INCONCLUSIVE else 0


def cmd_bound(args: argparse.Namespace) -> int:
    coeff, kappa = connectivity_upper_bound(args.k)
    _emit(
        args,
        {"k": args.k, "edge_coeff": coeff, "kappa_bound": kappa},
        f"|E| <= {coeff:.3f} n, kappa <= {kappa}",
    )
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    _write(args.out, io.export(_read(args.inp), args.format))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--threads", type=int, default=os.cpu_count() or 1,
        help="worker processes for all-pairs searches",
    )
    io_in = argparse.ArgumentParser(add_help=False)
    io_in.add_argument("--in", dest="inp", default="-", help="input file (default stdin)")
    io_out = argparse.ArgumentParser(add_help=False)
    io_out.add_argument("--out", default="-", help="output file (default stdout)")
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget", type=int, default=None,
                        help="search node budget (default $PENTA2P_BUDGET or built-in)")

    p = argparse.ArgumentParser(prog="penta2p", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", parents=[common, io_out], help="built-in plane maps")
    gen.add_argument(
        "kind",
        choices=["dodecahedron", "cube", "k4", "prism", "stacked", "gadget-h", "gadget-f", "thm2"],
    )
    gen.add_argument("--s", type=int)
    gen.add_argument("--l", type=int)
    gen.add_argument("--gadget", choices=sorted(GADGETS), default="h")
    gen.set_defaults(func=cmd_gen)

    op = sub.add_parser("op", parents=[common, io_in, io_out], help="insert pentagrams")
    op.set_defaults(func=cmd_op)

    st = sub.add_parser("stellate", parents=[common, io_in, io_out], help="face-stellation")
    st.set_defaults(func=cmd_stellate)

    ck = sub.add_parser("check", parents=[common, io_in], help="structural checks")
    ck.add_argument(
        "what",
        choices=["optimal", "crossings", "skeleton", "pentagulation", "triangulation",
                 "valid", "separating", "chord-free", "four-connected", "lemmas"],
    )
    ck.set_defaults(func=cmd_check)

    ham = sub.add_parser("ham", parents=[common, io_in, budget], help="exact Hamiltonian search")
    ham.add_argument("mode", choices=["cycle", "path", "connected"])
    ham.add_argument("--from", dest="src", type=int)
    ham.add_argument("--to", dest="dst", type=int)
    ham.set_defaults(func=cmd_ham)

    pl = sub.add_parser("pipeline", parents=[common, io_in, budget],
                        help="stellate, search and lift a Hamiltonian path")
    pl.add_argument("--from", dest="src", type=int)
    pl.add_argument("--to", dest="dst", type=int)
    pl.set_defaults(func=cmd_pipeline)

    ce = sub.add_parser("certify", parents=[common, io_in], help="cut certificate")
    ce.add_argument("--cut", required=True, help='comma-separated ids or "auto-corners"')
    ce.set_defaults(func=cmd_certify)

    bd = sub.add_parser("bound", parents=[common], help="k-planar connectivity bound")
    bd.add_argument("--k", type=float, required=True)
    bd.set_defaults(func=cmd_bound)

    ex = sub.add_parser("export", parents=[common, io_in, io_out], help="serialize")
    ex.add_argument("--format", required=True)
    ex.set_defaults(func=cmd_export)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "bound" and args.k == int(args.k):
        args.k = int(args.k)
    try:
        return args.func(args)
    except (UsageError, Penta2pError, OSError, KeyError, ValueError) as exc:
        print(f"penta2p {args.verb}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
