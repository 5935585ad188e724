"""Command-line interface: ``surfgrids <command> ...``.

Exit codes: 0 success, 1 negative verdict (``check-*``, ``iso``), 2 bad input
or failed precondition.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from collections import Counter

from . import fixtures
from .catalog import grid_catalog
from .derived import check_overlay_form, check_radial_form, medial, overlay, radial
from .errors import SurfGridError
from .maps import (are_isomorphic, check_curvature_identity, curvature_sequence, degree_sequence, dual,
                   euler_characteristic, faces, is_grid, is_orientable)
from .oracle import EnumerationBudget, enumerate_embeddings, search_immersions
from .smap import (join_stream, parse_graph, parse_plan, parse_smap, serialize_graph, serialize_plan,
                   serialize_smap)
from .synthesis import dual_circuit_classes, forced_euler, recover_plan, synthesize
from .transverse import decompose, extract_skeleton


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise SurfGridError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise SurfGridError(f"cannot write {path}: {exc.strerror}") from None


def _map(path):
    return parse_smap(_read(path))


def _multiset(seq) -> str:
    c = Counter(seq)
    return "{" + ", ".join(f"{k}x{c[k]}" for k in sorted(c)) + "}"


def _emit(args, doc: dict) -> str:
    if getattr(args, "json", False):
        return json.dumps(doc) + "\n"
    out = []
    for k, v in doc.items():
        if isinstance(v, bool):
            v = str(v).lower()
        elif isinstance(v, list):
            v = _multiset(v)
        out.append(f"{k}: {v}")
    return "\n".join(out) + "\n"


# -- commands ------------------------------------------------------------------

def cmd_stats(args):
    m = _map(args.file)
    grid = is_grid(m)
    doc = {
        "V": m.num_vertices,
        "E": m.num_edges,
        "F": len(faces(m)),
        "chi": euler_characteristic(m),
        "orientable": is_orientable(m),
        "degrees": list(degree_sequence(m)),
        "curvature": list(curvature_sequence(m)),
        "grid": grid,
        "curvature_identity": ("ok" if check_curvature_identity(m) else "fail") if grid else "n/a",
    }
    return _emit(args, doc)


def cmd_faces(args):
    m = _map(args.file)
    out = []
    for i, w in enumerate(faces(m)):
        corners = " ".join(f"{d}{'+' if s == 1 else '-'}" for d, s in w.boundary)
        out.append(f"face {i} length {w.length}: {corners}")
    return "\n".join(out) + "\n"


def cmd_dual(args):
    return serialize_smap(dual(_map(args.file)))


def cmd_decompose(args):
    return decompose(_map(args.file)).to_text()


def cmd_skeleton(args):
    res = extract_skeleton(_map(args.file))
    if args.plan_out:
        _write(args.plan_out, serialize_plan(recover_plan(res)))
    return serialize_smap(res.skeleton)


def cmd_classes(args):
    return serialize_plan(dual_circuit_classes(_map(args.file)))


def cmd_synthesize(args):
    skel = _map(args.file)
    plan = parse_plan(_read(args.plan)) if args.plan else dual_circuit_classes(skel)
    counts = dict(enumerate(plan.counts)) if plan.counts is not None else {}
    for item in args.count or []:
        k, sep, n = item.partition("=")
        if not sep or not k.isdigit() or not n.isdigit():
            raise SurfGridError(f"--count expects k=n, got {item!r}")
        counts[int(k)] = int(n)
    plan = plan.with_counts(counts)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = synthesize(skel, plan)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return serialize_smap(g)


def cmd_radial(args):
    cg = radial(_map(args.file))
    return serialize_smap(cg.map, cg.coloring)


def cmd_medial(args):
    return serialize_smap(medial(_map(args.file)))


def cmd_overlay(args):
    cg = overlay(_map(args.file))
    return serialize_smap(cg.map, cg.coloring)


def cmd_check_radial(args):
    v = check_radial_form(_map(args.file))
    doc = {"radial": v.is_radial}
    if v.is_radial:
        doc.update({"primal_V": v.primal.num_vertices, "primal_E": v.primal.num_edges,
                    "dual_V": v.dual.num_vertices, "dual_E": v.dual.num_edges})
        if args.primal_out:
            _write(args.primal_out, serialize_smap(v.primal))
    args.verdict = v.is_radial
    return _emit(args, doc)


def cmd_check_overlay(args):
    v = check_overlay_form(_map(args.file))
    doc = {"overlay": v.is_overlay}
    if v.is_overlay:
        doc.update({"primal_V": v.primal.num_vertices, "primal_E": v.primal.num_edges,
                    "white": len(v.white)})
        if args.primal_out:
            _write(args.primal_out, serialize_smap(v.primal))
    args.verdict = v.is_overlay
    return _emit(args, doc)


def cmd_iso(args):
    same = are_isomorphic(_map(args.a), _map(args.b))
    args.verdict = same
    return "isomorphic\n" if same else "not isomorphic\n"


def cmd_canon(args):
    return serialize_smap(_map(args.file), canonical=True)


def _budget(args) -> EnumerationBudget:
    return EnumerationBudget(max_edges=args.max_edges, max_crossings=getattr(args, "max_crossings", 3),
                             chi=args.chi, orientable=args.orientable)


def cmd_enumerate(args):
    g = parse_graph(_read(args.file))
    maps = enumerate_embeddings(g, _budget(args), grid_only=args.grid_only)
    return join_stream(serialize_smap(m) for m in maps)


def cmd_search(args):
    g = parse_graph(_read(args.file))
    found = search_immersions(g, _budget(args), quadrangular=not args.all)
    return join_stream(f"# crossings: {im.crossings}\n" + serialize_smap(im.skeleton) for im in found)


def cmd_forced_euler(args):
    v = forced_euler(parse_graph(_read(args.file)))
    chi = str(v.chi.numerator) if v.chi.denominator == 1 else f"{v.chi.numerator}/{v.chi.denominator}"
    return _emit(args, {"chi": chi, "feasible": v.feasible})


def cmd_fixture(args):
    if args.name in fixtures.MAPS:
        return serialize_smap(fixtures.MAPS[args.name]())
    return serialize_graph(fixtures.GRAPHS[args.name]())


def cmd_catalog(args):
    return join_stream(serialize_smap(g) for g in grid_catalog(args.max_edges))


# -- parser --------------------------------------------------------------------

def _orientable(text: str) -> bool:
    if text in ("yes", "true", "1"):
        return True
    if text in ("no", "false", "0"):
        return False
    raise argparse.ArgumentTypeError("expected yes or no")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="surfgrids", description="Grids on closed surfaces.")
    p.add_argument("-o", "--output", help="write the result here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_, *, file=True, json_flag=False):
        sp = sub.add_parser(name, help=help_)
        if file:
            sp.add_argument("file", help="input file ('-' for stdin)")
        if json_flag:
            sp.add_argument("--json", action="store_true", help="emit a flat JSON document")
        sp.set_defaults(func=func)
        return sp

    add("stats", cmd_stats, "surface, degrees, curvature and grid check", json_flag=True)
    add("faces", cmd_faces, "list facial boundary walks")
    add("dual", cmd_dual, "topological dual map")
    add("decompose", cmd_decompose, "transverse walks and circuits")
    sp = add("skeleton", cmd_skeleton, "skeleton grid of a grid")
    sp.add_argument("--plan-out", help="also write the recovered subdivision plan")
    add("classes", cmd_classes, "edge classes from the transverse circuits of the dual")
    sp = add("synthesize", cmd_synthesize, "subdivide and patch a skeleton grid")
    sp.add_argument("--plan", help="plan file (classes and optional counts)")
    sp.add_argument("--count", action="append", metavar="K=N", help="count for class K (repeatable)")
    add("radial", cmd_radial, "radial grid")
    add("medial", cmd_medial, "medial map")
    add("overlay", cmd_overlay, "overlay grid")
    for name, func in (("check-radial", cmd_check_radial), ("check-overlay", cmd_check_overlay)):
        sp = add(name, func, f"recognise a {name[6:]} grid", json_flag=True)
        sp.add_argument("--primal-out", help="write the recovered primal map")
    sp = add("iso", cmd_iso, "map isomorphism test", file=False)
    sp.add_argument("a")
    sp.add_argument("b")
    add("canon", cmd_canon, "canonical relabelling")
    for name, func, help_ in (("enumerate", cmd_enumerate, "all embeddings of a graph"),
                              ("search", cmd_search, "transverse immersions of a graph")):
        sp = add(name, func, help_)
        sp.add_argument("--max-edges", type=int, default=14)
        sp.add_argument("--chi", type=int)
        sp.add_argument("--orientable", type=_orientable, metavar="yes|no")
        if name == "enumerate":
            sp.add_argument("--grid-only", action="store_true")
        else:
            sp.add_argument("--max-crossings", type=int, default=3)
            sp.add_argument("--all", action="store_true", help="include non-quadrangular immersions")
    add("forced-euler", cmd_forced_euler, "forced Euler characteristic of a curvature graph", json_flag=True)
    sp = add("fixture", cmd_fixture, "print a bundled fixture", file=False)
    sp.add_argument("name", choices=sorted(fixtures.MAPS) + sorted(fixtures.GRAPHS))
    sp = add("catalog", cmd_catalog, "every grid up to a number of edges", file=False)
    sp.add_argument("--max-edges", type=int, default=6)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
        if args.output:
            _write(args.output, text)
        else:
            sys.stdout.write(text)
    except (SurfGridError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0 if getattr(args, "verdict", True) else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
