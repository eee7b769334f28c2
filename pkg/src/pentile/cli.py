"""Command-line interface.

Exit codes: 0 ok, 1 verification failed, 2 usage error, 3 parse error,
4 internal defect.
"""

from __future__ import annotations

import argparse
import sys

from .exact import CycInt
from .generators import GenSpec, GenerationError, PATTERN_IDS, generate
from .patch import Patch
from .patchfile import PatchFileError, parse, serialize
from .pentagon import (
    ANGLE_UNITS,
    CANONICAL_VERTICES,
    EDGE_KINDS,
    FLAT_RELATIONS,
    FULL_RELATIONS,
    LABELS,
    LISTED_FLAT_RELATIONS,
    build_prototile,
    pentagon_area,
)
from .svg import RenderOptions, render_svg

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_DEFECT = 4


def _cmd_prototile(args) -> int:
    tile = build_prototile()
    print("vertices (exact power-basis coefficients / float):")
    for label, v in zip(LABELS, tile.vertices):
        z = complex(v)
        print(f"  {label}: {list(v.c)}  ({z.real:+.6f}, {z.imag:+.6f})")
    print("interior angles (degrees):")
    for label, units in zip(LABELS, ANGLE_UNITS):
        print(f"  {label}: {units * 22.5:g}")
    print("squared edge lengths:")
    for i, kind in enumerate(EDGE_KINDS):
        l2 = tile.edge_len2(i)
        print(f"  {kind}: {float(l2):.6f} ({l2.q[0]} + {l2.q[1]}*sqrt2)")
    area = pentagon_area()
    print(f"area: {float(area):.7f} (1 + 3*sqrt2/4)")
    return EXIT_OK


def _cmd_relations(args) -> int:
    print("full vertex relations (360 degrees):")
    for r in FULL_RELATIONS:
        print(f"  {r.name()}")
    print("flat node relations (180 degrees):")
    listed = set(LISTED_FLAT_RELATIONS)
    for r in FLAT_RELATIONS:
        note = "" if r in listed else "   [not in the published list]"
        print(f"  {r.name()}{note}")
    return EXIT_OK


def _cmd_generate(args) -> int:
    options = {}
    if args.units is not None:
        options["units"] = args.units
    if args.offsets is not None:
        try:
            options["offsets"] = [int(x) for x in args.offsets.split(",")]
        except ValueError:
            print("offsets must be a comma-separated list of integers", file=sys.stderr)
            return EXIT_USAGE
    if args.variant is not None:
        options["variant"] = args.variant
    try:
        patch = generate(GenSpec(args.pattern, args.size, options))
    except GenerationError as e:
        print(f"generation failed: {e}", file=sys.stderr)
        return EXIT_USAGE if "options" in str(e) or "unknown pattern" in str(e) else EXIT_DEFECT
    with open(args.out, "w") as fh:
        fh.write(serialize(patch))
    print(f"{args.pattern} size {args.size}: {len(patch)} tiles -> {args.out}")
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render_svg(patch, RenderOptions(color_by=args.color_by)))
        print(f"rendered -> {args.svg}")
    return EXIT_OK


def _load(path: str) -> Patch:
    with open(path) as fh:
        return parse(fh.read())


def _cmd_verify(args) -> int:
    try:
        patch = _load(args.patch)
    except (OSError, PatchFileError) as e:
        print(f"cannot load patch: {e}", file=sys.stderr)
        return EXIT_PARSE
    report = patch.verify(args.mode)
    print(f"tiles: {len(patch)}")
    print(f"disjoint: {report.disjoint}")
    print(f"edge-to-edge: {report.edge_to_edge}")
    if report.overlap_witness is not None:
        print(f"overlap witness: tiles {report.overlap_witness}")
    from .pentagon import VertexRelation

    rels = sorted(
        (VertexRelation(k, 16).name(), v)
        for k, v in report.interior_vertex_relations.items()
    )
    print("interior vertex relations:")
    for name, count in rels:
        print(f"  {name}: {count}")
    if report.unknown_relations:
        print(f"unknown relations: {len(report.unknown_relations)}")
        for point, counts in report.unknown_relations[:5]:
            print(f"  at {list(point.c)}: counts {counts}")
    if report.flat_nodes:
        good = sum(1 for f in report.flat_nodes if f.ok)
        print(f"flat nodes: {len(report.flat_nodes)} ({good} valid)")
    print(f"holes: {len(report.holes)}")
    for hole in report.holes:
        print(f"  {len(hole)}-gon")
    area = report.exact_area
    print(f"exact area: {len(patch)} tiles x (1 + 3*sqrt2/4) = {float(area):.6f}")
    if report.problems:
        for p in report.problems:
            print(f"problem: {p}")
    print(f"result: {'ok' if report.ok else 'FAILED'}")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _cmd_symmetry(args) -> int:
    try:
        patch = _load(args.patch)
    except (OSError, PatchFileError) as e:
        print(f"cannot load patch: {e}", file=sys.stderr)
        return EXIT_PARSE
    from .symmetry import symmetry

    try:
        rep = symmetry(patch)
    except ValueError as e:
        print(f"symmetry failed: {e}", file=sys.stderr)
        return EXIT_USAGE
    c = rep.center_float
    print(f"classification: {rep.classification}")
    print(f"rotation order: {rep.rotation_order}")
    print(f"reflection axes: {rep.reflection_axes}")
    print(f"center (doubled lattice coefficients): {list(rep.center2.c)}")
    print(f"center (float): ({c.real:+.6f}, {c.imag:+.6f})")
    return EXIT_OK


def _cmd_render(args) -> int:
    try:
        patch = _load(args.patch)
    except (OSError, PatchFileError) as e:
        print(f"cannot load patch: {e}", file=sys.stderr)
        return EXIT_PARSE
    try:
        opts = RenderOptions(color_by=args.color_by, precision=args.precision)
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    text = render_svg(patch, opts)
    with open(args.svg, "w") as fh:
        fh.write(text)
    print(f"rendered {len(patch)} tiles -> {args.svg}")
    return EXIT_OK


def _cmd_search(args) -> int:
    try:
        patch = _load(args.patch)
    except (OSError, PatchFileError) as e:
        print(f"cannot load patch: {e}", file=sys.stderr)
        return EXIT_PARSE
    report = patch.verify("edge-to-edge")
    if not report.ok:
        print("input patch does not verify; refusing to search", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    from .search import extend_search

    result = extend_search(patch, args.depth, budget=args.budget)
    print(f"extensions at depth {args.depth}: {len(result.patches)}")
    print(f"nodes explored: {result.nodes}")
    print(f"truncated: {result.truncated}")
    if args.out_dir:
        import os

        os.makedirs(args.out_dir, exist_ok=True)
        for i, ext in enumerate(result.patches):
            with open(os.path.join(args.out_dir, f"ext{i:04d}.json"), "w") as fh:
                fh.write(serialize(ext))
        print(f"wrote {len(result.patches)} patches to {args.out_dir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pentile",
        description="exact-arithmetic pentagon tilings on the 16th-root lattice",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("prototile", help="print the pentagon's exact data").set_defaults(
        fn=_cmd_prototile
    )
    sub.add_parser("relations", help="print the vertex relation catalog").set_defaults(
        fn=_cmd_relations
    )

    g = sub.add_parser("generate", help="construct a named tiling patch")
    g.add_argument("--pattern", required=True, choices=PATTERN_IDS)
    g.add_argument("--size", type=int, required=True)
    g.add_argument("--out", required=True, help="output patch file (JSON)")
    g.add_argument("--svg", help="also render to this SVG file")
    g.add_argument("--units", help="type1-rows: unit kinds per line, e.g. HHO")
    g.add_argument("--offsets", help="type1-rows: comma-separated lattice slides per line")
    g.add_argument("--variant", help="strip-c2: a or b")
    g.add_argument("--color-by", default="unit", choices=("unit", "chirality", "none"))
    g.set_defaults(fn=_cmd_generate)

    v = sub.add_parser("verify", help="verify a patch file")
    v.add_argument("patch")
    v.add_argument("--mode", default="edge-to-edge", choices=("edge-to-edge", "general"))
    v.set_defaults(fn=_cmd_verify)

    s = sub.add_parser("symmetry", help="report the point group of a patch")
    s.add_argument("patch")
    s.set_defaults(fn=_cmd_symmetry)

    r = sub.add_parser("render", help="render a patch to SVG")
    r.add_argument("patch")
    r.add_argument("--svg", required=True)
    r.add_argument("--color-by", default="unit", choices=("unit", "chirality", "none"))
    r.add_argument("--precision", type=int, default=6)
    r.set_defaults(fn=_cmd_render)

    e = sub.add_parser("search", help="enumerate edge-to-edge extensions")
    e.add_argument("--from", dest="patch", required=True)
    e.add_argument("--depth", type=int, required=True)
    e.add_argument("--budget", type=int, default=10**6)
    e.add_argument("--out-dir", help="write each extension as a patch file")
    e.set_defaults(fn=_cmd_search)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except BrokenPipeError:
        return EXIT_OK
    except Exception as e:  # internal defect surface
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DEFECT


if __name__ == "__main__":
    sys.exit(main())
