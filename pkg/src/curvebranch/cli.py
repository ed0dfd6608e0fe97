"""Command-line front end.

    curvebranch {discriminant,tree,monodromy,genus,periods,plot} curve.json
        [--kappa K] [--ng N] [--json OUT] [--svg OUT] [--quiet]

The curve document is JSON: ``{"coeffs": [[[re, im], ...], ...]}`` with
``coeffs[i][j]`` the coefficient of x^i y^j, plus optional ``kappa``, ``ng``
and ``differentials`` (numerator coefficient arrays in the same layout).
Exit status is 0 on success, 1 for bad input and 2 when the numerics fail.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import xml.etree.ElementTree as ET

import numpy as np

from .contour import Arc, Loop, build_initial_loops
from .curve import BivariatePolynomial, CurveError, discriminant_points
from .fundgroup import MonodromyError, classify_tree, tree_string
from .layout import KAPPA, Configuration, LayoutError, SpanningTree, configure, minimal_spanning_tree
from .monodromy import NG_DEFAULT, SheetTrackingError
from .periods import DifferentialSpec, integrate_chain
from .pipeline import analyze
from .polymath import RootFindingError

COMMANDS = ("discriminant", "tree", "monodromy", "genus", "periods", "plot")


class InputError(ValueError):
    pass


# --- curve documents --------------------------------------------------------


def _complex_matrix(raw, what: str) -> np.ndarray:
    try:
        a = np.array(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{what}: expected a rectangular array of [re, im] pairs") from exc
    if a.ndim != 3 or a.shape[2] != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        raise InputError(f"{what}: expected a rectangular array of [re, im] pairs")
    return a[..., 0] + 1j * a[..., 1]


def read_document(path: str) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "coeffs" not in doc:
        raise InputError("curve document needs a 'coeffs' entry")
    a = _complex_matrix(doc["coeffs"], "coeffs")
    if not np.any(a[:, -1] != 0):
        raise InputError("the last column (highest y power) is identically zero")
    out = {"curve": BivariatePolynomial(a)}
    if "kappa" in doc:
        out["kappa"] = float(doc["kappa"])
    if "ng" in doc:
        out["ng"] = int(doc["ng"])
    out["differentials"] = [
        DifferentialSpec(BivariatePolynomial(_complex_matrix(d, f"differentials[{k}]")))
        for k, d in enumerate(doc.get("differentials", []))
    ]
    return out


def write_document(path: str, f: BivariatePolynomial, **extra) -> None:
    doc = {"coeffs": _pairs(f.coeffs)}
    doc.update(extra)
    with open(path, "w") as fh:
        json.dump(doc, fh)


# --- reports -----------------------------------------------------------------


def _pair(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _pairs(a) -> list:
    a = np.asarray(a)
    if a.ndim == 0:
        return _pair(a)
    return [_pairs(row) for row in a]


def _marked(mp) -> list[int]:
    k, side = mp
    return [k + 1, side + 1]


def layout_report(config: Configuration, mult=None) -> dict:
    rep = {
        "kappa": config.kappa,
        "points": _pairs(config.points),
        "rho": config.rho,
        "warning": config.warning,
        "leading_zero": [bool(v) for v in config.leading_zero],
        "base": _pair(config.base),
        "base_label": config.base_index + 1,
    }
    if mult is not None:
        rep["multiplicity"] = [int(m) for m in mult]
    return rep


def tree_report(tree: SpanningTree, classification, string) -> dict:
    return {
        "paths": [[p + 1, c + 1] for p, c in tree.edges],
        "pathind": [[a + 1, b + 1] for a, b in tree.selectors],
        "endpoints": [k + 1 for k in classification.endpoints],
        "nodes": [_marked(mp) for mp in classification.nodes],
        "vpoints": [_marked(mp) for mp in classification.vpoints],
        "tree": [k + 1 for k in string],
    }


def build_report(command: str, doc: dict, kappa: float, ng: int) -> dict:
    f = doc["curve"]
    report = {"command": command, "sheets": f.y_degree, "ng": ng}
    if command == "discriminant":
        disc = discriminant_points(f)
        config = configure(disc.points, kappa, disc.leading_zero)
        report.update(layout_report(config, disc.multiplicity[config.source_index]))
        return report
    if command == "tree":
        disc = discriminant_points(f)
        config = configure(disc.points, kappa, disc.leading_zero)
        tree = minimal_spanning_tree(config)
        report.update(layout_report(config, disc.multiplicity[config.source_index]))
        report.update(tree_report(tree, classify_tree(config, tree), tree_string(config, tree)))
        return report
    a = analyze(f, kappa, ng)
    report.update(layout_report(a.config, a.discriminant.multiplicity[a.config.source_index]))
    report.update(tree_report(a.tree, a.classification, a.string))
    gens = a.generators
    report.update({
        "ybase": _pairs(a.table.ybase),
        "monodromy": [list(p.one_based()) for p in a.table.permutations],
        "final_monodromy": [list(p.one_based()) for p in gens.permutations],
        "infinity": "trivial" if gens.infinity.is_identity() else list(gens.infinity.one_based()),
        "branching": list(a.genus.branching),
        "genus": a.genus.genus,
        "residuals": list(a.table.residuals),
    })
    if command == "periods":
        if not doc["differentials"]:
            raise InputError("the curve document lists no differentials")
        report["periods"] = [
            [_pairs(integrate_chain(f, spec, loop, a.table.ybase, ng)) for loop in a.loops]
            for spec in doc["differentials"]
        ]
    return report


def format_report(rep: dict) -> str:
    """Plain-text blocks: points, base, tree, monodromy table, genus."""
    def z(p):
        return f"{p[0]:.4f}{p[1]:+.4f}i"

    lines = []
    lines.append("points =")
    for k, p in enumerate(rep["points"], 1):
        lines.append(f"  {k:3d}  {z(p)}")
    lines.append(f"rho = {rep['rho']:.6g}" + ("   (warning: points nearly coincide)" if rep["warning"] else ""))
    lines.append(f"base = {z(rep['base'])}")
    if "ybase" in rep:
        lines.append("ybase = " + "  ".join(z(p) for p in rep["ybase"]))
    if "paths" in rep:
        lines.append("paths' = " + " ".join(f"({a},{b})" for a, b in rep["paths"]))
        lines.append("pathind' = " + " ".join(f"({a},{b})" for a, b in rep["pathind"]))
        lines.append("endpoints = " + " ".join(map(str, rep["endpoints"])))
        lines.append("nodes = " + " ".join(f"b{k}^({s})" for k, s in rep["nodes"]))
        lines.append("vpoints = " + " ".join(f"b{k}^({s})" for k, s in rep["vpoints"]))
        lines.append("Tree = " + " ".join(map(str, rep["tree"])))
    for key, title in (("monodromy", "Mon ="), ("final_monodromy", "final Mon =")):
        if key in rep:
            lines.append(title)
            cols = rep[key]
            for i in range(rep["sheets"]):
                lines.append("  " + " ".join(f"{c[i]:3d}" for c in cols))
    if "genus" in rep:
        inf = rep["infinity"]
        lines.append("infinity = " + (inf if isinstance(inf, str) else " ".join(map(str, inf))))
        lines.append(f"g = {rep['genus']}")
    if "periods" in rep:
        for d, per_loop in enumerate(rep["periods"], 1):
            lines.append(f"periods of differential {d} (rows: loops, columns: sheets)")
            for k, vals in enumerate(per_loop, 1):
                lines.append(f"  {k:3d}  " + "  ".join(z(v) for v in vals))
    return "\n".join(lines)


# --- SVG -----------------------------------------------------------------------

WIDTH = 600.0


def render_svg(config: Configuration, tree: SpanningTree, loops: list[Loop] | None = None) -> str:
    """SVG 1.1 drawing of circles, labels, marked points, base point, tree
    edges and the half circles the loops use to pass discriminant points."""
    r = config.radius
    pts = config.points
    lo_x, hi_x = pts.real.min() - r, pts.real.max() + r
    lo_y, hi_y = pts.imag.min() - r, pts.imag.max() + r
    span = max(hi_x - lo_x, hi_y - lo_y)
    mx = 0.1 * max(hi_x - lo_x, 1e-3 * span)
    my = 0.1 * max(hi_y - lo_y, 1e-3 * span)
    lo_x, hi_x, lo_y, hi_y = lo_x - mx, hi_x + mx, lo_y - my, hi_y + my
    scale = WIDTH / (hi_x - lo_x)
    height = (hi_y - lo_y) * scale

    def xy(z):
        return (z.real - lo_x) * scale, (hi_y - z.imag) * scale

    def fmt(v):
        return f"{v:.3f}"

    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "version": "1.1",
        "width": fmt(WIDTH),
        "height": fmt(height),
        "viewBox": f"0 0 {fmt(WIDTH)} {fmt(height)}",
    })
    ET.SubElement(svg, "rect", {"width": "100%", "height": "100%", "fill": "white"})
    font = fmt(max(8.0, 0.8 * r * scale))
    for k, p in enumerate(pts):
        cx, cy = xy(complex(p))
        ET.SubElement(svg, "circle", {
            "cx": fmt(cx), "cy": fmt(cy), "r": fmt(r * scale),
            "fill": "none", "stroke": "black", "stroke-width": "1",
        })
        label = ET.SubElement(svg, "text", {
            "x": fmt(cx), "y": fmt(cy), "font-size": font,
            "text-anchor": "middle", "dominant-baseline": "central",
        })
        label.text = str(k + 1)
        for side in (0, 1):
            mx_, my_ = xy(config.marked(k, side))
            ET.SubElement(svg, "circle", {"cx": fmt(mx_), "cy": fmt(my_), "r": "2", "fill": "black"})
    for (p, c), (dep, arr) in zip(tree.edges, tree.selectors):
        a = xy(config.marked(p, dep))
        b = xy(config.marked(c, arr))
        ET.SubElement(svg, "polyline", {
            "points": f"{fmt(a[0])},{fmt(a[1])} {fmt(b[0])},{fmt(b[1])}",
            "fill": "none", "stroke": "blue", "stroke-width": "1.5",
        })
    seen = set()
    for loop in loops or []:
        for s in loop.outbound or ():
            if isinstance(s, Arc) and s not in seen:
                seen.add(s)
                ET.SubElement(svg, "path", {
                    "d": _arc_path(s, xy, fmt, scale),
                    "fill": "none", "stroke": "red", "stroke-width": "1.5",
                })
    bx, by = xy(config.base)
    ET.SubElement(svg, "rect", {
        "x": fmt(bx - 4), "y": fmt(by - 4), "width": "8", "height": "8",
        "fill": "black", "class": "base",
    })
    ET.indent(svg)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(svg, encoding="unicode") + "\n"


def _arc_path(arc: Arc, xy, fmt, scale) -> str:
    a = xy(arc.start)
    b = xy(arc.end)
    rad = fmt(arc.radius * scale)
    large = 1 if abs(arc.sweep) > math.pi + 1e-12 else 0
    # counterclockwise in the plane is clockwise on screen (y axis flipped)
    sweep = 0 if arc.sweep > 0 else 1
    return f"M {fmt(a[0])} {fmt(a[1])} A {rad} {rad} 0 {large} {sweep} {fmt(b[0])} {fmt(b[1])}"


# --- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="curvebranch", description="Monodromy and genus of plane algebraic curves.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("curve", help="curve document (JSON)")
    parser.add_argument("--kappa", type=float, default=None, help=f"circle radius over rho (default {KAPPA:.6g})")
    parser.add_argument("--ng", type=int, default=None, help=f"collocation points per segment (default {NG_DEFAULT})")
    parser.add_argument("--json", dest="json_out", metavar="PATH", help="write the report as JSON")
    parser.add_argument("--svg", dest="svg_out", metavar="PATH", help="plot: write the SVG here instead of stdout")
    parser.add_argument("--quiet", action="store_true", help="suppress the text report")
    return parser


def write_report(path: str, report: dict) -> None:
    with open(path, "w") as fh:
        json.dump(report, fh, indent=1, sort_keys=True)
        fh.write("\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        doc = read_document(args.curve)
        kappa = args.kappa if args.kappa is not None else doc.get("kappa", KAPPA)
        ng = args.ng if args.ng is not None else doc.get("ng", NG_DEFAULT)
        if ng < 1:
            raise InputError("ng must be positive")
        if args.command == "plot":
            f = doc["curve"]
            disc = discriminant_points(f)
            config = configure(disc.points, kappa, disc.leading_zero)
            tree = minimal_spanning_tree(config)
            svg = render_svg(config, tree, build_initial_loops(config, tree))
            if args.svg_out:
                with open(args.svg_out, "w") as fh:
                    fh.write(svg)
            elif not args.quiet:
                sys.stdout.write(svg)
            report = {"command": "plot", "sheets": f.y_degree, "ng": ng}
            report.update(layout_report(config, disc.multiplicity[config.source_index]))
        else:
            report = build_report(args.command, doc, kappa, ng)
            if not args.quiet:
                print(format_report(report))
        if args.json_out:
            write_report(args.json_out, report)
    except (InputError, CurveError, LayoutError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SheetTrackingError, RootFindingError, MonodromyError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
