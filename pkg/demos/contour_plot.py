"""Draw the circles, marked points, spanning tree and bypass half circles
for the worked curve as SVG.

Usage: python demos/contour_plot.py [out.svg]
"""

import sys

from curvebranch import BivariatePolynomial, KAPPA_PLOT, build_initial_loops, configure, discriminant_points, minimal_spanning_tree
from curvebranch.cli import render_svg

out = sys.argv[1] if len(sys.argv) > 1 else "worked_contours.svg"

f = BivariatePolynomial.from_terms({(0, 3): 1, (3, 1): -2, (9, 0): -1})
disc = discriminant_points(f)
# smaller circles read better in a figure
cfg = configure(disc.points, kappa=KAPPA_PLOT)
tree = minimal_spanning_tree(cfg)
svg = render_svg(cfg, tree, build_initial_loops(cfg, tree))

with open(out, "w") as fh:
    fh.write(svg)
print(f"wrote {out}: {cfg.n} circles, {len(tree.edges)} tree edges")
