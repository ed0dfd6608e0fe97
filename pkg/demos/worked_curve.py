"""Walk through the construction for y^3 - 2 x^3 y - x^9 = 0.

Prints each intermediate result: discriminant points, configuration,
spanning tree, tree string, monodromy tables and genus.
"""

import numpy as np

from curvebranch import (
    BivariatePolynomial,
    build_initial_loops,
    classify_tree,
    configure,
    discriminant_points,
    genus,
    minimal_spanning_tree,
    monodromy_table,
    rearrange,
    tree_string,
)

f = BivariatePolynomial.from_terms({(0, 3): 1, (3, 1): -2, (9, 0): -1})

# The discriminant points: zeros of Res_y(f, f_y).  x = 0 is a ninefold
# root, the other nine lie on a circle of radius (32/27)^(1/9).
disc = discriminant_points(f)
print("distinct discriminant points:", len(disc))
print("multiplicities:", disc.multiplicity.tolist())
print("moduli:", np.round(np.abs(disc.points), 6).tolist())

# Circles of radius kappa * rho; the base point is the leftmost marked point
# and the points are relabelled by their angle as seen from it.
cfg = configure(disc.points)
print(f"\nrho = {cfg.rho:.6f}, R = {cfg.radius:.6f}")
print(f"base = {cfg.base:.4f}")
for k, p in enumerate(cfg.points, 1):
    print(f"  b{k:<2d} = {p:.4f}")

# Minimal spanning tree grown from the base point's own discriminant point.
tree = minimal_spanning_tree(cfg)
print("\npaths   :", [(p + 1, c + 1) for p, c in tree.edges])
print("pathind :", [(a + 1, b + 1) for a, b in tree.selectors])
print("tree length:", round(tree.length(cfg), 12))

info = classify_tree(cfg, tree)
print("endpoints:", [k + 1 for k in info.endpoints])
print("nodes    :", [(k + 1, s + 1) for k, s in info.nodes])
print("v-points :", [(k + 1, s + 1) for k, s in info.vpoints])

# Continue the fiber along every initial loop.
loops = build_initial_loops(cfg, tree)
table = monodromy_table(f, loops)
print("\nybase:", np.round(table.ybase, 4))
print("Mon (initial), one column per loop:")
print(np.array(table.columns()).T)
print("largest return mismatch:", max(table.residuals))

# Read the tree to order the loops, then conjugate into ascending order.
s = tree_string(cfg, tree)
print("\nTree =", [k + 1 for k in s])
gens = rearrange(loops, list(table.permutations), s)
print("Mon (final):")
print(np.array([p.one_based() for p in gens.permutations]).T)
print("monodromy at infinity:", "trivial" if gens.infinity.is_identity() else gens.infinity)

g = genus(gens.permutations, gens.infinity)
print(f"\nN = {g.sheets}, branch points = {g.branch_points}, genus = {g.genus}")
