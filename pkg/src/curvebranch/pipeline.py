"""End-to-end analysis of a curve: discriminant, layout, loops, monodromy,
generators and genus."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .contour import Loop, build_initial_loops
from .curve import BivariatePolynomial, DiscriminantSet, discriminant_points
from .fundgroup import GeneratorSet, GenusReport, TreeAnalysis, classify_tree, genus, rearrange, tree_string
from .layout import KAPPA, Configuration, SpanningTree, configure, minimal_spanning_tree
from .monodromy import NG_DEFAULT, MonodromyTable, monodromy_table


@dataclass
class Analysis:
    curve: BivariatePolynomial
    discriminant: DiscriminantSet
    config: Configuration
    tree: SpanningTree
    loops: list[Loop]
    table: MonodromyTable
    classification: TreeAnalysis
    string: list[int]
    generators: GeneratorSet
    genus: GenusReport
    ng: int


def analyze(f: BivariatePolynomial, kappa: float = KAPPA, ng: int = NG_DEFAULT, tree: SpanningTree | None = None) -> Analysis:
    """Run the whole construction.  A prebuilt `tree` replaces the minimal
    spanning tree (it must refer to the labels of ``configure(...)``)."""
    if not isinstance(f, BivariatePolynomial):
        f = BivariatePolynomial(f)
    disc = discriminant_points(f)
    config = configure(disc.points, kappa, disc.leading_zero)
    if tree is None:
        tree = minimal_spanning_tree(config)
    loops = build_initial_loops(config, tree)
    table = monodromy_table(f, loops, ng=ng)
    string = tree_string(config, tree)
    gens = rearrange(loops, list(table.permutations), string)
    return Analysis(
        curve=f,
        discriminant=disc,
        config=config,
        tree=tree,
        loops=loops,
        table=table,
        classification=classify_tree(config, tree),
        string=string,
        generators=gens,
        genus=genus(gens.permutations, gens.infinity),
        ng=ng,
    )


def multiplicities(a: Analysis) -> np.ndarray:
    """Resultant-root multiplicity of each configured point."""
    return np.asarray(a.discriminant.multiplicity)[a.config.source_index]
