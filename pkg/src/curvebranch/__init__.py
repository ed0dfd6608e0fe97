"""Monodromy, fundamental-group generators and genus of plane algebraic
curves f(x, y) = 0, from loops laid along a minimal spanning tree of the
discriminant points."""

from .contour import Arc, Line, Loop, build_initial_loops, compose, winding_number
from .curve import BivariatePolynomial, CurveError, discriminant_points, fiber, sylvester_resultant_y, y_derivative
from .fundgroup import (
    MonodromyError,
    classify_tree,
    genus,
    infinity_from_product,
    infinity_loop,
    rearrange,
    tree_string,
)
from .layout import KAPPA, KAPPA_PLOT, LayoutError, configure, minimal_spanning_tree, tree_from_edges
from .monodromy import Permutation, SheetTrackingError, continue_fiber, monodromy_table
from .periods import DifferentialSpec, integrate_chain
from .pipeline import Analysis, analyze
from .polymath import RootFindingError, UnivariatePolynomial, gauss_legendre, roots

__version__ = "0.1.0"
