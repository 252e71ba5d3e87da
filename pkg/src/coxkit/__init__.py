"""coxkit: exact symbolic toolkit for Coxeter polynomials of weighted
Dynkin diagrams, Kostant Poincare series of the Klein groups, branching
continued fractions, Christoffel-Darboux identities, and the Burau/Milnor
invariants of pure braids.  Everything is integer/rational exact."""

from .algebra import (BiLaurent, Laurent, Poly, RatFunc, TruncSeries,
                      bezoutian, det_exact, q_to_z, series_sqrt1p, wronskian,
                      z_substitute)
from .diagram import Diagram, OddCycle, SeifertMatrix, bipartite_order, build, join
from .coxeter import char_poly, cofactors, coxeter_poly, join_poly, schur_step
from .kostant import KleinGroupData, klein_data, poincare_series
from .report import IdentityReport

__version__ = "0.1.0"

__all__ = [
    "BiLaurent", "Diagram", "IdentityReport", "KleinGroupData", "Laurent",
    "OddCycle", "Poly", "RatFunc", "SeifertMatrix", "TruncSeries",
    "bezoutian", "bipartite_order", "build", "char_poly", "cofactors",
    "coxeter_poly", "det_exact", "join", "join_poly", "klein_data",
    "poincare_series", "q_to_z", "schur_step", "series_sqrt1p", "wronskian",
    "z_substitute",
]
