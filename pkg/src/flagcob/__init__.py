"""Exact computations with the Landweber-Novikov Hopf algebra, its actions,
and their realization on bounded flag manifolds."""

from flagcob.combinatorics import ExponentSeq, SubsetQ
from flagcob.flagring import FlagContext, FlagElem
from flagcob.kernels import BACKEND
from flagcob.seriesalg import GPoly, GTensor

__version__ = "0.1.0"

__all__ = ["BACKEND", "ExponentSeq", "FlagContext", "FlagElem", "GPoly", "GTensor", "SubsetQ"]
