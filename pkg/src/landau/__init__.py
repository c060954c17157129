"""Finite-group toolkit: class-equation search, Landau-type bounds, and
classification of normal subgroups with few non-central classes."""

from .group import FiniteGroup, closure
from .perm import Permutation

__all__ = ["FiniteGroup", "Permutation", "closure"]

__version__ = "0.1.0"
