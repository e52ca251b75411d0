"""Exact numerical semigroup toolkit: invariants, classification of
almost symmetric and MED semigroups with maximal reduced type, and
exhaustive verification by genus."""

from .core import AperySet, IntSet, NumericalSemigroup, from_gaps, from_generators, naturals
from .classify import (
    Classification,
    classify_almost_symmetric_max_reduced,
    classify_med_max_reduced,
    construct_delta_fm,
    construct_delta_minus,
    construct_half_line,
    exists_with_type_and_edim,
    has_maximal_reduced_type,
    is_almost_symmetric,
    is_half_line,
    is_med,
    is_symmetric,
)

__version__ = "0.1.0"
