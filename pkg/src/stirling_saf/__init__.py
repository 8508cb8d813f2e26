"""Exact tools for the identity between a Stirling cycle determinant and the
number of unlabeled acyclic single-source automata."""

from .automata import (
    CanonicalAutomaton,
    TwoLineAutomaton,
    acyclic_count,
    canonicalize,
    enumerate_canonical,
    enumerate_saf,
    is_canonical,
    single_source_count,
    unlabeled_count,
    validate,
)
from .bijection import automaton_to_path, path_to_automaton
from .budget import BudgetExceeded
from .combinatorics import CyclePermutation, binomial, padded_compositions, stirling_cycle
from .involution import PermList, det_via_involution, involution_step
from .matrix import build_matrix, determinant, determinant_via_permutation_sum
from .paths import LatticePath, MarkedPathCode, PathCode, count_paths, marked_count

__version__ = "0.1.0"
