"""Subdiagonal lattice paths, column markings, and the map from marked
paths to canonical automata."""

from stirling_saf.bijection import automaton_to_path, trace_path_to_automaton
from stirling_saf.paths import (
    MarkedPathCode,
    code_to_path,
    count_paths,
    enumerate_paths,
    marked_count,
)

# Ballot numbers for paths from (0,0) to (kn, p) staying under y = x/k.
print([count_paths(2, 4, p) for p in range(5)])
print([P.steps for P in enumerate_paths(1, 3, 3)])

# Marking one square under each E step: the count is a sum of products of
# heights and gives 1, 3, 16, 127, 1363, ... for k = 1.
print([marked_count(1, n) for n in range(1, 8)])

# A marked (2,4,4)-path; heights b_i and mark rows a_i.
code = MarkedPathCode(2, 4, ((1, 1), (1, 1), (1, 2), (2, 2), (1, 2), (3, 3), (1, 3), (2, 3)))
print(code_to_path(code.code).steps)

# The forward map step by step.
t = trace_path_to_automaton(code)
print("circled positions:", t.circled_positions)
print("square counts (last column first):", t.square_counts)
print(t.automaton)

# And back again.
print(automaton_to_path(t.automaton) == code)
