"""Counting single-source acyclic automata and choosing a canonical
representative for each relabeling class."""

from stirling_saf import (
    TwoLineAutomaton,
    build_matrix,
    canonicalize,
    determinant,
    enumerate_saf,
    is_canonical,
    single_source_count,
    unlabeled_count,
    validate,
)
from stirling_saf.automata import acyclic_count, canonical_labeling

# Counting: a_k(n) labeled acyclic automata, b_k(n) single-source ones, and
# b_k(n)/(n-1)! up to relabeling the interior states.
for n in range(1, 7):
    print(f"n={n}: a_2={acyclic_count(2, n):>14}  b_2={single_source_count(2, n):>12}  "
          f"unlabeled={unlabeled_count(2, n):>8}")

# The determinant of A_k(n) counts unlabeled automata on k+1 letters.
for k in (1, 2, 3):
    print(k, [determinant(build_matrix(k, n)) for n in range(1, 6)],
          [unlabeled_count(k + 1, n) for n in range(1, 6)])

# An automaton on {a, b, c} with 5 transient states and sink 6.
b = TwoLineAutomaton(3, 5, (2, 4, 6, 6, 6, 6, 6, 6, 6, 3, 5, 3, 2, 2, 6))
print(b)
print("valid:", validate(b).ok, " canonical:", is_canonical(b))

# Marking order of the interior states: 4, then 5 before 3, then 2.
print("relabeling:", canonical_labeling(b))
c = canonicalize(b)
print(c)
print("canonical:", is_canonical(c))

# Brute force agrees with the counting formula, and each class has one
# canonical member.
autos = list(enumerate_saf(2, 3))
print(len(autos), "automata,", len({canonicalize(a) for a in autos}), "classes")
