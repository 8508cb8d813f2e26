import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from oracles import acyclic_brute, saf_brute
from stirling_saf.automata import (
    CanonicalAutomaton,
    TwoLineAutomaton,
    acyclic_count,
    canonical_labeling,
    canonicalize,
    enumerate_acyclic,
    enumerate_canonical,
    enumerate_saf,
    is_canonical,
    relabel,
    single_source_count,
    unlabeled_count,
    validate,
)
from stirling_saf.budget import BudgetExceeded
from stirling_saf.matrix import build_matrix, determinant

B_EXAMPLE = TwoLineAutomaton(3, 5, (2, 4, 6, 6, 6, 6, 6, 6, 6, 3, 5, 3, 2, 2, 6))
B_CANONICAL = (5, 2, 6, 4, 3, 4, 5, 5, 6, 6, 6, 6, 6, 6, 6)
GRID = [(k, n) for k in (1, 2, 3) for n in (1, 2, 3)] + [(1, 4), (2, 4)]


def test_acyclic_count_values():
    assert all(acyclic_count(k, 0) == 1 for k in range(1, 6))
    assert acyclic_count(2, 2) == 7
    assert acyclic_count(1, 1) == 1


@pytest.mark.parametrize("k, n", GRID)
def test_acyclic_count_matches_brute_force(k, n):
    assert acyclic_count(k, n) == acyclic_brute(k, n)


def test_single_source_values():
    assert single_source_count(2, 2) == 3
    assert single_source_count(2, 1) == 1
    assert single_source_count(2, 4) == 127 * 6


def test_unlabeled_sequence():
    assert [unlabeled_count(2, n) for n in range(1, 6)] == [1, 3, 16, 127, 1363]
    assert unlabeled_count(3, 3) == determinant(build_matrix(2, 3))


def test_counts_reject_n0():
    with pytest.raises(ValueError):
        single_source_count(2, 0)
    with pytest.raises(ValueError):
        unlabeled_count(2, 0)


def test_big_counts_are_divisible():
    for k in range(1, 5):
        for n in range(1, 12):
            unlabeled_count(k, n)


def test_validate_examples():
    assert validate(B_EXAMPLE)
    assert validate(TwoLineAutomaton(2, 1, (2, 2)))
    bad = validate(TwoLineAutomaton(2, 1, (1, 2)))
    assert not bad and "self-loop" in bad.reason
    cyc = validate(TwoLineAutomaton(1, 2, (2, 1)), single_source=False)
    assert not cyc and "cycle" in cyc.reason
    second_source = validate(TwoLineAutomaton(2, 2, (3, 3, 3, 3)))
    assert not second_source and "interior state 2" in second_source.reason
    assert validate(TwoLineAutomaton(2, 2, (3, 3, 3, 3)), single_source=False)


def test_malformed_input_is_a_value_error():
    with pytest.raises(ValueError, match="length"):
        TwoLineAutomaton(2, 2, (3, 3, 3))
    with pytest.raises(ValueError, match="outside"):
        TwoLineAutomaton(2, 2, (3, 3, 3, 4))


def test_enumerate_saf_small():
    assert [a.bottom for a in enumerate_saf(2, 1)] == [(2, 2)]
    assert len(list(enumerate_saf(2, 2))) == 3


@pytest.mark.parametrize("k, n", GRID)
def test_enumerate_saf_is_exact(k, n):
    got = [a.bottom for a in enumerate_saf(k, n)]
    assert got == sorted(saf_brute(k, n))
    assert len(got) == single_source_count(k, n)


@pytest.mark.parametrize("k, n", [(1, 3), (2, 2), (2, 3)])
def test_enumerate_acyclic_count(k, n):
    assert sum(1 for _ in enumerate_acyclic(k, n)) == acyclic_count(k, n)


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        next(enumerate_saf(2, 4, budget=1000))
    with pytest.raises(BudgetExceeded):
        next(enumerate_acyclic(3, 3, budget=10))


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("SA_ENUM_BUDGET", "2")
    with pytest.raises(BudgetExceeded):
        next(enumerate_saf(2, 2))
    assert len(list(enumerate_saf(2, 2, budget=100))) == 3


def test_canonicalize_worked_example():
    mark = canonical_labeling(B_EXAMPLE)
    # v_2 = 4, v_3 = 5, v_4 = 3, v_5 = 2
    assert [mark[v] for v in (1, 4, 5, 3, 2)] == [1, 2, 3, 4, 5]
    c = canonicalize(B_EXAMPLE)
    assert c.bottom == B_CANONICAL
    assert is_canonical(c)
    assert not is_canonical(B_EXAMPLE)


def test_canonical_is_fixed():
    c = TwoLineAutomaton(3, 5, B_CANONICAL)
    assert canonicalize(c) == c
    assert is_canonical(TwoLineAutomaton(2, 1, (2, 2)))


def test_canonical_wrapper_rejects_non_canonical():
    with pytest.raises(ValueError):
        CanonicalAutomaton.wrap(B_EXAMPLE)


def test_canonical_enumeration_counts():
    assert len(list(enumerate_canonical(2, 1))) == 1
    assert len(list(enumerate_canonical(2, 2))) == 3
    assert len(list(enumerate_canonical(2, 3))) == 16
    outs = {canonicalize(a) for a in enumerate_saf(2, 2)}
    assert len(outs) == 3 and TwoLineAutomaton(2, 2, (3, 2, 3, 3)) in outs


def _orbit(a):
    n = a.n
    out = []
    for perm in itertools.permutations(range(2, n + 1)):
        mapping = {1: 1, n + 1: n + 1, **dict(zip(range(2, n + 1), perm))}
        out.append(relabel(a, mapping))
    return out


@pytest.mark.parametrize("k, n", [(1, 3), (2, 1), (2, 2), (2, 3), (2, 4), (3, 3)])
def test_orbit_structure(k, n):
    autos = list(enumerate_saf(k, n))
    classes = {}
    for a in autos:
        orbit = _orbit(a)
        assert len(set(orbit)) == math.factorial(n - 1)
        assert sum(is_canonical(b) for b in orbit) == 1
        c = canonicalize(a)
        assert c in orbit
        assert canonicalize(c) == c
        classes.setdefault(frozenset(orbit), c)
    assert len(classes) == unlabeled_count(k, n)


@pytest.mark.parametrize("k, n", [(2, 3), (2, 4)])
def test_canonicalize_is_a_relabeling(k, n):
    for a in enumerate_saf(k, n):
        mark = canonical_labeling(a)
        inverse = {new: old for old, new in mark.items()}
        assert relabel(canonicalize(a), inverse) == a


@st.composite
def saf_automata(draw):
    """Random SAF automata: targets of state s point strictly later in a
    random topological order, then interior vertices must be hit."""
    k = draw(st.integers(1, 3))
    n = draw(st.integers(2, 7))
    order = [1] + draw(st.permutations(list(range(2, n + 1))))
    rank = {v: i for i, v in enumerate(order)}
    bottom = []
    for s in range(1, n + 1):
        later = [v for v in range(2, n + 1) if rank[v] > rank[s]] + [n + 1]
        bottom.extend(draw(st.sampled_from(later)) for _ in range(k))
    # the vertex right after each one in order gets an edge from its predecessor
    # so every interior vertex has an in-edge
    for i in range(1, n):
        s, v = order[i - 1], order[i]
        bottom[(s - 1) * k + draw(st.integers(0, k - 1))] = v
    return TwoLineAutomaton(k, n, tuple(bottom))


@settings(max_examples=200, deadline=None)
@given(saf_automata(), st.randoms())
def test_canonical_form_is_a_class_invariant(a, rnd):
    assert validate(a)
    n = a.n
    perm = list(range(2, n + 1))
    rnd.shuffle(perm)
    mapping = {1: 1, n + 1: n + 1, **dict(zip(range(2, n + 1), perm))}
    b = relabel(a, mapping)
    assert validate(b)
    assert canonicalize(a) == canonicalize(b)
