import pytest
from hypothesis import given, settings, strategies as st

from stirling_saf.automata import TwoLineAutomaton, enumerate_canonical, is_canonical
from stirling_saf.bijection import (
    automaton_to_path,
    circled_positions,
    path_to_automaton,
    trace_path_to_automaton,
)
from stirling_saf.paths import LatticePath, MarkedPathCode, enumerate_marked_codes

EXAMPLE = MarkedPathCode(2, 4, ((1, 1), (1, 1), (1, 2), (2, 2), (1, 2), (3, 3), (1, 3), (2, 3)))
EXAMPLE_BOTTOM = (2, 4, 5, 3, 3, 5, 4, 5, 4, 5, 5, 5)


def test_worked_example_trace():
    t = trace_path_to_automaton(EXAMPLE)
    assert t.circled_positions == (1, 5, 9)
    assert t.square_counts == (2, 3, 1, 2, 1, 2, 1, 1)
    assert t.blank_fill == EXAMPLE_BOTTOM
    assert t.automaton.k == 3 and t.automaton.n == 4


def test_worked_example_both_ways():
    a = path_to_automaton(EXAMPLE)
    assert a.bottom == EXAMPLE_BOTTOM
    assert automaton_to_path(TwoLineAutomaton(3, 4, EXAMPLE_BOTTOM)) == EXAMPLE


def test_circled_positions_from_path():
    assert circled_positions(LatticePath(2, 4, 4, "EENEEENEEENN")) == (1, 5, 9)


def test_trivial_case():
    a = path_to_automaton(MarkedPathCode(1, 1, ((1, 1),)))
    assert a.bottom == (2, 2)
    assert automaton_to_path(a) == MarkedPathCode(1, 1, ((1, 1),))


def test_single_letter_image_for_n1():
    # k = 1, n = 1 means a 2-letter automaton with one state
    assert path_to_automaton(MarkedPathCode(1, 1, ((1, 1),))).k == 2


def test_c1_2_maps_onto_c2_2():
    image = {path_to_automaton(c) for c in enumerate_marked_codes(1, 2)}
    assert image == set(enumerate_canonical(2, 2))


@pytest.mark.parametrize("k, n", [(k, n) for k in (1, 2) for n in range(1, 5)])
def test_bijection_exhaustive(k, n):
    codes = list(enumerate_marked_codes(k, n))
    autos = list(enumerate_canonical(k + 1, n))
    images = [path_to_automaton(c) for c in codes]
    assert len(set(images)) == len(codes)
    assert set(images) == set(autos)
    assert all(automaton_to_path(a) == c for a, c in zip(images, codes))
    assert all(path_to_automaton(automaton_to_path(a)) == a for a in autos)


def test_round_trip_c2_3_3():
    for c in enumerate_marked_codes(2, 3):
        assert automaton_to_path(path_to_automaton(c)) == c


def test_sink_entries_match_fill_rule():
    for c in enumerate_marked_codes(2, 3):
        t = trace_path_to_automaton(c)
        n = c.n
        width = 3 * n
        circled = set(t.circled_positions)
        blanks = [p for p in range(1, width) if p not in circled]
        base, bases = 1, {}
        for p in range(1, width):
            if p in circled:
                base = t.blank_fill[p - 1]
            else:
                bases[p] = base
        sinks = sum(1 for p, cnt in zip(blanks, t.square_counts) if bases[p] + cnt == n + 1)
        assert t.blank_fill.count(n + 1) == sinks + 1


def test_inverse_rejects_non_canonical():
    with pytest.raises(ValueError):
        automaton_to_path(TwoLineAutomaton(3, 5, (2, 4, 6, 6, 6, 6, 6, 6, 6, 3, 5, 3, 2, 2, 6)))


@st.composite
def marked_codes(draw):
    k = draw(st.integers(1, 3))
    n = draw(st.integers(1, 7))
    pairs, low = [], 1
    for i in range(1, k * n + 1):
        b = draw(st.integers(low, -(-i // k)))
        pairs.append((draw(st.integers(1, b)), b))
        low = b
    return MarkedPathCode(k, n, tuple(pairs))


@settings(max_examples=300)
@given(marked_codes())
def test_round_trip_property(code):
    a = path_to_automaton(code)
    assert is_canonical(a)
    assert automaton_to_path(a) == code
