import itertools
import math

import pytest
from hypothesis import given, strategies as st

from oracles import cycle_count, inversion_parity, padded_brute, stirling_brute
from stirling_saf.combinatorics import (
    CyclePermutation,
    StirlingTriangle,
    binomial,
    code_of,
    is_padded_composition,
    padded_compositions,
    perm_from_code,
    standard_cycle_form,
)
from stirling_saf.combinatorics import stirling_cycle


@pytest.mark.parametrize("i, j, expected", [(4, 2, 11), (5, 3, 35), (0, 0, 1), (3, 0, 0), (3, 4, 0), (3, -1, 0)])
def test_stirling_values(i, j, expected):
    assert stirling_cycle(i, j) == expected


def test_stirling_diagonal():
    assert [stirling_cycle(n, n) for n in range(9)] == [1] * 9


def test_stirling_row_sums():
    for i in range(10):
        assert sum(stirling_cycle(i, j) for j in range(i + 1)) == math.factorial(i)


def test_stirling_matches_brute_force():
    for i in range(9):
        for j in range(i + 1):
            assert stirling_cycle(i, j) == stirling_brute(i, j), (i, j)


def test_triangle_recurrence_and_growth():
    t = StirlingTriangle()
    assert len(t) == 1
    assert t[12, 5] == stirling_cycle(12, 5)
    assert len(t) == 13
    for i in range(1, 13):
        for j in range(1, i + 1):
            assert t[i, j] == t[i - 1, j - 1] + (i - 1) * t[i - 1, j]
    with pytest.raises(ValueError):
        t[-1, 0]


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(12, 3) == 220
    assert binomial(7, 0) == 1
    assert binomial(3, 4) == 0
    assert binomial(3, -1) == 0


def test_padded_compositions_small():
    assert list(padded_compositions(3)) == [(1, 1, 1), (1, 2, 0), (2, 0, 1), (3, 0, 0)]
    assert (3, 0, 0, 1, 2, 0) in set(padded_compositions(6))
    restricted = list(padded_compositions(3, restricted=True))
    # (2, 0, 1) is excluded too: c_1 = 2 > 1
    assert restricted == [(1, 1, 1), (1, 2, 0)]


@pytest.mark.parametrize("n", range(1, 7))
def test_padded_compositions_match_brute_force(n):
    got = list(padded_compositions(n))
    assert got == sorted(padded_brute(n))
    restricted = [c for c in padded_brute(n) if all(ci <= i for i, ci in enumerate(c, start=1))]
    assert list(padded_compositions(n, restricted=True)) == sorted(restricted)


def test_restricted_counts_follow_a002083():
    # 1, 1, 2, 3, 6, 11, 22, 42, 84, 165 is A002083 from n = 1
    counts = [len(list(padded_compositions(n, restricted=True))) for n in range(1, 11)]
    assert counts == [1, 1, 2, 3, 6, 11, 22, 42, 84, 165]


@pytest.mark.parametrize("n", range(1, 13))
def test_padded_compositions_count_and_zero_deletion(n):
    comps = list(padded_compositions(n))
    assert len(comps) == 2 ** (n - 1)
    stripped = {tuple(c for c in comp if c) for comp in comps}
    assert len(stripped) == len(comps)
    assert all(sum(s) == n for s in stripped)


def test_standard_cycle_form_example():
    p = standard_cycle_form((5, 2, 6, 1, 4, 3))
    assert p.cycles == ((1, 5, 4), (2,), (3, 6))
    assert p.nonfirst_entries == (5, 4, 6)
    assert p.nonfirst_count == 3
    assert str(p) == "154-36"


def test_standard_cycle_form_trivial():
    e = standard_cycle_form((1, 2, 3, 4))
    assert e.cycles == ((1,), (2,), (3,), (4,)) and e.nonfirst_count == 0 and e.is_identity
    t = standard_cycle_form((2, 1))
    assert t.cycles == ((1, 2),) and t.nonfirst_count == 1


def test_standard_cycle_form_rejects_non_bijection():
    with pytest.raises(ValueError):
        standard_cycle_form((1, 1, 3))


def test_perm_from_code_examples():
    e = perm_from_code((1, 1, 1))
    assert e.is_identity and len(e.cycles) == 3 and e.sign == 1
    p = perm_from_code((2, 0, 1))
    assert p.one_line() == (2, 1, 3) and p.cycles == ((1, 2), (3,)) and p.sign == -1
    q = perm_from_code((3, 0, 0))
    assert len(q.cycles) == 1 and q.sign == 1
    with pytest.raises(ValueError):
        perm_from_code((2, 1, 0))
    assert not is_padded_composition((1, 0))


@pytest.mark.parametrize("n", range(1, 8))
def test_code_round_trip_and_sign(n):
    hits = 0
    for sigma in itertools.permutations(range(1, n + 1)):
        if any(s < i for i, s in enumerate(sigma)):  # need sigma(i) >= i - 1
            continue
        hits += 1
        code = code_of(sigma)
        p = perm_from_code(code)
        assert p.one_line() == sigma
        assert p.sign == (-1) ** code.count(0) == inversion_parity(sigma)
        assert sorted(c for c in code if c) == sorted(len(c) for c in p.cycles)
    assert hits == 2 ** (n - 1)


@given(st.permutations(list(range(1, 9))))
def test_cycle_form_properties(perm):
    p = standard_cycle_form(perm)
    assert p.one_line() == tuple(perm)
    assert len(p.cycles) == cycle_count(perm)
    assert all(c[0] == min(c) for c in p.cycles)
    assert [c[0] for c in p.cycles] == sorted(c[0] for c in p.cycles)
    assert CyclePermutation.parse(str(p), len(perm)) == p


def test_parse_notations():
    p = CyclePermutation.parse("14-253", 6)
    assert p.cycles == ((1, 4), (2, 5, 3), (6,))
    assert CyclePermutation.parse("(1 4)(2 5 3)", 6) == p
    assert CyclePermutation.parse("e", 3).is_identity
    big = CyclePermutation.from_cycles(11, [(3, 11)])
    assert str(big) == "(3 11)"
    assert CyclePermutation.parse(str(big), 11) == big


def test_resized():
    p = CyclePermutation.parse("13", 4)
    assert p.resized(3).size == 3 and p.resized(5).cycles[-1] == (5,)
    with pytest.raises(ValueError):
        CyclePermutation.parse("14", 4).resized(3)
