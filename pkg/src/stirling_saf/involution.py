"""Evaluation of ``det A_1(n)`` by a sign-reversing involution.

``L_n`` is the set of lists ``(pi_1, ..., pi_n)`` where ``pi_i`` permutes
``1..i+1`` with at most ``i`` nonfirst entries, ``pi_1 = (1 2)``, and every
nonidentity ``pi_i`` with ``c`` nonfirst entries is followed by exactly
``c - 1`` identities (written ``e``). A list weighs ``(-1)^(#e)``; the
weights sum to ``det A_1(n)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .budget import check_budget, list_budget
from .combinatorics import CyclePermutation, padded_compositions, standard_cycle_form, stirling_cycle
from .paths import MarkedPathCode

__all__ = [
    "PermList",
    "FixedList",
    "list_space_size",
    "enumerate_lists",
    "weight",
    "stop_position",
    "involution_step",
    "is_fixed",
    "fixed_list",
    "fixed_to_marked_code",
    "det_via_involution",
]

SPLIT = "split"
MERGE = "merge"


@dataclass(frozen=True)
class PermList:
    n: int
    items: tuple[CyclePermutation, ...]

    def __post_init__(self) -> None:
        items = tuple(self.items)
        object.__setattr__(self, "items", items)
        if self.n < 1 or len(items) != self.n:
            raise ValueError(f"expected {self.n} permutations, got {len(items)}")
        for i, pi in enumerate(items, start=1):
            if pi.size != i + 1:
                raise ValueError(f"pi_{i} must permute 1..{i + 1}, got size {pi.size}")
            if pi.nonfirst_count > i:
                raise ValueError(f"pi_{i} has {pi.nonfirst_count} > {i} nonfirst entries")
        if items[0].cycles != ((1, 2),):
            raise ValueError("pi_1 must be the transposition (1 2)")
        i = 0
        while i < self.n:
            c = items[i].nonfirst_count
            if c == 0 or i + c > self.n:
                raise ValueError(f"identity padding is wrong at position {i + 1}")
            if any(not items[i + t].is_identity for t in range(1, c)):
                raise ValueError(f"pi_{i + 1} must be followed by {c - 1} identities")
            i += c

    @property
    def identities(self) -> int:
        return sum(pi.is_identity for pi in self.items)

    @classmethod
    def parse(cls, words: list[str]) -> "PermList":
        """From compact notation, e.g. ``["12", "13", "23", "14-253", "e", "e"]``."""
        items = tuple(CyclePermutation.parse(w, i + 1) for i, w in enumerate(words, start=1))
        return cls(len(items), items)

    def words(self) -> list[str]:
        return [str(pi) for pi in self.items]

    def to_json(self) -> dict:
        return {"n": self.n, "perms": self.words()}

    @classmethod
    def from_json(cls, obj: Mapping) -> "PermList":
        try:
            perms = list(obj["perms"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed permutation list JSON: {exc}") from None
        pl = cls.parse(perms)
        if "n" in obj and int(obj["n"]) != pl.n:
            raise ValueError(f"n={obj['n']} does not match {pl.n} permutations")
        return pl


@dataclass(frozen=True)
class FixedList:
    """Transposition pairs ``(a_i, b_i)`` with ``a_i < b_i <= i+1`` and
    ``b`` weakly increasing."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prev = 0
        for i, (a, b) in enumerate(self.pairs, start=1):
            if not 1 <= a < b <= i + 1 or b < prev:
                raise ValueError(f"invalid fixed list {self.pairs} at position {i}")
            prev = b


def list_space_size(n: int) -> int:
    """``|L_n|``, the unsigned version of the determinant expansion."""
    return sum(
        math.prod(stirling_cycle(i + 1, i + 1 - c) for i, c in enumerate(code, start=1))
        for code in padded_compositions(n, restricted=True)
    )


@lru_cache(maxsize=None)
def _perms_by_nonfirst(size: int, c: int) -> tuple[CyclePermutation, ...]:
    everything = (standard_cycle_form(p) for p in itertools.permutations(range(1, size + 1)))
    return tuple(p for p in everything if p.nonfirst_count == c)


def enumerate_lists(n: int, budget: int | None = None) -> Iterator[PermList]:
    """Every element of ``L_n``, built position by position.

    Lists come out ordered by their padded composition and then by the
    one-line order of each permutation.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_budget(list_space_size(n), list_budget(budget), f"permutation lists n={n}")
    prefix: list[CyclePermutation] = []

    def rec(i: int) -> Iterator[tuple[CyclePermutation, ...]]:
        if i > n:
            yield tuple(prefix)
            return
        for c in range(1, min(i, n - i + 1) + 1):
            pad = [CyclePermutation.identity(i + 1 + t) for t in range(1, c)]
            for pi in _perms_by_nonfirst(i + 1, c):
                prefix.append(pi)
                prefix.extend(pad)
                yield from rec(i + c)
                del prefix[len(prefix) - c:]

    for items in rec(1):
        yield PermList(n, items)


def weight(pl: PermList) -> int:
    return -1 if pl.identities % 2 else 1


def _max_nonfirst(pi: CyclePermutation) -> float:
    entries = pi.nonfirst_entries
    return max(entries) if entries else float("-inf")


def stop_position(pl: PermList) -> tuple[int, str] | None:
    """Where the scan stops: ``(k, "split")`` if ``pi_k`` has several
    nonfirst entries, ``(k, "merge")`` if it is a transposition ``(a b)``
    with ``b`` larger than every nonfirst entry of ``pi_{k+1}``. ``None``
    means ``pl`` is a fixed point. ``k`` is 1-based."""
    items = pl.items
    for idx, pi in enumerate(items):
        c = pi.nonfirst_count
        if c > 1:
            return idx + 1, SPLIT
        if c == 1 and idx + 1 < len(items):
            (b,) = pi.nonfirst_entries
            if b > _max_nonfirst(items[idx + 1]):
                return idx + 1, MERGE
    return None


def _split(items: list[CyclePermutation], idx: int) -> None:
    pi = items[idx]
    m = max(pi.nonfirst_entries)
    cyc = pi.cycle_of(m)
    ell = cyc[cyc.index(m) - 1]
    size = pi.size
    rest = [tuple(x for x in c if x != m) for c in pi.cycles]
    items[idx] = CyclePermutation.transposition(size, ell, m)
    items[idx + 1] = CyclePermutation.from_cycles(size + 1, rest + [(m,)])


def _merge(items: list[CyclePermutation], idx: int) -> None:
    a, b = next(c for c in items[idx].cycles if len(c) == 2)
    nxt = items[idx + 1]
    if len(nxt.cycle_of(b)) != 1:
        raise RuntimeError(f"{b} is not a singleton of {nxt}")
    cycles = []
    for c in nxt.cycles:
        if c == (b,):
            continue
        if a in c:
            pos = c.index(a) + 1
            c = c[:pos] + (b,) + c[pos:]
        cycles.append(c)
    merged = CyclePermutation.from_cycles(nxt.size, cycles).resized(nxt.size - 1)
    items[idx] = merged
    items[idx + 1] = CyclePermutation.identity(nxt.size)


def involution_step(pl: PermList) -> PermList:
    """Apply the split/merge map; it changes the number of identities by one.

    >>> x = PermList.parse(["12", "13", "23", "14-253", "e", "e"])
    >>> involution_step(x).words()
    ['12', '13', '23', '25', '14-23', 'e']
    """
    stop = stop_position(pl)
    if stop is None:
        raise ValueError("fixed points of the involution have no image")
    k, case = stop
    items = list(pl.items)
    if case == SPLIT:
        _split(items, k - 1)
    else:
        _merge(items, k - 1)
    return PermList(pl.n, tuple(items))


def is_fixed(pl: PermList) -> bool:
    """True iff every ``pi_i`` is a transposition and their larger entries
    weakly increase."""
    prev = 0
    for pi in pl.items:
        if pi.nonfirst_count != 1:
            return False
        (b,) = pi.nonfirst_entries
        if b < prev:
            return False
        prev = b
    return True


def fixed_list(pl: PermList) -> FixedList:
    if not is_fixed(pl):
        raise ValueError("not a fixed point of the involution")
    pairs = []
    for pi in pl.items:
        pairs.append(next(c for c in pi.cycles if len(c) == 2))
    return FixedList(tuple(pairs))


def fixed_to_marked_code(f: FixedList) -> MarkedPathCode:
    """``(a_i, b_i) -> (a_i, b_i - 1)``, a marked ``(1, n, n)``-path code."""
    return MarkedPathCode(1, len(f.pairs), tuple((a, b - 1) for a, b in f.pairs))


def det_via_involution(n: int, budget: int | None = None) -> int:
    """Count the fixed points of the involution on ``L_n``."""
    return sum(1 for pl in enumerate_lists(n, budget) if is_fixed(pl))
