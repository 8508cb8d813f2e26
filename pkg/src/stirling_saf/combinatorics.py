"""Exact integer primitives: Stirling cycle numbers, binomials, padded
compositions and permutations in standard cycle form.

All arithmetic is on Python ints, so nothing overflows.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "StirlingTriangle",
    "stirling_cycle",
    "binomial",
    "factorial",
    "is_padded_composition",
    "padded_compositions",
    "CyclePermutation",
    "standard_cycle_form",
    "perm_from_code",
    "code_of",
]


class StirlingTriangle:
    """Triangle of unsigned Stirling numbers of the first kind.

    Rows are appended on demand using ``[i, j] = [i-1, j-1] + (i-1)[i-1, j]``
    and are never evicted. Growth is guarded by a lock so a single table can
    be shared between threads.
    """

    def __init__(self) -> None:
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._rows)

    def _grow(self, i: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= i:
                m = len(rows)
                prev = rows[-1]
                row = [0] * (m + 1)
                for j in range(1, m + 1):
                    up_left = prev[j - 1]
                    up = prev[j] if j < m else 0
                    row[j] = up_left + (m - 1) * up
                rows.append(row)

    def row(self, i: int) -> tuple[int, ...]:
        if i < 0:
            raise ValueError(f"row index must be nonnegative, got {i}")
        if i >= len(self._rows):
            self._grow(i)
        return tuple(self._rows[i])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if i < 0:
            raise ValueError(f"row index must be nonnegative, got {i}")
        if j < 0 or j > i:
            return 0
        if i >= len(self._rows):
            self._grow(i)
        return self._rows[i][j]


_TRIANGLE = StirlingTriangle()


def stirling_cycle(i: int, j: int) -> int:
    """Number of permutations of ``{1..i}`` with exactly ``j`` cycles.

    Out-of-range ``j`` gives 0 rather than an error, which is what the
    matrix builder relies on.

    >>> stirling_cycle(4, 2), stirling_cycle(5, 3)
    (11, 35)
    """
    return _TRIANGLE[i, j]


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient, 0 outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


# -- padded compositions ----------------------------------------------------


def is_padded_composition(parts: Sequence[int]) -> bool:
    """True if every part ``c >= 1`` is followed by exactly ``c - 1`` zeros
    and the parts cover the whole list (so they sum to its length)."""
    n = len(parts)
    if n == 0:
        return False
    i = 0
    while i < n:
        c = parts[i]
        if not isinstance(c, int) or c < 1 or i + c > n:
            return False
        if any(parts[i + t] != 0 for t in range(1, c)):
            return False
        i += c
    return True


def padded_compositions(n: int, restricted: bool = False) -> Iterator[tuple[int, ...]]:
    """Yield the padded compositions of ``n`` in lexicographic order.

    With ``restricted=True`` only lists with ``c_i <= i`` (1-based) are
    produced; these index the nonzero terms of ``det A_1(n)``.

    >>> list(padded_compositions(3))
    [(1, 1, 1), (1, 2, 0), (2, 0, 1), (3, 0, 0)]
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")

    def rec(pos: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        # pos is the 1-based position of the next part
        if pos > n:
            yield tuple(prefix)
            return
        top = n - pos + 1
        if restricted:
            top = min(top, pos)
        for c in range(1, top + 1):
            prefix.append(c)
            prefix.extend([0] * (c - 1))
            yield from rec(pos + c, prefix)
            del prefix[len(prefix) - c:]

    yield from rec(1, [])


# -- permutations -----------------------------------------------------------


@dataclass(frozen=True)
class CyclePermutation:
    """A permutation of ``{1..size}`` kept in standard cycle form.

    Each cycle starts with its smallest element and cycles are sorted by
    their first element. Singletons are stored, not dropped.
    """

    size: int
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"size must be positive, got {self.size}")
        seen = sorted(x for cyc in self.cycles for x in cyc)
        if seen != list(range(1, self.size + 1)):
            raise ValueError(f"cycles {self.cycles} do not partition 1..{self.size}")
        leaders = [cyc[0] for cyc in self.cycles]
        if any(cyc[0] != min(cyc) for cyc in self.cycles) or leaders != sorted(leaders):
            raise ValueError(f"cycles {self.cycles} are not in standard cycle form")

    @classmethod
    def from_cycles(cls, size: int, cycles: Sequence[Sequence[int]]) -> "CyclePermutation":
        """Build from any cycle list; missing points become singletons."""
        images = list(range(size + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for idx, x in enumerate(cyc):
                if not 1 <= x <= size or x in seen:
                    raise ValueError(f"bad cycle list {cycles!r} for size {size}")
                seen.add(x)
                images[x] = cyc[(idx + 1) % len(cyc)]
        return standard_cycle_form(images[1:])

    @classmethod
    def identity(cls, size: int) -> "CyclePermutation":
        return cls(size, tuple((x,) for x in range(1, size + 1)))

    @classmethod
    def transposition(cls, size: int, a: int, b: int) -> "CyclePermutation":
        return cls.from_cycles(size, [(a, b)])

    @classmethod
    def parse(cls, text: str, size: int) -> "CyclePermutation":
        """Parse compact word notation (``"14-253"``, ``"e"`` for identity)
        or parenthesized notation (``"(1 4)(2 5 3)"``)."""
        text = text.strip()
        if text in ("e", ""):
            return cls.identity(size)
        if text.startswith("("):
            body = text.replace(")", " ").split("(")
            cycles = [tuple(int(t) for t in chunk.replace(",", " ").split()) for chunk in body]
        else:
            cycles = [tuple(int(ch) for ch in chunk) for chunk in text.split("-")]
        return cls.from_cycles(size, [c for c in cycles if c])

    def one_line(self) -> tuple[int, ...]:
        images = [0] * (self.size + 1)
        for cyc in self.cycles:
            for idx, x in enumerate(cyc):
                images[x] = cyc[(idx + 1) % len(cyc)]
        return tuple(images[1:])

    def __call__(self, x: int) -> int:
        return self.one_line()[x - 1]

    @property
    def nonfirst_entries(self) -> tuple[int, ...]:
        return tuple(x for cyc in self.cycles for x in cyc[1:])

    @property
    def nonfirst_count(self) -> int:
        return self.size - len(self.cycles)

    @property
    def is_identity(self) -> bool:
        return self.nonfirst_count == 0

    @property
    def sign(self) -> int:
        return -1 if self.nonfirst_count % 2 else 1

    def cycle_of(self, x: int) -> tuple[int, ...]:
        for cyc in self.cycles:
            if x in cyc:
                return cyc
        raise ValueError(f"{x} is not in 1..{self.size}")

    def resized(self, size: int) -> "CyclePermutation":
        """Same permutation on ``{1..size}``; dropped points must be fixed."""
        if size >= self.size:
            extra = tuple((x,) for x in range(self.size + 1, size + 1))
            return CyclePermutation(size, self.cycles + extra)
        if any(len(self.cycle_of(x)) > 1 for x in range(size + 1, self.size + 1)):
            raise ValueError(f"cannot shrink {self} to size {size}")
        return CyclePermutation(size, tuple(c for c in self.cycles if c[0] <= size))

    def __str__(self) -> str:
        moving = [c for c in self.cycles if len(c) > 1]
        if not moving:
            return "e"
        if self.size <= 9:
            return "-".join("".join(map(str, c)) for c in moving)
        return "".join("(" + " ".join(map(str, c)) + ")" for c in moving)


def standard_cycle_form(one_line: Sequence[int]) -> CyclePermutation:
    """Cycle decomposition of a permutation given by its images.

    >>> p = standard_cycle_form((5, 2, 6, 1, 4, 3))
    >>> p.cycles, p.nonfirst_entries
    (((1, 5, 4), (2,), (3, 6)), (5, 4, 6))
    """
    m = len(one_line)
    if sorted(one_line) != list(range(1, m + 1)):
        raise ValueError(f"{tuple(one_line)} is not a permutation of 1..{m}")
    seen = [False] * (m + 1)
    cycles = []
    for start in range(1, m + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = one_line[x - 1]
        cycles.append(tuple(cyc))
    return CyclePermutation(m, tuple(cycles))


def perm_from_code(code: Sequence[int]) -> CyclePermutation:
    """The permutation ``sigma`` with ``sigma(i) - (i - 1) = code[i]``.

    A part ``c`` at position ``i`` produces the cycle
    ``(i, i+c-1, i+c-2, ..., i+1)``.
    """
    if not is_padded_composition(code):
        raise ValueError(f"{tuple(code)} is not a padded composition")
    images = [c + i for i, c in enumerate(code)]
    return standard_cycle_form(images)


def code_of(sigma: Sequence[int] | CyclePermutation) -> tuple[int, ...]:
    """``(sigma(i) - (i - 1))_i`` for a one-line permutation."""
    if isinstance(sigma, CyclePermutation):
        sigma = sigma.one_line()
    return tuple(s - i for i, s in enumerate(sigma))
