"""Subdiagonal lattice paths, their height codes and column markings.

A subdiagonal ``(k, n, p)``-path uses steps ``E = (1, 0)`` and ``N = (0, 1)``
from ``(0, 0)`` to ``(kn, p)`` and never goes above ``y = x / k``; touching
the line is allowed.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .budget import check_budget, enum_budget
from .combinatorics import binomial

__all__ = [
    "LatticePath",
    "PathCode",
    "MarkedPathCode",
    "count_paths",
    "enumerate_paths",
    "path_heights",
    "path_to_code",
    "code_to_path",
    "enumerate_codes",
    "enumerate_marked_codes",
    "marked_count",
    "count_marked_paths",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticePath:
    k: int
    n: int
    p: int
    steps: str

    def __post_init__(self) -> None:
        if self.k < 1 or self.n < 1:
            raise ValueError(f"k and n must be positive, got k={self.k}, n={self.n}")
        if not 0 <= self.p <= self.n:
            raise ValueError(f"need 0 <= p <= n, got p={self.p}, n={self.n}")
        if set(self.steps) - {"E", "N"}:
            raise ValueError(f"steps must be E/N, got {self.steps!r}")
        if self.steps.count("E") != self.k * self.n or self.steps.count("N") != self.p:
            raise ValueError(
                f"path {self.steps!r} does not end at ({self.k * self.n}, {self.p})"
            )
        x = y = 0
        for step in self.steps:
            if step == "E":
                x += 1
            else:
                y += 1
                if self.k * y > x:
                    raise ValueError(f"path {self.steps!r} rises above y = x/{self.k} at ({x}, {y})")

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "p": self.p, "steps": self.steps}

    @classmethod
    def from_json(cls, obj: Mapping) -> "LatticePath":
        return cls(int(obj["k"]), int(obj["n"]), int(obj["p"]), str(obj["steps"]))


@dataclass(frozen=True)
class PathCode:
    """Heights ``b_1 <= ... <= b_kn`` of the E steps above ``y = -1``,
    with ``b_i <= ceil(i/k)``."""

    k: int
    heights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "heights", tuple(self.heights))
        h = self.heights
        if self.k < 1 or not h or len(h) % self.k:
            raise ValueError(f"code length {len(h)} is not a positive multiple of k={self.k}")
        prev = 1
        for i, b in enumerate(h, start=1):
            if b < prev or b > -(-i // self.k):
                raise ValueError(f"invalid path code {h} for k={self.k} at position {i}")
            prev = b

    @property
    def n(self) -> int:
        return len(self.heights) // self.k


@dataclass(frozen=True)
class MarkedPathCode:
    """A column-marked ``(k, n, n)``-path as pairs ``(a_i, b_i)``, where
    ``a_i`` in ``1..b_i`` is the row of the marked square in column ``i``."""

    k: int
    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if len(pairs) != self.k * self.n:
            raise ValueError(f"expected {self.k * self.n} pairs, got {len(pairs)}")
        PathCode(self.k, tuple(b for _, b in pairs))
        for i, (a, b) in enumerate(pairs, start=1):
            if not 1 <= a <= b:
                raise ValueError(f"mark a_{i}={a} is outside 1..{b}")

    @property
    def code(self) -> PathCode:
        return PathCode(self.k, tuple(b for _, b in self.pairs))

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "pairs": [list(p) for p in self.pairs]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "MarkedPathCode":
        try:
            return cls(int(obj["k"]), int(obj["n"]), tuple(tuple(p) for p in obj["pairs"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed marked path JSON: {exc}") from None


# -- plain paths ------------------------------------------------------------


def count_paths(k: int, n: int, p: int) -> int:
    """Generalized ballot number ``(kn-kp+1)/(kn+p+1) * C(kn+p+1, p)``."""
    if k < 1 or n < 1 or p < 0:
        raise ValueError(f"need k, n >= 1 and p >= 0, got k={k}, n={n}, p={p}")
    if p > n:
        log.warning("no subdiagonal (%d,%d,%d)-paths: p > n", k, n, p)
        return 0
    num = (k * n - k * p + 1) * binomial(k * n + p + 1, p)
    q, r = divmod(num, k * n + p + 1)
    if r:
        raise ArithmeticError(f"ballot formula not integral for k={k}, n={n}, p={p}")
    return q


def enumerate_paths(k: int, n: int, p: int, budget: int | None = None) -> Iterator[LatticePath]:
    """All subdiagonal paths, lexicographic in their step words with E < N."""
    total = count_paths(k, n, p)
    check_budget(total, enum_budget(budget), f"paths k={k} n={n} p={p}")
    width = k * n
    if p > n:
        return
    steps: list[str] = []

    def rec(x: int, y: int) -> Iterator[str]:
        if x == width and y == p:
            yield "".join(steps)
            return
        if x < width:
            steps.append("E")
            yield from rec(x + 1, y)
            steps.pop()
        if y < p and k * (y + 1) <= x:
            steps.append("N")
            yield from rec(x, y + 1)
            steps.pop()

    for word in rec(0, 0):
        yield LatticePath(k, n, p, word)


def path_heights(path: LatticePath) -> tuple[int, ...]:
    """Heights of the E steps above ``y = -1``, for any ``p``."""
    heights = []
    y = 0
    for step in path.steps:
        if step == "N":
            y += 1
        else:
            heights.append(y + 1)
    return tuple(heights)


def path_to_code(path: LatticePath) -> PathCode:
    if path.p != path.n:
        raise ValueError(f"only (k,n,n)-paths have a code, got p={path.p}, n={path.n}")
    return PathCode(path.k, path_heights(path))


def code_to_path(code: PathCode) -> LatticePath:
    """Inverse of ``path_to_code``; leftover N steps go at the end."""
    steps = []
    y = 0
    for b in code.heights:
        steps.append("N" * (b - 1 - y))
        y = b - 1
        steps.append("E")
    steps.append("N" * (code.n - y))
    return LatticePath(code.k, code.n, code.n, "".join(steps))


def _codes(k: int, n: int) -> Iterator[tuple[int, ...]]:
    length = k * n
    out = [0] * length

    def rec(i: int, low: int) -> Iterator[tuple[int, ...]]:
        if i == length:
            yield tuple(out)
            return
        for b in range(low, i // k + 2):  # ceil((i+1)/k) for 0-based i
            out[i] = b
            yield from rec(i + 1, b)

    yield from rec(0, 1)


def enumerate_codes(k: int, n: int, budget: int | None = None) -> Iterator[PathCode]:
    """All codes of ``(k, n, n)``-paths in lexicographic order."""
    if k < 1 or n < 1:
        raise ValueError(f"k and n must be positive, got k={k}, n={n}")
    check_budget(count_paths(k, n, n), enum_budget(budget), f"path codes k={k} n={n}")
    for h in _codes(k, n):
        yield PathCode(k, h)


def enumerate_marked_codes(k: int, n: int, budget: int | None = None) -> Iterator[MarkedPathCode]:
    """The set ``C*_k(n, n)``, ordered by the b-sequence and then the marks."""
    check_budget(marked_count(k, n), enum_budget(budget), f"marked codes k={k} n={n}")
    for h in _codes(k, n):
        for marks in itertools.product(*(range(1, b + 1) for b in h)):
            yield MarkedPathCode(k, n, tuple(zip(marks, h)))


def marked_count(k: int, n: int) -> int:
    """``|C*_k(n, n)|`` as the sum over path codes of ``b_1 * ... * b_kn``."""
    if k < 1 or n < 1:
        raise ValueError(f"k and n must be positive, got k={k}, n={n}")
    return sum(math.prod(h) for h in _codes(k, n))


def count_marked_paths(k: int, n: int, p: int, budget: int | None = None) -> int:
    """Number of column-marked ``(k, n, p)``-paths for any ``0 <= p <= n``.

    Each column may be marked in any of the squares between ``y = -1`` and
    the path, so a path contributes the product of its E-step heights.
    """
    return sum(math.prod(path_heights(P)) for P in enumerate_paths(k, n, p, budget))
