"""Acyclic and single-source acyclic (SAF) automata in two-line form.

States are ``1..n`` (transient) plus the sink ``n+1``. An automaton on a
``k``-letter alphabet is stored as its bottom row: ``bottom[(s-1)*k + t-1]``
is the target of letter ``t`` from state ``s``. The top row is implicit and
the sink's self-loops are never stored.
"""

from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, NamedTuple

from .budget import check_budget, enum_budget
from .combinatorics import binomial, factorial

__all__ = [
    "TwoLineAutomaton",
    "CanonicalAutomaton",
    "Validation",
    "acyclic_count",
    "single_source_count",
    "unlabeled_count",
    "validate",
    "is_acyclic",
    "enumerate_acyclic",
    "enumerate_saf",
    "canonical_labeling",
    "canonicalize",
    "is_canonical",
    "enumerate_canonical",
    "relabel",
]


@dataclass(frozen=True, eq=False)
class TwoLineAutomaton:
    k: int
    n: int
    bottom: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1 or self.n < 1:
            raise ValueError(f"k and n must be positive, got k={self.k}, n={self.n}")
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.bottom) != self.k * self.n:
            raise ValueError(
                f"malformed automaton: bottom row has length {len(self.bottom)}, "
                f"expected k*n = {self.k * self.n}"
            )
        for pos, v in enumerate(self.bottom, start=1):
            if not isinstance(v, int) or not 1 <= v <= self.n + 1:
                raise ValueError(
                    f"malformed automaton: entry {v!r} at column {pos} is outside 1..{self.n + 1}"
                )

    def __eq__(self, other: object) -> bool:
        # canonical wrappers compare equal to the plain automaton they wrap
        if not isinstance(other, TwoLineAutomaton):
            return NotImplemented
        return (self.k, self.n, self.bottom) == (other.k, other.n, other.bottom)

    def __hash__(self) -> int:
        return hash((self.k, self.n, self.bottom))

    @property
    def sink(self) -> int:
        return self.n + 1

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(s for s in range(1, self.n + 1) for _ in range(self.k))

    def targets(self, state: int) -> tuple[int, ...]:
        return self.bottom[(state - 1) * self.k: state * self.k]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(source, letter, target)`` in two-line column order."""
        for pos, v in enumerate(self.bottom):
            yield pos // self.k + 1, pos % self.k + 1, v

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "bottom": list(self.bottom)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "TwoLineAutomaton":
        try:
            return cls(int(obj["k"]), int(obj["n"]), tuple(int(v) for v in obj["bottom"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed automaton JSON: {exc}") from None

    def __str__(self) -> str:
        return f"{' '.join(map(str, self.top))}\n{' '.join(map(str, self.bottom))}"


@dataclass(frozen=True, eq=False)
class CanonicalAutomaton(TwoLineAutomaton):
    """A valid SAF automaton whose interior vertices ``2..n`` have their
    last bottom-row occurrences in increasing order."""

    def __post_init__(self) -> None:
        super().__post_init__()
        result = validate(self)
        if not result.ok:
            raise ValueError(f"not a SAF automaton: {result.reason}")
        if not is_canonical(self):
            raise ValueError("last occurrences of interior vertices are not increasing")

    @classmethod
    def wrap(cls, a: TwoLineAutomaton) -> "CanonicalAutomaton":
        return cls(a.k, a.n, a.bottom)


# -- counting ---------------------------------------------------------------

_count_lock = threading.Lock()


@lru_cache(maxsize=None)
def _acyclic(k: int, n: int) -> int:
    if n == 0:
        return 1
    total = 0
    for j in range(n):
        term = binomial(n, j) * (j + 1) ** (k * (n - j)) * _acyclic(k, j)
        total += term if (n - j - 1) % 2 == 0 else -term
    return total


def acyclic_count(k: int, n: int) -> int:
    """Number ``a_k(n)`` of acyclic automata with labeled transient states
    ``1..n`` on a ``k``-letter alphabet (Liskovets' recurrence)."""
    if k < 1 or n < 0:
        raise ValueError(f"need k >= 1 and n >= 0, got k={k}, n={n}")
    with _count_lock:
        # fill bottom-up so the recursion never goes deep
        for j in range(n):
            _acyclic(k, j)
        return _acyclic(k, n)


def single_source_count(k: int, n: int) -> int:
    """Number ``b_k(n)`` of SAF automata with source 1 and sink ``n+1``."""
    if k < 1 or n < 1:
        raise ValueError(f"need k, n >= 1, got k={k}, n={n}")
    total = 0
    for i in range(1, n + 1):
        term = binomial(n - 1, i - 1) * (i + 1) ** (k * (n - i)) * acyclic_count(k, i)
        total += term if (n - i) % 2 == 0 else -term
    return total


def unlabeled_count(k: int, n: int) -> int:
    """Number of SAF automata up to relabeling of interior vertices."""
    b = single_source_count(k, n)
    q, r = divmod(b, factorial(n - 1))
    if r:
        raise ArithmeticError(f"(n-1)! does not divide b_{k}({n}) = {b}")
    return q


# -- validation -------------------------------------------------------------


class Validation(NamedTuple):
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _find_cycle(a: TwoLineAutomaton) -> list[int] | None:
    # iterative DFS on transient states; colour 1 = on stack, 2 = done
    colour = [0] * (a.n + 2)
    for root in range(1, a.n + 1):
        if colour[root]:
            continue
        stack = [(root, iter(a.targets(root)))]
        colour[root] = 1
        while stack:
            v, it = stack[-1]
            for w in it:
                if w > a.n:
                    continue
                if colour[w] == 1:
                    path = [s for s, _ in stack]
                    return path[path.index(w):] + [w]
                if colour[w] == 0:
                    colour[w] = 1
                    stack.append((w, iter(a.targets(w))))
                    break
            else:
                colour[v] = 2
                stack.pop()
    return None


def is_acyclic(a: TwoLineAutomaton) -> bool:
    """True if only the sink lies on cycles."""
    return _find_cycle(a) is None


def validate(a: TwoLineAutomaton, single_source: bool = True) -> Validation:
    """Check the semantic conditions on an automaton.

    Always checks acyclicity (self-loops included). With ``single_source``
    also checks that state 1 has no incoming edge and every interior vertex
    has at least one. Malformed rows are already rejected by the
    constructor with ``ValueError``.
    """
    for s, t, v in a.edges():
        if v == s:
            return Validation(False, f"self-loop on transient state {s} (letter {t})")
    cycle = _find_cycle(a)
    if cycle is not None:
        return Validation(False, "cycle among transient states: " + " -> ".join(map(str, cycle)))
    if single_source:
        indeg = [0] * (a.n + 2)
        for v in a.bottom:
            indeg[v] += 1
        if indeg[1]:
            return Validation(False, "state 1 has incoming edges, so it is not the source")
        for v in range(2, a.n + 1):
            if not indeg[v]:
                return Validation(False, f"interior state {v} has no incoming edge (second source)")
    return Validation(True)


# -- brute-force enumeration ------------------------------------------------


def enumerate_acyclic(k: int, n: int, budget: int | None = None) -> Iterator[TwoLineAutomaton]:
    """Every map ``[n] x [k] -> [n+1]`` whose transient digraph is acyclic.

    Deliberately unpruned: all ``(n+1)^(kn)`` rows are generated and filtered,
    so this is an independent check on ``acyclic_count``.
    """
    check_budget((n + 1) ** (k * n), enum_budget(budget), f"acyclic automata k={k} n={n}")
    for bottom in itertools.product(range(1, n + 2), repeat=k * n):
        a = TwoLineAutomaton(k, n, bottom)
        if validate(a, single_source=False):
            yield a


def _raw_saf(k: int, n: int, bottom: tuple[int, ...]) -> bool:
    # single-source and acyclic check on a bare row (sources/self-loops pruned)
    if not set(range(2, n + 1)) <= set(bottom):
        return False
    remaining = set(range(1, n + 1))
    while remaining:
        leaves = [s for s in remaining
                  if not any(v in remaining for v in bottom[(s - 1) * k: s * k])]
        if not leaves:
            return False
        remaining.difference_update(leaves)
    return True


def enumerate_saf(k: int, n: int, budget: int | None = None) -> Iterator[TwoLineAutomaton]:
    """Every SAF automaton in ``B_k(n)``, in lexicographic bottom-row order.

    Columns only range over targets that can ever be legal (not state 1,
    not the source state itself), which keeps the order lexicographic. The
    budget applies to the number of candidate rows this generates.
    """
    if k < 1 or n < 1:
        raise ValueError(f"need k, n >= 1, got k={k}, n={n}")
    choices = []
    for s in range(1, n + 1):
        allowed = tuple(v for v in range(2, n + 2) if v != s)
        choices.extend([allowed] * k)
    check_budget(math.prod(len(c) for c in choices), enum_budget(budget),
                 f"SAF automata k={k} n={n}")
    for bottom in itertools.product(*choices):
        if _raw_saf(k, n, bottom):
            yield TwoLineAutomaton(k, n, bottom)


# -- canonical form ---------------------------------------------------------


def canonical_labeling(a: TwoLineAutomaton) -> dict[int, int]:
    """Old label -> new label for the intrinsic marking of interior vertices.

    Starting from the source, repeatedly take the unmarked interior vertices
    all of whose incoming edges come from marked vertices, order that batch by
    each vertex's last incoming edge (by the source's mark, then by letter),
    and mark them in that order.
    """
    if not validate(a):
        raise ValueError(f"canonicalize needs a SAF automaton: {validate(a).reason}")
    preds: dict[int, list[tuple[int, int]]] = {v: [] for v in range(2, a.n + 1)}
    for s, t, v in a.edges():
        if v <= a.n:
            preds[v].append((s, t))
    mark = {1: 1}
    unmarked = set(range(2, a.n + 1))
    while unmarked:
        ready = []
        for v in unmarked:
            if all(s in mark for s, _ in preds[v]):
                last = max((mark[s], t) for s, t in preds[v])
                ready.append((last, v))
        if not ready:
            raise RuntimeError("marking stalled; the automaton passed validation but is not acyclic")
        for _, v in sorted(ready):
            mark[v] = len(mark) + 1
            unmarked.discard(v)
    mark[a.n + 1] = a.n + 1
    return mark


def relabel(a: TwoLineAutomaton, mapping: Mapping[int, int]) -> TwoLineAutomaton:
    """Apply a vertex relabeling (old -> new); rows are reordered so that
    new state ``s`` lists the edges of the old state mapped to ``s``."""
    inverse = {new: old for old, new in mapping.items()}
    bottom = []
    for s in range(1, a.n + 1):
        bottom.extend(mapping[v] for v in a.targets(inverse[s]))
    return TwoLineAutomaton(a.k, a.n, tuple(bottom))


def canonicalize(a: TwoLineAutomaton) -> CanonicalAutomaton:
    """The unique relabeling of ``a`` with last occurrences increasing.

    >>> b = TwoLineAutomaton(3, 5, (2,4,6, 6,6,6, 6,6,6, 3,5,3, 2,2,6))
    >>> canonicalize(b).bottom
    (5, 2, 6, 4, 3, 4, 5, 5, 6, 6, 6, 6, 6, 6, 6)
    """
    return CanonicalAutomaton.wrap(relabel(a, canonical_labeling(a)))


def is_canonical(a: TwoLineAutomaton) -> bool:
    last = {}
    for pos, v in enumerate(a.bottom):
        last[v] = pos
    prev = -1
    for v in range(2, a.n + 1):
        if v not in last or last[v] <= prev:
            return False
        prev = last[v]
    return True


def enumerate_canonical(k: int, n: int, budget: int | None = None) -> Iterator[CanonicalAutomaton]:
    for a in enumerate_saf(k, n, budget):
        if is_canonical(a):
            yield CanonicalAutomaton.wrap(a)
