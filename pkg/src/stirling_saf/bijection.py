"""Bijection from column-marked ``(k, n, n)``-paths to canonical SAF automata
on a ``(k+1)``-letter alphabet, and its inverse."""

from __future__ import annotations

from dataclasses import dataclass

from .automata import CanonicalAutomaton, TwoLineAutomaton, is_canonical
from .paths import LatticePath, MarkedPathCode, code_to_path, path_to_code

__all__ = ["BijectionTrace", "trace_path_to_automaton", "path_to_automaton",
           "automaton_to_path", "circled_positions"]


@dataclass(frozen=True)
class BijectionTrace:
    """Intermediate values of one forward run.

    ``square_counts`` lists, last column first, the number of squares from
    each mark up to the path (inclusive).
    """

    circled_positions: tuple[int, ...]
    square_counts: tuple[int, ...]
    blank_fill: tuple[int, ...]
    automaton: CanonicalAutomaton

    def to_json(self) -> dict:
        return {
            "circled_positions": list(self.circled_positions),
            "square_counts": list(self.square_counts),
            "blank_fill": list(self.blank_fill),
        }


def circled_positions(path: LatticePath) -> tuple[int, ...]:
    """For the second-last, third-last, ... N steps, the number of steps
    that follow each one."""
    total = len(path.steps)
    after = [total - idx - 1 for idx, s in enumerate(path.steps) if s == "N"]
    # after[-1] == 0 is the final N step
    return tuple(reversed(after[:-1]))


def trace_path_to_automaton(code: MarkedPathCode) -> BijectionTrace:
    k, n = code.k, code.n
    width = (k + 1) * n
    circled = circled_positions(code_to_path(code.code))
    counts = tuple(b - a + 1 for a, b in reversed(code.pairs))

    bottom = [0] * (width + 1)  # 1-based
    for j, pos in enumerate(circled, start=1):
        bottom[pos] = j + 1
    circled_set = set(circled)
    base = 1
    fill = iter(counts)
    blanks = [pos for pos in range(1, width + 1) if pos not in circled_set]
    for pos in range(1, width + 1):
        if pos in circled_set:
            base = bottom[pos]
        elif pos == blanks[-1]:
            bottom[pos] = n + 1
        else:
            value = base + next(fill)
            if value > n + 1:
                raise ValueError(f"fill value {value} at column {pos} exceeds the sink label {n + 1}")
            bottom[pos] = value
    a = TwoLineAutomaton(k + 1, n, tuple(bottom[1:]))
    if not is_canonical(a):
        raise ValueError(f"image {a.bottom} is not canonical")
    return BijectionTrace(circled, counts, a.bottom, CanonicalAutomaton.wrap(a))


def path_to_automaton(code: MarkedPathCode) -> CanonicalAutomaton:
    """Map a marked path code to its canonical automaton.

    >>> c = MarkedPathCode(2, 4, ((1,1),(1,1),(1,2),(2,2),(1,2),(3,3),(1,3),(2,3)))
    >>> path_to_automaton(c).bottom
    (2, 4, 5, 3, 3, 5, 4, 5, 4, 5, 5, 5)
    """
    return trace_path_to_automaton(code).automaton


def automaton_to_path(a: TwoLineAutomaton) -> MarkedPathCode:
    """Inverse of ``path_to_automaton``; ``a`` must be canonical and use at
    least two letters."""
    if a.k < 2:
        raise ValueError("the inverse map needs an alphabet of at least 2 letters")
    if not isinstance(a, CanonicalAutomaton):
        if not is_canonical(a):
            raise ValueError("automaton is not canonical (last occurrences not increasing)")
        a = CanonicalAutomaton.wrap(a)
    k, n = a.k - 1, a.n
    width = a.k * n
    bottom = (0,) + a.bottom

    last = {}
    for pos in range(1, width + 1):
        last[bottom[pos]] = pos
    circled = tuple(last[v] for v in range(2, n + 1))
    if bottom[width] != n + 1:
        raise ValueError(f"last column must hold the sink {n + 1}, got {bottom[width]}")

    n_positions = {width - i for i in circled} | {width}
    steps = "".join("N" if s in n_positions else "E" for s in range(1, width + 1))
    path = LatticePath(k, n, n, steps)
    heights = path_to_code(path).heights

    circled_set = set(circled)
    counts = []
    base = 1
    for pos in range(1, width):
        if pos in circled_set:
            base = bottom[pos]
        else:
            counts.append(bottom[pos] - base)
    # counts[t] (0-based) belongs to column kn - t
    pairs = []
    for col, b in enumerate(heights, start=1):
        count = counts[k * n - col]
        if not 1 <= count <= b:
            raise ValueError(f"square count {count} for column {col} is outside 1..{b}")
        pairs.append((b - count + 1, b))
    return MarkedPathCode(k, n, tuple(pairs))
