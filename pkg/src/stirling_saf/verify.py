"""Cross-verification harness: each suite checks identities between
independently computed quantities over a range of ``(k, n)``.

Parameter conventions per suite:

* ``determinant`` and ``bijection``: ``k`` is the matrix/path parameter,
  automata use ``k + 1`` letters.
* ``counts`` and ``orbits``: ``k`` is the automaton alphabet size.
* ``involution``: only ``k = 1`` exists; ``k`` is ignored.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .automata import (
    acyclic_count,
    canonicalize,
    enumerate_acyclic,
    enumerate_canonical,
    enumerate_saf,
    is_canonical,
    relabel,
    single_source_count,
    TwoLineAutomaton,
    unlabeled_count,
)
from .bijection import automaton_to_path, path_to_automaton
from .combinatorics import factorial
from .involution import (
    det_via_involution,
    enumerate_lists,
    fixed_list,
    fixed_to_marked_code,
    involution_step,
    is_fixed,
    weight,
)
from .matrix import build_matrix, determinant, determinant_via_permutation_sum
from .paths import count_paths, enumerate_marked_codes, enumerate_paths, marked_count

__all__ = ["Check", "VerificationReport", "SUITES", "run"]

# det A_1(n) = |C_2(n)|, OEIS A082161
KNOWN_A1 = (1, 3, 16, 127, 1363)


@dataclass
class Check:
    name: str
    params: dict
    lhs: int
    rhs: int
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if self.lhs == self.rhs else "fail"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "status": self.status,
        }


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(c.status == "pass" for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    def to_json(self, timings: bool = False) -> dict:
        checks = []
        for c in self.checks:
            obj = c.to_json()
            if timings:
                obj["elapsed"] = round(c.elapsed, 6)
            checks.append(obj)
        return {"checks": checks, "passed": self.passed, "failed": self.failed}


Thunk = Callable[[], tuple[int, int]]


def _timed(name: str, params: dict, fn: Thunk) -> Check:
    t0 = time.perf_counter()
    lhs, rhs = fn()
    return Check(name, params, lhs, rhs, time.perf_counter() - t0)


def _grid(max_k: int, max_n: int) -> Iterable[tuple[int, int]]:
    return itertools.product(range(1, max_k + 1), range(1, max_n + 1))


def _determinant_suite(max_k, max_n, budget, lbudget) -> Iterator[tuple[str, dict, Thunk]]:
    for k, n in _grid(max_k, max_n):
        p = {"k": k, "n": n}
        det = lambda k=k, n=n: determinant(build_matrix(k, n))
        yield "det = marked_count", p, lambda det=det, k=k, n=n: (det(), marked_count(k, n))
        yield "det = unlabeled_count(k+1)", p, lambda det=det, k=k, n=n: (det(), unlabeled_count(k + 1, n))
        if k == 1:
            yield "det = permutation sum", p, lambda det=det, n=n: (
                det(), determinant_via_permutation_sum(build_matrix(1, n)))
            if n <= len(KNOWN_A1):
                yield "det = A082161", p, lambda det=det, n=n: (det(), KNOWN_A1[n - 1])


def _counts_suite(max_k, max_n, budget, lbudget) -> Iterator[tuple[str, dict, Thunk]]:
    for k, n in _grid(max_k, max_n):
        p = {"k": k, "n": n}
        yield "|SAF enumeration| = single_source_count", p, lambda k=k, n=n: (
            sum(1 for _ in enumerate_saf(k, n, budget)), single_source_count(k, n))
        yield "|acyclic enumeration| = acyclic_count", p, lambda k=k, n=n: (
            sum(1 for _ in enumerate_acyclic(k, n, budget)), acyclic_count(k, n))
        yield "|canonical enumeration| = unlabeled_count", p, lambda k=k, n=n: (
            sum(1 for _ in enumerate_canonical(k, n, budget)), unlabeled_count(k, n))
        yield "|marked codes| = marked_count", p, lambda k=k, n=n: (
            sum(1 for _ in enumerate_marked_codes(k, n, budget)), marked_count(k, n))
        for q in range(n + 1):
            yield "|paths| = ballot formula", {"k": k, "n": n, "p": q}, lambda k=k, n=n, q=q: (
                sum(1 for _ in enumerate_paths(k, n, q, budget)), count_paths(k, n, q))


def _bijection_suite(max_k, max_n, budget, lbudget) -> Iterator[tuple[str, dict, Thunk]]:
    for k, n in _grid(max_k, max_n):
        p = {"k": k, "n": n}

        def forward(k=k, n=n):
            codes = list(enumerate_marked_codes(k, n, budget))
            return sum(automaton_to_path(path_to_automaton(c)) == c for c in codes), len(codes)

        def backward(k=k, n=n):
            autos = list(enumerate_canonical(k + 1, n, budget))
            return sum(path_to_automaton(automaton_to_path(a)) == a for a in autos), len(autos)

        def image(k=k, n=n):
            img = {path_to_automaton(c).bottom for c in enumerate_marked_codes(k, n, budget)}
            target = {a.bottom for a in enumerate_canonical(k + 1, n, budget)}
            return len(img & target), len(img | target)

        yield "path -> automaton -> path round trips", p, forward
        yield "automaton -> path -> automaton round trips", p, backward
        yield "image = canonical automata", p, image


def _involution_suite(max_k, max_n, budget, lbudget) -> Iterator[tuple[str, dict, Thunk]]:
    for n in range(1, max_n + 1):
        p = {"n": n}

        def involutive(n=n):
            moved = [x for x in enumerate_lists(n, lbudget) if not is_fixed(x)]
            good = 0
            for x in moved:
                y = involution_step(x)
                good += involution_step(y) == x and weight(y) == -weight(x)
            return good, len(moved)

        def fixed_codes(n=n):
            got = {fixed_to_marked_code(fixed_list(x)) for x in enumerate_lists(n, lbudget) if is_fixed(x)}
            ref = set(enumerate_marked_codes(1, n, budget))
            return len(got & ref), len(got | ref)

        det = lambda n=n: determinant(build_matrix(1, n))
        yield "weight-reversing involution on moved lists", p, involutive
        yield "sum of weights = det", p, lambda n=n, det=det: (
            sum(weight(x) for x in enumerate_lists(n, lbudget)), det())
        yield "fixed points = det", p, lambda n=n, det=det: (det_via_involution(n, lbudget), det())
        yield "fixed points = marked codes", p, fixed_codes


def _orbit_suite(max_k, max_n, budget, lbudget) -> Iterator[tuple[str, dict, Thunk]]:
    for k, n in _grid(max_k, max_n):
        p = {"k": k, "n": n}

        def orbits(k=k, n=n):
            autos = list(enumerate_saf(k, n, budget))
            seen: set[tuple[int, ...]] = set()
            good = classes = 0
            for a in autos:
                if a.bottom in seen:
                    continue
                classes += 1
                orbit = set()
                for perm in itertools.permutations(range(2, n + 1)):
                    mapping = {1: 1, n + 1: n + 1, **dict(zip(range(2, n + 1), perm))}
                    orbit.add(relabel(a, mapping).bottom)
                seen |= orbit
                canon = [b for b in orbit if is_canonical(TwoLineAutomaton(k, n, b))]
                c = canonicalize(a)
                good += (
                    len(orbit) == factorial(n - 1)
                    and canon == [c.bottom]
                    and canonicalize(c) == c
                )
            return good, classes

        yield "orbits of size (n-1)! with one canonical member", p, orbits


SUITES = {
    "determinant": _determinant_suite,
    "counts": _counts_suite,
    "bijection": _bijection_suite,
    "involution": _involution_suite,
    "orbits": _orbit_suite,
}


def run(max_k: int, max_n: int, suites: Iterable[str] | None = None,
        budget: int | None = None, lbudget: int | None = None) -> VerificationReport:
    """Run the selected suites in a fixed order. Budget errors propagate."""
    chosen = list(SUITES) if suites is None else list(suites)
    unknown = set(chosen) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    if max_k < 1 or max_n < 1:
        raise ValueError("max_k and max_n must be positive")
    report = VerificationReport()
    for name in SUITES:
        if name not in chosen:
            continue
        for check_name, params, fn in SUITES[name](max_k, max_n, budget, lbudget):
            report.checks.append(_timed(f"{name}: {check_name}", params, fn))
    return report
