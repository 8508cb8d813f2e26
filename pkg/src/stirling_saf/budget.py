"""Enumeration budgets shared by the brute-force enumerators."""

from __future__ import annotations

import os

__all__ = ["BudgetExceeded", "DEFAULT_ENUM_BUDGET", "DEFAULT_LIST_BUDGET",
           "enum_budget", "list_budget", "check_budget"]

DEFAULT_ENUM_BUDGET = 10**8
DEFAULT_LIST_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """An enumeration would visit more candidates than its budget allows."""


def _from_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    return value


def enum_budget(override: int | None = None) -> int:
    """Candidate limit for automaton and path enumerations.

    An explicit ``override`` wins over ``SA_ENUM_BUDGET``.
    """
    if override is not None:
        return override
    return _from_env("SA_ENUM_BUDGET", DEFAULT_ENUM_BUDGET)


def list_budget(override: int | None = None) -> int:
    """Size limit for permutation-list enumeration (``SA_LIST_BUDGET``)."""
    if override is not None:
        return override
    return _from_env("SA_LIST_BUDGET", DEFAULT_LIST_BUDGET)


def check_budget(needed: int, budget: int, what: str) -> None:
    if needed > budget:
        raise BudgetExceeded(f"{what}: {needed} candidates exceed budget {budget}")
