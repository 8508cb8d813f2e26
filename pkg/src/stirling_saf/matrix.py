"""The Stirling cycle Hessenberg matrix ``A_k(n)`` and its determinant."""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import padded_compositions, stirling_cycle

__all__ = ["HessenbergMatrix", "build_matrix", "determinant",
           "determinant_via_permutation_sum"]


@dataclass(frozen=True)
class HessenbergMatrix:
    """Dense ``kn x kn`` integer matrix with 1-based ``entry`` access."""

    k: int
    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return self.k * self.n

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _entry(k: int, i: int, j: int) -> int:
    block = (i - 1) // k
    return stirling_cycle(block + 2, block + 1 + i - j)


def build_matrix(k: int, n: int) -> HessenbergMatrix:
    """Build ``A_k(n)``: ``k`` shifted copies of each of rows ``2..n+1`` of
    the Stirling cycle triangle, with 1s on the infra-diagonal.

    >>> build_matrix(1, 2).rows
    ((1, 0), (1, 3))
    """
    if k < 1 or n < 1:
        raise ValueError(f"k and n must be positive, got k={k}, n={n}")
    dim = k * n
    rows = tuple(
        tuple(_entry(k, i, j) for j in range(1, dim + 1)) for i in range(1, dim + 1)
    )
    return HessenbergMatrix(k, n, rows)


def determinant(m: HessenbergMatrix) -> int:
    """Exact determinant by the leading-minor recurrence

        d_0 = 1,  d_c = sum_{i<=c} (-1)^(c-i) * m[i, c] * d_{i-1},

    which expands each minor along its last column. It is only valid
    because every infra-diagonal entry is 1; no division is needed.
    """
    dim = m.dim
    for i in range(2, dim + 1):
        if m.entry(i, i - 1) != 1:
            raise ValueError("infra-diagonal entries must all be 1")
    d = [1]
    for c in range(1, dim + 1):
        total = 0
        for i in range(1, c + 1):
            a = m.entry(i, c)
            if a:
                term = a * d[i - 1]
                total += -term if (c - i) % 2 else term
        d.append(total)
    return d[dim]


def determinant_via_permutation_sum(m: HessenbergMatrix) -> int:
    """``det A_1(n)`` as the signed sum over restricted padded compositions.

    Each composition ``c`` is the code of the permutation
    ``sigma(i) = c_i + i - 1``; its sign is ``(-1)^(number of zeros)``.
    """
    if m.k != 1:
        raise ValueError(f"the permutation-sum evaluation is stated for k=1 only, got k={m.k}")
    total = 0
    for code in padded_compositions(m.n, restricted=True):
        term = 1
        for i, c in enumerate(code, start=1):
            term *= m.entry(i, i - 1 + c)
            if not term:
                break
        zeros = code.count(0)
        total += -term if zeros % 2 else term
    return total
