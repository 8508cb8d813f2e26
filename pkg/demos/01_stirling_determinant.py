"""The Stirling cycle matrix A_k(n) and its determinant.

Run with ``python demos/01_stirling_determinant.py``.
"""

from stirling_saf import build_matrix, determinant, determinant_via_permutation_sum, stirling_cycle

# Rows 0..6 of the Stirling cycle triangle.
for i in range(7):
    print(" ".join(f"{stirling_cycle(i, j):4d}" for j in range(i + 1)))
print()

# A_2(5) holds two shifted copies of each of triangle rows 2..6, with a 1
# sitting just left of the diagonal in every row after the first.
m = build_matrix(2, 5)
for row in m.rows:
    print(" ".join(f"{x:3d}" for x in row))
print()

# The matrix is Hessenberg with unit infra-diagonal, so its determinant
# can be computed without division, one leading minor at a time.
print("det A_2(5) =", determinant(m))

# For k = 1 the determinant is also a signed sum over padded compositions.
for n in range(1, 8):
    m1 = build_matrix(1, n)
    print(f"n={n}: det A_1(n) = {determinant(m1):>8}   permutation sum = {determinant_via_permutation_sum(m1):>8}")

# Exact integers throughout; large cases are cheap.
print("det A_3(15) =", determinant(build_matrix(3, 15)))
