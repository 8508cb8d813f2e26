"""Evaluating det A_1(n) by cancelling signed lists of permutations."""

from collections import Counter

from stirling_saf.involution import (
    PermList,
    enumerate_lists,
    fixed_list,
    fixed_to_marked_code,
    involution_step,
    is_fixed,
    stop_position,
    weight,
)

x = PermList.parse(["12", "13", "23", "14-253", "e", "e"])
y = involution_step(x)
print(x.words(), weight(x), stop_position(x))
print(y.words(), weight(y), stop_position(y))
print(involution_step(y) == x)

for n in range(1, 6):
    lists = list(enumerate_lists(n))
    tally = Counter(weight(pl) for pl in lists)
    fixed = [pl for pl in lists if is_fixed(pl)]
    print(f"n={n}: |L_n|={len(lists):5d}  +1:{tally[1]:5d}  -1:{tally[-1]:5d}  "
          f"sum={sum(tally.elements()):5d}  fixed={len(fixed)}")

# Survivors are lists of transpositions (a_i b_i) with b weakly increasing;
# shifting b down by one gives the codes of marked paths.
for pl in enumerate_lists(3):
    if is_fixed(pl):
        print(pl.words(), "->", fixed_to_marked_code(fixed_list(pl)).pairs)
