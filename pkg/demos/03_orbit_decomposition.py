"""Writing the invariant as a signed combination of five monomial orbits.

The group S2 x S2 x S3 permutes rows, columns and frontal slices of a
2x2x3 array; each element acts on monomials with a sign, the product of
the row and column permutation parities.  Summing sign * (permuted
monomial) over the 24 group elements gives the signed orbit of a seed.
Five seeds, with rational weights, recover the invariant exactly.
"""

from hyperdet.operators import find_invariant
from hyperdet.orbits import (
    DECOMPOSITION_SEEDS,
    group_elements,
    seed_exponents,
    signed_orbit,
    theorem_decomposition,
)
from hyperdet.polynomials import exps_from_digits, term_to_letters

elements = group_elements()
print(f"group size: {len(elements)}")
signs = [g.sign for g in elements]
print(f"sign split: {signs.count(1)} even, {signs.count(-1)} odd")

print()
print("the five seeds and their signed orbits:")
total_support = 0
for name, digits, factor in DECOMPOSITION_SEEDS:
    orbit = signed_orbit(seed_exponents(name))
    magnitude = max(abs(c) for _, c in orbit)
    letters = term_to_letters(seed_exponents(name), 1)[2:]
    print(
        f"  {name} = {letters:14s} ({digits}): "
        f"{len(orbit):2d} monomials, coefficients +-{magnitude}, "
        f"weight {factor}"
    )
    total_support += len(orbit)
print(f"total support: {total_support} = 12 + 24 + 12 + 12 + 6")

print()
combo = theorem_decomposition()
derived = find_invariant((2, 2, 3), 6)
print(
    "1/2 O(M1) - O(M2) + 1/2 O(M3) + 1/2 O(M4) - 1/2 O(M5) == D: "
    f"{combo == derived}"
)

print()
print("orbits are not always this large; a seed fixed by odd elements")
print("cancels entirely:")
degenerate = signed_orbit(exps_from_digits("101000000000"))
print(f"  signed orbit of x111*x112 is zero: {degenerate.is_zero}")

print()
print("sample orbit, M5 in letter form:")
for line in sorted(term_to_letters(m, c) for m, c in signed_orbit(seed_exponents("M5"))):
    print(f"  {line}")
