"""Weight bookkeeping and weight-space enumeration.

Every monomial in the 12 cell variables of a 2x2x3 array carries a weight:
the vector of consecutive slice-sum differences of its exponent array, one
difference per adjacent pair of slices in each of the three modes.  This
script shows how weights are read off single variables, how a (degree,
weight) pair forces the slice sums, and how the weight-space bases are
enumerated and counted.
"""

from hyperdet.polynomials import exps_from_digits, exps_to_digits
from hyperdet.weights import (
    count_dim,
    enumerate_basis,
    mode_slice_sums,
    slice_sums_for,
    weight_of,
    zero_weight,
)

SHAPE = (2, 2, 3)

print("== variable weights ==")
for digits, label in [
    ("100000000000", "x111"),
    ("000100000000", "x221"),
    ("000010000000", "x112"),
    ("000000000001", "x223"),
]:
    exps = exps_from_digits(digits)
    print(f"  weight({label}) = {weight_of(SHAPE, exps)}")

print()
print("== slice sums forced by (degree, weight) ==")
for n, weight in [(6, (0, 0, 0, 0)), (6, (2, 0, 0, 0)), (4, (0, 0, 0, 0))]:
    sums = slice_sums_for(SHAPE, n, weight)
    verdict = sums if sums is not None else "infeasible"
    print(f"  degree {n}, weight {weight} -> {verdict}")

print()
print("== the degree-6 weight-zero basis ==")
basis = enumerate_basis(SHAPE, 6, zero_weight(SHAPE))
print(f"  {len(basis)} monomials, descending lexicographic order")
print(f"  first: {exps_to_digits(basis.monomials[0])}")
print(f"  last:  {exps_to_digits(basis.monomials[-1])}")
sums = mode_slice_sums(SHAPE, basis.monomials[0])
print(f"  slice sums of the first monomial: {sums}")

print()
print("== counting without listing ==")
for n in (6, 12, 24, 96):
    counted = count_dim(SHAPE, n, zero_weight(SHAPE))
    print(f"  dim of the weight-zero space at degree {n:3d}: {counted}")
listed = len(enumerate_basis(SHAPE, 12, zero_weight(SHAPE)))
print(f"  cross-check at degree 12: enumeration also finds {listed}")
