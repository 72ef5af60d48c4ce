"""Deriving the degree-6 invariant of 2x2x3 arrays from scratch.

An invariant of the slice-wise special linear group actions is a
weight-zero polynomial killed by every raising operator.  So: enumerate
the 80 weight-zero monomials of degree 6, stack the four raising-operator
matrices into a 246x80 integer matrix, and compute its exact nullspace.
The kernel is one-dimensional and its primitive vector has 66 nonzero
entries, all +-1 or +-2.
"""

from hyperdet.operators import (
    apply_raising,
    assemble_matrix,
    exact_kernel,
    find_invariant,
    raising_ops,
)
from hyperdet.polynomials import to_letter_text

SHAPE = (2, 2, 3)

matrix = assemble_matrix(SHAPE, 6)
print(f"domain: {matrix.ncols} weight-zero monomials of degree 6")
print("codomain blocks:")
for block in matrix.blocks:
    print(
        f"  {block.op}: weight {block.codomain.weight}, "
        f"dimension {len(block.codomain)}, rows {block.row_offset}.."
        f"{block.row_offset + len(block.codomain) - 1}"
    )
print(f"stacked matrix: {matrix.nrows} x {matrix.ncols}")

kernel = exact_kernel(matrix)
print(f"exact rank {kernel.rank}, nullity {kernel.nullity}")

poly = find_invariant(SHAPE, 6)
print(f"kernel polynomial has {len(poly)} terms")
coeffs = sorted({c for _, c in poly})
print(f"distinct coefficients: {coeffs}")

print()
print("first six terms in letter form (a..l name the twelve cells):")
for line in to_letter_text(poly).splitlines()[:6]:
    print(f"  {line}")

print()
print("annihilation check, applied term by term without the matrix:")
for op in raising_ops(SHAPE):
    image = apply_raising(op, poly)
    print(f"  {op}(D) == 0: {image.is_zero}")

print()
print("the same pipeline at shape (2,2,2), degree 4 gives the classical")
cayley = find_invariant((2, 2, 2), 4)
print(f"2x2x2 hyperdeterminant with {len(cayley)} terms")
