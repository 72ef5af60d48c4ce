"""Evaluating the invariant and watching it (not) move.

Evaluation is exact rational arithmetic.  Multiplying a mode by a
determinant-1 integer matrix leaves the value untouched; a diagonal
matrix scales it by a predictable power of the determinant, read off the
per-slice degrees of the polynomial.
"""

from fractions import Fraction
from random import Random

from hyperdet.arrays import (
    HyperArray,
    ModeMatrix,
    covariance_exponents,
    evaluate,
    invariance_check,
    mode_transform,
    random_unimodular,
)
from hyperdet.operators import find_invariant

D = find_invariant((2, 2, 3), 6)
rng = Random(20260815)

arr = HyperArray.random_int((2, 2, 3), rng)
print("frontal slices of a random integer array:")
for k, rows in enumerate(arr.slices(), start=1):
    print(f"  slice {k}: {[[int(v) for v in row] for row in rows]}")
value = evaluate(D, arr)
print(f"D(X) = {value}")

print()
print("apply a random determinant-1 integer matrix to each mode in turn:")
moved = arr
for mode, size in enumerate((2, 2, 3), start=1):
    g = ModeMatrix(mode, random_unimodular(size, rng))
    moved = mode_transform(moved, g)
    print(f"  after mode {mode}: D = {evaluate(D, moved)}")

report = invariance_check(D, trials=25, seed=7)
print(f"{report.passes}/{len(report.trials)} random unimodular trials exact")

print()
exps = covariance_exponents(D)
print(f"slice degrees of D by mode: {exps}")
print("so a frontal diagonal scales D by det^2, the others by det^3:")
for mode, diag in [(3, (2, 3, 5)), (1, (2, 3)), (2, (-2, 3))]:
    size = len(diag)
    g = ModeMatrix(
        mode,
        tuple(
            tuple(Fraction(diag[r]) if r == c else Fraction(0) for c in range(size))
            for r in range(size)
        ),
    )
    got = evaluate(D, mode_transform(arr, g))
    print(f"  mode {mode}, diag{diag}: D scales by {got / value}")

print()
print("a fractional array works just as well:")
half = HyperArray.from_slices(
    (2, 2, 3),
    [
        [[Fraction(1, 2), 0], [0, 0]],
        [[0, 1], [1, 0]],
        [[0, 0], [0, 1]],
    ],
)
print(f"D on the a=1/2, f=g=l=1 array: {evaluate(D, half)}")
