"""Exact evaluation of polynomials on concrete arrays and mode transforms.

Arrays hold exact rational entries in the same flat cell order as monomial
exponent vectors, so evaluation is a direct zip of the two.  Mode transforms
multiply one mode by a square rational matrix; products of integer shears
give the determinant-1 transforms used by the randomized invariance checks,
which therefore compare exact rationals and never use a tolerance.

Array JSON lists entries slice by slice to mirror how such arrays are
written on paper:

    {"shape":[2,2,3],"slices":[[[x111,x121],[x211,x221]], ...]}

with entries as integers or "p/q" strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .polynomials import IntPolynomial, Shape, cell_count, check_shape, flat_index
from .weights import mode_slice_sums


class ShapeMismatchError(ValueError):
    """Operands of an evaluation or transform have incompatible shapes."""


def _exact(value) -> Fraction:
    """Coerce an entry to an exact rational; floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"entry {value!r} is not an exact rational")
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ValueError(f"entry {value!r} is not an exact rational") from exc


@dataclass(frozen=True)
class HyperArray:
    """Immutable 3-way array of exact rationals, flat frontal-slice storage."""

    shape: Shape
    flat: tuple[Fraction, ...]

    def __post_init__(self):
        shape = check_shape(self.shape)
        flat = tuple(_exact(v) for v in self.flat)
        if len(flat) != cell_count(shape):
            raise ValueError(
                f"shape {shape} needs {cell_count(shape)} entries, got {len(flat)}"
            )
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "flat", flat)

    @classmethod
    def zeros(cls, shape) -> HyperArray:
        shape = check_shape(shape)
        return cls(shape, (Fraction(0),) * cell_count(shape))

    @classmethod
    def from_slices(cls, shape, slices) -> HyperArray:
        """Build from nested lists: slices[k-1][i-1][j-1]."""
        shape = check_shape(shape)
        a, b, c = shape
        if len(slices) != c or any(
            len(sl) != a or any(len(row) != b for row in sl) for sl in slices
        ):
            raise ValueError(f"slice nesting does not match shape {shape}")
        flat = [
            slices[k][i][j] for k in range(c) for i in range(a) for j in range(b)
        ]
        return cls(shape, tuple(_exact(v) for v in flat))

    @classmethod
    def random_int(cls, shape, rng: Random, lo: int = -5, hi: int = 5) -> HyperArray:
        shape = check_shape(shape)
        return cls(
            shape,
            tuple(Fraction(rng.randint(lo, hi)) for _ in range(cell_count(shape))),
        )

    def item(self, i: int, j: int, k: int) -> Fraction:
        """Entry at (i, j, k), 1-based indices."""
        return self.flat[flat_index(self.shape, i, j, k)]

    def slices(self) -> list[list[list[Fraction]]]:
        a, b, c = self.shape
        return [
            [[self.item(i, j, k) for j in range(1, b + 1)] for i in range(1, a + 1)]
            for k in range(1, c + 1)
        ]


def evaluate(p: IntPolynomial, arr: HyperArray) -> Fraction:
    """Exact value of the polynomial at the array."""
    if p.shape != arr.shape:
        raise ShapeMismatchError(
            f"polynomial shape {p.shape} vs array shape {arr.shape}"
        )
    total = Fraction(0)
    for exps, coeff in p:
        v = Fraction(coeff)
        for x, e in zip(arr.flat, exps):
            if e:
                v *= x**e
        total += v
    return total


Matrix = tuple[tuple[Fraction, ...], ...]


def _check_square(matrix) -> Matrix:
    rows = tuple(tuple(_exact(v) for v in row) for row in matrix)
    if not rows or any(len(row) != len(rows) for row in rows):
        raise ValueError("matrix must be square and non-empty")
    return rows


@dataclass(frozen=True)
class ModeMatrix:
    """A square rational matrix acting on one mode of an array."""

    mode: int
    entries: Matrix

    def __post_init__(self):
        if self.mode not in (1, 2, 3):
            raise ValueError(f"mode must be 1..3, got {self.mode}")
        object.__setattr__(self, "entries", _check_square(self.entries))

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, mode: int, size: int) -> ModeMatrix:
        return cls(
            mode,
            tuple(
                tuple(Fraction(int(r == c)) for c in range(size))
                for r in range(size)
            ),
        )


def mode_transform(arr: HyperArray, g: ModeMatrix) -> HyperArray:
    """Multiply the array along g.mode: new slice s = sum_t g[s][t] * slice t."""
    shape = arr.shape
    d = shape[g.mode - 1]
    if g.size != d:
        raise ShapeMismatchError(
            f"mode {g.mode} of shape {shape} has size {d}, matrix is {g.size}x{g.size}"
        )
    a, b, c = shape
    new = [Fraction(0)] * len(arr.flat)
    for k in range(1, c + 1):
        for i in range(1, a + 1):
            for j in range(1, b + 1):
                idx = [i, j, k]
                s = idx[g.mode - 1]
                total = Fraction(0)
                for t in range(1, d + 1):
                    idx[g.mode - 1] = t
                    total += g.entries[s - 1][t - 1] * arr.item(*idx)
                new[flat_index(shape, i, j, k)] = total
    return HyperArray(shape, tuple(new))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[r][m] * b[m][c] for m in range(n)) for c in range(n))
        for r in range(n)
    )


def random_unimodular(size: int, rng: Random) -> Matrix:
    """Product of 3..6 integer shears: determinant 1, nontrivial mixing.

    Each shear is the identity plus a nonzero c in [-3,3] at one
    off-diagonal position.
    """
    if size < 2:
        return ModeMatrix.identity(1, size).entries
    mat = ModeMatrix.identity(1, size).entries
    for _ in range(rng.randint(3, 6)):
        r = rng.randrange(size)
        c = rng.randrange(size - 1)
        if c >= r:
            c += 1
        coeff = rng.choice((-3, -2, -1, 1, 2, 3))
        shear = [
            [Fraction(int(x == y)) for y in range(size)] for x in range(size)
        ]
        shear[r][c] = Fraction(coeff)
        mat = matmul(tuple(tuple(row) for row in shear), mat)
    return mat


@dataclass(frozen=True)
class TrialOutcome:
    index: int
    ok: bool
    original: Fraction
    transformed: Fraction


@dataclass(frozen=True)
class InvarianceReport:
    seed: int
    trials: tuple[TrialOutcome, ...]

    @property
    def passes(self) -> int:
        return sum(1 for t in self.trials if t.ok)

    @property
    def ok(self) -> bool:
        return all(t.ok for t in self.trials)


def invariance_check(p: IntPolynomial, trials: int, seed: int) -> InvarianceReport:
    """Evaluate p before and after random determinant-1 transforms.

    Each trial draws a random integer array (entries in [-5, 5]) and one
    random unimodular matrix per mode, applies all three, and compares the
    two exact values.  Failures are recorded, not raised.
    """
    rng = Random(seed)
    outcomes = []
    for idx in range(trials):
        arr = HyperArray.random_int(p.shape, rng)
        moved = arr
        for mode in (1, 2, 3):
            g = ModeMatrix(mode, random_unimodular(p.shape[mode - 1], rng))
            moved = mode_transform(moved, g)
        before = evaluate(p, arr)
        after = evaluate(p, moved)
        outcomes.append(TrialOutcome(idx, before == after, before, after))
    return InvarianceReport(seed=seed, trials=tuple(outcomes))


def covariance_exponents(p: IntPolynomial) -> tuple[tuple[int, ...], ...]:
    """Common slice sums of every term, grouped by mode.

    For a weight-homogeneous polynomial parallel slices of the exponent
    array have fixed entry sums; this returns them ((3,3),(3,3),(2,2,2) for
    the degree-6 invariant).  Raises if the terms disagree, which means p
    mixes weights.
    """
    first = None
    for exps, _ in p:
        sums = mode_slice_sums(p.shape, exps)
        if first is None:
            first = sums
        elif sums != first:
            raise ValueError("terms have differing slice sums; not weight-homogeneous")
    if first is None:
        return tuple((0,) * d for d in p.shape)
    return first


# ---------------------------------------------------------------------------
# JSON forms
# ---------------------------------------------------------------------------

def _entry_out(v: Fraction):
    return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def array_to_json_bytes(arr: HyperArray) -> bytes:
    doc = {
        "shape": list(arr.shape),
        "slices": [
            [[_entry_out(v) for v in row] for row in sl] for sl in arr.slices()
        ],
    }
    return json.dumps(doc, separators=(",", ":")).encode("ascii") + b"\n"


def array_from_json_bytes(data: bytes | str) -> HyperArray:
    try:
        doc = json.loads(data)
        shape = doc["shape"]
        slices = doc["slices"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ValueError(f"malformed array JSON: {exc}") from exc
    return HyperArray.from_slices(shape, slices)


def mode_matrix_to_json_bytes(matrix: Matrix) -> bytes:
    doc = {"matrix": [[_entry_out(v) for v in row] for row in matrix]}
    return json.dumps(doc, separators=(",", ":")).encode("ascii") + b"\n"


def mode_matrix_from_json_bytes(data: bytes | str) -> Matrix:
    try:
        doc = json.loads(data)
        rows = doc["matrix"]
        if not isinstance(rows, list):
            raise TypeError("matrix must be a list of rows")
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ValueError(f"malformed matrix JSON: {exc}") from exc
    try:
        return _check_square(rows)
    except (ValueError, TypeError) as exc:
        raise ValueError(f"malformed matrix JSON: {exc}") from exc
