"""Closed-form dimension polynomials for (2,2,3) weight spaces.

Three degree-7 polynomials in n give the dimensions of the weight spaces
that matter for the degree-6 invariant pipeline: weight zero and the two
shifted weights (2,0,0,0) and (0,0,2,-1).  The formulas come from exact
interpolation through the tabulated dimensions at n = 0, 6, ..., 96; they
are conjectural beyond that range, and this module asserts nothing past it
except integrality.  Symmetric weights share a formula: (0,2,0,0) has the
same dimensions as (2,0,0,0), and (0,0,-1,2) the same as (0,0,2,-1).

All arithmetic is over Fraction, so agreement checks are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import reference
from .weights import count_dim

FORMULA_IDS = ("weight0", "weight2000", "weight002-1")

WEIGHT_FOR_ID = {
    "weight0": (0, 0, 0, 0),
    "weight2000": (2, 0, 0, 0),
    "weight002-1": (0, 0, 2, -1),
}

# Factored numerators and denominators (coefficient lists are constant-first)
_DENOM_A = 58786560
_DENOM_B = 11757312

_FACTORS = {
    "weight0": (
        _DENOM_A,
        ((6, 1), (9797760, 6811776, 2584224, 552096, 68004, 4500, 125)),
    ),
    "weight2000": (
        _DENOM_A,
        ((0, 1), (6, 1), (12, 1), (254664, 127224, 28602, 3000, 125)),
    ),
    "weight002-1": (
        _DENOM_B,
        ((0, 1), (6, 1), (12, 1), (396, 84, 5), (108, 36, 5)),
    ),
}


def _check_id(formula_id: str) -> str:
    if formula_id not in _FACTORS:
        raise ValueError(f"unknown formula id {formula_id!r}; expected one of {FORMULA_IDS}")
    return formula_id


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_eval(coeffs, n) -> Fraction:
    total = Fraction(0)
    power = Fraction(1)
    for c in coeffs:
        total += c * power
        power *= n
    return total


def formula_coefficients(formula_id: str) -> tuple[Fraction, ...]:
    """Expanded coefficients of the closed form, constant term first."""
    denom, factors = _FACTORS[_check_id(formula_id)]
    coeffs = [Fraction(1)]
    for fac in factors:
        coeffs = _poly_mul(coeffs, [Fraction(c) for c in fac])
    return tuple(c / denom for c in coeffs)


def conjecture_dim(formula_id: str, n: int) -> Fraction:
    """Evaluate the closed form exactly; integral whenever 6 divides n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    denom, factors = _FACTORS[_check_id(formula_id)]
    value = Fraction(1, denom)
    for fac in factors:
        value *= _poly_eval([Fraction(c) for c in fac], n)
    return value


@dataclass(frozen=True)
class DataColumn:
    """One tabulated dimension column: degrees and their exact dimensions."""

    degrees: tuple[int, ...]
    dims: tuple[int, ...]

    def __post_init__(self):
        if len(self.degrees) != len(self.dims):
            raise ValueError("degrees and dims must have equal length")


_COLUMN_INDEX = {"weight0": 1, "weight2000": 2, "weight002-1": 3}


def table_column(formula_id: str) -> DataColumn:
    """The tabulated column for a formula id (17 points, n = 0, 6, ..., 96)."""
    idx = _COLUMN_INDEX[_check_id(formula_id)]
    return DataColumn(
        degrees=tuple(row[0] for row in reference.DIM_TABLE),
        dims=tuple(row[idx] for row in reference.DIM_TABLE),
    )


def interpolate_dims(column: DataColumn) -> tuple[Fraction, ...]:
    """Exact degree-<=7 interpolation through the first 8 points.

    The remaining points must land on the curve; a point off the curve
    raises, since then the column is not polynomial of degree <= 7.
    Returns the expanded coefficients, constant term first, with trailing
    zero coefficients trimmed.
    """
    if len(column.degrees) < 8:
        raise ValueError("need at least 8 points for a degree-7 fit")
    xs = [Fraction(x) for x in column.degrees[:8]]
    ys = [Fraction(y) for y in column.dims[:8]]
    coeffs = [Fraction(0)] * 8
    for i in range(8):
        # Lagrange basis polynomial for node i, expanded
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(8):
            if j == i:
                continue
            basis = _poly_mul(basis, [-xs[j], Fraction(1)])
            denom *= xs[i] - xs[j]
        scale = ys[i] / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    for x, y in zip(column.degrees[8:], column.dims[8:]):
        got = _poly_eval(coeffs, x)
        if got != y:
            raise ValueError(
                f"point (n={x}, dim={y}) is off the interpolated curve (got {got})"
            )
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class TableEntry:
    n: int
    column: str
    counted: int
    fixture: int
    formula: Fraction

    @property
    def ok(self) -> bool:
        return self.counted == self.fixture == self.formula


@dataclass(frozen=True)
class TableReport:
    entries: tuple[TableEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def mismatches(self) -> tuple[TableEntry, ...]:
        return tuple(e for e in self.entries if not e.ok)


def verify_table(shape=(2, 2, 3)) -> TableReport:
    """Three-way check of counted, tabulated and closed-form dimensions.

    51 entries: 17 degrees x 3 columns.  A transcription or counting error
    surfaces as a mismatch entry rather than an exception.
    """
    shape = tuple(shape)
    if shape != (2, 2, 3):
        raise ValueError("dimension table is only available for shape (2, 2, 3)")
    entries = []
    for formula_id in FORMULA_IDS:
        column = table_column(formula_id)
        weight = WEIGHT_FOR_ID[formula_id]
        for n, fixture in zip(column.degrees, column.dims):
            entries.append(
                TableEntry(
                    n=n,
                    column=formula_id,
                    counted=count_dim(shape, n, weight),
                    fixture=fixture,
                    formula=conjecture_dim(formula_id, n),
                )
            )
    return TableReport(entries=tuple(entries))
