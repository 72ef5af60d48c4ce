"""Raising operators, their matrices on weight spaces, and exact kernels.

A raising operator is indexed by a mode m and a step t: it moves one
exponent unit from slice t+1 of mode m to slice t, scaling by the exponent
it draws from.  Applied to a weight space it lands in the weight space
shifted by +2 in component (m, t) and -1 in the neighbouring components of
the same mode.

A polynomial is invariant exactly when every raising operator kills it, so
invariants of a given degree are the integer nullspace of the stacked
operator matrix on the weight-zero space.  The elimination is fraction-free
(Bareiss), so every intermediate entry is an exact integer minor and the
resulting rank, nullity and primitive kernel vectors carry no rounding at
any size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .polynomials import IntPolynomial, Shape, check_shape, flat_index
from .weights import (
    Weight,
    WeightSpaceBasis,
    check_weight,
    enumerate_basis,
    weight_length,
)


@dataclass(frozen=True)
class RaisingOp:
    """Mode m in 1..3, step t in 1..(size of mode m) - 1."""

    mode: int
    step: int

    def __str__(self) -> str:
        return f"U{self.mode},{self.step}"


def raising_ops(shape) -> tuple[RaisingOp, ...]:
    """All raising operators of the shape, mode-major then step order."""
    shape = check_shape(shape)
    return tuple(
        RaisingOp(m, t)
        for m, d in enumerate(shape, start=1)
        for t in range(1, d)
    )


def weight_shift(shape, op: RaisingOp) -> Weight:
    """Weight displacement caused by the operator: +2 on its own component,
    -1 on the adjacent components of the same mode."""
    shape = check_shape(shape)
    d = shape[op.mode - 1]
    if not 1 <= op.step <= d - 1:
        raise ValueError(f"step {op.step} out of range for mode {op.mode} of {shape}")
    off = sum(s - 1 for s in shape[: op.mode - 1])
    shift = [0] * weight_length(shape)
    shift[off + op.step - 1] = 2
    if op.step >= 2:
        shift[off + op.step - 2] = -1
    if op.step <= d - 2:
        shift[off + op.step] = -1
    return tuple(shift)


def _transfer_pairs(shape: Shape, op: RaisingOp) -> list[tuple[int, int]]:
    """Flat (source, destination) cell pairs the operator can act on."""
    a, b, c = shape
    t = op.step
    pairs = []
    if op.mode == 1:
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                pairs.append((flat_index(shape, t + 1, j, k), flat_index(shape, t, j, k)))
    elif op.mode == 2:
        for i in range(1, a + 1):
            for k in range(1, c + 1):
                pairs.append((flat_index(shape, i, t + 1, k), flat_index(shape, i, t, k)))
    else:
        for i in range(1, a + 1):
            for j in range(1, b + 1):
                pairs.append((flat_index(shape, i, j, t + 1), flat_index(shape, i, j, t)))
    return pairs


def raise_monomial(shape, op: RaisingOp, exps) -> list[tuple[int, tuple[int, ...]]]:
    """Image of a single monomial: list of (coefficient, exponents)."""
    shape = check_shape(shape)
    exps = tuple(exps)
    out = []
    for src, dst in _transfer_pairs(shape, op):
        e = exps[src]
        if e:
            moved = list(exps)
            moved[src] -= 1
            moved[dst] += 1
            out.append((e, tuple(moved)))
    return out


def apply_raising(op: RaisingOp, poly: IntPolynomial) -> IntPolynomial:
    """Operator applied term by term to a polynomial."""
    terms = []
    for exps, coeff in poly:
        for e, moved in raise_monomial(poly.shape, op, exps):
            terms.append((moved, coeff * e))
    return IntPolynomial(poly.shape, terms)


@dataclass(frozen=True)
class OperatorBlock:
    op: RaisingOp
    codomain: WeightSpaceBasis
    row_offset: int


@dataclass(frozen=True)
class OperatorMatrix:
    """Stacked matrix of all raising operators on one weight space.

    Row r of block i is the r-th codomain monomial of operator i; column c
    is the c-th domain monomial.  Rows are stored dense with int entries.
    """

    shape: Shape
    degree: int
    weight: Weight
    domain: WeightSpaceBasis
    blocks: tuple[OperatorBlock, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.domain)


def assemble_matrix(shape, n: int, weight=None) -> OperatorMatrix:
    """Build the stacked raising-operator matrix on a weight space.

    Defaults to weight zero, the only weight that can hold invariants.
    """
    shape = check_shape(shape)
    if weight is None:
        weight = (0,) * weight_length(shape)
    weight = check_weight(shape, weight)
    domain = enumerate_basis(shape, n, weight)

    blocks: list[OperatorBlock] = []
    rows: list[list[int]] = []
    ncols = len(domain)
    for op in raising_ops(shape):
        target = tuple(w + s for w, s in zip(weight, weight_shift(shape, op)))
        codomain = enumerate_basis(shape, n, target)
        blocks.append(OperatorBlock(op, codomain, len(rows)))
        if not len(codomain):
            continue
        index = codomain.index_map()
        block = [[0] * ncols for _ in range(len(codomain))]
        for c, mono in enumerate(domain.monomials):
            for coeff, moved in raise_monomial(shape, op, mono):
                block[index[moved]][c] += coeff
        rows.extend(block)
    return OperatorMatrix(
        shape=shape,
        degree=n,
        weight=weight,
        domain=domain,
        blocks=tuple(blocks),
        rows=tuple(tuple(r) for r in rows),
    )


@dataclass(frozen=True)
class KernelResult:
    rank: int
    nullity: int
    basis: tuple[tuple[int, ...], ...]


def primitive_vector(vec) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, first nonzero positive."""
    fracs = [Fraction(v) for v in vec]
    denom = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * denom) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-u for u in ints]
            break
    return tuple(ints)


def integer_kernel(rows, ncols: int) -> KernelResult:
    """Exact rank and primitive kernel basis of an integer matrix.

    Fraction-free elimination keeps all entries integral; the kernel vectors
    are then recovered by back substitution over the echelon rows, one per
    free column, ordered by free column.
    """
    work = [list(r) for r in rows]
    m = len(work)
    prev = 1
    r = 0
    pivot_cols: list[int] = []
    for col in range(ncols):
        piv = next((i for i in range(r, m) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pivrow = work[r]
        p = pivrow[col]
        for i in range(r + 1, m):
            row = work[i]
            f = row[col]
            for j in range(col, ncols):
                row[j] = (p * row[j] - f * pivrow[j]) // prev
        prev = p
        pivot_cols.append(col)
        r += 1
        if r == m:
            break
    rank = r
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(ncols) if c not in pivot_set]

    basis = []
    for f in free_cols:
        x: list[Fraction] = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i in range(rank - 1, -1, -1):
            col = pivot_cols[i]
            row = work[i]
            s = sum((row[j] * x[j] for j in range(col + 1, ncols) if x[j]), Fraction(0))
            x[col] = -s / row[col]
        basis.append(primitive_vector(x))
    return KernelResult(rank=rank, nullity=len(free_cols), basis=tuple(basis))


def exact_kernel(matrix: OperatorMatrix) -> KernelResult:
    return integer_kernel(matrix.rows, matrix.ncols)


def find_invariant(shape, n: int) -> IntPolynomial | None:
    """The degree-n invariant if the joint kernel is one-dimensional.

    Returns None when the kernel is trivial; raises if it has dimension
    two or more, since then no single polynomial is canonical.
    """
    matrix = assemble_matrix(shape, n)
    if not len(matrix.domain):
        return None
    kern = exact_kernel(matrix)
    if kern.nullity == 0:
        return None
    if kern.nullity > 1:
        raise ValueError(
            f"kernel has dimension {kern.nullity}; use exact_kernel for the full basis"
        )
    vec = kern.basis[0]
    terms = [
        (mono, coeff)
        for mono, coeff in zip(matrix.domain.monomials, vec)
        if coeff
    ]
    return IntPolynomial(matrix.shape, terms)


def matrix_to_json_bytes(matrix: OperatorMatrix) -> bytes:
    """Sparse row/col/value dump, entries sorted by row then column."""
    import json

    entries = [
        [r, c, v]
        for r, row in enumerate(matrix.rows)
        for c, v in enumerate(row)
        if v
    ]
    doc = {"rows": matrix.nrows, "cols": matrix.ncols, "entries": entries}
    return json.dumps(doc, separators=(",", ":")).encode() + b"\n"
