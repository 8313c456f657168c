"""Exact linear algebra over the 3-element field.

Vectors are tuples of ints in {0,1,2}; matrices are tuples of equal-length
row vectors.  Tuples keep everything hashable (cosets, functionals and
subspaces are used as dict keys throughout), and all arithmetic is exact.
The one bulk operation that matters for performance, tallying Hamming
weights over all 3^k elements of a subspace, is vectorized with numpy
(one byte per field element); everything else is plain Python.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator

import numpy as np

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]

# 3^k coefficient enumerations beyond this are refused rather than swapped.
MAX_ENUM_DIM = 12


class DimensionError(ValueError):
    """Operands have incompatible lengths."""


def vector(entries: Iterable[int]) -> Vector:
    """Validate and freeze a GF(3) vector."""
    v = tuple(int(x) for x in entries)
    if any(x not in (0, 1, 2) for x in v):
        raise ValueError(f"entries must be in {{0,1,2}}, got {v}")
    return v


def matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    """Validate and freeze a GF(3) matrix (rows of equal length)."""
    m = tuple(vector(r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise DimensionError("rows have unequal lengths")
    return m


def vec_add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple((a + b) % 3 for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple((a - b) % 3 for a, b in zip(u, v))


def vec_neg(v: Vector) -> Vector:
    return tuple((-a) % 3 for a in v)


def vec_scale(c: int, v: Vector) -> Vector:
    return tuple((c * a) % 3 for a in v)


def dot(u: Vector, v: Vector) -> int:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v)) % 3


def hamming_weight(v: Vector) -> int:
    """Number of nonzero entries."""
    return sum(1 for a in v if a)


def unit_vector(length: int, position: int, value: int = 1) -> Vector:
    v = [0] * length
    v[position] = value
    return tuple(v)


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row-echelon form over GF(3).

    Returns (reduced matrix, rank, pivot columns).  The reduced matrix has
    the same shape and row space as the input; zero rows sink to the bottom.
    Inverses mod 3 are trivial (1 and 2 are self-inverse).
    """
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c]  # self-inverse mod 3
        rows[r] = [(inv * x) % 3 for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % 3 for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in rows), r, tuple(pivots)


def row_space_basis(m: Matrix) -> Matrix:
    """Canonical (RREF, zero rows dropped) basis of the row space."""
    reduced, rank, _ = rref(m)
    return reduced[:rank]


def in_row_space(m: Matrix, v: Vector) -> bool:
    """Membership test by rank comparison."""
    basis = row_space_basis(m)
    _, rank_with, _ = rref(basis + (v,))
    return rank_with == len(basis)


def null_space(m: Matrix, width: int | None = None) -> Matrix:
    """Canonical basis of {x : m @ x = 0} over GF(3).

    `width` is required when m has no rows (the null space is then the
    full space of that width).
    """
    if not m:
        if width is None:
            raise ValueError("width required for an empty matrix")
        return tuple(unit_vector(width, i) for i in range(width))
    ncols = len(m[0])
    reduced, rank, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = (-reduced[i][f]) % 3
        basis.append(tuple(v))
    return row_space_basis(tuple(basis))


def enumerate_subspace(basis: Matrix, length: int | None = None) -> Iterator[Vector]:
    """Yield all 3^rank combinations of independent basis rows.

    Order is lexicographic in the coefficient vectors, so the zero vector
    comes first.  `length` is required for an empty basis.
    """
    k = len(basis)
    if k == 0:
        if length is None:
            raise ValueError("length required for an empty basis")
        yield (0,) * length
        return
    n = len(basis[0])
    _, rank, _ = rref(basis)
    if rank != k:
        raise ValueError(f"basis rows are dependent (rank {rank} < {k})")
    if k > MAX_ENUM_DIM:
        raise ValueError(f"refusing to enumerate 3^{k} vectors")
    for coeffs in itertools.product((0, 1, 2), repeat=k):
        w = [0] * n
        for c, row in zip(coeffs, basis):
            if c:
                for i, x in enumerate(row):
                    w[i] = (w[i] + c * x) % 3
        yield tuple(w)


def subspace_weight_counts(
    basis: Matrix, length: int | None = None, shift: Vector | None = None
) -> tuple[int, ...]:
    """Tally Hamming weights over all 3^rank elements of span(basis)+shift.

    Returns counts indexed by weight 0..n.  This is the hot loop (the flat
    classification tallies 81 subspaces of 3^10 vectors each), so the
    enumeration runs as a single numpy pass over uint8 words.
    """
    k = len(basis)
    n = len(basis[0]) if basis else length
    if n is None:
        raise ValueError("length required for an empty basis")
    if k == 0:
        w = hamming_weight(shift) if shift is not None else 0
        counts = [0] * (n + 1)
        counts[w] = 1
        return tuple(counts)
    _, rank, _ = rref(basis)
    if rank != k:
        raise ValueError(f"basis rows are dependent (rank {rank} < {k})")
    if k > MAX_ENUM_DIM:
        raise ValueError(f"refusing to enumerate 3^{k} vectors")
    b = np.array(basis, dtype=np.int64)
    powers = 3 ** np.arange(k - 1, -1, -1, dtype=np.int64)
    coeffs = (np.arange(3**k, dtype=np.int64)[:, None] // powers) % 3
    words = coeffs @ b
    if shift is not None:
        words = words + np.array(shift, dtype=np.int64)
    words %= 3
    weights = np.count_nonzero(words, axis=1)
    return tuple(np.bincount(weights, minlength=n + 1).tolist())


def canonical_functional(phi: Vector) -> Vector:
    """Scale a nonzero functional so its first nonzero coefficient is 1."""
    lead = next((x for x in phi if x), None)
    if lead is None:
        raise ValueError("zero functional has no canonical form")
    return phi if lead == 1 else vec_scale(2, phi)


def projective_points(basis: Matrix, length: int | None = None) -> tuple[Vector, ...]:
    """Nonzero vectors of span(basis) up to scalar, canonical and lex-sorted.

    There are (3^rank - 1)/2 of them.
    """
    points = set()
    for v in enumerate_subspace(basis, length):
        if any(v):
            points.add(canonical_functional(v))
    return tuple(sorted(points))


def hyperplane_functionals(sub_basis: Matrix, excluded: Vector) -> tuple[Vector, ...]:
    """Canonical functionals whose kernels contain span(sub_basis) but miss `excluded`.

    These are the nonzero functionals vanishing on the subspace, taken up to
    scalar and then filtered to those not vanishing on `excluded`.  Each one
    cuts out a hyperplane of the ambient space containing the subspace.
    """
    n = len(excluded)
    if sub_basis and len(sub_basis[0]) != n:
        raise DimensionError("excluded vector length differs from basis width")
    basis = row_space_basis(sub_basis)
    if len(basis) != len(sub_basis):
        raise ValueError("sub_basis rows are dependent")
    if in_row_space(basis, excluded):
        raise ValueError("excluded vector lies in the subspace")
    duals = null_space(basis, width=n)
    return tuple(
        phi for phi in projective_points(duals, length=n) if dot(phi, excluded) != 0
    )


def intermediate_hyperplanes(sub_basis: Matrix, excluded: Vector) -> tuple[Matrix, ...]:
    """Bases of all hyperplanes containing span(sub_basis) but not `excluded`.

    Each returned matrix is the canonical (RREF) basis of one kernel, in the
    lex order of the defining functionals from hyperplane_functionals.
    """
    n = len(excluded)
    return tuple(
        null_space((phi,), width=n)
        for phi in hyperplane_functionals(sub_basis, excluded)
    )


def matrix_to_text(m: Matrix) -> str:
    """One row per line, digits 0/1/2, no separators."""
    return "".join("".join(str(x) for x in row) + "\n" for row in m)


def matrix_from_text(text: str) -> Matrix:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if not all(ch in "012" for ch in line):
            raise ValueError(f"invalid matrix line: {line!r}")
        rows.append(tuple(int(ch) for ch in line))
    return matrix(rows)
