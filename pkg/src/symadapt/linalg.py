"""Exact rational linear algebra: RREF, kernels, integer eigenspaces,
restriction to invariant subspaces, and subspace intersection.

All arithmetic is exact.  Elimination runs fraction-free over Python
integers with per-row gcd reduction; results are normalized to Fraction
rows with leading entry 1 only at the boundary, so a Subspace in reduced
row echelon form is a canonical object and subspace equality is plain
structural equality.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Sequence

from .young import content_sum, partitions

Row = tuple[Fraction, ...]
Matrix = Sequence[Sequence]


class NotInvariantError(ValueError):
    """An operator mapped a subspace outside itself; carries a witness vector."""

    def __init__(self, message: str, witness: tuple[Fraction, ...]):
        super().__init__(message)
        self.witness = witness


def row_to_int(row: Sequence) -> list[int]:
    """Scale a rational row to integers (per-row lcm of denominators)."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


def _reduce_row(row: list[int]) -> list[int]:
    g = 0
    for a in row:
        if a:
            g = gcd(g, a)
            if g == 1:
                return row
    if g > 1:
        return [a // g for a in row]
    return row


def _jordan(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """In-place fraction-free Gauss-Jordan elimination over the integers.

    Returns the reduced rows (pivot rows first, in pivot-column order,
    zero rows last) and the list of pivot columns.  Pivot rows are not
    normalized: row i has some nonzero integer at pivots[i] and zeros in
    every other pivot column.
    """
    nrows = len(rows)
    if nrows == 0:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = r
        while pr < nrows and not rows[pr][c]:
            pr += 1
        if pr == nrows:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        piv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if not f:
                continue
            row = rows[i]
            rows[i] = _reduce_row([piv * a - f * b for a, b in zip(row, prow)])
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def _normalized_rows(rows: list[list[int]], pivots: list[int]) -> tuple[Row, ...]:
    out = []
    for row, p in zip(rows, pivots):
        lead = row[p]
        out.append(tuple(Fraction(a, lead) for a in row))
    return tuple(out)


def rref(matrix: Matrix) -> tuple[tuple[Row, ...], int]:
    """Reduced row echelon form and rank, both exact.

    The result has the same number of rows as the input (zero rows sink
    to the bottom) and rank equals the number of pivots.
    """
    rows = [row_to_int(r) for r in matrix]
    red, pivots = _jordan(rows)
    ncols = len(rows[0]) if rows else 0
    zero = tuple(Fraction(0) for _ in range(ncols))
    out = _normalized_rows(red, pivots) + tuple(zero for _ in range(len(rows) - len(pivots)))
    return out, len(pivots)


def kernel(matrix: Matrix, ncols: int | None = None) -> tuple[Row, ...]:
    """A canonical (RREF) basis of the right nullspace of ``matrix``.

    ``ncols`` must be given when the matrix has no rows.
    """
    rows = [row_to_int(r) for r in matrix]
    if rows:
        ncols = len(rows[0])
    elif ncols is None:
        raise ValueError("ncols required for a matrix with no rows")
    red, pivots = _jordan(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    if not free:
        return ()
    basis: list[list[Fraction]] = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = Fraction(-row[f], row[p])
        basis.append(v)
    ints = [row_to_int(v) for v in basis]
    red2, piv2 = _jordan(ints)
    return _normalized_rows(red2, piv2)


class Subspace:
    """A subspace of Q^ambient held as a canonical RREF row basis.

    Rows are linearly independent with strictly increasing pivot columns
    and leading entry 1, so two Subspace objects are equal exactly when
    they describe the same subspace.
    """

    __slots__ = ("ambient", "rows", "pivots", "_int_rows")

    def __init__(self, ambient: int, rows: tuple[Row, ...], pivots: tuple[int, ...]):
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots
        self._int_rows: tuple[tuple[int, ...], ...] | None = None

    @classmethod
    def from_rows(cls, ambient: int, rows: Matrix) -> "Subspace":
        """Span of arbitrary rows, canonicalized."""
        ints = [row_to_int(r) for r in rows]
        for row in ints:
            if len(row) != ambient:
                raise ValueError(f"row length {len(row)} != ambient {ambient}")
        red, pivots = _jordan(ints)
        return cls(ambient, _normalized_rows(red, pivots), tuple(pivots))

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        one = Fraction(1)
        zero = Fraction(0)
        rows = tuple(
            tuple(one if j == i else zero for j in range(ambient)) for i in range(ambient)
        )
        return cls(ambient, rows, tuple(range(ambient)))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, (), ())

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def int_rows(self) -> tuple[tuple[int, ...], ...]:
        """The basis scaled to primitive integer rows; row j has its pivot
        entry equal to the lcm of the denominators of row j."""
        if self._int_rows is None:
            self._int_rows = tuple(tuple(row_to_int(r)) for r in self.rows)
        return self._int_rows

    def coords(self, vec: Sequence) -> tuple[Fraction, ...] | None:
        """Coordinates of ``vec`` in the row basis, or None if outside."""
        if len(vec) != self.ambient:
            raise ValueError(f"vector length {len(vec)} != ambient {self.ambient}")
        coeffs = tuple(Fraction(vec[p]) for p in self.pivots)
        residual = [Fraction(x) for x in vec]
        for a, row in zip(coeffs, self.rows):
            if a:
                for t, x in enumerate(row):
                    if x:
                        residual[t] -= a * x
        if any(residual):
            return None
        return coeffs

    def contains(self, vec: Sequence) -> bool:
        return self.coords(vec) is not None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(ambient={self.ambient}, dim={self.dim})"


def matvec(matrix: Matrix, vec: Sequence) -> list:
    return [sum(a * x for a, x in zip(row, vec) if a) for row in matrix]


def eigenspace(matrix: Matrix, nu: int) -> Subspace:
    """Kernel of (M - nu*I) as a canonical Subspace; empty when nu is not
    an eigenvalue.  ``matrix`` must be square with exact entries."""
    d = len(matrix)
    rows = []
    for i, row in enumerate(matrix):
        if len(row) != d:
            raise ValueError("eigenspace needs a square matrix")
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        # the diagonal shift happens before the (kernel-preserving) row scaling
        shifted = [int(x * den) for x in row] if den != 1 else [int(x) for x in row]
        shifted[i] -= nu * den
        rows.append(shifted)
    ker = kernel(rows, d)
    pivots = tuple(next(t for t, x in enumerate(r) if x) for r in ker)
    return Subspace(d, ker, pivots)


def candidate_eigenvalues(k: int) -> tuple[int, ...]:
    """Every integer a transposition class sum of S_k can take as an
    eigenvalue: the content sums of the partitions of k, largest first.

    >>> candidate_eigenvalues(3)
    (3, 0, -3)
    """
    if k < 2:
        raise ValueError(f"subgroup degree must be at least 2, got {k}")
    return tuple(sorted({content_sum(lam) for lam in partitions(k)}, reverse=True))


def restrict_apply(
    apply_int: Callable[[Sequence[int]], list[int]],
    space: Subspace,
    label: str = "operator",
) -> tuple[Row, ...]:
    """Matrix of a linear map in the row basis of an invariant subspace.

    ``apply_int`` must be the integer-preserving action of the operator on
    ambient coordinate vectors.  Raises NotInvariantError (with the image
    that escaped) when the subspace is not invariant.

    All vector arithmetic stays over the integers: the running residual z
    carries an explicit scale factor, multiplied up by each basis row's
    pivot denominator as that row is peeled off.
    """
    zrows = space.int_rows
    pivots = space.pivots
    d = space.dim
    cols: list[tuple[Fraction, ...]] = []
    for j in range(d):
        lead_j = zrows[j][pivots[j]]
        image = apply_int(zrows[j])  # image of lead_j * (basis row j)
        z = list(image)
        scale = 1
        coeffs: list[Fraction] = []
        for zr, p in zip(zrows, pivots):
            c = z[p]
            coeffs.append(Fraction(c, scale * lead_j))
            if c:
                lead = zr[p]
                z = [lead * a - c * b for a, b in zip(z, zr)]
                scale *= lead
        if any(z):
            witness = tuple(Fraction(x, lead_j) for x in image)
            raise NotInvariantError(
                f"{label} does not leave the subspace invariant", witness
            )
        cols.append(tuple(coeffs))
    return tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))


def restrict(matrix: Matrix, space: Subspace) -> tuple[Row, ...]:
    """Matrix of ``matrix`` in the row basis of ``space`` (must be invariant)."""
    d = len(matrix)
    if space.ambient != d:
        raise ValueError(f"ambient mismatch: matrix {d}, subspace {space.ambient}")
    int_matrix = [row_to_int(r) for r in matrix]
    dens = []
    for row, int_row in zip(matrix, int_matrix):
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        dens.append(den)
    if all(den == 1 for den in dens):
        def apply_int(vec):
            return [sum(a * x for a, x in zip(row, vec) if a) for row in int_matrix]

        return restrict_apply(apply_int, space, "matrix")
    # rational matrix: fall back to Fraction arithmetic through coords()
    cols = []
    for row_vec in space.rows:
        image = matvec(matrix, row_vec)
        coeffs = space.coords(image)
        if coeffs is None:
            raise NotInvariantError(
                "matrix does not leave the subspace invariant", tuple(image)
            )
        cols.append(coeffs)
    k = space.dim
    return tuple(tuple(cols[j][i] for j in range(k)) for i in range(k))


def eigenrows_of_block(block: tuple[Row, ...], nu: int) -> tuple[Row, ...]:
    """Kernel rows of (block - nu*I) for a small rational matrix."""
    d = len(block)
    rows = []
    for i, row in enumerate(block):
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        rows.append([int(x * den) - (nu * den if t == i else 0) for t, x in enumerate(row)])
    return kernel(rows, d)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Exact intersection, computed through orthogonal complements:
    (S1 ∩ S2) = (S1⊥ + S2⊥)⊥ for the standard bilinear form on Q^n."""
    if s1.ambient != s2.ambient:
        raise ValueError(f"ambient mismatch: {s1.ambient} != {s2.ambient}")
    n = s1.ambient
    comp1 = kernel(s1.rows, n) if s1.dim else Subspace.full(n).rows
    comp2 = kernel(s2.rows, n) if s2.dim else Subspace.full(n).rows
    stacked = tuple(comp1) + tuple(comp2)
    if not stacked:
        return Subspace.full(n)
    rows = kernel(stacked, n)
    pivots = tuple(next(t for t, x in enumerate(r) if x) for r in rows)
    return Subspace(n, rows, pivots)


__all__ = [
    "Fraction",
    "row_to_int",
    "NotInvariantError",
    "Subspace",
    "rref",
    "kernel",
    "matvec",
    "eigenspace",
    "candidate_eigenvalues",
    "restrict",
    "restrict_apply",
    "eigenrows_of_block",
    "intersect",
]
