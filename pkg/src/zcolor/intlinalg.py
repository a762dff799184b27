"""Exact integer linear algebra: Smith normal form, integer kernels, determinants.

Everything here runs on Python's arbitrary-precision integers; no floating
point is used anywhere. Results are deterministic: pivoting always selects
the entry of smallest nonzero absolute value, breaking ties by lowest index,
and kernel bases are returned in a canonical Hermite-reduced form so equal
lattices yield identical bases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ShapeError

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "KernelBasis",
    "smith_normal_form",
    "integer_kernel",
    "determinant",
    "mat_vec",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError(f"negative dimensions {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )
        for e in self.entries:
            if not isinstance(e, int):
                raise ShapeError(f"non-integer entry {e!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "IntMatrix":
        data = [list(r) for r in rows]
        nrows = len(data)
        ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise ShapeError("ragged rows")
        flat = tuple(int(x) for row in data for x in row)
        return cls(nrows, ncols, flat)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([self.column(j) for j in range(self.cols)])

    def delete_row_col(self, i: int, j: int) -> "IntMatrix":
        rows = [
            [self.entry(r, c) for c in range(self.cols) if c != j]
            for r in range(self.rows)
            if r != i
        ]
        if not rows:
            return IntMatrix.zeros(0, max(self.cols - 1, 0))
        return IntMatrix.from_rows(rows)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entry(i, i) for i in range(min(self.rows, self.cols)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            out.append(
                [
                    sum(ri[k] * other.entries[k * other.cols + j] for k in range(self.cols))
                    for j in range(other.cols)
                ]
            )
        if not out:
            return IntMatrix.zeros(0, other.cols)
        return IntMatrix.from_rows(out)


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular U, V and diagonal D with U @ M @ V == D.

    The diagonal of D is nonnegative, each nonzero entry divides the next,
    and `rank` counts the nonzero entries.
    """

    U: IntMatrix
    V: IntMatrix
    D: IntMatrix
    rank: int

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.D.diagonal()[: self.rank]


@dataclass(frozen=True)
class KernelBasis:
    """Canonical lattice basis of the integer kernel {v : M @ v == 0}.

    The basis spans every integer solution (not merely a rational kernel),
    and is stored in Hermite-reduced row form: pivots positive, entries above
    a pivot reduced into [0, pivot). Two equal kernel lattices therefore
    compare equal vector-for-vector.
    """

    dim: int
    vectors: tuple[tuple[int, ...], ...]

    def express(self, target: Sequence[int]) -> tuple[int, ...] | None:
        """Coefficients writing `target` as an integer combination of the basis.

        Returns None when `target` is not a lattice point.
        """
        residue = list(target)
        coeffs = []
        for vec in self.vectors:
            p = _pivot_index(vec)
            if p is None:
                coeffs.append(0)
                continue
            q, r = divmod(residue[p], vec[p])
            if r != 0:
                return None
            coeffs.append(q)
            if q:
                for idx, x in enumerate(vec):
                    residue[idx] -= q * x
        if any(residue):
            return None
        return tuple(coeffs)

    def contains(self, target: Sequence[int]) -> bool:
        return self.express(target) is not None


def _pivot_index(vec: Sequence[int]) -> int | None:
    for idx, x in enumerate(vec):
        if x:
            return idx
    return None


def _find_pivot(a: list[list[int]], start: int) -> tuple[int, int] | None:
    """Entry of smallest nonzero |value| in the trailing submatrix, lowest index first."""
    best = None
    best_abs = None
    for i in range(start, len(a)):
        row = a[i]
        for j in range(start, len(row)):
            x = row[j]
            if x and (best_abs is None or abs(x) < best_abs):
                best = (i, j)
                best_abs = abs(x)
                if best_abs == 1:
                    return best
    return best


def smith_normal_form(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form with transforms: U @ M @ V == D.

    Row operations accumulate into U, column operations into V; both stay
    unimodular because only swaps, sign flips, and integer shears are used.
    At each stage the pivot is reduced until it divides every entry of the
    trailing submatrix, which yields the divisibility chain directly.
    """
    a = m.to_rows()
    nrows, ncols = m.rows, m.cols
    u = IntMatrix.identity(nrows).to_rows()
    v = IntMatrix.identity(ncols).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def add_row(dst, src, q):
        # row dst += q * row src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        # col dst += q * col src
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    limit = min(nrows, ncols)
    while t < limit:
        piv = _find_pivot(a, t)
        if piv is None:
            break
        if piv[0] != t:
            swap_rows(t, piv[0])
        if piv[1] != t:
            swap_cols(t, piv[1])
        if a[t][t] < 0:
            negate_row(t)

        while True:
            p = a[t][t]
            # Clear the pivot column. A nonzero remainder becomes the new,
            # strictly smaller pivot, so this terminates.
            restart = False
            for i in range(t + 1, nrows):
                if a[i][t] == 0:
                    continue
                q = a[i][t] // p
                if q:
                    add_row(i, t, -q)
                if a[i][t]:
                    swap_rows(t, i)
                    restart = True
                    break
            if restart:
                continue
            for j in range(t + 1, ncols):
                if a[t][j] == 0:
                    continue
                q = a[t][j] // p
                if q:
                    add_col(j, t, -q)
                if a[t][j]:
                    swap_cols(t, j)
                    restart = True
                    break
            if restart:
                # A column swap may reintroduce entries below the pivot.
                continue
            # Pivot row and column are clear; force divisibility of the rest.
            bad = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        t += 1

    d = IntMatrix.from_rows(a) if a else IntMatrix.zeros(0, ncols)
    rank = sum(1 for x in d.diagonal() if x)
    return SmithDecomposition(
        U=IntMatrix.from_rows(u) if u else IntMatrix.zeros(0, 0),
        V=IntMatrix.from_rows(v) if v else IntMatrix.zeros(0, 0),
        D=d,
        rank=rank,
    )


def _hermite_reduce_rows(vectors: list[list[int]]) -> list[list[int]]:
    """Canonical Hermite form of the row lattice spanned by `vectors`.

    Row echelon with positive pivots; entries above each pivot are reduced
    into [0, pivot). Zero rows are dropped.
    """
    mat = [list(v) for v in vectors]
    if not mat:
        return []
    ncols = len(mat[0])
    nrows = len(mat)
    r = 0
    for j in range(ncols):
        if r == nrows:
            break
        while True:
            piv = None
            piv_abs = None
            for i in range(r, nrows):
                x = mat[i][j]
                if x and (piv_abs is None or abs(x) < piv_abs):
                    piv = i
                    piv_abs = abs(x)
            if piv is None:
                break
            if piv != r:
                mat[r], mat[piv] = mat[piv], mat[r]
            if mat[r][j] < 0:
                mat[r] = [-x for x in mat[r]]
            clean = True
            for i in range(r + 1, nrows):
                if mat[i][j]:
                    q = mat[i][j] // mat[r][j]
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[r])]
                    if mat[i][j]:
                        clean = False
            if clean:
                break
        if piv is None:
            continue
        for i in range(r):
            if mat[i][j]:
                q = mat[i][j] // mat[r][j]
                if q:
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[r])]
        r += 1
    return [row for row in mat[:r] if any(row)]


def integer_kernel(m: IntMatrix) -> KernelBasis:
    """Basis of the lattice of integer vectors annihilated by `m`.

    The last cols - rank columns of the Smith transform V span the kernel
    exactly (V is unimodular, so integer solutions are integer combinations
    of them); they are then Hermite-reduced for a canonical answer.
    """
    snf = smith_normal_form(m)
    raw = [list(snf.V.column(j)) for j in range(snf.rank, m.cols)]
    reduced = _hermite_reduce_rows(raw)
    return KernelBasis(dim=len(reduced), vectors=tuple(tuple(v) for v in reduced))


def determinant(m: IntMatrix) -> int:
    """Exact determinant via Bareiss fraction-free elimination.

    Every division performed is exact, so no rationals appear even for
    large intermediate values.
    """
    if m.rows != m.cols:
        raise ShapeError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def mat_vec(m: IntMatrix, x: Sequence[int]) -> tuple[int, ...]:
    """Exact matrix-vector product."""
    if len(x) != m.cols:
        raise ShapeError(f"vector length {len(x)} does not match {m.rows}x{m.cols} matrix")
    return tuple(sum(m.entry(i, j) * x[j] for j in range(m.cols)) for i in range(m.rows))


def combine(coefficients: Sequence[int], vectors: Sequence[Sequence[int]], length: int) -> tuple[int, ...]:
    """Integer combination sum(c_i * v_i) of equal-length vectors."""
    out = [0] * length
    for c, vec in zip(coefficients, vectors):
        if c:
            for idx, x in enumerate(vec):
                out[idx] += c * x
    return tuple(out)


def gcd_of(values: Iterable[int]) -> int:
    g = 0
    for x in values:
        g = math.gcd(g, x)
        if g == 1:
            return 1
    return g
