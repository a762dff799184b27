"""Fewest distinct colors over all nontrivial colorings of a fixed diagram.

Distinct-color counts are invariant under adding a constant and under scaling
by a nonzero integer, so the search space collapses to primitive coefficient
vectors over a basis completing the all-ones direction. With one complement
direction the answer is exact from a single ray; with more directions the
search is bounded-exhaustive and reported as such.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .coloring import (
    ColoringSpace,
    ZColoring,
    coloring_matrix,
    coloring_space,
    count_colors,
    normalize,
    verify_coloring,
)
from .diagram import Diagram
from .errors import DiagramTooLargeError, NotApplicableError, NotZColorableError
from .intlinalg import combine, gcd_of, integer_kernel

__all__ = ["MinColorResult", "min_colors", "color_set", "brute_force_min"]

BRUTE_FORCE_ARC_LIMIT = 14


@dataclass(frozen=True)
class MinColorResult:
    minimum: int
    witness: ZColoring
    exact: bool
    bound_used: int


def _unimodular_with_first_row(e: tuple[int, ...]) -> list[list[int]]:
    """A unimodular integer matrix whose first row is the primitive vector e.

    Row-reduces e (as a column) to a unit vector while accumulating the
    inverse transform, whose first column is then e; its transpose is
    returned.
    """
    m = len(e)
    col = list(e)
    inv = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def swap(i, j):
        col[i], col[j] = col[j], col[i]
        for row in inv:
            row[i], row[j] = row[j], row[i]

    def negate(i):
        col[i] = -col[i]
        for row in inv:
            row[i] = -row[i]

    def shear(target, src, q):
        # col[target] -= q * col[src]; inverse op on inv columns.
        col[target] -= q * col[src]
        for row in inv:
            row[src] += q * row[target]

    while True:
        piv = None
        piv_abs = None
        for i, x in enumerate(col):
            if x and (piv_abs is None or abs(x) < piv_abs):
                piv = i
                piv_abs = abs(x)
        if piv is None:
            raise ValueError("zero vector cannot head a unimodular matrix")
        if piv != 0:
            swap(0, piv)
        if col[0] < 0:
            negate(0)
        done = True
        for i in range(1, m):
            if col[i]:
                shear(i, 0, col[i] // col[0])
                if col[i]:
                    done = False
        if done:
            break
    if col[0] != 1:
        raise ValueError(f"vector {e} is not primitive (content {col[0]})")
    return [[inv[i][j] for i in range(m)] for j in range(m)]


def _complement_basis(space: ColoringSpace) -> list[tuple[int, ...]]:
    """Kernel vectors v_1..v_{dim-1} with {all-ones, v_1, ..} a lattice basis."""
    basis = space.kernel.vectors
    transform = _unimodular_with_first_row(space.trivial_coefficients)
    length = space.diagram.arc_count
    return [combine(row, basis, length) for row in transform[1:]]


def min_colors(d: Diagram, bound: int = 6) -> MinColorResult:
    """Minimum distinct-color count and a canonical witness.

    Scans primitive coefficient vectors with entries in [-bound, bound] over
    the complement directions. With a single complement direction every
    nontrivial coloring is an affine image of one ray, so the result is
    exact; otherwise it is a bounded-exhaustive upper bound. Ties are broken
    by the lexicographically smallest normalized witness, independent of
    scan order.
    """
    if bound < 1:
        raise ValueError(f"bound {bound} must be positive")
    space = coloring_space(d)
    k = space.kernel.dim - 1
    if k < 1:
        raise NotZColorableError(f"{d.name or 'diagram'} has only trivial colorings")
    directions = _complement_basis(space)
    length = d.arc_count
    best: tuple[int, tuple[int, ...]] | None = None
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=k):
        if gcd_of(abs(c) for c in coeffs) != 1:
            continue
        w = combine(coeffs, directions, length)
        witness = normalize(ZColoring(w))
        key = (count_colors(witness), witness.colors)
        if best is None or key < best:
            best = key
    assert best is not None
    return MinColorResult(
        minimum=best[0],
        witness=ZColoring(best[1]),
        exact=(k == 1),
        bound_used=bound,
    )


def color_set(d: Diagram) -> set[int]:
    """Normalized color set of the essentially unique nontrivial coloring.

    Only defined when the coloring lattice has dimension exactly 2; every
    nontrivial coloring is then an affine image of the returned witness.
    """
    space = coloring_space(d)
    if space.kernel.dim != 2:
        raise NotApplicableError(
            f"color_set needs coloring dimension 2, got {space.kernel.dim}"
        )
    return set(min_colors(d, bound=1).witness.colors)


def brute_force_min(d: Diagram, box: int) -> int | None:
    """Independent oracle: enumerate every lattice coloring inside [0, box].

    Walks the Hermite basis coordinate by coordinate (each pivot coordinate
    of a lattice point determines one coefficient), so all lattice points in
    the box are visited without any scaling or translation reduction. Returns
    the minimum distinct-color count over nonconstant points, or None when
    the box contains only constant colorings.
    """
    if box < 1:
        raise ValueError(f"box {box} must be positive")
    if d.arc_count > BRUTE_FORCE_ARC_LIMIT:
        raise DiagramTooLargeError(
            f"{d.arc_count} arcs exceeds the brute-force limit of {BRUTE_FORCE_ARC_LIMIT}"
        )
    basis = integer_kernel(coloring_matrix(d)).vectors
    pivots = []
    for vec in basis:
        idx = next(i for i, x in enumerate(vec) if x)
        pivots.append(idx)
    length = d.arc_count
    best: int | None = None

    def recurse(level: int, point: list[int]) -> None:
        nonlocal best
        if level == len(basis):
            if any(x < 0 or x > box for x in point):
                return
            if len(set(point)) == 1:
                return
            if not verify_coloring(d, ZColoring(tuple(point))).ok:
                return
            distinct = len(set(point))
            if best is None or distinct < best:
                best = distinct
            return
        # Coordinates before this pivot are final; prune early.
        p = pivots[level]
        if any(x < 0 or x > box for x in point[:p]):
            return
        vec = basis[level]
        step = vec[p]
        lo = -(point[p] // step)  # ceil of -point[p] / step; step > 0
        hi = (box - point[p]) // step
        for coeff in range(lo, hi + 1):
            if coeff:
                candidate = [x + coeff * v for x, v in zip(point, vec)]
            else:
                candidate = list(point)
            recurse(level + 1, candidate)

    recurse(0, [0] * length)
    return best
