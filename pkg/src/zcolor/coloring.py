"""Integer colorings of diagrams: solve, verify, normalize, count, decide.

An integer coloring assigns an integer to every arc so that at each crossing
twice the over-arc color equals the sum of the two under-arc colors. The
solution set of a diagram is an integer lattice; it always contains the
constant vectors, and the diagram admits a nontrivial coloring exactly when
the lattice has dimension at least 2.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

from .diagram import Diagram, is_connected, validate
from .errors import (
    DiagramFormatError,
    ShapeError,
    TheoremHypothesisError,
    UnsupportedDiagramError,
    ValidationError,
)
from .generators import TorusSpec, build_torus_matrix, gen_torus, torus_arc_grid
from .intlinalg import (
    IntMatrix,
    KernelBasis,
    determinant,
    integer_kernel,
    mat_vec,
    smith_normal_form,
)

__all__ = [
    "ZColoring",
    "ColoringSpace",
    "ColoringCheck",
    "coloring_matrix",
    "coloring_space",
    "is_z_colorable",
    "verify_coloring",
    "normalize",
    "count_colors",
    "link_determinant",
    "fox_colorable",
    "torus_column_states",
    "torus_coloring",
    "load_coloring",
    "save_coloring",
]


@dataclass(frozen=True)
class ZColoring:
    """Arc-indexed integer colors."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))


@dataclass(frozen=True)
class ColoringCheck:
    """Result of verifying a coloring: indices of crossings where it fails."""

    failures: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class ColoringSpace:
    """All colorings of a fixed diagram, as a kernel lattice.

    `trivial_coefficients` expresses the all-ones vector in the kernel basis,
    certifying that the constant colorings lie in the lattice.
    """

    diagram: Diagram
    kernel: KernelBasis
    trivial_coefficients: tuple[int, ...]


def coloring_matrix(d: Diagram) -> IntMatrix:
    """One row per crossing: +2 on the over column, -1 on each under column.

    Coefficients accumulate when a crossing's arcs coincide (a kink with
    over == under contributes 2 - 1 = 1), so every row sums to zero.
    """
    rows = []
    for c in d.crossings:
        row = [0] * d.arc_count
        row[c.over] += 2
        row[c.under[0]] -= 1
        row[c.under[1]] -= 1
        rows.append(row)
    if not rows:
        return IntMatrix.zeros(0, d.arc_count)
    return IntMatrix.from_rows(rows)


def coloring_space(d: Diagram) -> ColoringSpace:
    kernel = integer_kernel(coloring_matrix(d))
    ones = (1,) * d.arc_count
    coeffs = kernel.express(ones)
    if coeffs is None:
        # Rows sum to zero, so constants always solve the system.
        raise AssertionError("constant colorings missing from kernel lattice")
    return ColoringSpace(diagram=d, kernel=kernel, trivial_coefficients=coeffs)


def is_z_colorable(d: Diagram) -> bool:
    """Diagram-level test: a nontrivial coloring exists iff the lattice has dim >= 2."""
    return coloring_space(d).kernel.dim >= 2


def verify_coloring(d: Diagram, coloring: ZColoring) -> ColoringCheck:
    colors = coloring.colors
    if len(colors) != d.arc_count:
        raise ShapeError(
            f"coloring has {len(colors)} entries for {d.arc_count} arcs"
        )
    failures = tuple(
        idx
        for idx, c in enumerate(d.crossings)
        if 2 * colors[c.over] != colors[c.under[0]] + colors[c.under[1]]
    )
    return ColoringCheck(failures)


def normalize(coloring: ZColoring) -> ZColoring:
    """Shift the minimum color to 0, then divide by the gcd of all colors.

    Constant colorings map to all zeros. The number of distinct colors is
    unchanged.
    """
    colors = coloring.colors
    if not colors:
        return coloring
    low = min(colors)
    shifted = [c - low for c in colors]
    g = 0
    for c in shifted:
        g = math.gcd(g, c)
    if g > 1:
        shifted = [c // g for c in shifted]
    return ZColoring(tuple(shifted))


def count_colors(coloring: ZColoring) -> int:
    return len(set(coloring.colors))


def link_determinant(d: Diagram) -> int:
    """|det| of the coloring matrix with one row and one column removed.

    Defined for valid connected diagrams (no free circles); the value does
    not depend on which row and column are dropped.
    """
    report = validate(d)
    if not report.ok:
        raise ValidationError(report.problems)
    if not is_connected(d):
        raise UnsupportedDiagramError(
            "determinant needs a connected diagram without free circles"
        )
    m = coloring_matrix(d)
    if m.rows != m.cols:
        raise UnsupportedDiagramError(
            f"determinant needs arc count ({m.cols}) equal to crossing count ({m.rows})"
        )
    minor = m.delete_row_col(m.rows - 1, m.cols - 1)
    return abs(determinant(minor))


def fox_colorable(d: Diagram, q: int) -> bool:
    """Whether a nontrivial coloring exists modulo q (q >= 2).

    Decided from the Smith invariant factors: with kernel dimension k and
    factors f_i, the solution count mod q is q**k times the product of
    gcd(f_i, q), against exactly q constant solutions.
    """
    if q < 2:
        raise ValueError(f"modulus {q} must be at least 2")
    snf = smith_normal_form(coloring_matrix(d))
    dim = d.arc_count - snf.rank
    if dim >= 2:
        return True
    return any(math.gcd(f, q) > 1 for f in snf.invariant_factors)


def _inverse_torus_matrix(n: int) -> IntMatrix:
    # Inverse of build_torus_matrix(n): X[i] = 2*Y[0] - Y[i+1], X[n-1] = Y[0].
    rows = []
    for i in range(n - 1):
        row = [0] * n
        row[0] = 2
        row[i + 1] -= 1
        rows.append(row)
    last = [0] * n
    last[0] = 1
    rows.append(last)
    return IntMatrix.from_rows(rows)


def torus_column_states(spec: TorusSpec) -> tuple[tuple[int, ...], ...]:
    """Color vectors of the parallel-arc sets, seeded with (1, 0, ..., 0, 1).

    Column c+1 is the recoloring matrix applied to column c; for negative p
    the mirrored column applies the inverse matrix. No closure or color-count
    claim is made here; this works for any n >= 2.
    """
    n = spec.n
    step = build_torus_matrix(n) if spec.p > 0 else _inverse_torus_matrix(n)
    x = (1,) + (0,) * (n - 2) + (1,)
    states = [x]
    for _ in range(spec.columns - 1):
        x = mat_vec(step, x)
        states.append(x)
    return tuple(states)


def torus_coloring(spec: TorusSpec) -> ZColoring:
    """The four-color coloring of the generated closed-braid diagram.

    Requires even n > 2: the column states then return to the seed after n
    steps, so the propagated colors close up around the braid. The result is
    cross-checked against the crossing relations before being returned.
    """
    if spec.n <= 2 or spec.n % 2:
        raise TheoremHypothesisError(
            f"four-color propagation needs an even strand count greater than 2, got n={spec.n}"
        )
    states = torus_column_states(spec)
    grid = torus_arc_grid(spec)
    d = gen_torus(spec)
    colors: list[int | None] = [None] * d.arc_count
    for c, row in enumerate(grid):
        for i, arc in enumerate(row):
            value = states[c][i]
            if colors[arc] is None:
                colors[arc] = value
            elif colors[arc] != value:
                raise AssertionError(
                    f"propagation failed to close at column {c}, position {i}"
                )
    coloring = ZColoring(tuple(int(c) for c in colors))  # type: ignore[arg-type]
    check = verify_coloring(d, coloring)
    if not check.ok:
        raise AssertionError(f"propagated colors fail at crossings {check.failures}")
    return coloring


def load_coloring(path) -> tuple[str, ZColoring]:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramFormatError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict) or set(doc) != {"diagram", "colors"}:
        raise DiagramFormatError("coloring document needs exactly 'diagram' and 'colors'")
    name = doc["diagram"]
    colors = doc["colors"]
    if not isinstance(name, str):
        raise DiagramFormatError("'diagram' must be a string")
    if not isinstance(colors, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in colors
    ):
        raise DiagramFormatError("'colors' must be a list of integers")
    return name, ZColoring(tuple(colors))


def save_coloring(diagram_name: str, coloring: ZColoring, path) -> None:
    doc = {"colors": list(coloring.colors), "diagram": diagram_name}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")
