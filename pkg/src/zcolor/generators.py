"""Diagram generators for pretzel links and standard closed-braid torus links.

Both generators work on a slot grid and merge slots with a union-find, so the
arc indexing is deterministic: arcs are numbered by first appearance scanning
regions (or braid columns) left to right.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Crossing, Diagram, validate
from .errors import InvalidSpecError, UnrepresentableDiagramError
from .intlinalg import IntMatrix

__all__ = [
    "PretzelSpec",
    "TorusSpec",
    "gen_pretzel",
    "gen_torus",
    "build_torus_matrix",
    "pretzel_twist_chains",
    "torus_arc_grid",
]


@dataclass(frozen=True)
class PretzelSpec:
    """Twist counts a_1..a_k of the k vertical twist regions; every a_i != 0."""

    twists: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(a) for a in self.twists))
        if not self.twists:
            raise InvalidSpecError("a pretzel needs at least one twist region")
        for i, a in enumerate(self.twists):
            if a == 0:
                raise InvalidSpecError(
                    f"twist region {i + 1} is 0; zero tangles are not supported"
                )

    @property
    def name(self) -> str:
        return "P(" + ",".join(str(a) for a in self.twists) + ")"


@dataclass(frozen=True)
class TorusSpec:
    """Closed braid on n >= 2 strands winding p != 0 full cycles (diagram T(pn, n))."""

    p: int
    n: int

    def __post_init__(self):
        if self.p == 0:
            raise InvalidSpecError("p must be nonzero")
        if self.n < 2:
            raise InvalidSpecError(f"strand count {self.n} must be at least 2")

    @property
    def columns(self) -> int:
        return abs(self.p) * self.n

    @property
    def name(self) -> str:
        return f"T({self.p * self.n},{self.n})"


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _twist_corners(m: int, positive: bool) -> tuple[int, int, int, int]:
    """Chain positions of the (NW, NE, SW, SE) corners of one twist region.

    A region with m crossings is a chain of m + 2 arc slots s_0..s_{m+1};
    crossing j passes s_j over {s_{j-1}, s_{j+1}}. The region's sign mirrors
    the wiring by swapping which chain end sits at which corner.
    """
    if positive:
        return 0, 1, m, m + 1
    return 1, 0, m + 1, m


def _pretzel_wiring(spec: PretzelSpec):
    sizes = [abs(a) + 2 for a in spec.twists]
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    total = offsets[-1]

    def slot(region: int, pos: int) -> int:
        return offsets[region] + pos

    uf = _UnionFind(total)
    k = len(spec.twists)
    for i in range(k):
        j = (i + 1) % k
        _, ne_i, _, se_i = _twist_corners(abs(spec.twists[i]), spec.twists[i] > 0)
        nw_j, _, sw_j, _ = _twist_corners(abs(spec.twists[j]), spec.twists[j] > 0)
        uf.union(slot(i, ne_i), slot(j, nw_j))
        uf.union(slot(i, se_i), slot(j, sw_j))

    arc_of_root: dict[int, int] = {}
    arc_of_slot = [0] * total
    for s in range(total):
        root = uf.find(s)
        if root not in arc_of_root:
            arc_of_root[root] = len(arc_of_root)
        arc_of_slot[s] = arc_of_root[root]

    crossings = []
    chains = []
    for i, a in enumerate(spec.twists):
        m = abs(a)
        chain = tuple(arc_of_slot[slot(i, pos)] for pos in range(m + 2))
        chains.append(chain)
        for j in range(1, m + 1):
            crossings.append(Crossing(over=chain[j], under=(chain[j - 1], chain[j + 1])))
    return len(arc_of_root), tuple(crossings), tuple(chains)


def gen_pretzel(spec: PretzelSpec) -> Diagram:
    """Cyclic join of vertical twist regions: NE_i to NW_{i+1}, SE_i to SW_{i+1}.

    The result has sum(|a_i|) crossings and equally many arcs. Inputs whose
    wiring closes a strand that never passes under (possible with mixed
    single twists such as P(1,-1)) cannot be expressed in the arc model and
    are rejected.
    """
    arc_count, crossings, _ = _pretzel_wiring(spec)
    d = Diagram(
        name=spec.name,
        arc_count=arc_count,
        crossings=crossings,
        free_circles=0,
        claimed_minimal=True,
    )
    expected = sum(abs(a) for a in spec.twists)
    report = validate(d)
    if arc_count != expected or not report.ok:
        raise UnrepresentableDiagramError(
            f"{spec.name} wires a component that crosses only over; "
            "such diagrams have no valid arc model"
        )
    return d


def pretzel_twist_chains(spec: PretzelSpec) -> tuple[tuple[int, ...], ...]:
    """Arc indices along each twist region, chain order s_0..s_{m+1}."""
    _, _, chains = _pretzel_wiring(spec)
    return chains


def _torus_wiring(spec: TorusSpec):
    n = spec.n
    cols = spec.columns
    mirror = spec.p < 0
    total = cols * n

    def slot(c: int, i: int) -> int:
        return c * n + i

    uf = _UnionFind(total)
    for c in range(cols):
        if mirror:
            # Strand in position 0 crosses over everything to position n-1.
            uf.union(slot(c, 0), slot((c + 1) % cols, n - 1))
        else:
            # Strand in position n-1 crosses over everything to position 0.
            uf.union(slot(c, n - 1), slot((c + 1) % cols, 0))

    arc_of_root: dict[int, int] = {}
    grid = []
    for c in range(cols):
        row = []
        for i in range(n):
            root = uf.find(slot(c, i))
            if root not in arc_of_root:
                arc_of_root[root] = len(arc_of_root)
            row.append(arc_of_root[root])
        grid.append(tuple(row))

    crossings = []
    for c in range(cols):
        nxt = (c + 1) % cols
        if mirror:
            over = grid[c][0]
            for i in range(n - 1):
                crossings.append(Crossing(over=over, under=(grid[c][i + 1], grid[nxt][i])))
        else:
            over = grid[c][n - 1]
            for i in range(1, n):
                crossings.append(Crossing(over=over, under=(grid[c][i - 1], grid[nxt][i])))
    return len(arc_of_root), tuple(crossings), tuple(grid)


def gen_torus(spec: TorusSpec) -> Diagram:
    """Closed-braid diagram with |p|*n one-over-all columns.

    In each column one strand passes over the other n-1 as a single uncut
    arc while every other strand shifts one position after one under-pass;
    the closure identifies each strand's last arc with its first. Negative p
    uses the mirrored column.
    """
    arc_count, crossings, _ = _torus_wiring(spec)
    return Diagram(
        name=spec.name,
        arc_count=arc_count,
        crossings=crossings,
        free_circles=0,
        claimed_minimal=True,
    )


def torus_arc_grid(spec: TorusSpec) -> tuple[tuple[int, ...], ...]:
    """Arc index at every (column, strand position) of the generated braid.

    Row c lists the n parallel arcs entering column c; row 0 is the closure
    seam and always holds arcs 0..n-1 in position order.
    """
    _, _, grid = _torus_wiring(spec)
    return grid


def build_torus_matrix(n: int) -> IntMatrix:
    """Column recoloring matrix: new colors Y from old X via Y = A X.

    Row 0 picks X[n-1] (the over strand keeps its color while moving to the
    top position); row i >= 1 encodes Y[i] = 2*X[n-1] - X[i-1], the single
    under-pass of every other strand. A is unimodular.
    """
    if n < 2:
        raise InvalidSpecError(f"strand count {n} must be at least 2")
    rows = []
    first = [0] * n
    first[n - 1] = 1
    rows.append(first)
    for i in range(1, n):
        row = [0] * n
        row[i - 1] = -1
        row[n - 1] += 2
        rows.append(row)
    return IntMatrix.from_rows(rows)
