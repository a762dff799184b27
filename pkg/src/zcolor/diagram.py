"""Combinatorial link diagrams: arcs, crossings, validation, and the file format.

A diagram is a purely combinatorial object: `arc_count` arcs indexed from 0,
and a list of crossings, each naming one over-arc and an unordered pair of
under-arcs. Planarity is deliberately not checked; any data satisfying the
incidence invariants is accepted ("virtual" diagrams included). Crossing-free
components are modeled by `free_circles` dedicated arc indices that appear in
no crossing slot.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import DiagramFormatError, ValidationError

__all__ = [
    "Crossing",
    "Diagram",
    "ValidationReport",
    "validate",
    "is_connected",
    "link_components",
    "parse",
    "serialize",
    "load_diagram",
    "save_diagram",
]


@dataclass(frozen=True)
class Crossing:
    """One crossing: the arc passing over and the two under-arc ends.

    The under pair is unordered (the coloring relation is symmetric in it)
    and stored sorted ascending. `over` may coincide with one or both under
    entries; kinks are legal.
    """

    over: int
    under: tuple[int, int]

    def __post_init__(self):
        a, b = self.under
        if a > b:
            object.__setattr__(self, "under", (b, a))

    @property
    def arcs(self) -> tuple[int, int, int]:
        return (self.over, self.under[0], self.under[1])


@dataclass(frozen=True)
class Diagram:
    """Immutable link diagram."""

    name: str
    arc_count: int
    crossings: tuple[Crossing, ...]
    free_circles: int = 0
    claimed_minimal: bool = False

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.problems


def validate(d: Diagram) -> ValidationReport:
    """Check the structural invariants; problems name the offending indices."""
    problems: list[str] = []
    if d.arc_count < 0:
        problems.append(f"arc_count {d.arc_count} is negative")
    if d.free_circles < 0:
        problems.append(f"free_circles {d.free_circles} is negative")
    if d.free_circles > d.arc_count:
        problems.append(
            f"free_circles {d.free_circles} exceeds arc_count {d.arc_count}"
        )
    under_occ = [0] * max(d.arc_count, 0)
    over_occ = [0] * max(d.arc_count, 0)
    for idx, c in enumerate(d.crossings):
        bad = [a for a in c.arcs if a < 0 or a >= d.arc_count]
        if bad:
            problems.append(
                f"crossing {idx} references arc {bad[0]} outside 0..{d.arc_count - 1}"
            )
            continue
        over_occ[c.over] += 1
        under_occ[c.under[0]] += 1
        under_occ[c.under[1]] += 1
    if not problems:
        idle = [a for a in range(d.arc_count) if under_occ[a] == 0]
        for a in range(d.arc_count):
            if under_occ[a] not in (0, 2):
                problems.append(
                    f"arc {a} occurs {under_occ[a]} time(s) as an under-arc, expected 0 or 2"
                )
        if len(idle) != d.free_circles:
            problems.append(
                f"{len(idle)} arc(s) with no under-crossings but free_circles is "
                f"{d.free_circles}: arcs {idle}"
            )
        for a in idle:
            if over_occ[a]:
                problems.append(
                    f"arc {a} never passes under but crosses over {over_occ[a]} time(s)"
                )
    return ValidationReport(tuple(problems))


def is_connected(d: Diagram) -> bool:
    """True iff the arc/crossing incidence graph is connected and free_circles == 0.

    Nodes are arcs and crossings; a crossing is adjacent to its over-arc and
    both under-arcs.
    """
    if d.free_circles:
        return False
    n_arcs = d.arc_count
    n_nodes = n_arcs + len(d.crossings)
    if n_nodes == 0:
        return True
    adj: list[list[int]] = [[] for _ in range(n_nodes)]
    for idx, c in enumerate(d.crossings):
        node = n_arcs + idx
        for a in set(c.arcs):
            adj[node].append(a)
            adj[a].append(node)
    seen = [False] * n_nodes
    queue = deque([0])
    seen[0] = True
    reached = 1
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                reached += 1
                queue.append(y)
    return reached == n_nodes


def link_components(d: Diagram) -> int:
    """Number of link components.

    The two under-arcs at a crossing are consecutive pieces of one strand,
    so components are the connected classes of arcs under that relation;
    arcs in no crossing count singly (free circles).
    """
    parent = list(range(d.arc_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.crossings:
        a, b = find(c.under[0]), find(c.under[1])
        if a != b:
            parent[a] = b
    return len({find(a) for a in range(d.arc_count)})


def _expect(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise DiagramFormatError(f"{where}: missing field '{key}'")
    value = obj[key]
    if kind is int and isinstance(value, bool):
        raise DiagramFormatError(f"{where}: field '{key}' must be an integer")
    if not isinstance(value, kind):
        raise DiagramFormatError(
            f"{where}: field '{key}' must be {kind.__name__}, got {type(value).__name__}"
        )
    return value


_TOP_FIELDS = {"name", "arc_count", "free_circles", "crossings", "claimed_minimal"}


def parse(text: str) -> Diagram:
    """Parse a diagram document; raises on malformed input or invalid diagrams."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramFormatError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise DiagramFormatError("document root must be an object")
    unknown = set(doc) - _TOP_FIELDS
    if unknown:
        raise DiagramFormatError(f"unknown field(s): {', '.join(sorted(unknown))}")
    name = _expect(doc, "name", str, "document")
    arc_count = _expect(doc, "arc_count", int, "document")
    free_circles = doc.get("free_circles", 0)
    if isinstance(free_circles, bool) or not isinstance(free_circles, int):
        raise DiagramFormatError("document: field 'free_circles' must be an integer")
    claimed = doc.get("claimed_minimal", False)
    if not isinstance(claimed, bool):
        raise DiagramFormatError("document: field 'claimed_minimal' must be a boolean")
    raw_crossings = _expect(doc, "crossings", list, "document")
    crossings = []
    for idx, item in enumerate(raw_crossings):
        where = f"crossings[{idx}]"
        if not isinstance(item, dict):
            raise DiagramFormatError(f"{where}: must be an object")
        if set(item) != {"over", "under"}:
            raise DiagramFormatError(f"{where}: expected exactly fields 'over' and 'under'")
        over = _expect(item, "over", int, where)
        under = _expect(item, "under", list, where)
        if len(under) != 2 or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in under
        ):
            raise DiagramFormatError(f"{where}: 'under' must be a pair of integers")
        crossings.append(Crossing(over=over, under=(under[0], under[1])))
    d = Diagram(
        name=name,
        arc_count=arc_count,
        crossings=tuple(crossings),
        free_circles=free_circles,
        claimed_minimal=claimed,
    )
    report = validate(d)
    if not report.ok:
        raise ValidationError(report.problems)
    return d


def serialize(d: Diagram) -> str:
    """Deterministic document for a diagram: sorted keys, sorted under-pairs."""
    doc: dict = {
        "name": d.name,
        "arc_count": d.arc_count,
        "free_circles": d.free_circles,
        "crossings": [
            {"over": c.over, "under": [c.under[0], c.under[1]]} for c in d.crossings
        ],
    }
    if d.claimed_minimal:
        doc["claimed_minimal"] = True
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def load_diagram(path) -> Diagram:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def save_diagram(d: Diagram, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(d))
        fh.write("\n")


def offset_union(diagrams: Iterable[Diagram], name: str) -> Diagram:
    """Disjoint union with arc indices offset; used for split-diagram fixtures."""
    arc_count = 0
    free = 0
    crossings: list[Crossing] = []
    for d in diagrams:
        for c in d.crossings:
            crossings.append(
                Crossing(c.over + arc_count, (c.under[0] + arc_count, c.under[1] + arc_count))
            )
        arc_count += d.arc_count
        free += d.free_circles
    return Diagram(name=name, arc_count=arc_count, crossings=tuple(crossings), free_circles=free)
