"""Additive rational gain graphs: balance, switching, validation, file format.

A gain graph is a multigraph on vertices 1..l whose edges carry a rational
gain that flips sign when the edge is traversed backwards.  A closed walk
is *balanced* when its oriented gain sum is zero.  The standing hypotheses
of every downstream computation are: no loops, at most two parallel edges
per vertex pair, and every parallel pair unbalanced; `validate` reports
violations of these as data rather than exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class MalformedWalkError(ValueError):
    """A walk whose stated vertices do not match its edges."""


class GraphParseError(ValueError):
    """A syntax error in the gain-graph text format."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True)
class GainEdge:
    """One stored orientation of an edge; the reverse reading negates the gain."""

    id: int
    tail: int
    head: int
    gain: Fraction

    def gain_from(self, u: int, v: int) -> Fraction:
        """Traversal gain from u to v along this edge."""
        if (u, v) == (self.tail, self.head):
            return self.gain
        if (u, v) == (self.head, self.tail):
            return -self.gain
        raise MalformedWalkError(
            f"edge {self.id} joins {{{self.tail},{self.head}}}, not ({u},{v})"
        )

    @property
    def pair(self) -> tuple[int, int]:
        return (self.tail, self.head) if self.tail < self.head else (self.head, self.tail)


@dataclass(frozen=True)
class GainGraph:
    """l vertices (1-based) plus an ordered list of gain edges with ids 1..n."""

    vertex_count: int
    edges: tuple[GainEdge, ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be >= 1")
        for i, e in enumerate(self.edges, start=1):
            if e.id != i:
                raise ValueError(f"edge ids must be 1..n in order, got {e.id} at {i}")
            if not (1 <= e.tail <= self.vertex_count and 1 <= e.head <= self.vertex_count):
                raise ValueError(f"edge {e.id} endpoint out of range")

    @classmethod
    def build(
        cls, vertex_count: int, edges: Iterable[tuple[int, int, Fraction | int]]
    ) -> "GainGraph":
        """Construct from (tail, head, gain) triples; ids follow input order."""
        built = tuple(
            GainEdge(i, t, h, Fraction(g)) for i, (t, h, g) in enumerate(edges, start=1)
        )
        return cls(vertex_count, built)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge(self, edge_id: int) -> GainEdge:
        return self.edges[edge_id - 1]

    def edges_between(self, u: int, v: int) -> list[GainEdge]:
        p = (u, v) if u < v else (v, u)
        return [e for e in self.edges if e.pair == p]


@dataclass(frozen=True)
class Violation:
    """One failed standing hypothesis, naming the offending edges."""

    kind: str  # "loop" | "triple_parallel" | "balanced_digon"
    edge_ids: tuple[int, ...]
    message: str


class InvalidGraphError(ValueError):
    """A graph that fails `validate` was passed where a valid one is required."""

    def __init__(self, violations: list["Violation"]):
        self.violations = violations
        super().__init__(
            "invalid gain graph: " + "; ".join(v.message for v in violations)
        )


def require_valid(g: "GainGraph") -> None:
    violations = validate(g)
    if violations:
        raise InvalidGraphError(violations)


def circle_gain(g: GainGraph, walk: Sequence[int]) -> Fraction:
    """Gain sum of a closed walk.

    The walk is an alternating vertex/edge sequence
    ``[v0, e1, v1, e2, ..., ek, v0]`` of vertex indices and edge ids,
    closing on its start.
    """
    if len(walk) < 3 or len(walk) % 2 == 0:
        raise MalformedWalkError("walk must alternate v0,e1,v1,...,ek,vk")
    if walk[0] != walk[-1]:
        raise MalformedWalkError("walk is not closed")
    total = Fraction(0)
    for i in range(1, len(walk), 2):
        u, eid, v = walk[i - 1], walk[i], walk[i + 1]
        if not (1 <= eid <= g.edge_count):
            raise MalformedWalkError(f"unknown edge id {eid}")
        total += g.edge(eid).gain_from(u, v)
    return total


def is_balanced_circle(g: GainGraph, walk: Sequence[int]) -> bool:
    """True iff the closed walk has gain zero (traversal independent)."""
    return circle_gain(g, walk) == 0


def switch(g: GainGraph, lam: Mapping[int, Fraction | int]) -> GainGraph:
    """Re-gauge gains by vertex potentials: gain -> -lam(tail)+gain+lam(head).

    Every circle's gain is preserved.  lam must assign a value to every
    vertex.
    """
    missing = [v for v in range(1, g.vertex_count + 1) if v not in lam]
    if missing:
        raise ValueError(f"switching function missing vertices {missing}")
    return GainGraph(
        g.vertex_count,
        tuple(
            GainEdge(
                e.id, e.tail, e.head, -Fraction(lam[e.tail]) + e.gain + Fraction(lam[e.head])
            )
            for e in g.edges
        ),
    )


def parallel_classes(g: GainGraph) -> dict[tuple[int, int], list[int]]:
    """Edge ids grouped by unordered endpoint pair, ascending ids within."""
    classes: dict[tuple[int, int], list[int]] = {}
    for e in g.edges:
        if e.tail != e.head:
            classes.setdefault(e.pair, []).append(e.id)
    return classes


def digon_is_balanced(e1: GainEdge, e2: GainEdge) -> bool:
    """True iff two parallel edges have equal gains in a common orientation."""
    if (e1.tail, e1.head) == (e2.tail, e2.head):
        return e1.gain == e2.gain
    return e1.gain == -e2.gain


def validate(g: GainGraph) -> list[Violation]:
    """Check the standing hypotheses; an empty list means the graph is usable.

    Violations: loops; more than two parallel edges on a pair; a parallel
    pair whose 2-circle is balanced (which would duplicate a hyperplane).
    """
    out: list[Violation] = []
    for e in g.edges:
        if e.tail == e.head:
            out.append(Violation("loop", (e.id,), f"edge {e.id} is a loop at {e.tail}"))
    for pair, ids in sorted(parallel_classes(g).items()):
        if len(ids) > 2:
            out.append(
                Violation(
                    "triple_parallel",
                    tuple(ids),
                    f"{len(ids)} parallel edges {ids} on pair {pair}",
                )
            )
        elif len(ids) == 2:
            e1, e2 = g.edge(ids[0]), g.edge(ids[1])
            if digon_is_balanced(e1, e2):
                out.append(
                    Violation(
                        "balanced_digon",
                        tuple(ids),
                        f"parallel edges {ids} on pair {pair} form a balanced digon",
                    )
                )
    return out


# --- text format ------------------------------------------------------------
#
# Line-oriented, UTF-8, '#' starts a comment to end of line:
#   vertices <l>
#   edge <tail> <head> <gain>      (gain: signed integer or p/q)
# Edge ids are assigned 1,2,... in file order.


def parse_graph(text: str) -> GainGraph:
    vertex_count = None
    edges: list[tuple[int, int, Fraction]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "vertices":
            if vertex_count is not None:
                raise GraphParseError(lineno, "duplicate 'vertices' line")
            if len(tokens) != 2:
                raise GraphParseError(lineno, "expected: vertices <count>")
            try:
                vertex_count = int(tokens[1])
            except ValueError:
                raise GraphParseError(lineno, f"bad vertex count {tokens[1]!r}") from None
            if vertex_count < 1:
                raise GraphParseError(lineno, "vertex count must be >= 1")
        elif tokens[0] == "edge":
            if vertex_count is None:
                raise GraphParseError(lineno, "'edge' before 'vertices'")
            if len(tokens) != 4:
                raise GraphParseError(lineno, "expected: edge <tail> <head> <gain>")
            try:
                tail, head = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphParseError(lineno, "endpoints must be integers") from None
            try:
                gain = Fraction(tokens[3])
            except (ValueError, ZeroDivisionError):
                raise GraphParseError(lineno, f"bad gain {tokens[3]!r}") from None
            if not (1 <= tail <= vertex_count and 1 <= head <= vertex_count):
                raise GraphParseError(
                    lineno, f"endpoint out of range 1..{vertex_count}"
                )
            edges.append((tail, head, gain))
        else:
            raise GraphParseError(lineno, f"unknown directive {tokens[0]!r}")
    if vertex_count is None:
        raise GraphParseError(1, "missing 'vertices' line")
    return GainGraph.build(vertex_count, edges)


def serialize_graph(g: GainGraph) -> str:
    """Canonical text form; re-parsing yields an equal graph."""
    lines = [f"vertices {g.vertex_count}"]
    lines.extend(f"edge {e.tail} {e.head} {e.gain}" for e in g.edges)
    return "\n".join(lines) + "\n"
