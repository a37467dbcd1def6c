"""Counting the five distinguished biased subgraphs and the census formula.

The counters read a validated gain graph and count *edge selections*:

* k3     balanced triangles (three vertices, one edge per pair, gain 0);
* k4     balanced complete quadrilaterals (four vertices, one edge per
         pair, all four triangles balanced);
* d2     vertex pairs joined by two parallel edges (unbalanced digons);
* s3     vertex triples whose three doubled pairs form the triple-digon
         pattern with exactly three balanced triangle selections;
* g_circ five-edge selections (two digons sharing an apex plus one base
         edge, exactly two balanced triangle selections) not contained in
         a triple-digon subgraph of the same kind as s3.

The invariant phi3 of the associated complete-lift arrangement is then
``2*(k3 + k4 + d2 + g_circ) + 5*s3``.

Recognition of the s3 / g_circ patterns uses the balanced-triangle-count
shortcut; `is_biased_isomorphic` is the brute-force oracle the shortcut
is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterator

from .graphs import (
    GainEdge,
    GainGraph,
    digon_is_balanced,
    parallel_classes,
    require_valid,
)


@dataclass(frozen=True)
class BiasedCensus:
    """The five subgraph counts that determine phi3."""

    k3: int
    k4: int
    d2: int
    g_circ: int
    s3: int

    def __post_init__(self):
        for name in ("k3", "k4", "d2", "g_circ", "s3"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.k3, self.k4, self.d2, self.g_circ, self.s3)


@dataclass(frozen=True)
class TrianglePattern:
    """One edge selection on a vertex triple, with its circle gain.

    The gain is taken in the fixed orientation low->mid, mid->high,
    minus low->high.
    """

    vertices: tuple[int, int, int]
    edge_low_mid: int
    edge_mid_high: int
    edge_low_high: int
    gain: Fraction

    @property
    def balanced(self) -> bool:
        return self.gain == 0

    @property
    def edge_ids(self) -> tuple[int, int, int]:
        return (self.edge_low_mid, self.edge_mid_high, self.edge_low_high)


def triangle_gain(g: GainGraph, x: int, y: int, z: int,
                  exy: GainEdge, eyz: GainEdge, exz: GainEdge) -> Fraction:
    return exy.gain_from(x, y) + eyz.gain_from(y, z) - exz.gain_from(x, z)


def triangle_patterns(g: GainGraph) -> Iterator[TrianglePattern]:
    """All triangle edge selections, triples lexicographic, edges by id."""
    for x, y, z in combinations(range(1, g.vertex_count + 1), 3):
        exys = g.edges_between(x, y)
        eyzs = g.edges_between(y, z)
        exzs = g.edges_between(x, z)
        for exy in exys:
            for eyz in eyzs:
                for exz in exzs:
                    yield TrianglePattern(
                        (x, y, z),
                        exy.id,
                        eyz.id,
                        exz.id,
                        triangle_gain(g, x, y, z, exy, eyz, exz),
                    )


def count_k3(g: GainGraph) -> int:
    """Number of balanced triangle edge selections."""
    require_valid(g)
    return sum(1 for t in triangle_patterns(g) if t.balanced)


def _quad_selections(g: GainGraph, quad: tuple[int, int, int, int]):
    """Yield one-edge-per-pair selections on four vertices as pair->edge maps."""
    pairs = list(combinations(quad, 2))
    choices = [g.edges_between(u, v) for u, v in pairs]
    if any(not c for c in choices):
        return
    for combo in product(*choices):
        yield dict(zip(pairs, combo))


def _four_cycles_balanced(g: GainGraph, quad, sel) -> bool:
    """Exhaustively check the three 4-circles of a K4 selection."""
    a, b, c, d = quad

    def edge(u, v):
        return sel[(u, v) if u < v else (v, u)]

    for order in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
        gain = Fraction(0)
        for i in range(4):
            u, v = order[i], order[(i + 1) % 4]
            gain += edge(u, v).gain_from(u, v)
        if gain != 0:
            return False
    return True


def count_k4(g: GainGraph, check_four_circles: bool = False) -> int:
    """Number of balanced complete-quadrilateral selections.

    Balance is decided from the four triangles; with `check_four_circles`
    the three 4-circles of every counted selection are verified too (they
    are forced, each being a signed sum of two triangle gains).
    """
    require_valid(g)
    count = 0
    for quad in combinations(range(1, g.vertex_count + 1), 4):
        for sel in _quad_selections(g, quad):
            ok = True
            for x, y, z in combinations(quad, 3):
                exy = sel[(x, y)]
                eyz = sel[(y, z)]
                exz = sel[(x, z)]
                if triangle_gain(g, x, y, z, exy, eyz, exz) != 0:
                    ok = False
                    break
            if ok:
                if check_four_circles and not _four_cycles_balanced(g, quad, sel):
                    raise AssertionError(
                        f"balanced K4 selection on {quad} with unbalanced 4-circle"
                    )
                count += 1
    return count


def count_d2(g: GainGraph) -> int:
    """Number of vertex pairs carrying two parallel edges."""
    require_valid(g)
    return sum(1 for ids in parallel_classes(g).values() if len(ids) == 2)


def _balanced_triangle_count(g: GainGraph, x: int, y: int, z: int,
                             exys, eyzs, exzs) -> int:
    count = 0
    for exy in exys:
        for eyz in eyzs:
            for exz in exzs:
                if triangle_gain(g, x, y, z, exy, eyz, exz) == 0:
                    count += 1
    return count


def _is_s3_triple(g: GainGraph, x: int, y: int, z: int) -> bool:
    """Shortcut: three unbalanced digons with exactly 3 of 8 balanced triangles."""
    exys = g.edges_between(x, y)
    eyzs = g.edges_between(y, z)
    exzs = g.edges_between(x, z)
    if not (len(exys) == len(eyzs) == len(exzs) == 2):
        return False
    return _balanced_triangle_count(g, x, y, z, exys, eyzs, exzs) == 3


def count_s3(g: GainGraph) -> int:
    """Number of vertex triples inducing the triple-digon pattern."""
    require_valid(g)
    return sum(
        1
        for x, y, z in combinations(range(1, g.vertex_count + 1), 3)
        if _is_s3_triple(g, x, y, z)
    )


def count_g_circ(g: GainGraph) -> int:
    """Number of apex-digon selections not inside an s3-type triple.

    A candidate is a vertex triple with an apex vertex whose two incident
    pairs are both doubled, plus one chosen edge on the remaining pair;
    it matches the pattern when exactly 2 of its 4 triangle selections
    are balanced.  Candidates whose triple induces the s3 pattern are
    excluded (the five edges plus the unused parallel edge would form it).
    """
    require_valid(g)
    count = 0
    for triple in combinations(range(1, g.vertex_count + 1), 3):
        x, y, z = triple
        if _is_s3_triple(g, x, y, z):
            continue
        for apex in triple:
            u, w = [v for v in triple if v != apex]
            digon_u = g.edges_between(apex, u)
            digon_w = g.edges_between(apex, w)
            if len(digon_u) != 2 or len(digon_w) != 2:
                continue
            for base in g.edges_between(u, w):
                balanced = 0
                for eu in digon_u:
                    for ew in digon_w:
                        gain = (
                            eu.gain_from(apex, u)
                            + base.gain_from(u, w)
                            + ew.gain_from(w, apex)
                        )
                        if gain == 0:
                            balanced += 1
                if balanced == 2:
                    count += 1
    return count


def census(g: GainGraph) -> BiasedCensus:
    """All five counters on a validated gain graph."""
    return BiasedCensus(
        k3=count_k3(g),
        k4=count_k4(g),
        d2=count_d2(g),
        g_circ=count_g_circ(g),
        s3=count_s3(g),
    )


def phi3_census(c: BiasedCensus) -> int:
    """phi3 from the census: 2*(k3 + k4 + d2 + g_circ) + 5*s3."""
    return 2 * (c.k3 + c.k4 + c.d2 + c.g_circ) + 5 * c.s3


# --- brute-force biased isomorphism (test oracle, small graphs only) --------


def enumerate_circles(g: GainGraph) -> list[tuple[frozenset[int], bool]]:
    """Every circle (closed path edge set) with its balance; needs <= 4 vertices."""
    if g.vertex_count > 4:
        raise ValueError("circle enumeration is implemented for <= 4 vertices")
    circles: list[tuple[frozenset[int], bool]] = []
    for e in g.edges:  # loops, if present
        if e.tail == e.head:
            circles.append((frozenset((e.id,)), e.gain == 0))
    for ids in parallel_classes(g).values():
        for i, j in combinations(ids, 2):
            circles.append(
                (frozenset((i, j)), digon_is_balanced(g.edge(i), g.edge(j)))
            )
    verts = range(1, g.vertex_count + 1)
    for x, y, z in combinations(verts, 3):
        for exy in g.edges_between(x, y):
            for eyz in g.edges_between(y, z):
                for exz in g.edges_between(x, z):
                    bal = triangle_gain(g, x, y, z, exy, eyz, exz) == 0
                    circles.append((frozenset((exy.id, eyz.id, exz.id)), bal))
    for quad in combinations(verts, 4):
        a, b, c, d = quad
        for order in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            legs = [(order[i], order[(i + 1) % 4]) for i in range(4)]
            choices = [g.edges_between(u, v) for u, v in legs]
            if any(not ch for ch in choices):
                continue
            for combo in product(*choices):
                gain = sum(
                    (e.gain_from(u, v) for e, (u, v) in zip(combo, legs)),
                    Fraction(0),
                )
                circles.append((frozenset(e.id for e in combo), gain == 0))
    return circles


def _pair_classes_with_loops(g: GainGraph) -> dict[tuple[int, int], list[int]]:
    classes: dict[tuple[int, int], list[int]] = {}
    for e in g.edges:
        key = (e.tail, e.head) if e.tail <= e.head else (e.head, e.tail)
        classes.setdefault(key, []).append(e.id)
    return classes


def is_biased_isomorphic(a: GainGraph, b: GainGraph) -> bool:
    """Brute-force biased-graph isomorphism for graphs with <= 4 vertices.

    Searches every vertex bijection and every endpoint-preserving edge
    bijection for one under which balanced circles map exactly onto
    balanced circles.
    """
    if a.vertex_count > 4 or b.vertex_count > 4:
        raise ValueError("is_biased_isomorphic is implemented for <= 4 vertices")
    if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        return False

    circles_a = enumerate_circles(a)
    balance_b = dict(enumerate_circles(b))
    classes_a = _pair_classes_with_loops(a)
    classes_b = _pair_classes_with_loops(b)
    if sorted(len(v) for v in classes_a.values()) != sorted(
        len(v) for v in classes_b.values()
    ):
        return False

    verts_a = list(range(1, a.vertex_count + 1))
    for image in permutations(range(1, b.vertex_count + 1)):
        sigma = dict(zip(verts_a, image))
        mapped_pairs = {}
        ok = True
        for pair, ids in classes_a.items():
            u, v = sorted((sigma[pair[0]], sigma[pair[1]]))
            ids_b = classes_b.get((u, v), [])
            if len(ids_b) != len(ids):
                ok = False
                break
            mapped_pairs[pair] = (ids, ids_b)
        if not ok or len(classes_b) != len(mapped_pairs):
            continue
        groups = list(mapped_pairs.values())
        for matchings in product(
            *(permutations(ids_b) for _, ids_b in groups)
        ):
            edge_map: dict[int, int] = {}
            for (ids_a, _), perm in zip(groups, matchings):
                edge_map.update(zip(ids_a, perm))
            if all(
                balance_b[frozenset(edge_map[i] for i in ids)] == bal
                for ids, bal in circles_a
            ):
                return True
    return False


# --- reference patterns ------------------------------------------------------


def reference_d2() -> GainGraph:
    """An unbalanced digon: two parallel edges with gains 1 and 0."""
    return GainGraph.build(2, [(1, 2, 1), (1, 2, 0)])


def reference_gcirc() -> GainGraph:
    """Two digons on a shared apex plus one base edge, 2 of 4 triangles balanced."""
    return GainGraph.build(
        3, [(2, 1, 1), (1, 2, 0), (1, 3, 0), (3, 1, 1), (2, 3, 0)]
    )


def reference_s3() -> GainGraph:
    """Three mutually overlapping digons with 3 of 8 triangles balanced."""
    return GainGraph.build(
        3, [(2, 1, 1), (1, 2, 0), (1, 3, 0), (3, 1, 1), (2, 3, 0), (2, 3, 1)]
    )
