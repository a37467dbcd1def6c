"""Complete-lift arrangements and the three phi3 computation paths.

A validated gain graph on l vertices with n edges lifts to a central
arrangement of n+1 hyperplanes in (l+1)-space: hyperplane 0 is
``{x0 = 0}`` and edge i with tail t, head h, gain g gives
``x_t - x_h + g*x0 = 0``.

phi3 is computed three ways and cross-checked:

* census path     2*(k3 + k4 + d2 + g_circ) + 5*s3;
* Falk formula    2*C(m+1,3) - m*w2 + C(m,3) - dim (I2)^3 with m = n+1;
* kernel path     m*(#3-circuits) - dim (I2)^3 (rank-nullity on the
                  multiplication map into degree 3).

dim (I2)^3 is the exact rank of the stacked degree-3 generators
``e_t * boundary(e_S)`` over all 3-circuits S, computed by `linalg`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .census import BiasedCensus, census, phi3_census, triangle_patterns
from .graphs import GainGraph, parallel_classes, require_valid
from .linalg import rank_of_stacked

ThreeCircuit = tuple[int, int, int]
# Sparse degree-3 exterior vector: sorted index triple -> coefficient.
ExteriorVector = dict[tuple[int, int, int], Fraction]


@dataclass(frozen=True)
class Arrangement:
    """Ordered hyperplane normals in (l+1)-space; index 0 is {x0 = 0}."""

    dimension: int
    normals: tuple[tuple[Fraction, ...], ...]

    @property
    def hyperplane_count(self) -> int:
        return len(self.normals)


class DisagreementError(RuntimeError):
    """The three phi3 paths disagreed; this always indicates a bug."""


@dataclass(frozen=True)
class Phi3Report:
    """phi3 by every path plus the cross-checkable intermediates."""

    n_edges: int
    m_hyperplanes: int
    census: BiasedCensus
    circuits: tuple[ThreeCircuit, ...]
    w2: int
    dim_i2_3: int
    phi3_census: int
    phi3_falk: int
    phi3_kernel: int


def build_arrangement(g: GainGraph) -> Arrangement:
    """Canonical complete-lift arrangement of a validated gain graph."""
    require_valid(g)
    dim = g.vertex_count + 1
    zero = Fraction(0)
    normals = [tuple([Fraction(1)] + [zero] * g.vertex_count)]
    for e in g.edges:
        row = [zero] * dim
        row[0] = e.gain
        row[e.tail] = Fraction(1)
        row[e.head] = Fraction(-1)
        normals.append(tuple(row))
    return Arrangement(dim, tuple(normals))


def three_circuits(g: GainGraph) -> list[ThreeCircuit]:
    """Dependent hyperplane triples: balanced triangles, and digons with 0."""
    require_valid(g)
    circuits: list[ThreeCircuit] = []
    for ids in parallel_classes(g).values():
        if len(ids) == 2:
            circuits.append((0, ids[0], ids[1]))
    for t in triangle_patterns(g):
        if t.balanced:
            circuits.append(tuple(sorted(t.edge_ids)))
    return sorted(circuits)


def dependent_triples_by_rank(a: Arrangement) -> list[ThreeCircuit]:
    """Brute-force oracle: all index triples whose normals have rank 2."""
    out: list[ThreeCircuit] = []
    for triple in combinations(range(a.hyperplane_count), 3):
        rows = [
            {i: v for i, v in enumerate(a.normals[h]) if v != 0} for h in triple
        ]
        if rank_of_stacked(rows) == 2:
            out.append(triple)
    return out


def _wedge_insert(t: int, x: int, y: int) -> tuple[tuple[int, int, int], int]:
    """Sort e_t ^ e_x ^ e_y (x < y, t distinct) with its permutation sign."""
    if t < x:
        return (t, x, y), 1
    if t < y:
        return (x, t, y), -1
    return (x, y, t), 1


def boundary_generator(t: int, s: ThreeCircuit) -> ExteriorVector:
    """The degree-3 generator e_t ^ (e_jk - e_ik + e_ij) for s = (i,j,k).

    For t inside s two terms vanish and the result is +e_s.
    """
    i, j, k = s
    if not i < j < k:
        raise ValueError(f"circuit {s} must be a sorted triple")
    out: ExteriorVector = {}
    for (x, y), coeff in (((j, k), 1), ((i, k), -1), ((i, j), 1)):
        if t == x or t == y:
            continue
        key, sign = _wedge_insert(t, x, y)
        out[key] = Fraction(coeff * sign)
    return out


def f3_generators(a: Arrangement, circuits: list[ThreeCircuit]) -> list[ExteriorVector]:
    """Generators e_t * boundary(e_s) with t outside the circuit s."""
    gens: list[ExteriorVector] = []
    for s in circuits:
        members = set(s)
        for t in range(a.hyperplane_count):
            if t not in members:
                gens.append(boundary_generator(t, s))
    return gens


def dim_span_f3(a: Arrangement, circuits: list[ThreeCircuit]) -> int:
    """Rank of the outside-index generators alone (worked-example diagnostic)."""
    return rank_of_stacked(f3_generators(a, circuits))


def dim_i2_3(a: Arrangement, circuits: list[ThreeCircuit]) -> int:
    """Dimension of the degree-3 part of the 2-adic ideal.

    Stacks the circuit basis vectors e_s together with all e_t*boundary(e_s)
    and takes the exact rank.
    """
    vectors: list[ExteriorVector] = [{s: Fraction(1)} for s in circuits]
    vectors.extend(f3_generators(a, circuits))
    return rank_of_stacked(vectors)


def _rref_pair(r1: tuple[Fraction, ...], r2: tuple[Fraction, ...]):
    """Canonical reduced row-echelon form of two independent normals."""
    rows = [list(r1), list(r2)]
    pivot_row = 0
    for col in range(len(rows[0])):
        src = None
        for r in range(pivot_row, 2):
            if rows[r][col] != 0:
                src = r
                break
        if src is None:
            continue
        rows[pivot_row], rows[src] = rows[src], rows[pivot_row]
        lead = rows[pivot_row][col]
        rows[pivot_row] = [v / lead for v in rows[pivot_row]]
        for r in range(2):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * p for v, p in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == 2:
            break
    if pivot_row != 2:
        raise ValueError("proportional normals: arrangement is not simple")
    return (tuple(rows[0]), tuple(rows[1]))


def w2_geometric(a: Arrangement) -> int:
    """Second Whitney number from the codimension-2 intersection flats.

    Hyperplane pairs are grouped by the canonical RREF of their two
    normals; a flat shared by m hyperplanes contributes m - 1.
    """
    flats: dict[tuple, set[int]] = {}
    for i, j in combinations(range(a.hyperplane_count), 2):
        key = _rref_pair(a.normals[i], a.normals[j])
        flats.setdefault(key, set()).update((i, j))
    return sum(len(members) - 1 for members in flats.values())


def w2_census_formula(n_edges: int, c: BiasedCensus) -> int:
    """w2 predicted from the census: C(n+1,2) - k3 - d2."""
    return comb(n_edges + 1, 2) - c.k3 - c.d2


def dim_i2_3_census_formula(n_edges: int, c: BiasedCensus) -> int:
    """dim (I2)^3 predicted from the census."""
    return (n_edges - 1) * (c.k3 + c.d2) - 2 * c.k4 - 2 * c.g_circ - 5 * c.s3


def _phi3_falk_from_parts(m: int, w2: int, dim_ideal: int) -> int:
    return 2 * comb(m + 1, 3) - m * w2 + comb(m, 3) - dim_ideal


def phi3_falk(a: Arrangement, circuits: list[ThreeCircuit]) -> int:
    """phi3 via the Whitney-number formula for m = n+1 hyperplanes."""
    return _phi3_falk_from_parts(
        a.hyperplane_count, w2_geometric(a), dim_i2_3(a, circuits)
    )


def phi3_kernel(a: Arrangement, circuits: list[ThreeCircuit]) -> int:
    """phi3 as the kernel dimension of degree-1-times-degree-2 multiplication.

    The degree-2 ideal has one independent generator per 3-circuit, so the
    domain has dimension m * #circuits and the image is (I2)^3.
    """
    return a.hyperplane_count * len(circuits) - dim_i2_3(a, circuits)


def report(g: GainGraph) -> Phi3Report:
    """Full cross-checked phi3 report; raises DisagreementError on divergence."""
    a = build_arrangement(g)
    circuits = three_circuits(g)
    cen = census(g)
    w2 = w2_geometric(a)
    dim_ideal = dim_i2_3(a, circuits)
    m = a.hyperplane_count
    p_census = phi3_census(cen)
    p_falk = _phi3_falk_from_parts(m, w2, dim_ideal)
    p_kernel = m * len(circuits) - dim_ideal
    if not (p_census == p_falk == p_kernel):
        raise DisagreementError(
            f"phi3 paths disagree: census={p_census} falk={p_falk} kernel={p_kernel}"
        )
    return Phi3Report(
        n_edges=g.edge_count,
        m_hyperplanes=m,
        census=cen,
        circuits=tuple(circuits),
        w2=w2,
        dim_i2_3=dim_ideal,
        phi3_census=p_census,
        phi3_falk=p_falk,
        phi3_kernel=p_kernel,
    )
