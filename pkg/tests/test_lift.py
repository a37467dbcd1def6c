"""Arrangement construction, 3-circuits, exterior generators and phi3 paths."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from falklift import (
    Arrangement,
    FamilySpec,
    GainGraph,
    InvalidGraphError,
    boundary_generator,
    build_arrangement,
    census,
    dependent_triples_by_rank,
    dim_i2_3,
    dim_i2_3_census_formula,
    dim_span_f3,
    f3_generators,
    generate,
    phi3_falk,
    phi3_kernel,
    report,
    reference_gcirc,
    reference_s3,
    switch,
    three_circuits,
    w2_census_formula,
    w2_geometric,
)

from .conftest import random_gain_graph, random_switching


def _sign_normalised(normal):
    lead = next(v for v in normal if v != 0)
    return tuple(v / lead for v in normal)


class TestBuildArrangement:
    def test_gcirc_defining_polynomial(self):
        # factors x0, x1-x2-x0, x1-x2, x2-x3, x1-x3, x1-x3-x0 up to sign
        a = build_arrangement(reference_gcirc())
        got = {_sign_normalised(n) for n in a.normals}
        expected_rows = [
            (1, 0, 0, 0),
            (-1, 1, -1, 0),
            (0, 1, -1, 0),
            (0, 0, 1, -1),
            (0, 1, 0, -1),
            (-1, 1, 0, -1),
        ]
        expected = {
            _sign_normalised(tuple(Fraction(v) for v in row)) for row in expected_rows
        }
        assert got == expected

    def test_empty_graph(self):
        a = build_arrangement(GainGraph.build(2, []))
        assert a.dimension == 3
        assert a.normals == ((Fraction(1), Fraction(0), Fraction(0)),)

    def test_half_gain_edge(self):
        a = build_arrangement(GainGraph.build(2, [(1, 2, Fraction(1, 2))]))
        assert a.normals == (
            (Fraction(1), Fraction(0), Fraction(0)),
            (Fraction(1, 2), Fraction(1), Fraction(-1)),
        )

    def test_invalid_graph_rejected(self):
        with pytest.raises(InvalidGraphError):
            build_arrangement(GainGraph.build(2, [(1, 2, 0), (2, 1, 0)]))


class TestThreeCircuits:
    def test_gcirc(self, gcirc_file_graph):
        assert three_circuits(gcirc_file_graph) == [
            (0, 1, 2),
            (0, 3, 4),
            (1, 4, 5),
            (2, 3, 5),
        ]

    def test_linial_has_none(self):
        for ell in (2, 4, 6):
            assert three_circuits(generate(FamilySpec("linial", ell))) == []

    def test_single_balanced_triangle(self):
        g = GainGraph.build(3, [(1, 2, 0), (2, 3, 0), (1, 3, 0)])
        assert three_circuits(g) == [(1, 2, 3)]

    def test_matches_rank_oracle_on_fixtures(self, fig4_graph):
        for g in (reference_gcirc(), reference_s3(), fig4_graph):
            assert three_circuits(g) == dependent_triples_by_rank(build_arrangement(g))

    def test_matches_rank_oracle_random(self):
        rng = random.Random(31)
        checked = 0
        while checked < 25:
            g = random_gain_graph(rng)
            if g.edge_count > 11:
                continue
            assert three_circuits(g) == dependent_triples_by_rank(build_arrangement(g))
            checked += 1


class TestBoundaryGenerator:
    def test_outside_index_expansions(self):
        one = Fraction(1)
        assert boundary_generator(3, (0, 1, 2)) == {
            (0, 1, 3): one,
            (0, 2, 3): -one,
            (1, 2, 3): one,
        }
        assert boundary_generator(1, (0, 3, 4)) == {
            (1, 3, 4): one,
            (0, 1, 3): -one,
            (0, 1, 4): one,
        }
        assert boundary_generator(4, (2, 3, 5)) == {
            (2, 4, 5): one,
            (3, 4, 5): -one,
            (2, 3, 4): one,
        }
        assert boundary_generator(0, (1, 4, 5)) == {
            (0, 4, 5): one,
            (0, 1, 5): -one,
            (0, 1, 4): one,
        }
        # middle insertions pick up the transposition sign
        assert boundary_generator(1, (2, 3, 5)) == {
            (1, 3, 5): one,
            (1, 2, 5): -one,
            (1, 2, 3): one,
        }

    def test_inside_index_collapses(self):
        one = Fraction(1)
        for t in (0, 3, 4):
            assert boundary_generator(t, (0, 3, 4)) == {(0, 3, 4): one}

    def test_unsorted_circuit_rejected(self):
        with pytest.raises(ValueError):
            boundary_generator(1, (2, 0, 3))


class TestDimensions:
    def test_f3_sizes(self):
        gcirc, s3 = reference_gcirc(), reference_s3()
        a1, c1 = build_arrangement(gcirc), three_circuits(gcirc)
        a2, c2 = build_arrangement(s3), three_circuits(s3)
        assert len(f3_generators(a1, c1)) == 12
        assert len(f3_generators(a2, c2)) == 24

    def test_f3_count_formula_random(self):
        rng = random.Random(32)
        for _ in range(20):
            g = random_gain_graph(rng)
            a, circuits = build_arrangement(g), three_circuits(g)
            assert len(f3_generators(a, circuits)) == len(circuits) * (
                a.hyperplane_count - 3
            )

    def test_dim_span_f3_worked_values(self):
        cases = [
            (reference_gcirc(), 10),
            (reference_s3(), 19),
            (generate(FamilySpec("braid", 4)), 14),
        ]
        for g, expected in cases:
            a, circuits = build_arrangement(g), three_circuits(g)
            assert dim_span_f3(a, circuits) == expected

    def test_dim_i2_3_worked_values(self):
        for g, expected in ((reference_gcirc(), 14), (reference_s3(), 25)):
            a, circuits = build_arrangement(g), three_circuits(g)
            assert dim_i2_3(a, circuits) == expected

    def test_no_circuits_dim_zero(self):
        g = generate(FamilySpec("linial", 4))
        a, circuits = build_arrangement(g), three_circuits(g)
        assert circuits == []
        assert dim_i2_3(a, circuits) == 0
        assert dim_span_f3(a, circuits) == 0


class TestW2:
    def test_worked_values(self):
        assert w2_geometric(build_arrangement(reference_gcirc())) == 11
        assert w2_geometric(build_arrangement(reference_s3())) == 15

    def test_generic_arrangement(self):
        rows = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 4)]
        a = Arrangement(
            3, tuple(tuple(Fraction(v) for v in row) for row in rows)
        )
        assert w2_geometric(a) == 6  # C(4,2), every pair its own flat

    def test_non_simple_rejected(self):
        rows = [(1, 0), (2, 0)]
        a = Arrangement(2, tuple(tuple(Fraction(v) for v in row) for row in rows))
        with pytest.raises(ValueError, match="not simple"):
            w2_geometric(a)

    def test_census_formula_identity(self, fig4_graph):
        rng = random.Random(33)
        graphs = [reference_gcirc(), reference_s3(), fig4_graph]
        graphs += [random_gain_graph(rng) for _ in range(25)]
        for g in graphs:
            assert w2_geometric(build_arrangement(g)) == w2_census_formula(
                g.edge_count, census(g)
            )


class TestPhi3Paths:
    def test_falk_worked_values(self, fig4_graph):
        for g, expected in (
            (reference_gcirc(), 10),
            (reference_s3(), 17),
            (fig4_graph, 44),
        ):
            a, circuits = build_arrangement(g), three_circuits(g)
            assert phi3_falk(a, circuits) == expected

    def test_kernel_worked_values(self):
        for g, expected in ((reference_gcirc(), 10), (reference_s3(), 17)):
            a, circuits = build_arrangement(g), three_circuits(g)
            assert phi3_kernel(a, circuits) == expected
        g = generate(FamilySpec("linial", 5))
        assert phi3_kernel(build_arrangement(g), three_circuits(g)) == 0

    def test_dim_formula_identity_random(self):
        rng = random.Random(34)
        for _ in range(25):
            g = random_gain_graph(rng)
            a, circuits = build_arrangement(g), three_circuits(g)
            assert dim_i2_3(a, circuits) == dim_i2_3_census_formula(
                g.edge_count, census(g)
            )


class TestReport:
    def test_bundled_example(self, fig4_graph):
        r = report(fig4_graph)
        assert r.phi3_census == r.phi3_falk == r.phi3_kernel == 44
        assert r.census.as_tuple() == (9, 2, 5, 1, 2)
        assert r.n_edges == 11 and r.m_hyperplanes == 12
        assert r.w2 == 52 and r.dim_i2_3 == 124
        assert len(r.circuits) == r.census.k3 + r.census.d2

    def test_linial_and_semiorder(self):
        r = report(generate(FamilySpec("linial", 5)))
        assert r.phi3_census == r.phi3_falk == r.phi3_kernel == 0
        r = report(generate(FamilySpec("semiorder", 4)))
        assert r.phi3_census == r.phi3_falk == r.phi3_kernel == 12

    def test_invalid_graph(self):
        with pytest.raises(InvalidGraphError):
            report(GainGraph.build(2, [(1, 2, 0), (1, 2, 0)]))

    def test_disagreement_is_a_hard_error(self, monkeypatch):
        import falklift.lift as lift_mod

        monkeypatch.setattr(lift_mod, "phi3_census", lambda c: 999)
        with pytest.raises(lift_mod.DisagreementError, match="999"):
            report(reference_gcirc())

    def test_switching_invariance(self):
        rng = random.Random(35)
        for _ in range(8):
            g = random_gain_graph(rng)
            lam = random_switching(rng, g)
            r1, r2 = report(g), report(switch(g, lam))
            assert r1.phi3_falk == r2.phi3_falk
            assert r1.census == r2.census
            assert r1.circuits == r2.circuits
