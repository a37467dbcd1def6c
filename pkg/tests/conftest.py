"""Shared fixtures: bundled graph files and seeded random-graph corpora."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import pytest

from falklift import GainGraph, parse_graph

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


def random_gain_graph(
    rng: random.Random, min_ell: int = 2, max_ell: int = 5
) -> GainGraph:
    """A random validated gain graph: no loops, at most doubled pairs,
    gains in {-2..2}, balanced digons rejected by redraw."""
    ell = rng.randint(min_ell, max_ell)
    edges: list[tuple[int, int, int]] = []
    for u, v in combinations(range(1, ell + 1), 2):
        mult = rng.choices((0, 1, 2), weights=(3, 4, 3))[0]
        if mult == 0:
            continue
        tail, head = (u, v) if rng.random() < 0.5 else (v, u)
        gain = rng.randint(-2, 2)
        edges.append((tail, head, gain))
        if mult == 2:
            tail2, head2 = (u, v) if rng.random() < 0.5 else (v, u)
            while True:
                gain2 = rng.randint(-2, 2)
                same = gain2 == gain if (tail2, head2) == (tail, head) else gain2 == -gain
                if not same:
                    break
            edges.append((tail2, head2, gain2))
    rng.shuffle(edges)
    return GainGraph.build(ell, edges)


def random_switching(rng: random.Random, g: GainGraph) -> dict[int, Fraction]:
    return {
        v: Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        for v in range(1, g.vertex_count + 1)
    }


@pytest.fixture(scope="session")
def fig4_graph() -> GainGraph:
    """The bundled 4-vertex example with census (9,2,5,1,2)."""
    return parse_graph(fixture_text("phi3_44.gg"))


@pytest.fixture(scope="session")
def gcirc_file_graph() -> GainGraph:
    return parse_graph(fixture_text("gcirc.gg"))


@pytest.fixture(scope="session")
def s3_file_graph() -> GainGraph:
    return parse_graph(fixture_text("s3.gg"))
