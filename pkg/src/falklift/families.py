"""Gain-graph generators for the coned braid, Shi, Linial and semiorder
arrangements, with their closed-form phi3 values.

Each family lives on l vertices; homogenising an affine hyperplane
``x_i - x_j + c = 0`` against x0 makes c the gain of an edge oriented
i -> j.  Pairs are emitted in lexicographic order, and within a pair the
gains follow the defining order of the family.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graphs import GainGraph

FAMILIES = ("braid", "shi", "linial", "semiorder")

# gains per pair (i < j), oriented i -> j
_PAIR_GAINS = {
    "braid": (0,),
    "shi": (0, -1),
    "linial": (-1,),
    "semiorder": (1, -1),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    ell: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.ell < 1:
            raise ValueError("ell must be >= 1")


def generate(spec: FamilySpec) -> GainGraph:
    """Gain graph whose complete lift is the cone of the named arrangement."""
    gains = _PAIR_GAINS[spec.family]
    edges = [
        (i, j, g) for i, j in combinations(range(1, spec.ell + 1), 2) for g in gains
    ]
    return GainGraph.build(spec.ell, edges)


def phi3_closed_form(spec: FamilySpec) -> int:
    """The family's exact phi3 as a function of l alone."""
    l = spec.ell
    if spec.family == "braid":
        return 2 * comb(l + 1, 4)
    if spec.family == "shi":
        value = l * (l - 1) * (2 * l * l + l - 4)
        assert value % 6 == 0
        return value // 6
    if spec.family == "linial":
        return 0
    return l * (l - 1)  # semiorder
