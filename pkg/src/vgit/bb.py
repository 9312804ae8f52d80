"""Flow stratification of projective space under a diagonal C*-action.

Each point limits, as the group parameter goes to 0 or to infinity, onto
the fixed locus of its lowest or highest touched weight block.  Grouping
points by that pair of limits stratifies the space: the fixed components
F_1 < ... < F_m (one per block, ordered by weight, F_1 the source and F_m
the sink) and, for i < j, the stratum C_ij of points flowing from F_i down
to F_j up.  At support-pattern level C_ij is simply {min = i, max = j}.

The open set U_i of points whose downward limit sits at or below block i
and whose upward limit sits strictly above is exactly the semistable locus
of the open slope chamber (d_i, d_{i+1}); that identity is exercised by
the test suite rather than assumed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .weights import SupportPattern, WeightDecomposition, all_support_patterns


@dataclass(frozen=True)
class FixedComponent:
    """Fixed locus of one weight block: a P^(dim-1) inside the ambient space."""

    block: int
    weight: int
    projective_dim: int


@dataclass(frozen=True, eq=False)
class BBData:
    """Fixed components plus the strata map (i, j) -> support classes, i < j."""

    decomposition: WeightDecomposition
    fixed_components: tuple[FixedComponent, ...]
    strata: Mapping[tuple[int, int], frozenset[SupportPattern]]
    source: int
    sink: int

    @property
    def order(self) -> tuple[int, ...]:
        """The chain F_1 < F_2 < ... < F_m as block indices."""
        return tuple(range(1, self.decomposition.m + 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BBData):
            return NotImplemented
        return (
            self.decomposition == other.decomposition
            and self.fixed_components == other.fixed_components
            and dict(self.strata) == dict(other.strata)
        )


def bb_data(decomp: WeightDecomposition) -> BBData:
    """Full stratification data: fixed components and all strata C_ij, i < j."""
    fixed = tuple(
        FixedComponent(i, d, n - 1) for i, (d, n) in enumerate(decomp.blocks, start=1)
    )
    strata: dict[tuple[int, int], set[SupportPattern]] = {
        (i, j): set() for i in range(1, decomp.m) for j in range(i + 1, decomp.m + 1)
    }
    for s in all_support_patterns(decomp):
        lo, hi = min(s.present), max(s.present)
        if lo < hi:
            strata[lo, hi].add(s)
    frozen = {key: frozenset(v) for key, v in strata.items()}
    return BBData(
        decomposition=decomp,
        fixed_components=fixed,
        strata=MappingProxyType(frozen),
        source=1,
        sink=decomp.m,
    )


def flow_limits(
    decomp: WeightDecomposition, support: SupportPattern
) -> tuple[int, int]:
    """(block of the limit at 0, block of the limit at infinity).

    With increasing weights, the parameter-to-0 limit keeps the lowest
    touched block and the parameter-to-infinity limit the highest.
    """
    if max(support.present) > decomp.m:
        raise ValueError(
            f"support mentions block {max(support.present)} but only {decomp.m} exist"
        )
    return min(support.present), max(support.present)


def u_set(decomp: WeightDecomposition, i: int) -> frozenset[SupportPattern]:
    """Union of strata C_mu,nu over mu <= i < nu: supports with min <= i < max."""
    if not 1 <= i <= decomp.m - 1:
        raise ValueError(f"index {i} out of range 1..{decomp.m - 1}")
    return frozenset(
        s
        for s in all_support_patterns(decomp)
        if min(s.present) <= i < max(s.present)
    )
