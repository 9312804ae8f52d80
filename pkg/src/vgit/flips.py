"""Variation of the quotient across the slope sweep, wall by wall.

Sweeping the slope from the lowest weight to the highest visits the 2m - 1
chambers with nonempty semistable locus.  The chain records, per chamber,
the semistable support patterns and the quotient descriptor; per wall, it
records the flip data: crossing the wall at weight d_i from below, the
strata flowing into block i from above (max = i) leave the semistable
locus and the strata flowing out of block i (min = i) enter, while the
fixed classes inside block i exist only on the wall itself.  The empty
outside chamber is kept out of the chain and reported as a footer index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .cstar import Chamber, chambers, semistable_supports
from .quotients import QuotientDescriptor, quotient_descriptor
from .weights import SupportPattern, WeightDecomposition


@dataclass(frozen=True)
class FlipStep:
    """One chamber of the sweep: 1-based index, chamber, data at that slope."""

    index: int
    chamber: Chamber
    semistable: frozenset[SupportPattern]
    quotient: QuotientDescriptor


@dataclass(frozen=True)
class WallCrossing:
    """Strata deltas when the slope passes the wall at ``weight`` upward."""

    block: int
    weight: int
    entering: tuple[tuple[int, int], ...]
    leaving: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class FlipChain:
    decomposition: WeightDecomposition
    steps: tuple[FlipStep, ...]
    crossings: tuple[WallCrossing, ...]
    empty_chamber_index: int


def flip_chain(decomp: WeightDecomposition) -> FlipChain:
    """The full sweep: 2m - 1 chamber steps plus one crossing per wall."""
    structure = chambers(decomp)
    total = len(structure)
    steps = tuple(
        FlipStep(
            index=idx,
            chamber=structure.at(idx),
            semistable=semistable_supports(decomp, idx),
            quotient=quotient_descriptor(decomp, idx),
        )
        for idx in range(1, total)
    )
    m = decomp.m
    crossings = []
    for i in range(1, m + 1):
        entering = sorted(
            (i, nu) for nu in range(i + 1, m + 1)
        )
        leaving = sorted(
            (mu, i) for mu in range(1, i)
        )
        crossings.append(
            WallCrossing(
                block=i,
                weight=decomp.weights[i - 1],
                entering=tuple(entering),
                leaving=tuple(leaving),
            )
        )
    return FlipChain(
        decomposition=decomp,
        steps=steps,
        crossings=tuple(crossings),
        empty_chamber_index=total,
    )


def count_stability_notions(critical_values: Iterable[Union[int, Fraction]]) -> int:
    """Two stability notions per distinct critical value: 2 x #distinct.

    The input is the multiset of values the support extremes can take;
    each distinct value contributes its wall and one adjacent gap.
    """
    values = [Fraction(v) for v in critical_values]
    if not values:
        raise ValueError("need at least one critical value")
    return 2 * len(set(values))
