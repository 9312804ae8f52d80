"""Two fixed worked examples wired through the generic machinery.

The first is a pair action: a rank-2 group (a semisimple factor times a
C*) acting on a space of binary-form pairs whose invariant ring is
generated in degree 12 by four classical invariants of degrees 4, 6, 4
and 4.  Under the weighting that scales the two pair components by d1 and
d2, the nine degree-12 generators of the relevant ring carry the linear
weight forms tabulated below, of which only three can occur as the
extreme weights of a point.  Counting distinct critical values then
counts stability notions on the invariant-theoretic quotient versus on
the ambient projective space directly; the standing answer is (6, 4)
whenever d1 != d2.

The second is the generic two-block C* example: four chambers, the
product quotient on the open chamber with its bidegree law, and the
inverse problem of realizing prescribed bidegrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cstar import Chamber, chambers, representative_slope, semistable_supports
from .flips import count_stability_notions
from .quotients import TwoBlockProduct, quotient_descriptor, realize_bidegree
from .weights import SupportPattern, WeightDecomposition


@dataclass(frozen=True)
class CubicPairWeights:
    """Weight bookkeeping of the binary-form pair action.

    Forms are coefficient pairs (a, b) meaning the linear form
    a*d1 + b*d2 in the block scalings.
    """

    base_weight_forms: tuple[tuple[int, int], ...]
    generator_degrees: tuple[int, ...]
    induced_weight_forms: tuple[tuple[int, int], ...]
    attainable_extreme_forms: tuple[tuple[int, int], ...]


CUBIC_PAIR = CubicPairWeights(
    base_weight_forms=((1, 0), (0, 1)),
    generator_degrees=(4, 6, 4, 4),
    induced_weight_forms=(
        (6, 6),
        (8, 4),
        (5, 7),
        (10, 2),
        (4, 8),
        (7, 5),
        (12, 0),
        (9, 3),
        (3, 9),
    ),
    attainable_extreme_forms=((6, 6), (12, 0), (3, 9)),
)


def evaluate_form(form: tuple[int, int], d1: int, d2: int) -> int:
    """Value of the linear form a*d1 + b*d2."""
    a, b = form
    return a * d1 + b * d2


def notion_counts(d1: int, d2: int) -> tuple[int, int]:
    """(stability notions on the invariant quotient, notions on ambient space).

    The quotient count uses the evaluated attainable extreme forms, the
    ambient count the raw block scalings {d1, d2}.  The three extreme
    forms evaluate to pairwise distinct values whenever d1 != d2, so the
    generic answer is (6, 4); equal scalings are rejected.
    """
    if d1 == d2:
        raise ValueError("the two block scalings must differ")
    on_quotient = count_stability_notions(
        evaluate_form(f, d1, d2) for f in CUBIC_PAIR.attainable_extreme_forms
    )
    on_ambient = count_stability_notions((d1, d2))
    return on_quotient, on_ambient


@dataclass(frozen=True)
class TwoBlockReport:
    """Chamber-by-chamber tour of the generic two-block example."""

    decomposition: WeightDecomposition
    chamber_list: tuple[Chamber, ...]
    representative_slopes: tuple[Fraction, ...]
    semistable_sets: tuple[frozenset[SupportPattern], ...]
    open_chamber_bidegree: tuple[int, int]
    realizations: tuple[tuple[tuple[int, int], tuple[int, int, int]], ...]


def two_block_report(d1: int, d2: int) -> TwoBlockReport:
    """Tour the four chambers of weights d1 < d2 with one coordinate each.

    Includes the product quotient's bidegree at the open chamber's
    representative slope and bidegree realizations for targets (1, 1) and
    (2, 3).
    """
    if not d1 < d2:
        raise ValueError(f"need d1 < d2, got ({d1}, {d2})")
    decomp = WeightDecomposition(((d1, 1), (d2, 1)))
    structure = chambers(decomp)
    reps = tuple(representative_slope(decomp, i) for i in range(1, 5))
    sets = tuple(semistable_supports(decomp, i) for i in range(1, 5))
    open_kind = quotient_descriptor(decomp, 2).kind
    assert isinstance(open_kind, TwoBlockProduct)
    targets = ((1, 1), (2, 3))
    realizations = tuple((t, realize_bidegree(decomp, t)) for t in targets)
    return TwoBlockReport(
        decomposition=decomp,
        chamber_list=tuple(structure.chambers),
        representative_slopes=reps,
        semistable_sets=sets,
        open_chamber_bidegree=open_kind.bidegree,
        realizations=realizations,
    )
