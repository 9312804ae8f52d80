"""Quotient descriptors per slope chamber and the two-block polarization law.

For two blocks, the open-chamber quotient is the product of the two fixed
projective spaces, polarized by O(a, b) with a = k*d2 - d and b = -k*d1 + d;
the entries are positive exactly when the slope d/k is strictly between the
weights.  ``realize_bidegree`` inverts that law: any prescribed positive
bidegree arises, up to the positive multiple r, from a suitable (k, d).

For other chambers the quotient is either empty (outside the weight span),
a single fixed component (extreme walls), or is only described here by the
list of strata whose points are semistable (no closed-form variety is
attempted).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .cstar import (
    Chamber,
    EmptyComplement,
    OpenInterval,
    Wall,
    _chamber_index,
    chamber_of,
    chambers,
    representative_slope,
)
from .weights import Linearization, SlopeLike, WeightDecomposition, as_slope


@dataclass(frozen=True)
class Empty:
    """No semistable points; the quotient is the empty set."""


@dataclass(frozen=True)
class SingleFixed:
    """Quotient is the fixed projective space of one weight block."""

    block: int


@dataclass(frozen=True)
class TwoBlockProduct:
    """Product of the two fixed spaces with an O(a, b) polarization."""

    bidegree: tuple[int, int]


@dataclass(frozen=True)
class GeneralStratified:
    """Only the contributing strata are recorded; (i, i) marks a fixed class."""

    strata: tuple[tuple[int, int], ...]


QuotientKind = Union[Empty, SingleFixed, TwoBlockProduct, GeneralStratified]


@dataclass(frozen=True)
class QuotientDescriptor:
    chamber: Chamber
    kind: QuotientKind


def two_block_polarization(
    decomp: WeightDecomposition, lin: Linearization
) -> tuple[int, int]:
    """Bidegree (k*d2 - d, -k*d1 + d) of the product quotient's polarization.

    Defined only for two blocks and a slope strictly inside (d1, d2); on a
    wall or outside, no product quotient exists and a ValueError is raised.

    >>> D = WeightDecomposition(((0, 1), (1, 1)))
    >>> two_block_polarization(D, Linearization(2, 1))
    (1, 1)
    >>> two_block_polarization(D, Linearization(5, 3))
    (2, 3)
    """
    if decomp.m != 2:
        raise ValueError(f"need exactly two blocks, got {decomp.m}")
    d1, d2 = decomp.weights
    k, d = lin.k, lin.d
    if not k * d1 < d < k * d2:
        raise ValueError(
            f"slope {Fraction(d, k)} is not strictly inside ({d1}, {d2}); "
            "no product quotient there"
        )
    return k * d2 - d, -k * d1 + d


def realize_bidegree(
    decomp: WeightDecomposition, target: tuple[int, int]
) -> tuple[int, int, int]:
    """(k, d, r) with k*d2 - d = r*a and -k*d1 + d = r*b for target (a, b).

    Both target entries must be positive; the returned r is the smallest
    positive one admitting integer k, and k and d are then forced.  The
    induced slope d/k automatically lies strictly inside (d1, d2).

    >>> D = WeightDecomposition(((0, 1), (1, 1)))
    >>> realize_bidegree(D, (2, 3))
    (5, 3, 1)
    >>> realize_bidegree(D, (1, 1))
    (2, 1, 1)
    """
    if decomp.m != 2:
        raise ValueError(f"need exactly two blocks, got {decomp.m}")
    a, b = target
    for v in (a, b):
        if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
            raise ValueError(f"target bidegree entries must be positive integers, got {target}")
    d1, d2 = decomp.weights
    span = d2 - d1
    # Adding the two defining equations: k * span = r * (a + b).
    g = math.gcd(span, a + b)
    r = span // g
    k = (a + b) // g
    d = k * d2 - r * a
    return k, d, r


def quotient_descriptor(
    decomp: WeightDecomposition,
    chamber: Union[int, Chamber],
    slope: Union[SlopeLike, None] = None,
) -> QuotientDescriptor:
    """Describe the chamber's quotient.

    ``slope`` picks the linearization for the two-block bidegree; it must lie
    in the chamber and defaults to the chamber's representative slope, whose
    minimal linearization is used.
    """
    idx = _chamber_index(decomp, chamber)
    cham = chambers(decomp).at(idx)
    if slope is None:
        eta = representative_slope(decomp, idx)
    else:
        eta = as_slope(slope)
        if chamber_of(decomp, eta) != idx:
            raise ValueError(f"slope {eta} does not lie in chamber {idx}")
    m = decomp.m
    if isinstance(cham, EmptyComplement):
        return QuotientDescriptor(cham, Empty())
    if isinstance(cham, Wall):
        i = cham.block
        if i == 1 or i == m:
            return QuotientDescriptor(cham, SingleFixed(i))
        labels = [(i, i)] + [
            (mu, nu)
            for mu in range(1, m + 1)
            for nu in range(mu + 1, m + 1)
            if mu <= i <= nu
        ]
        return QuotientDescriptor(cham, GeneralStratified(tuple(sorted(labels))))
    assert isinstance(cham, OpenInterval)
    i = idx // 2  # gap between blocks i and i+1
    if m == 2:
        lin = Linearization.from_slope(eta)
        return QuotientDescriptor(
            cham, TwoBlockProduct(two_block_polarization(decomp, lin))
        )
    labels = [
        (mu, nu)
        for mu in range(1, m + 1)
        for nu in range(mu + 1, m + 1)
        if mu <= i < nu
    ]
    return QuotientDescriptor(cham, GeneralStratified(tuple(sorted(labels))))
