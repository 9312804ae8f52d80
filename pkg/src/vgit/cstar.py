"""Stability of projective points under a diagonal C*-action.

For weights d_1 < ... < d_m and the k-th power of the action twisted by
character d, a point is semistable exactly when the slope d/k lies in the
interval [min, max] of the weights its support touches, and polystable when
the slope is either strictly inside or the support is concentrated on the
single weight equal to the slope.  Both facts reduce stability to pure
interval arithmetic on the support pattern, which this module implements
with integers only.

As the slope sweeps the rational line, the semistable locus changes only at
the weights themselves.  That yields exactly 2m slope chambers: each weight
is a one-point wall, consecutive weights bound open intervals, and
everything outside [d_1, d_m] (including the slope at infinity) forms one
chamber with empty semistable locus.

``semistable_by_invariant_oracle`` is the slow route: it certifies
semistability by exhibiting a nonconstant invariant monomial of bounded
degree, and is kept deliberately independent of the interval tests so each
can check the other.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .weights import (
    INFINITY,
    Linearization,
    SlopeLike,
    SupportPattern,
    WeightDecomposition,
    all_support_patterns,
    as_slope,
)


@dataclass(frozen=True)
class Wall:
    """One-point chamber {d} at the ``block``-th weight (1-based)."""

    block: int
    weight: int


@dataclass(frozen=True)
class OpenInterval:
    """Open chamber (lo, hi) between consecutive weights."""

    lo: int
    hi: int


@dataclass(frozen=True)
class EmptyComplement:
    """Slopes outside [d_1, d_m], plus infinity; nothing is semistable."""


Chamber = Union[Wall, OpenInterval, EmptyComplement]


@dataclass(frozen=True)
class ChamberStructure:
    """The 2m chambers in sweep order: wall, gap, wall, ..., wall, outside."""

    decomposition: WeightDecomposition
    chambers: tuple[Chamber, ...]

    def __len__(self) -> int:
        return len(self.chambers)

    def __iter__(self):
        return iter(self.chambers)

    def __getitem__(self, i: int) -> Chamber:
        return self.chambers[i]

    def at(self, index: int) -> Chamber:
        """Chamber by 1-based sweep index (matching ``chamber_of``)."""
        if not 1 <= index <= len(self.chambers):
            raise ValueError(f"chamber index {index} out of range 1..{len(self.chambers)}")
        return self.chambers[index - 1]


def chambers(decomp: WeightDecomposition) -> ChamberStructure:
    """All 2m slope chambers of the decomposition, in sweep order."""
    ws = decomp.weights
    out: list[Chamber] = []
    for i, w in enumerate(ws, start=1):
        out.append(Wall(i, w))
        if i < len(ws):
            out.append(OpenInterval(w, ws[i]))
    out.append(EmptyComplement())
    return ChamberStructure(decomp, tuple(out))


def chamber_of(decomp: WeightDecomposition, eta: SlopeLike) -> int:
    """1-based index of the chamber containing slope ``eta``.

    Walls are odd indices 2i-1, gaps are even indices 2i, and everything
    outside [d_1, d_m] (infinity included) is chamber 2m.
    """
    v = as_slope(eta)
    m = decomp.m
    if v is INFINITY:
        return 2 * m
    assert isinstance(v, Fraction)
    ws = decomp.weights
    if v < ws[0] or v > ws[-1]:
        return 2 * m
    for i, w in enumerate(ws, start=1):
        if v == w:
            return 2 * i - 1
        if v < w:
            return 2 * (i - 1)
    raise AssertionError("unreachable")


def _chamber_index(decomp: WeightDecomposition, chamber: Union[int, Chamber]) -> int:
    if isinstance(chamber, int) and not isinstance(chamber, bool):
        if not 1 <= chamber <= 2 * decomp.m:
            raise ValueError(f"chamber index {chamber} out of range 1..{2 * decomp.m}")
        return chamber
    structure = chambers(decomp)
    for idx, c in enumerate(structure, start=1):
        if c == chamber:
            return idx
    raise ValueError(f"{chamber!r} is not a chamber of {decomp.weights}")


def representative_slope(
    decomp: WeightDecomposition, chamber: Union[int, Chamber]
) -> Fraction:
    """A canonical finite slope inside the chamber.

    Walls use the weight itself, gaps their midpoint, and the outside
    chamber uses d_m + 1.
    """
    idx = _chamber_index(decomp, chamber)
    ws = decomp.weights
    m = decomp.m
    if idx == 2 * m:
        return Fraction(ws[-1] + 1)
    if idx % 2 == 1:
        return Fraction(ws[(idx - 1) // 2])
    i = idx // 2
    return Fraction(ws[i - 1] + ws[i], 2)


def d_extremes(
    decomp: WeightDecomposition, support: SupportPattern
) -> tuple[int, int]:
    """(min, max) weight over the blocks present in ``support``."""
    if max(support.present) > decomp.m:
        raise ValueError(
            f"support mentions block {max(support.present)} but only {decomp.m} exist"
        )
    ws = decomp.weights
    touched = [ws[i - 1] for i in support.present]
    return min(touched), max(touched)


def is_semistable(
    decomp: WeightDecomposition, support: SupportPattern, lin: Linearization
) -> bool:
    """Interval criterion: d/k lies in [min, max] of the touched weights."""
    lo, hi = d_extremes(decomp, support)
    return lin.k * lo <= lin.d <= lin.k * hi


def is_polystable(
    decomp: WeightDecomposition, support: SupportPattern, lin: Linearization
) -> bool:
    """Closed-orbit criterion: slope strictly inside, or support on one weight
    equal to the slope."""
    lo, hi = d_extremes(decomp, support)
    k, d = lin.k, lin.d
    if lo == hi:
        return d == k * lo
    return k * lo < d < k * hi


@functools.lru_cache(maxsize=None)
def _extremes_table(
    decomp: WeightDecomposition,
) -> tuple[tuple[SupportPattern, int, int], ...]:
    """(pattern, d_min, d_max) for every pattern, computed once per decomposition."""
    ws = decomp.weights
    out = []
    for s in all_support_patterns(decomp):
        touched = [ws[i - 1] for i in s.present]
        out.append((s, min(touched), max(touched)))
    return tuple(out)


def semistable_supports_at(
    decomp: WeightDecomposition, eta: SlopeLike
) -> frozenset[SupportPattern]:
    """Support patterns semistable at a given slope (empty set at infinity)."""
    v = as_slope(eta)
    if v is INFINITY:
        return frozenset()
    assert isinstance(v, Fraction)
    p, q = v.numerator, v.denominator
    return frozenset(
        s for s, lo, hi in _extremes_table(decomp) if q * lo <= p <= q * hi
    )


def semistable_supports(
    decomp: WeightDecomposition, chamber: Union[int, Chamber]
) -> frozenset[SupportPattern]:
    """Semistable support patterns of a chamber (constant across it)."""
    return semistable_supports_at(decomp, representative_slope(decomp, chamber))


def minimum_oracle_degree_bound(decomp: WeightDecomposition, lin: Linearization) -> int:
    """Search depth up to which the invariant-monomial oracle is complete.

    k * (d_m - d_1) + k suffices: when the slope test passes, clearing
    denominators in a convex combination of the extreme touched weights
    produces an invariant monomial of total degree at most this bound.
    """
    return lin.k * decomp.spread + lin.k


def semistable_by_invariant_oracle(
    decomp: WeightDecomposition,
    support: SupportPattern,
    lin: Linearization,
    degree_bound: int | None = None,
) -> bool:
    """Certify semistability by a nonconstant invariant monomial.

    Searches for block exponents e >= 0, not all zero, supported in
    ``support``, of total degree t <= ``degree_bound``, with
    sum(e_i * k * d_i) = t * d.  Such an e lifts to a monomial in the
    point's nonzero coordinates that is invariant for the twisted action,
    so a hit certifies semistability and, because the bound is enforced to
    be complete, a miss refutes it.  Bounds below
    :func:`minimum_oracle_degree_bound` are rejected rather than silently
    searched incompletely.

    The search runs as a bitset dynamic program over achievable values of
    sum(e_i * (k*d_i - d)), one big-int OR/shift pass per degree.
    """
    if max(support.present) > decomp.m:
        raise ValueError(
            f"support mentions block {max(support.present)} but only {decomp.m} exist"
        )
    complete_from = minimum_oracle_degree_bound(decomp, lin)
    if degree_bound is None:
        degree_bound = complete_from
    elif degree_bound < complete_from:
        raise ValueError(
            f"degree bound {degree_bound} is below the completeness bound {complete_from}"
        )
    k, d = lin.k, lin.d
    ws = decomp.weights
    vals = sorted({k * ws[i - 1] - d for i in support.present})
    if 0 in vals:
        return True
    if vals[0] > 0 or vals[-1] < 0:
        # All shifted weights on one side of zero: no cancellation possible.
        return False
    # Bit (sum + t*V) of acc marks sum as achievable with exactly t factors.
    shift_base = max(-vals[0], vals[-1])
    acc = 1
    for t in range(1, degree_bound + 1):
        nxt = 0
        for v in vals:
            nxt |= acc << (v + shift_base)
        acc = nxt
        if acc >> (t * shift_base) & 1:
            return True
    return False
