"""Stability for a product of tori acting diagonally, and its factorizations.

A rank-s torus acting diagonally on C^N is described by one integer weight
vector per coordinate.  A point with coordinate support S is semistable at
character slope eta exactly when eta lies in the convex hull of the
supported weight vectors, and polystable when it lies in the hull's
relative interior.  Both are decided by exact rational LPs: hull
membership is a feasibility problem over the standard simplex on S, and
relative interiority maximizes a uniform lower bound t on the barycentric
coordinates (positive optimum iff interior), using the fact that the
relative interior of the hull of finitely many points is exactly the set
of their strictly positive convex combinations.

For rank 2 with coordinates weighted (g_j, h_j), stability at (0, eta) can
also be computed in two steps: first pass to the quotient by the g-factor
at its untwisted linearization, then test the residual C*-action at eta.
Concretely the second step asks where eta sits relative to the interval of
normalized h-weights (h.e)/(sum e) over directions e >= 0 supported in S
with g.e = 0; the interval endpoints are two linear-fractional programs,
solved by normalizing sum(e) = 1.  ``commuting_principle_check`` compares
the one-step and two-step answers.

``chamber_scan`` runs the reverse factorization: quotient by the h-factor
first, sweeping one candidate slope per h-chamber.  A subtlety: the
residual g-test is NOT constant on h-chambers (a g-kernel direction can
pin the h-slope to a single interior point of an open chamber), so scanning
only chamber representatives can miss the witness.  The scan therefore also
tries the exact endpoints of the g-kernel slope interval; the lower
endpoint always carries a witness when one exists, making the scan
complete, while each endpoint still lies in some chamber of the sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import ratlp
from .cstar import chamber_of, chambers, is_semistable, representative_slope
from .weights import (
    Linearization,
    SupportPattern,
    WeightDecomposition,
    make_decomposition,
)

Rat = Union[int, Fraction]


@dataclass(frozen=True)
class TorusAction:
    """Diagonal action of a rank-s torus: one weight vector per coordinate."""

    rank: int
    coordinate_weights: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or isinstance(self.rank, bool) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        if not self.coordinate_weights:
            raise ValueError("need at least one coordinate")
        for w in self.coordinate_weights:
            if len(w) != self.rank:
                raise ValueError(
                    f"weight vector {w} has length {len(w)}, expected rank {self.rank}"
                )
            if any(not isinstance(c, int) or isinstance(c, bool) for c in w):
                raise ValueError(f"weight vector {w} has non-integer entries")

    @property
    def total_dim(self) -> int:
        return len(self.coordinate_weights)

    def weight_of(self, j: int) -> tuple[int, ...]:
        """Weight vector of 1-based coordinate ``j``."""
        if not 1 <= j <= self.total_dim:
            raise ValueError(f"coordinate {j} out of range 1..{self.total_dim}")
        return self.coordinate_weights[j - 1]

    def full_support(self) -> SupportPattern:
        return SupportPattern(frozenset(range(1, self.total_dim + 1)))


@dataclass(frozen=True)
class CharacterSlope:
    """Rational character of the torus divided by the power of the action."""

    eta: tuple[Fraction, ...]

    @classmethod
    def of(cls, *components: Rat) -> CharacterSlope:
        return cls(tuple(Fraction(c) for c in components))


SlopeVector = Union[CharacterSlope, Sequence[Rat]]


def _coerce_slope(slope: SlopeVector, rank: int) -> tuple[Fraction, ...]:
    eta = slope.eta if isinstance(slope, CharacterSlope) else tuple(Fraction(c) for c in slope)
    if len(eta) != rank:
        raise ValueError(f"slope has {len(eta)} components, expected {rank}")
    return tuple(Fraction(c) for c in eta)


def _supported_weights(
    action: TorusAction, support: SupportPattern
) -> list[tuple[int, ...]]:
    if max(support.present) > action.total_dim:
        raise ValueError(
            f"support mentions coordinate {max(support.present)} "
            f"but only {action.total_dim} exist"
        )
    return [action.coordinate_weights[j - 1] for j in sorted(support.present)]


def torus_semistable(
    action: TorusAction, support: SupportPattern, slope: SlopeVector
) -> bool:
    """True iff the slope lies in the convex hull of the supported weights."""
    eta = _coerce_slope(slope, action.rank)
    pts = _supported_weights(action, support)
    A = [[w[i] for w in pts] for i in range(action.rank)]
    A.append([1] * len(pts))
    b = list(eta) + [1]
    return ratlp.feasible_point(A, b) is not None


def torus_polystable(
    action: TorusAction, support: SupportPattern, slope: SlopeVector
) -> bool:
    """True iff the slope lies in the relative interior of that hull.

    Maximizes t subject to the slope being a convex combination with all
    barycentric coordinates >= t; interiority is exactly t > 0 at optimum.
    """
    eta = _coerce_slope(slope, action.rank)
    pts = _supported_weights(action, support)
    r = len(pts)
    # Variables: f_1..f_r >= 0 and t >= 0, with e_j = f_j + t.
    A = [[w[i] for w in pts] + [sum(w[i] for w in pts)] for i in range(action.rank)]
    A.append([1] * r + [r])
    b = list(eta) + [1]
    c = [0] * r + [-1]
    sol = ratlp.solve(c, A, b)
    if not sol.is_optimal:
        return False
    assert sol.objective is not None
    return -sol.objective > 0


def _split_two(action: TorusAction) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if action.rank != 2:
        raise ValueError(f"need a rank-2 action split as (g, h), got rank {action.rank}")
    g = tuple(w[0] for w in action.coordinate_weights)
    h = tuple(w[1] for w in action.coordinate_weights)
    return g, h


def g_kernel_slope_range(
    action: TorusAction, support: SupportPattern
) -> tuple[Fraction, Fraction] | None:
    """Interval of normalized h-weights over g-trivial supported directions.

    For a rank-2 action (g, h): the min and max of h.e over e >= 0 with
    supp(e) in ``support``, g.e = 0, normalized to sum(e) = 1.  These are
    the two linear-fractional programs of the two-step test.  None when no
    such direction exists (equivalently 0 is not in the g-weight hull).
    """
    _split_two(action)
    pts = _supported_weights(action, support)
    gs = [w[0] for w in pts]
    hs = [w[1] for w in pts]
    A = [[1] * len(pts), gs]
    b = [1, 0]
    lo, hi = ratlp.objective_range(A, b, hs)
    if not lo.is_optimal:
        return None
    assert lo.objective is not None and hi.objective is not None
    return lo.objective, hi.objective


def two_step_semistable(
    action: TorusAction, support: SupportPattern, eta_h: Rat
) -> bool:
    """Quotient by the g-factor at slope 0, then test the residual C* at eta_h.

    True iff 0 lies in the g-weight hull over the support and eta_h lies in
    the g-kernel slope interval.  The first condition is exactly
    nonemptiness of the interval's feasible set, so a missing interval
    answers False for both reasons at once.
    """
    rng = g_kernel_slope_range(action, support)
    if rng is None:
        return False
    eta = Fraction(eta_h)
    return rng[0] <= eta <= rng[1]


def two_step_polystable(
    action: TorusAction, support: SupportPattern, eta_h: Rat
) -> bool:
    """Polystable variant: relative interiors on both steps.

    The g-step asks for 0 in the relative interior of the g-weight hull;
    the residual step asks for eta_h in the relative interior of the
    g-kernel slope interval (which is the point itself when the interval
    degenerates).
    """
    g, _ = _split_two(action)
    g_action = TorusAction(1, tuple((c,) for c in g))
    if not torus_polystable(g_action, support, (Fraction(0),)):
        return False
    rng = g_kernel_slope_range(action, support)
    if rng is None:
        return False
    lo, hi = rng
    eta = Fraction(eta_h)
    if lo == hi:
        return eta == lo
    return lo < eta < hi


@dataclass(frozen=True)
class CommutingCheck:
    direct: bool
    two_step: bool
    agree: bool


def commuting_principle_check(
    action: TorusAction,
    support: SupportPattern,
    eta_h: Rat,
    *,
    polystable: bool = False,
) -> CommutingCheck:
    """Compare one-step stability at (0, eta_h) against the two-step route.

    ``polystable=True`` runs the polystable variants on both sides.  The
    two computations share no code path beyond the LP solver: the direct
    side is a single hull problem in the plane, the two-step side works
    through the g-quotient.
    """
    eta = Fraction(eta_h)
    slope = CharacterSlope.of(0, eta)
    if polystable:
        direct = torus_polystable(action, support, slope)
        two = two_step_polystable(action, support, eta)
    else:
        direct = torus_semistable(action, support, slope)
        two = two_step_semistable(action, support, eta)
    return CommutingCheck(direct, two, direct == two)


@dataclass(frozen=True)
class ChamberScan:
    """Outcome of the h-quotient-first scan; witness fields set when found."""

    direct: bool
    scanned: bool
    agree: bool
    witness_slope: Fraction | None
    witness_chamber: int | None


def _h_block_support(
    h_decomp: WeightDecomposition, hs: Sequence[int]
) -> SupportPattern:
    block_of = {w: i for i, w in enumerate(h_decomp.weights, start=1)}
    return SupportPattern(frozenset(block_of[v] for v in hs))


def chamber_scan(action: TorusAction, support: SupportPattern) -> ChamberScan:
    """Scan h-chambers for a slope where the h-then-g factorization succeeds.

    direct: 0 lies in the g-weight hull over the support (one feasibility
    LP).  scanned: some candidate slope eta is h-semistable for the support
    and admits a supported direction with h.e = eta, g.e = 0 (the residual
    g-test at slope 0).  Candidates are the g-kernel interval endpoints
    followed by one representative per h-chamber; see the module docstring
    for why the endpoints are required.  agree should always be true; it is
    returned rather than asserted so the equivalence stays testable.
    """
    g, h = _split_two(action)
    pts = _supported_weights(action, support)
    gs = [w[0] for w in pts]
    hs = [w[1] for w in pts]

    direct = ratlp.feasible_point([[1] * len(gs), gs], [1, 0]) is not None

    h_decomp = make_decomposition((w, 1) for w in set(h))
    h_support = _h_block_support(h_decomp, hs)
    structure = chambers(h_decomp)
    candidates: list[Fraction] = []
    rng = g_kernel_slope_range(action, support)
    if rng is not None:
        candidates.extend(rng)
    candidates.extend(
        representative_slope(h_decomp, i) for i in range(1, len(structure) + 1)
    )
    seen: set[Fraction] = set()
    scanned = False
    witness_slope: Fraction | None = None
    witness_chamber: int | None = None
    for eta in candidates:
        if eta in seen:
            continue
        seen.add(eta)
        if not is_semistable(h_decomp, h_support, Linearization.from_slope(eta)):
            continue
        feas = ratlp.feasible_point([[1] * len(pts), hs, gs], [1, eta, 0])
        if feas is not None:
            scanned = True
            witness_slope = eta
            witness_chamber = chamber_of(h_decomp, eta)
            break
    return ChamberScan(direct, scanned, direct == scanned, witness_slope, witness_chamber)


def chamber_scan_check(action: TorusAction, support: SupportPattern) -> bool:
    """True iff the direct g-test and the h-chamber scan reach the same verdict."""
    return chamber_scan(action, support).agree
