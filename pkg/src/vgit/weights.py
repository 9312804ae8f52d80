"""Weight decompositions of a diagonal one-parameter group action.

A diagonalized C*-action on C^{n+1} is described, up to coordinate
permutation, by its distinct integer weights d_1 < ... < d_m together with
the multiplicity of each.  Everything downstream (stability intervals,
chamber structure, flow limits) depends only on this combinatorial data,
so it gets a small value type of its own.

A point of the projective space only matters through which weight blocks
it touches: scaling a coordinate by a nonzero constant never changes any
stability notion.  The ``SupportPattern`` type records that block-level
support as a set of 1-based block indices.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union


@dataclass(frozen=True)
class WeightDecomposition:
    """Distinct weights with multiplicities, ``blocks[i] = (weight, dim)``.

    Weights are strictly increasing and every dimension is positive; use
    :func:`make_decomposition` to build one from unsorted raw data.

    >>> D = make_decomposition([(2, 1), (0, 2), (2, 1)])
    >>> D.blocks
    ((0, 2), (2, 2))
    >>> D.m, D.total_dim, D.spread
    (2, 4, 2)
    """

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("a weight decomposition needs at least one block")
        for d, n in self.blocks:
            if not isinstance(d, int) or isinstance(d, bool):
                raise ValueError(f"weight {d!r} is not an integer")
            if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
                raise ValueError(f"block dimension {n!r} is not a positive integer")
        ws = [d for d, _ in self.blocks]
        if any(a >= b for a, b in zip(ws, ws[1:])):
            raise ValueError(f"weights must be strictly increasing, got {ws}")

    @property
    def m(self) -> int:
        """Number of distinct weights."""
        return len(self.blocks)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.blocks)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(n for _, n in self.blocks)

    @property
    def total_dim(self) -> int:
        """Dimension of the ambient vector space (n + 1 for P^n)."""
        return sum(self.dims)

    @property
    def min_weight(self) -> int:
        return self.blocks[0][0]

    @property
    def max_weight(self) -> int:
        return self.blocks[-1][0]

    @property
    def spread(self) -> int:
        return self.max_weight - self.min_weight

    def weight(self, block: int) -> int:
        """Weight of 1-based block ``block``."""
        self._check_block(block)
        return self.blocks[block - 1][0]

    def dim(self, block: int) -> int:
        """Multiplicity of 1-based block ``block``."""
        self._check_block(block)
        return self.blocks[block - 1][1]

    def block_of_coordinate(self, j: int) -> int:
        """1-based block index owning 1-based ambient coordinate ``j``."""
        if not 1 <= j <= self.total_dim:
            raise ValueError(f"coordinate index {j} out of range 1..{self.total_dim}")
        seen = 0
        for i, (_, n) in enumerate(self.blocks, start=1):
            seen += n
            if j <= seen:
                return i
        raise AssertionError("unreachable")

    def _check_block(self, block: int) -> None:
        if not 1 <= block <= self.m:
            raise ValueError(f"block index {block} out of range 1..{self.m}")


def make_decomposition(raw: Iterable[tuple[int, int]]) -> WeightDecomposition:
    """Normalize raw ``(weight, dim)`` pairs into a ``WeightDecomposition``.

    Pairs with equal weights are merged by adding dimensions, then blocks are
    sorted by weight.  The result is independent of input order and the map
    is idempotent on already-normal data.

    >>> make_decomposition([(3, 1), (-1, 2), (3, 2)]).blocks
    ((-1, 2), (3, 3))
    """
    merged: dict[int, int] = {}
    for d, n in raw:
        if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
            raise ValueError(f"block dimension {n!r} is not a positive integer")
        merged[d] = merged.get(d, 0) + n
    return WeightDecomposition(tuple(sorted(merged.items())))


@dataclass(frozen=True)
class SupportPattern:
    """Nonempty set of 1-based block indices touched by a point.

    >>> s = SupportPattern.of(3, 1)
    >>> s.indices
    (1, 3)
    >>> 2 in s, 3 in s
    (False, True)
    """

    present: frozenset[int]

    def __post_init__(self) -> None:
        if not self.present:
            raise ValueError("support pattern must be nonempty")
        if any(not isinstance(i, int) or isinstance(i, bool) or i < 1 for i in self.present):
            raise ValueError(f"block indices must be positive integers, got {sorted(self.present)}")

    @classmethod
    def of(cls, *indices: int) -> SupportPattern:
        return cls(frozenset(indices))

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.present))

    def __contains__(self, block: int) -> bool:
        return block in self.present

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.present))

    def __len__(self) -> int:
        return len(self.present)


def support_of_coordinates(
    decomp: WeightDecomposition, coords: Sequence[Union[int, Fraction]]
) -> SupportPattern:
    """Block-level support of a point given by ambient coordinates.

    ``coords`` has one entry per ambient coordinate, grouped by block in
    weight order; block i is present exactly when some coordinate in block i
    is nonzero.  At least one coordinate must be nonzero (points live in
    projective space).
    """
    if len(coords) != decomp.total_dim:
        raise ValueError(
            f"expected {decomp.total_dim} coordinates, got {len(coords)}"
        )
    present: set[int] = set()
    pos = 0
    for i, (_, n) in enumerate(decomp.blocks, start=1):
        if any(c != 0 for c in coords[pos : pos + n]):
            present.add(i)
        pos += n
    if not present:
        raise ValueError("all coordinates are zero; not a projective point")
    return SupportPattern(frozenset(present))


@functools.lru_cache(maxsize=None)
def all_support_patterns(decomp: WeightDecomposition) -> tuple[SupportPattern, ...]:
    """All 2^m - 1 nonempty block-support patterns, in fixed bitmask order."""
    m = decomp.m
    out = []
    for mask in range(1, 1 << m):
        out.append(
            SupportPattern(frozenset(i + 1 for i in range(m) if mask >> i & 1))
        )
    return tuple(out)


@dataclass(frozen=True)
class Linearization:
    """Ample linearization twist: character d of the k-th power of the action.

    Only the slope d/k matters for which points are semistable, but some
    constructions (invariant monomials, quotient polarizations) need the
    pair itself, so both are kept.  ``k`` must be positive.
    """

    k: int
    d: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k <= 0:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        if not isinstance(self.d, int) or isinstance(self.d, bool):
            raise ValueError(f"d must be an integer, got {self.d!r}")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.d, self.k)

    @classmethod
    def from_slope(cls, eta: Union[int, Fraction]) -> Linearization:
        """Smallest linearization with the given slope: k = denominator."""
        q = Fraction(eta)
        return cls(q.denominator, q.numerator)


class _Infinity:
    """The slope at infinity on the projective line of slopes."""

    _instance: "_Infinity | None" = None

    def __new__(cls) -> "_Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()

SlopeLike = Union[int, Fraction, _Infinity, "RationalSlope"]


@dataclass(frozen=True)
class RationalSlope:
    """A point of the slope line: a rational number or the point at infinity."""

    value: Union[Fraction, _Infinity]

    @classmethod
    def finite(cls, eta: Union[int, Fraction]) -> RationalSlope:
        return cls(Fraction(eta))

    @classmethod
    def infinite(cls) -> RationalSlope:
        return cls(INFINITY)

    @property
    def is_infinite(self) -> bool:
        return self.value is INFINITY

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        assert isinstance(self.value, Fraction)
        return f"{self.value.numerator}/{self.value.denominator}"


def as_slope(eta: SlopeLike) -> Union[Fraction, _Infinity]:
    """Normalize any accepted slope spelling to ``Fraction`` or ``INFINITY``."""
    if isinstance(eta, RationalSlope):
        return eta.value
    if isinstance(eta, _Infinity):
        return INFINITY
    if isinstance(eta, bool):
        raise ValueError("slope must be a rational number, got a bool")
    if isinstance(eta, (int, Fraction)):
        return Fraction(eta)
    raise ValueError(f"cannot interpret {eta!r} as a slope")
