"""Exact-arithmetic calculus of torus stability chambers on projective spaces.

The package computes, for diagonal torus actions, the stability chambers
of the linearization slope, the flow stratification, the quotient chain
across wall crossings, and the one-step versus two-step stability
equivalences for rank-2 product actions, all in exact rational arithmetic.
"""

from __future__ import annotations

from .bb import BBData, FixedComponent, bb_data, flow_limits, u_set
from .cstar import (
    Chamber,
    ChamberStructure,
    EmptyComplement,
    OpenInterval,
    Wall,
    chamber_of,
    chambers,
    d_extremes,
    is_polystable,
    is_semistable,
    minimum_oracle_degree_bound,
    representative_slope,
    semistable_by_invariant_oracle,
    semistable_supports,
    semistable_supports_at,
)
from .flips import FlipChain, FlipStep, WallCrossing, count_stability_notions, flip_chain
from .quotients import (
    Empty,
    GeneralStratified,
    QuotientDescriptor,
    SingleFixed,
    TwoBlockProduct,
    quotient_descriptor,
    realize_bidegree,
    two_block_polarization,
)
from .torus import (
    ChamberScan,
    CharacterSlope,
    CommutingCheck,
    TorusAction,
    chamber_scan,
    chamber_scan_check,
    commuting_principle_check,
    g_kernel_slope_range,
    torus_polystable,
    torus_semistable,
    two_step_polystable,
    two_step_semistable,
)
from .weights import (
    INFINITY,
    Linearization,
    RationalSlope,
    SupportPattern,
    WeightDecomposition,
    all_support_patterns,
    make_decomposition,
    support_of_coordinates,
)
from .worked_examples import (
    CUBIC_PAIR,
    CubicPairWeights,
    TwoBlockReport,
    evaluate_form,
    notion_counts,
    two_block_report,
)

__all__ = [
    "BBData",
    "CUBIC_PAIR",
    "Chamber",
    "ChamberScan",
    "ChamberStructure",
    "CharacterSlope",
    "CommutingCheck",
    "CubicPairWeights",
    "Empty",
    "EmptyComplement",
    "FixedComponent",
    "FlipChain",
    "FlipStep",
    "GeneralStratified",
    "INFINITY",
    "Linearization",
    "OpenInterval",
    "QuotientDescriptor",
    "RationalSlope",
    "SingleFixed",
    "SupportPattern",
    "TorusAction",
    "TwoBlockProduct",
    "TwoBlockReport",
    "Wall",
    "WallCrossing",
    "WeightDecomposition",
    "all_support_patterns",
    "bb_data",
    "chamber_of",
    "chamber_scan",
    "chamber_scan_check",
    "chambers",
    "commuting_principle_check",
    "count_stability_notions",
    "d_extremes",
    "evaluate_form",
    "flip_chain",
    "flow_limits",
    "g_kernel_slope_range",
    "is_polystable",
    "is_semistable",
    "make_decomposition",
    "minimum_oracle_degree_bound",
    "notion_counts",
    "quotient_descriptor",
    "realize_bidegree",
    "representative_slope",
    "semistable_by_invariant_oracle",
    "semistable_supports",
    "semistable_supports_at",
    "support_of_coordinates",
    "torus_polystable",
    "torus_semistable",
    "two_block_polarization",
    "two_block_report",
    "two_step_polystable",
    "two_step_semistable",
    "u_set",
]

__version__ = "0.1.0"
