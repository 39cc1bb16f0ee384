"""Minimum-weight coverage of points by weighted disks centered on a line,
with 1D, unit-disk, L1, L2 and Linf variants, plus line-separable unit-disk
and half-plane coverage solvers, brute-force oracles and a CLI."""

from .aggtree import AggregateOrderedSet, KeyOverlap, NotAdjacent, audits_enabled
from .axis import AIndexTable, a_indices_l1, a_indices_unit, build_1d_from_a, solve_l1, solve_unit
from .couples import (
    BoundingCouple,
    CoupleSet,
    baseline_couples,
    couples_to_segments,
    maximal_subsequences,
    solve_general,
)
from .geom import (
    DegenerateInput,
    Disk,
    InfeasibleInstance,
    Instance,
    InstanceError,
    Metric,
    MetricMismatch,
    NonPositiveWeight,
    PointP,
    Solution,
    count_intersecting_pairs,
    covers,
    normalize,
)
from .halfplane import (
    HalfPlane,
    MixedRadii,
    NotLower,
    covers_plane,
    enumerate_bipartitions,
    solve_halfplane_general,
    solve_line_separable,
    solve_lower_only,
)
from .oned import DpState, WeightedSegment, compute_f, dp_state, solve_1d
from .oracle import (
    TooLarge,
    brute_force_cover,
    coverage_matrix,
    element_uniqueness_instance,
    instance_matrix,
    oracle_a_indices,
    oracle_couples,
)
from .sweep_l2 import CircleArc, arc_crossing, left_right_couples_l2, middle_couples_l2
from .sweep_linf import left_right_couples_linf, middle_couples_linf

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
