"""Exact combinatorics of small projective planes and the density bounds they yield.

The package builds PG_m(q) as an indexed incidence structure, searches its
blocking sets, arcs and passant covers exactly, materializes the two
partition-based constructions of PG-free hypergraphs, and optimizes the
associated edge-density lower-bound polynomials with exact rational
coefficients.
"""

__version__ = "0.1.0"

from .gf import FieldTable, make_field
from .geometry import Geometry, build_geometry, line_through, parse_coords, format_coords
from .structures import (
    ArcRecord,
    is_blocking_set,
    max_blocking_set_size,
    is_arc,
    is_complete_arc,
    secant_profile,
    enumerate_complete_arcs,
    classify_up_to_collineation,
    max_concurrency,
)
from .covering import (
    HittingSetResult,
    MqReport,
    PassantAnalysis,
    min_hitting_set,
    m_of_arc,
    compute_Mq,
    passant_analysis,
    verify_appendix,
)
from .construction import (
    PartitionSpec,
    Hypergraph,
    make_partition,
    build_hypergraph,
    count_edges_exact,
    displayed_lower_bound,
    contains_subgeometry,
)
from .bounds import (
    BoundPolynomial,
    OptResult,
    theorem1_lower,
    theorem1_upper,
    pg2_upper,
    chromatic_lower,
    corollary1_t,
    theorem2_polynomial,
    theorem3_polynomial,
    optimize_bound,
    reproduce_tables,
)
