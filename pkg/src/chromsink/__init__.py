"""Exact chromatic symmetric functions of set-weighted graphs, and
both-sides checks of the sink-sequence identities for their e-coefficients."""

from .partitions import Partition, dominates, format_partition, parse_partition, partitions_of, transpose
from .symfunc import Basis, SymFunc, e_to_m, m_to_e, p_to_e, sigma
from .swgraph import (
    GraphFormatError,
    SetWeightedGraph,
    allowable_partitions,
    csf_e,
    csf_p,
    is_claw_free,
    is_maximal,
    is_s_allowable,
    parse_graph,
)
from .orientations import Orientation, acyclic_orientations, count_by_sink_count, sink_decomposition
from .weightmaps import conjecture_rhs, one_level_rhs, theorem_rhs
from .necklaces import count_necklace, enumerate_necklace
from .verify import FuzzConfig, VerificationReport, fuzz

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "dominates",
    "format_partition",
    "parse_partition",
    "partitions_of",
    "transpose",
    "Basis",
    "SymFunc",
    "e_to_m",
    "m_to_e",
    "p_to_e",
    "sigma",
    "GraphFormatError",
    "SetWeightedGraph",
    "allowable_partitions",
    "csf_e",
    "csf_p",
    "is_claw_free",
    "is_maximal",
    "is_s_allowable",
    "parse_graph",
    "Orientation",
    "acyclic_orientations",
    "count_by_sink_count",
    "sink_decomposition",
    "conjecture_rhs",
    "one_level_rhs",
    "theorem_rhs",
    "count_necklace",
    "enumerate_necklace",
    "FuzzConfig",
    "VerificationReport",
    "fuzz",
]
