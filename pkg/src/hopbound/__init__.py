"""Hop-bounded shortest paths and the fine-grained reductions to them.

The relaxation loop of Bellman-Ford runs in a compiled extension when it is
available (see :mod:`hopbound.kernels`); everything else is pure Python.
"""

from .convolution import (
    CommonUBInstance,
    SequenceTriple,
    ViolatingQuadruple,
    common_ub_check,
    maxplus_ub_check,
    minplus_convolution,
    normalize_instance,
    split_into_common,
)
from .fileio import load_graph, save_graph
from .graph import UNREACHABLE, Graph, HopInstance, PathLength, validate_instance
from .kernels import BACKEND
from .reductions import (
    ReductionArtifact,
    decide_common_via_hop,
    decide_triangle_via_hop,
    extract_witness,
    maxplus_ub_via_pipeline,
    reduce_common_to_hop,
    reduce_triangle_to_hop,
)
from .solvers import (
    all_hops_table,
    bellman_ford_hops,
    dijkstra_unbounded,
    enumerate_paths_oracle,
    hop_path,
    minplus_power_oracle,
)
from .triangle import TriangleInstance, find_negative_triangle, partition_triangle

__version__ = "0.1.0"
