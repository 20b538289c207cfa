"""Stable sets hitting every maximum clique, and the structures around them."""

from .cliques import (
    CliqueFamily,
    CliqueGraph,
    clique_graph,
    enumerate_maximal_cliques,
    family_intersection,
    family_union,
    hajnal_check,
    maximum_cliques,
)
from .counterexample import build_counterexample, feasible_params, verify_counterexample
from .errors import CapExceeded, GraphFormatError, InternalContradiction, PreconditionError
from .formats import read_graph, write_graph
from .generators import hole_product
from .graph import (
    Graph,
    build_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    strong_product,
)
from .oracle import oracle_hitting_max, oracle_hitting_maximal
from .solver import (
    OddHoleProduct,
    StableSetHit,
    hitting_stable_set,
    lift_solution,
    reduce_clique_path,
)
from .structure import HoleProductWitness, Shape, analyze_component, recognize_hole_product
from .transversal import PartitionedInstance, independent_transversal

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CliqueFamily",
    "CliqueGraph",
    "Graph",
    "GraphFormatError",
    "HoleProductWitness",
    "InternalContradiction",
    "OddHoleProduct",
    "PartitionedInstance",
    "PreconditionError",
    "Shape",
    "StableSetHit",
    "analyze_component",
    "build_counterexample",
    "build_graph",
    "clique_graph",
    "complete_graph",
    "cycle_graph",
    "enumerate_maximal_cliques",
    "family_intersection",
    "family_union",
    "feasible_params",
    "hajnal_check",
    "hitting_stable_set",
    "hole_product",
    "independent_transversal",
    "lift_solution",
    "maximum_cliques",
    "oracle_hitting_max",
    "oracle_hitting_maximal",
    "path_graph",
    "petersen_graph",
    "read_graph",
    "recognize_hole_product",
    "reduce_clique_path",
    "strong_product",
    "verify_counterexample",
    "write_graph",
]
