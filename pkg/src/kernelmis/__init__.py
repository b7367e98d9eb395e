"""Exact maximum independent sets on sparse graphs via kernelization."""

from .graph import Graph, brute_force_mis, connected_components, induced_subgraph
from .io import parse_graph, read_graph, to_edge_list
from .pipeline import STRATEGIES, kernelize, reconstruct, solve_exact, verify_solution
from .solver import solve, solve_component
from .trace import ReductionTrace

__all__ = [
    "Graph",
    "ReductionTrace",
    "STRATEGIES",
    "brute_force_mis",
    "connected_components",
    "induced_subgraph",
    "kernelize",
    "parse_graph",
    "read_graph",
    "reconstruct",
    "solve",
    "solve_component",
    "solve_exact",
    "to_edge_list",
    "verify_solution",
]
