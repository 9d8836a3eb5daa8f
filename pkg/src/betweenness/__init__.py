"""Betweenness structures of finite metric spaces and the graphs they represent."""

from .core import (
    BetweennessStructure,
    Graph,
    MetricSpace,
    WeightedGraph,
    adjacency_graph,
    betweenness_of_graph,
    betweenness_of_metric,
    betweenness_of_weighted,
    graph_metric,
    is_extension,
    is_ordered,
    subspace,
    substructure,
    weighted_graph_metric,
)
from .enumeration import RepresentationReport, enumerate_representations
from .metrizability import is_metrizable

__all__ = [
    "BetweennessStructure",
    "Graph",
    "MetricSpace",
    "RepresentationReport",
    "WeightedGraph",
    "adjacency_graph",
    "betweenness_of_graph",
    "betweenness_of_metric",
    "betweenness_of_weighted",
    "enumerate_representations",
    "graph_metric",
    "is_extension",
    "is_metrizable",
    "is_ordered",
    "subspace",
    "substructure",
    "weighted_graph_metric",
]
