"""Typed attributed graphs, a small GReQL-style query language and
GReTL-style transformations that build a target schema and graph from
queries over a source graph."""

from .errors import GretlError
from .graph import Edge, Graph, Vertex
from .interchange import export_dot, export_trace, load_graph, save_graph
from .query import Environment, eval_path, evaluate, parse_query, run_query
from .schema import CONTAINMENT, PLAIN, Schema
from .transform import execute, parse_transformation
from .values import UNDEFINED, VMap, VSet

__version__ = "0.1.0"

__all__ = [
    "CONTAINMENT",
    "PLAIN",
    "UNDEFINED",
    "Edge",
    "Environment",
    "GretlError",
    "Graph",
    "Schema",
    "VMap",
    "VSet",
    "Vertex",
    "eval_path",
    "evaluate",
    "execute",
    "export_dot",
    "export_trace",
    "load_graph",
    "parse_query",
    "parse_transformation",
    "run_query",
    "save_graph",
]
