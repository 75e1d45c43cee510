"""Schema-building graph transformations with archetype/image traceability."""

from .engine import ExecutionContext, execute
from .parser import load_transformation, parse_transformation
from .statements import (
    AddSubClass,
    CreateAttribute,
    CreateEdgeClass,
    CreateVertexClass,
    GlobalBinding,
    SetAttributes,
    Transformation,
)
from .trace import TraceMaps

__all__ = [
    "AddSubClass",
    "CreateAttribute",
    "CreateEdgeClass",
    "CreateVertexClass",
    "ExecutionContext",
    "GlobalBinding",
    "SetAttributes",
    "TraceMaps",
    "Transformation",
    "execute",
    "load_transformation",
    "parse_transformation",
]
