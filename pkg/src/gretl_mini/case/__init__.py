"""State machine extraction from Java syntax graphs, as executable fixtures."""

from .fixtures import (
    FIXTURE_DIR,
    NEGATIVE_DIR,
    Fixture,
    build_fixtures,
    golden_graph,
    load_manifest,
    manifest_paths,
    reference_transformation,
    write_fixtures,
)
from .javamodel import ProgramBuilder, java_schema
from .runner import CaseReport, graph_diff, run_case

__all__ = [
    "FIXTURE_DIR",
    "NEGATIVE_DIR",
    "CaseReport",
    "Fixture",
    "ProgramBuilder",
    "build_fixtures",
    "golden_graph",
    "graph_diff",
    "java_schema",
    "load_manifest",
    "manifest_paths",
    "reference_transformation",
    "run_case",
    "write_fixtures",
]
