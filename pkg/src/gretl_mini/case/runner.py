"""Run the reference extraction on a fixture and compare against its golden."""

import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import networkx as nx

from ..interchange import dumps_graph, load_graph, loads_graph
from ..transform import execute, parse_transformation
from ..values import UNDEFINED
from .fixtures import load_manifest, reference_transformation


@dataclass
class CaseReport:
    fixture: str
    passed: bool
    diffs: list = field(default_factory=list)
    seconds: float = 0.0
    context: object = None

    def summary(self):
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.fixture}"
        if self.diffs:
            line += ": " + "; ".join(self.diffs)
        return line


def _attrs(el):
    return tuple((k, v) for k, v in el.attributes().items() if v is not UNDEFINED)


def _fmt_attrs(attrs):
    return "{" + ", ".join(f"{k}={v!r}" for k, v in attrs) + "}"


def _schema_signature(schema):
    sig = set()
    for c in schema.classes.values():
        entry = [c.qualified_name, c.is_vertex_class, c.is_abstract,
                 tuple(sorted(s.qualified_name for s in c.superclasses)),
                 tuple(sorted((a.name, a.domain, a.default) for a in c.attributes.values()))]
        if not c.is_vertex_class:
            entry += [c.from_class.qualified_name, c.to_class.qualified_name,
                      c.from_role, c.to_role, c.kind]
        sig.add(tuple(entry))
    return sig


def graph_diff(actual, expected):
    """Differences between two graphs, ignoring element order and ids.

    Vertices are compared by class and attribute values, edges additionally
    by the signatures of their endpoints.  An empty list means the graphs
    are isomorphic with identical attribute multisets.
    """
    diffs = []
    a_schema, e_schema = _schema_signature(actual.schema), _schema_signature(expected.schema)
    for c in sorted(e_schema - a_schema, key=repr):
        diffs.append(f"schema: missing class {c[0]} {c}")
    for c in sorted(a_schema - e_schema, key=repr):
        diffs.append(f"schema: unexpected class {c[0]} {c}")

    def vsig(v):
        return (v.cls.qualified_name, _attrs(v))

    def vlabel(v):
        name = dict(_attrs(v)).get("name")
        return f"{v.cls.simple_name}({name})" if name is not None else f"{v.cls.simple_name}{_fmt_attrs(_attrs(v))}"

    va = Counter(vsig(v) for v in actual.vertices)
    ve = Counter(vsig(v) for v in expected.vertices)
    for sig, n in sorted((ve - va).items()):
        diffs.append(f"missing vertex {sig[0]}{_fmt_attrs(sig[1])}" + (f" x{n}" if n > 1 else ""))
    for sig, n in sorted((va - ve).items()):
        diffs.append(f"unexpected vertex {sig[0]}{_fmt_attrs(sig[1])}" + (f" x{n}" if n > 1 else ""))

    def esig(e):
        return (e.cls.qualified_name, vlabel(e.source), vlabel(e.target), _attrs(e))

    ea = Counter(esig(e) for e in actual.edges)
    ee = Counter(esig(e) for e in expected.edges)
    missing = sorted((ee - ea).elements())
    extra = sorted((ea - ee).elements())
    # pair up edges between the same endpoints to name the differing attribute
    for m in list(missing):
        for x in extra:
            if x[:3] == m[:3]:
                exp, act = dict(m[3]), dict(x[3])
                for k in sorted(set(exp) | set(act)):
                    if exp.get(k) != act.get(k):
                        diffs.append(f"edge {m[0]} {m[1]}->{m[2]}: attribute {k} is "
                                     f"{act.get(k)!r}, expected {exp.get(k)!r}")
                missing.remove(m)
                extra.remove(x)
                break
    for m in missing:
        diffs.append(f"missing edge {m[0]} {m[1]}->{m[2]} {_fmt_attrs(m[3])}")
    for x in extra:
        diffs.append(f"unexpected edge {x[0]} {x[1]}->{x[2]} {_fmt_attrs(x[3])}")

    if not diffs and not _isomorphic(actual, expected):
        diffs.append("graphs have equal element multisets but are not isomorphic")
    return diffs


def _as_digraph(graph):
    g = nx.DiGraph()
    for v in graph.vertices:
        g.add_node(v.id, sig=(v.cls.qualified_name, _attrs(v)))
    parallel = {}
    for e in graph.edges:
        parallel.setdefault((e.source.id, e.target.id), []).append((e.cls.qualified_name, _attrs(e)))
    for (s, t), sigs in parallel.items():
        g.add_edge(s, t, sig=tuple(sorted(sigs)))
    return g


def _isomorphic(a, b):
    match = nx.algorithms.isomorphism.categorical_node_match("sig", None)
    ematch = nx.algorithms.isomorphism.categorical_edge_match("sig", None)
    return nx.is_isomorphic(_as_digraph(a), _as_digraph(b), node_match=match, edge_match=ematch)


def run_case(manifest_path, transformation_text=None, out_dir=None, on_statement=None):
    """Load, transform and save one fixture; compare with its golden target.

    Timing covers load -> execute -> save.  Execution errors propagate.
    """
    manifest_path = Path(manifest_path)
    manifest = load_manifest(manifest_path)
    base = manifest_path.parent
    transformation = parse_transformation(transformation_text or reference_transformation())

    start = time.perf_counter()
    _, source = load_graph(base / manifest["source"])
    ctx = execute(transformation, source, on_statement)
    text = dumps_graph(ctx.target)
    if out_dir is not None:
        Path(out_dir, f"{manifest['fixture']}.out.graph").write_text(text, encoding="utf-8")
    seconds = time.perf_counter() - start

    _, result = loads_graph(text)
    _, golden = load_graph(base / manifest["golden"])
    diffs = graph_diff(result, golden)
    return CaseReport(manifest["fixture"], not diffs, diffs, seconds, ctx)
