import copy
import json
import random

import pydot
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gretl_mini.case.fixtures import FIXTURE_DIR, fixture_a, load_manifest, reference_transformation
from gretl_mini.errors import DocumentParseError, IoError, ValidationError
from gretl_mini.graph import Graph
from gretl_mini.interchange import (
    DotConfig,
    dumps_graph,
    dumps_trace,
    export_dot,
    export_trace,
    graph_to_document,
    load_graph,
    loads_graph,
    save_graph,
    trace_to_document,
)
from gretl_mini.schema import Schema
from gretl_mini.transform import execute, parse_transformation

from randomgraphs import random_graph

# rule names a ValidationError may carry
GRAPH_RULES = {
    "unique-class-name", "known-class", "acyclic-inheritance", "attribute-clash", "role-uniqueness",
    "kind-match", "attribute-domain", "concrete-type", "endpoint-conformance", "dangling-endpoint",
    "attribute-visibility", "unique-id", "multiplicity",
}


def small_doc():
    return {
        "schema": {
            "name": "S",
            "vertex_classes": [
                {"name": "p.Node", "attributes": [{"name": "name", "domain": "String"}]},
                {"name": "p.Base", "abstract": True},
            ],
            "edge_classes": [{"name": "p.Link", "from": "p.Node", "to": "p.Node", "to_role": "next"}],
        },
        "graph": {
            "vertices": [{"id": "a", "class": "p.Node", "attributes": {"name": "A"}},
                         {"id": "b", "class": "p.Node"}],
            "edges": [{"id": "l", "class": "p.Link", "from": "a", "to": "b"}],
        },
    }


def extracted(graph):
    return execute(parse_transformation(reference_transformation()), graph)


# -- loading ------------------------------------------------------------------

def test_load_fixture_counts():
    manifest = load_manifest(FIXTURE_DIR / "A.manifest.json")
    _, graph = load_graph(FIXTURE_DIR / manifest["source"])
    assert len(graph.vertices) == manifest["vertex_count"]
    assert len(graph.edges) == manifest["edge_count"]


def test_load_small_document():
    schema, graph = loads_graph(json.dumps(small_doc()))
    assert schema.packages == {"p"}
    assert [v.id for v in graph.vertices] == ["a", "b"]
    assert graph.element("l").source.id == "a"
    assert graph.element("a").get("name") == "A"


def test_empty_instance_section():
    doc = small_doc()
    doc["graph"] = {}
    _, graph = loads_graph(json.dumps(doc))
    assert graph.vertices == [] and graph.edges == []


def corrupt(mutate):
    doc = small_doc()
    mutate(doc)
    with pytest.raises(ValidationError) as info:
        loads_graph(json.dumps(doc))
    return info.value


@pytest.mark.parametrize("mutate, rule, element", [
    (lambda d: d["graph"]["edges"][0].update({"to": "zzz"}), "dangling-endpoint", "l"),
    (lambda d: d["graph"]["vertices"].append({"id": "a", "class": "p.Node"}), "unique-id", "a"),
    (lambda d: d["graph"]["vertices"].append({"id": "c", "class": "p.Base"}), "concrete-type", "c"),
    (lambda d: d["graph"]["vertices"].append({"id": "c", "class": "p.Nope"}), "known-class", "c"),
    (lambda d: d["graph"]["vertices"][1].update({"attributes": {"age": "3"}}), "attribute-visibility", "b"),
    (lambda d: d["graph"]["vertices"][1].update({"attributes": {"name": 3}}), "attribute-domain", "b"),
    (lambda d: d["schema"]["vertex_classes"].append({"name": "p.Node"}), "unique-class-name", "p.Node"),
    (lambda d: d["schema"]["vertex_classes"][0].update({"superclasses": ["p.Node"]}),
     "acyclic-inheritance", "p.Node"),
    (lambda d: d["schema"]["vertex_classes"][0].update({"superclasses": ["p.Link"]}), "kind-match", "p.Node"),
    (lambda d: d["schema"]["edge_classes"].append({"name": "p.L2", "from": "p.Node", "to": "p.Node",
                                                   "to_role": "next"}), "role-uniqueness", "p.L2"),
    (lambda d: d["schema"]["edge_classes"].append({"name": "p.L2", "from": "p.Node", "to": "p.X"}),
     "known-class", "p.L2"),
    (lambda d: d["schema"]["vertex_classes"][1].update({"attributes": [{"name": "name", "domain": "Integer"}]})
     or d["schema"]["vertex_classes"][0].update({"superclasses": ["p.Base"]}), "attribute-clash", "p.Base"),
])
def test_validation_errors_name_rule_and_element(mutate, rule, element):
    err = corrupt(mutate)
    assert err.rule == rule and err.rule in GRAPH_RULES
    assert err.element == element
    assert f"[{rule}]" in str(err)


def test_endpoint_conformance_rule():
    def mutate(d):
        d["schema"]["vertex_classes"].append({"name": "p.Other"})
        d["graph"]["vertices"].append({"id": "o", "class": "p.Other"})
        d["graph"]["edges"].append({"id": "m", "class": "p.Link", "from": "a", "to": "o"})
    err = corrupt(mutate)
    assert (err.rule, err.element) == ("endpoint-conformance", "m")


@pytest.mark.parametrize("text", [
    "{not json",
    "[]",
    '{"schema": {}, "graph": {}}',
    json.dumps({**small_doc(), "extra": 1}),
    json.dumps({"schema": {"vertex_classes": [{"name": "A", "attributes": [{"name": "x", "domain": "Float"}]}],
                           "edge_classes": []}, "graph": {}}),
])
def test_malformed_documents(text):
    with pytest.raises(DocumentParseError) as info:
        loads_graph(text)
    assert info.value.kind_name() == "ParseError"


def test_missing_file():
    with pytest.raises(IoError):
        load_graph("/nonexistent/file.graph")


# -- saving -------------------------------------------------------------------

def test_round_trip_fixture_a(tmp_path):
    graph = fixture_a()
    save_graph(graph, tmp_path / "a.graph")
    _, again = load_graph(tmp_path / "a.graph")
    assert again.snapshot() == graph.snapshot()
    assert graph_to_document(again) == graph_to_document(graph)


def test_save_is_byte_stable(tmp_path):
    graph = fixture_a()
    save_graph(graph, tmp_path / "1.graph")
    save_graph(graph, tmp_path / "2.graph")
    assert (tmp_path / "1.graph").read_bytes() == (tmp_path / "2.graph").read_bytes()
    text = dumps_graph(graph)
    assert text.endswith("\n") and json.loads(text) == graph_to_document(graph)


def test_save_accepts_context(tmp_path):
    ctx = extracted(fixture_a())
    save_graph(ctx, tmp_path / "t.graph")
    _, target = load_graph(tmp_path / "t.graph")
    assert len(target.vertices) == 2 and len(target.edges) == 4


def test_save_unwritable(tmp_path):
    with pytest.raises(IoError):
        save_graph(fixture_a(), tmp_path / "missing" / "dir" / "x.graph")


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_round_trip_random_graphs(seed):
    graph = random_graph(random.Random(seed))
    _, again = loads_graph(dumps_graph(graph))
    assert again.snapshot() == graph.snapshot()
    assert dumps_graph(again) == dumps_graph(graph)


# -- DOT ----------------------------------------------------------------------

def test_dot_empty_graph():
    text = export_dot(Graph(Schema()))
    assert " ".join(text.split()) == "digraph G { }"
    assert pydot.graph_from_dot_data(text)


def test_dot_fixture_a_result():
    ctx = extracted(fixture_a())
    (dot,) = pydot.graph_from_dot_data(export_dot(ctx.target))
    nodes = [n for n in dot.get_nodes() if n.get_name() not in ("node", "edge", "graph")]
    assert len(nodes) == 2 and len(dot.get_edges()) == 4
    labels = sorted(e.get_label().strip('"') for e in dot.get_edges())
    assert labels[0] == "Transition\\ntrigger=COIN\\naction=UNLOCK"
    assert all(label.startswith("Transition\\ntrigger=") for label in labels)


def test_dot_labels_and_escaping():
    schema = Schema()
    schema.add_vertex_class("Thing")
    schema.add_attribute("Thing", "name", "String")
    graph = Graph(schema, "g")
    graph.create_vertex("Thing")
    named = graph.create_vertex("Thing", "id with space")
    named.set("name", 'say "hi"')
    text = export_dot(graph, DotConfig(name="my graph"))
    assert 'label="Thing"' in text
    assert '"id with space" [label="Thing\\nsay \\"hi\\""]' in text
    (dot,) = pydot.graph_from_dot_data(text)
    assert len([n for n in dot.get_nodes() if n.get_name() not in ("node", "edge", "graph")]) == 2


# -- trace export -------------------------------------------------------------

def test_trace_export(tmp_path):
    ctx = extracted(fixture_a())
    doc = trace_to_document(ctx)
    assert doc["img_State"] == {"Class_Locked": "v1", "Class_Unlocked": "v2"}
    assert len(doc["img_Transition"]) == 4
    key = next(iter(doc["img_Transition"]))
    assert key.startswith("[Class_") and key.endswith("]") and key.count(", ") == 3
    export_trace(ctx, tmp_path / "t.json")
    assert (tmp_path / "t.json").read_text() == dumps_trace(ctx)


def test_trace_export_empty_context():
    ctx = execute(parse_transformation(""), fixture_a())
    assert trace_to_document(ctx) == {}


def test_load_does_not_alias_input():
    doc = small_doc()
    before = copy.deepcopy(doc)
    loads_graph(json.dumps(doc))
    assert doc == before
