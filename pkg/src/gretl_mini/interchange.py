"""Reading and writing graph documents, DOT rendering and trace export.

A graph document is a JSON object with two sections::

    {"schema": {"name": ..., "packages": [...],
                "vertex_classes": [{"name", "abstract", "superclasses", "attributes"}],
                "edge_classes": [{... , "from", "to", "from_role", "to_role", "kind",
                                  "from_multiplicity", "to_multiplicity"}]},
     "graph": {"vertices": [{"id", "class", "attributes"}],
               "edges": [{"id", "class", "from", "to", "attributes"}]}}

Multiplicities are ``[min, max]`` with ``"*"`` for an unbounded maximum.
"""

import json
import re
from dataclasses import dataclass

import jsonschema

from .errors import (
    AbstractInstantiation,
    AmbiguousRole,
    AttributeClash,
    DanglingEndpoint,
    DocumentParseError,
    DomainMismatch,
    DuplicateAttribute,
    DuplicateClassName,
    GretlError,
    InheritanceCycle,
    IoError,
    KindMismatch,
    TypeNonConformance,
    UnknownAttribute,
    UnknownClass,
    ValidationError,
)
from .graph import Graph
from .schema import EDGE_KINDS, Multiplicity, Schema
from .values import DOMAINS, UNDEFINED, Element, VSet, VMap, sort_key

_multiplicity = {
    "type": "array",
    "prefixItems": [{"type": "integer", "minimum": 0},
                    {"anyOf": [{"type": "integer", "minimum": 0}, {"const": "*"}]}],
    "minItems": 2,
    "maxItems": 2,
}
_attribute_def = {
    "type": "object",
    "required": ["name", "domain"],
    "properties": {
        "name": {"type": "string"},
        "domain": {"enum": list(DOMAINS)},
        "default": {"type": ["string", "integer", "boolean"]},
    },
    "additionalProperties": False,
}
_class_props = {
    "name": {"type": "string", "minLength": 1},
    "abstract": {"type": "boolean"},
    "superclasses": {"type": "array", "items": {"type": "string"}},
    "attributes": {"type": "array", "items": _attribute_def},
}
_attr_values = {"type": "object", "additionalProperties": {"type": ["string", "integer", "boolean"]}}

DOCUMENT_SCHEMA = {
    "type": "object",
    "required": ["schema", "graph"],
    "properties": {
        "schema": {
            "type": "object",
            "required": ["vertex_classes", "edge_classes"],
            "properties": {
                "name": {"type": "string"},
                "packages": {"type": "array", "items": {"type": "string"}},
                "vertex_classes": {"type": "array", "items": {
                    "type": "object", "required": ["name"], "properties": _class_props,
                    "additionalProperties": False}},
                "edge_classes": {"type": "array", "items": {
                    "type": "object", "required": ["name", "from", "to"],
                    "properties": {
                        **_class_props,
                        "from": {"type": "string"},
                        "to": {"type": "string"},
                        "from_role": {"type": ["string", "null"]},
                        "to_role": {"type": ["string", "null"]},
                        "kind": {"enum": list(EDGE_KINDS)},
                        "from_multiplicity": _multiplicity,
                        "to_multiplicity": _multiplicity,
                    },
                    "additionalProperties": False}},
            },
            "additionalProperties": False,
        },
        "graph": {
            "type": "object",
            "properties": {
                "vertices": {"type": "array", "items": {
                    "type": "object", "required": ["id", "class"],
                    "properties": {"id": {"type": "string"}, "class": {"type": "string"},
                                   "attributes": _attr_values},
                    "additionalProperties": False}},
                "edges": {"type": "array", "items": {
                    "type": "object", "required": ["id", "class", "from", "to"],
                    "properties": {"id": {"type": "string"}, "class": {"type": "string"},
                                   "from": {"type": "string"}, "to": {"type": "string"},
                                   "attributes": _attr_values},
                    "additionalProperties": False}},
            },
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}

# schema-level failures while loading are reported as ValidationError naming the rule
RULES = {
    DuplicateClassName: "unique-class-name",
    UnknownClass: "known-class",
    InheritanceCycle: "acyclic-inheritance",
    AttributeClash: "attribute-clash",
    DuplicateAttribute: "attribute-clash",
    AmbiguousRole: "role-uniqueness",
    KindMismatch: "kind-match",
    DomainMismatch: "attribute-domain",
    AbstractInstantiation: "concrete-type",
    TypeNonConformance: "endpoint-conformance",
    DanglingEndpoint: "dangling-endpoint",
    UnknownAttribute: "attribute-visibility",
}


def _multiplicity_from(doc):
    if doc is None:
        return None
    return Multiplicity(doc[0], None if doc[1] == "*" else doc[1])


def _multiplicity_to(m):
    return [m.min, "*" if m.max is None else m.max]


def document_to_graph(doc):
    """Build (schema, graph) from a parsed document, validating as we go."""
    try:
        jsonschema.validate(doc, DOCUMENT_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise DocumentParseError(f"malformed document at {where}: {exc.message}") from None

    sdoc = doc["schema"]
    gdoc = doc["graph"]
    element = None
    try:
        schema = Schema(sdoc.get("name", "Schema"))
        schema.packages.update(sdoc.get("packages", ()))
        for c in sdoc["vertex_classes"]:
            element = c["name"]
            schema.add_vertex_class(c["name"], c.get("abstract", False))
        for c in sdoc["edge_classes"]:
            element = c["name"]
            schema.add_edge_class(
                c["name"], c["from"], c["to"], c.get("from_role"), c.get("to_role"),
                c.get("kind", "plain"), _multiplicity_from(c.get("from_multiplicity")),
                _multiplicity_from(c.get("to_multiplicity")), c.get("abstract", False))
        for c in (*sdoc["vertex_classes"], *sdoc["edge_classes"]):
            element = c["name"]
            for sup in c.get("superclasses", ()):
                schema.add_specialization(c["name"], sup)
        for c in (*sdoc["vertex_classes"], *sdoc["edge_classes"]):
            element = c["name"]
            for a in c.get("attributes", ()):
                schema.add_attribute(c["name"], a["name"], a["domain"], a.get("default"))

        graph = Graph(schema)
        for v in gdoc.get("vertices", ()):
            element = v["id"]
            vertex = graph.create_vertex(v["class"], v["id"])
            for name, value in v.get("attributes", {}).items():
                vertex.set(name, value)
        for e in gdoc.get("edges", ()):
            element = e["id"]
            if e["from"] not in graph or e["to"] not in graph:
                missing = e["from"] if e["from"] not in graph else e["to"]
                raise DanglingEndpoint(f"edge references missing vertex {missing}")
            edge = graph.create_edge(e["class"], e["from"], e["to"], e["id"])
            for name, value in e.get("attributes", {}).items():
                edge.set(name, value)
    except ValidationError:
        raise
    except GretlError as exc:
        rule = RULES.get(type(exc), "schema")
        raise ValidationError(exc.message, rule=rule, element=element) from None
    graph.validate()
    return schema, graph


def graph_to_document(graph):
    schema = graph.schema

    def class_doc(c):
        d = {"name": c.qualified_name, "abstract": c.is_abstract,
             "superclasses": [s.qualified_name for s in c.superclasses],
             "attributes": []}
        for a in c.attributes.values():
            ad = {"name": a.name, "domain": a.domain}
            if a.default is not None:
                ad["default"] = a.default
            d["attributes"].append(ad)
        return d

    edge_classes = []
    for c in schema.edge_classes:
        d = class_doc(c)
        d.update({"from": c.from_class.qualified_name, "to": c.to_class.qualified_name,
                  "from_role": c.from_role, "to_role": c.to_role, "kind": c.kind,
                  "from_multiplicity": _multiplicity_to(c.from_multiplicity),
                  "to_multiplicity": _multiplicity_to(c.to_multiplicity)})
        edge_classes.append(d)

    def values(el):
        return {k: v for k, v in el.attributes().items() if v is not UNDEFINED}

    return {
        "schema": {
            "name": schema.name,
            "packages": sorted(schema.packages),
            "vertex_classes": [class_doc(c) for c in schema.vertex_classes],
            "edge_classes": edge_classes,
        },
        "graph": {
            "vertices": [{"id": v.id, "class": v.cls.qualified_name, "attributes": values(v)}
                         for v in graph.vertices],
            "edges": [{"id": e.id, "class": e.cls.qualified_name, "from": e.source.id,
                       "to": e.target.id, "attributes": values(e)} for e in graph.edges],
        },
    }


def loads_graph(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentParseError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    return document_to_graph(doc)


def load_graph(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from None
    return loads_graph(text)


def dumps_graph(graph):
    return json.dumps(graph_to_document(graph), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_text(path, text):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror or exc}") from None


def save_graph(graph_or_ctx, path):
    graph = getattr(graph_or_ctx, "target", graph_or_ctx)
    write_text(path, dumps_graph(graph))


# -- DOT --------------------------------------------------------------------

@dataclass
class DotConfig:
    name: str = "G"
    vertex_attributes: tuple = ("name",)
    edge_attributes: tuple = ("trigger", "action")


def _dot_id(s):
    if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", s):
        return s
    return _dot_quote(s)


def _dot_quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def _label(el, names):
    lines = [el.cls.simple_name]
    visible = el.cls.visible_attributes()
    for name in names:
        if name in visible:
            value = el.get(name)
            if value is not UNDEFINED:
                lines.append(str(value) if name == "name" else f"{name}={value}")
    return "\n".join(lines)


def export_dot(graph, config=None):
    config = config or DotConfig()
    out = [f"digraph {_dot_id(config.name)} {{"]
    for v in graph.vertices:
        out.append(f"  {_dot_quote(v.id)} [label={_dot_quote(_label(v, config.vertex_attributes))}];")
    for e in graph.edges:
        out.append(f"  {_dot_quote(e.source.id)} -> {_dot_quote(e.target.id)} "
                   f"[label={_dot_quote(_label(e, config.edge_attributes))}];")
    out.append("}")
    return "\n".join(out) + "\n"


# -- trace maps -------------------------------------------------------------

def render_archetype(value):
    if isinstance(value, Element):
        return value.id
    if isinstance(value, tuple):
        return "[" + ", ".join(render_archetype(v) for v in value) + "]"
    if isinstance(value, VSet):
        return "{" + ", ".join(render_archetype(v) for v in value.sorted()) + "}"
    if isinstance(value, VMap):
        return "{" + ", ".join(f"{render_archetype(k)} -> {render_archetype(v)}"
                               for k, v in sorted(value.items(), key=lambda kv: sort_key(kv[0]))) + "}"
    return json.dumps(value)


def trace_to_document(ctx):
    return {f"img_{name}": {render_archetype(a): el.id for a, el in img.items()}
            for name, img in ctx.trace.img.items()}


def dumps_trace(ctx):
    return json.dumps(trace_to_document(ctx), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def export_trace(ctx, path):
    write_text(path, dumps_trace(ctx))
