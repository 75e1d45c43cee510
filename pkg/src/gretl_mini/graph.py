"""Instance level: typed, directed, attributed graphs conforming to a Schema."""

import hashlib

from .errors import (
    AbstractInstantiation,
    DanglingEndpoint,
    DomainMismatch,
    KindMismatch,
    TypeNonConformance,
    UnknownAttribute,
    ValidationError,
)
from .values import UNDEFINED, Element, conforms_to_domain, value_key


class _GraphElement(Element):
    __slots__ = ("id", "cls", "graph", "seq", "_values")

    def __init__(self, graph, cls, id, seq):
        self.graph = graph
        self.cls = cls
        self.id = id
        self.seq = seq
        self._values = {}

    def is_instance_of(self, cls):
        return self.cls.is_subclass_of(cls)

    def get(self, name):
        attr = self.cls.attribute(name)
        if attr is None:
            raise UnknownAttribute(f"{self.cls.qualified_name} has no attribute {name}")
        if name in self._values:
            return self._values[name]
        return UNDEFINED if attr.default is None else attr.default

    def set(self, name, value):
        attr = self.cls.attribute(name)
        if attr is None:
            raise UnknownAttribute(f"{self.cls.qualified_name} has no attribute {name}")
        if value is UNDEFINED:
            self._values.pop(name, None)
            return
        if not conforms_to_domain(value, attr.domain):
            raise DomainMismatch(f"{self.cls.qualified_name}.{name} expects {attr.domain}, got {value!r}")
        self._values[name] = value

    def attributes(self):
        """Every visible attribute with its current value (possibly UNDEFINED)."""
        return {name: self.get(name) for name in sorted(self.cls.visible_attributes())}

    def __repr__(self):
        return f"{type(self).__name__}({self.id}:{self.cls.simple_name})"


class Vertex(_GraphElement):
    __slots__ = ("out_edges", "in_edges")
    is_vertex = True

    def __init__(self, graph, cls, id, seq):
        super().__init__(graph, cls, id, seq)
        self.out_edges = []
        self.in_edges = []


class Edge(_GraphElement):
    __slots__ = ("source", "target")

    def __init__(self, graph, cls, id, seq, source, target):
        super().__init__(graph, cls, id, seq)
        self.source = source
        self.target = target

    def __repr__(self):
        return f"Edge({self.id}:{self.cls.simple_name} {self.source.id}->{self.target.id})"


class Graph:
    """A graph over ``schema``.  Elements are only ever added."""

    def __init__(self, schema, name=None):
        self.schema = schema
        self.name = name or schema.name
        self.vertices = []
        self.edges = []
        self._by_id = {}
        self._seq = 0

    def _next_id(self, prefix, count):
        n = count + 1
        while f"{prefix}{n}" in self._by_id:
            n += 1
        return f"{prefix}{n}"

    def _check_id(self, id):
        if id in self._by_id:
            raise ValidationError(f"duplicate element id {id}", rule="unique-id", element=id)

    def create_vertex(self, cls, id=None):
        cls = self.schema.get_class(cls)
        if not cls.is_vertex_class:
            raise KindMismatch(f"{cls.qualified_name} is an edge class")
        if cls.is_abstract:
            raise AbstractInstantiation(f"cannot instantiate abstract class {cls.qualified_name}")
        if id is None:
            id = self._next_id("v", len(self.vertices))
        self._check_id(id)
        self._seq += 1
        v = Vertex(self, cls, id, self._seq)
        self.vertices.append(v)
        self._by_id[id] = v
        return v

    def create_edge(self, cls, source, target, id=None):
        cls = self.schema.get_class(cls)
        if cls.is_vertex_class:
            raise KindMismatch(f"{cls.qualified_name} is a vertex class")
        if cls.is_abstract:
            raise AbstractInstantiation(f"cannot instantiate abstract class {cls.qualified_name}")
        source = self._endpoint(source)
        target = self._endpoint(target)
        if not source.is_instance_of(cls.from_class):
            raise TypeNonConformance(
                f"{cls.qualified_name} must start at {cls.from_class.qualified_name}, not {source.cls.qualified_name}")
        if not target.is_instance_of(cls.to_class):
            raise TypeNonConformance(
                f"{cls.qualified_name} must end at {cls.to_class.qualified_name}, not {target.cls.qualified_name}")
        if id is None:
            id = self._next_id("e", len(self.edges))
        self._check_id(id)
        self._seq += 1
        e = Edge(self, cls, id, self._seq, source, target)
        self.edges.append(e)
        self._by_id[id] = e
        source.out_edges.append(e)
        target.in_edges.append(e)
        return e

    def _endpoint(self, v):
        if isinstance(v, str):
            found = self._by_id.get(v)
            if not isinstance(found, Vertex):
                raise DanglingEndpoint(f"no vertex with id {v}")
            return found
        if not isinstance(v, Vertex) or v.graph is not self:
            raise DanglingEndpoint(f"{v!r} is not a vertex of this graph")
        return v

    # -- access -----------------------------------------------------------

    def element(self, id):
        return self._by_id[id]

    def __contains__(self, id):
        return id in self._by_id

    def vertices_of(self, cls):
        cls = self.schema.get_class(cls)
        return [v for v in self.vertices if v.cls.is_subclass_of(cls)]

    def edges_of(self, cls):
        cls = self.schema.get_class(cls)
        return [e for e in self.edges if e.cls.is_subclass_of(cls)]

    # -- validation -------------------------------------------------------

    def problems(self, check_multiplicities=True):
        """All invariant violations as ValidationError instances."""
        found = []
        seen = set()
        for el in (*self.vertices, *self.edges):
            if el.id in seen:
                found.append(ValidationError("duplicate element id", rule="unique-id", element=el.id))
            seen.add(el.id)
            if self.schema.classes.get(el.cls.qualified_name) is not el.cls:
                found.append(ValidationError(f"class {el.cls.qualified_name} not in schema",
                                             rule="known-class", element=el.id))
                continue
            if el.cls.is_abstract:
                found.append(ValidationError(f"instance of abstract class {el.cls.qualified_name}",
                                             rule="concrete-type", element=el.id))
            visible = el.cls.visible_attributes()
            for name, value in el._values.items():
                if name not in visible:
                    found.append(ValidationError(f"attribute {name} not visible on {el.cls.qualified_name}",
                                                 rule="attribute-visibility", element=el.id))
                elif not conforms_to_domain(value, visible[name].domain):
                    found.append(ValidationError(f"attribute {name}={value!r} is not a {visible[name].domain}",
                                                 rule="attribute-domain", element=el.id))
        for e in self.edges:
            for end, role in ((e.source, "from"), (e.target, "to")):
                if self._by_id.get(end.id) is not end:
                    found.append(ValidationError(f"{role} vertex {end.id} not in graph",
                                                 rule="dangling-endpoint", element=e.id))
            if not e.source.is_instance_of(e.cls.from_class) or not e.target.is_instance_of(e.cls.to_class):
                found.append(ValidationError(
                    f"endpoints {e.source.cls.qualified_name}->{e.target.cls.qualified_name} do not conform "
                    f"to {e.cls.from_class.qualified_name}->{e.cls.to_class.qualified_name}",
                    rule="endpoint-conformance", element=e.id))
        if check_multiplicities:
            found.extend(self._multiplicity_problems())
        return found

    def _multiplicity_problems(self):
        found = []
        for ec in self.schema.edge_classes:
            if ec.to_multiplicity == (0, None) and ec.from_multiplicity == (0, None):
                continue
            for v in self.vertices:
                if v.is_instance_of(ec.from_class):
                    n = sum(1 for e in v.out_edges if e.cls.is_subclass_of(ec))
                    if not ec.to_multiplicity.admits(n):
                        found.append(ValidationError(
                            f"{n} outgoing {ec.qualified_name} edges violate {ec.to_multiplicity}",
                            rule="multiplicity", element=v.id))
                if v.is_instance_of(ec.to_class):
                    n = sum(1 for e in v.in_edges if e.cls.is_subclass_of(ec))
                    if not ec.from_multiplicity.admits(n):
                        found.append(ValidationError(
                            f"{n} incoming {ec.qualified_name} edges violate {ec.from_multiplicity}",
                            rule="multiplicity", element=v.id))
        return found

    def validate(self, check_multiplicities=True):
        problems = self.problems(check_multiplicities)
        if problems:
            raise problems[0]
        return self

    # -- identity ---------------------------------------------------------

    def snapshot(self):
        """Canonical, id-preserving description of the instance level."""
        def attrs(el):
            return tuple((k, value_key(v)) for k, v in el.attributes().items() if v is not UNDEFINED)
        vs = tuple((v.id, v.cls.qualified_name, attrs(v)) for v in self.vertices)
        es = tuple((e.id, e.cls.qualified_name, e.source.id, e.target.id, attrs(e)) for e in self.edges)
        return vs, es

    def fingerprint(self):
        return hashlib.sha256(repr(self.snapshot()).encode()).hexdigest()

    def __repr__(self):
        return f"Graph({self.name}: {len(self.vertices)} vertices, {len(self.edges)} edges)"
