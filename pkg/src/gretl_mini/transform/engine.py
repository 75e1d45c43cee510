"""Sequential execution of transformations.

Each statement evaluates its query on the source graph and then extends
the target schema and target graph, recording archetype -> image pairs.
"""

import logging

from ..errors import (
    DomainMismatch,
    DuplicateArchetype,
    DuplicateClassName,
    DuplicateAttribute,
    DuplicateBinding,
    GretlError,
    NotAMap,
    NotASet,
    NotTripleSet,
    UnknownAttribute,
)
from ..graph import Graph
from ..query.evaluator import IMAGE_PREFIX, Environment, evaluate
from ..schema import PLAIN, Schema
from ..values import VMap, VSet, conforms_to_domain, render, sort_key
from . import statements as st
from .trace import TraceMaps

log = logging.getLogger(__name__)


class ExecutionContext:
    def __init__(self, source, imports=(), target_name="Target"):
        self.source = source
        self.imports = tuple(imports)
        self.target_schema = Schema(target_name)
        self.target = Graph(self.target_schema, target_name)
        self.globals = {}
        self.trace = TraceMaps()

    def environment(self):
        return Environment(self.source, self.imports, self.globals, self.trace.env_images())

    def query(self, node):
        return evaluate(node, self.environment())

    def __repr__(self):
        return f"ExecutionContext({self.target!r}, {self.trace!r})"


def execute(transformation, source, on_statement=None):
    """Run ``transformation`` against ``source`` and return the context.

    ``on_statement(index, statement, ctx)`` is called after every statement.
    Errors propagate with ``statement_index`` and ``line`` filled in.
    """
    ctx = ExecutionContext(source, transformation.imports)
    for index, stmt in enumerate(transformation.statements):
        try:
            HANDLERS[type(stmt)](stmt, ctx)
        except GretlError as exc:
            if exc.statement_index is None:
                exc.statement_index = index
                exc.line = stmt.line
            raise
        log.debug("statement %d (%s) done: %r", index, stmt.operation, ctx.trace)
        if on_statement is not None:
            on_statement(index, stmt, ctx)
    return ctx


def exec_global_binding(stmt, ctx):
    if stmt.name in ctx.globals:
        raise DuplicateBinding(f"{stmt.name} is already bound")
    if stmt.name.startswith(IMAGE_PREFIX):
        raise DuplicateBinding(f"{stmt.name} is reserved for trace maps")
    ctx.globals[stmt.name] = ctx.query(stmt.query)


def exec_create_vertex_class(stmt, ctx):
    archetypes = ctx.query(stmt.query)
    if not isinstance(archetypes, VSet):
        raise NotASet(f"CreateVertexClass {stmt.name} needs a set, got {render(archetypes)}")
    cls = ctx.target_schema.add_vertex_class(stmt.name)
    ctx.trace.add_class(cls.simple_name)
    for a in sorted(archetypes, key=sort_key):
        ctx.trace.record(cls.simple_name, a, ctx.target.create_vertex(cls))


def exec_create_edge_class(stmt, ctx):
    schema = ctx.target_schema
    from_class = schema.get_class(stmt.from_class)
    to_class = schema.get_class(stmt.to_class)
    if stmt.name in schema:
        raise DuplicateClassName(f"class name {stmt.name} already in use")
    triples = ctx.query(stmt.query)
    if not isinstance(triples, VSet) or not all(isinstance(t, tuple) and len(t) == 3 for t in triples):
        raise NotTripleSet(f"CreateEdgeClass {stmt.name} needs a set of triples, got {render(triples)}")
    planned, seen = [], VSet()
    for a, sa, ta in sorted(triples, key=sort_key):
        if a in seen:
            raise DuplicateArchetype(f"archetype {render(a)} reported twice for {stmt.name}")
        seen.add(a)
        planned.append((a, ctx.trace.image(from_class.simple_name, sa), ctx.trace.image(to_class.simple_name, ta)))
    cls = schema.add_edge_class(stmt.name, from_class, to_class, stmt.from_role, stmt.to_role, PLAIN)
    ctx.trace.add_class(cls.simple_name)
    for a, src, dst in planned:
        ctx.trace.record(cls.simple_name, a, ctx.target.create_edge(cls, src, dst))


def _checked_assignments(ctx, owner, attr_name, domain, query):
    mapping = ctx.query(query)
    if not isinstance(mapping, VMap):
        raise NotAMap(f"{owner.simple_name}.{attr_name} needs a map, got {render(mapping)}")
    assignments = []
    for a, value in sorted(mapping.items(), key=lambda kv: sort_key(kv[0])):
        element = ctx.trace.image(owner.simple_name, a)
        if not conforms_to_domain(value, domain):
            raise DomainMismatch(f"{owner.simple_name}.{attr_name} expects {domain}, got {render(value)}")
        assignments.append((element, value))
    return assignments


def exec_create_attribute(stmt, ctx):
    owner = ctx.target_schema.get_class(stmt.owner)
    if owner.attribute(stmt.attribute) is not None:
        raise DuplicateAttribute(f"attribute {stmt.attribute} already exists on {owner.qualified_name}")
    assignments = []
    if stmt.query is not None:
        assignments = _checked_assignments(ctx, owner, stmt.attribute, stmt.domain, stmt.query)
    ctx.target_schema.add_attribute(owner, stmt.attribute, stmt.domain, stmt.default)
    for element, value in assignments:
        element.set(stmt.attribute, value)


def exec_set_attributes(stmt, ctx):
    owner = ctx.target_schema.get_class(stmt.owner)
    attr = owner.attribute(stmt.attribute)
    if attr is None:
        raise UnknownAttribute(f"{owner.qualified_name}.{stmt.attribute} has not been created")
    for element, value in _checked_assignments(ctx, owner, stmt.attribute, attr.domain, stmt.query):
        element.set(stmt.attribute, value)


def exec_add_sub_class(stmt, ctx):
    ctx.target_schema.add_specialization(stmt.subclass, stmt.superclass)


HANDLERS = {
    st.GlobalBinding: exec_global_binding,
    st.CreateVertexClass: exec_create_vertex_class,
    st.CreateEdgeClass: exec_create_edge_class,
    st.CreateAttribute: exec_create_attribute,
    st.SetAttributes: exec_set_attributes,
    st.AddSubClass: exec_add_sub_class,
}
