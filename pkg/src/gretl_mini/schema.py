"""Schema (metamodel) level: vertex classes, edge classes, attributes,
multiple inheritance and name resolution against imported packages."""

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import (
    AmbiguousRole,
    AmbiguousType,
    AttributeClash,
    DomainMismatch,
    DuplicateAttribute,
    DuplicateClassName,
    InheritanceCycle,
    KindMismatch,
    UnknownClass,
    UnknownType,
)
from .values import DOMAINS, conforms_to_domain

PLAIN = "plain"
CONTAINMENT = "containment"
EDGE_KINDS = (PLAIN, CONTAINMENT)


class Multiplicity(NamedTuple):
    min: int = 0
    max: Optional[int] = None  # None means unbounded

    def __str__(self):
        return f"({self.min},{'*' if self.max is None else self.max})"

    def admits(self, n):
        return n >= self.min and (self.max is None or n <= self.max)


DEFAULT_MULTIPLICITY = Multiplicity(0, None)


@dataclass(eq=False)
class AttributeDef:
    name: str
    domain: str
    default: object = None
    owner: "GraphClass" = None

    def __repr__(self):
        return f"AttributeDef({self.owner.qualified_name}.{self.name}: {self.domain})"


def split_name(qualified_name):
    package, _, simple = qualified_name.rpartition(".")
    return package, simple


class GraphClass:
    is_vertex_class = False

    def __init__(self, schema, qualified_name, is_abstract=False):
        self.schema = schema
        self.qualified_name = qualified_name
        self.package, self.simple_name = split_name(qualified_name)
        self.is_abstract = is_abstract
        self.superclasses = []
        self.subclasses = []
        self.attributes = {}  # declared here only

    def is_subclass_of(self, other):
        """Reflexive, transitive specialization test."""
        return other is self or other in self.schema.ancestors(self)

    def visible_attributes(self):
        return self.schema.visible_attributes(self)

    def attribute(self, name):
        return self.schema.visible_attributes(self).get(name)

    def __repr__(self):
        return f"{type(self).__name__}({self.qualified_name})"


class VertexClass(GraphClass):
    is_vertex_class = True


class EdgeClass(GraphClass):
    def __init__(self, schema, qualified_name, from_class, to_class, from_role=None,
                 to_role=None, kind=PLAIN, from_multiplicity=DEFAULT_MULTIPLICITY,
                 to_multiplicity=DEFAULT_MULTIPLICITY, is_abstract=False):
        super().__init__(schema, qualified_name, is_abstract)
        self.from_class = from_class
        self.to_class = to_class
        self.from_role = from_role or None
        self.to_role = to_role or None
        self.kind = kind
        self.from_multiplicity = Multiplicity(*from_multiplicity)
        self.to_multiplicity = Multiplicity(*to_multiplicity)

    @property
    def is_containment(self):
        return self.kind == CONTAINMENT


class Schema:
    def __init__(self, name="Schema"):
        self.name = name
        self.packages = set()
        self.classes = {}  # qualified name -> class, creation order
        self._ancestors = {}
        self._visible = {}

    # -- lookup -----------------------------------------------------------

    @property
    def vertex_classes(self):
        return [c for c in self.classes.values() if c.is_vertex_class]

    @property
    def edge_classes(self):
        return [c for c in self.classes.values() if not c.is_vertex_class]

    def get_class(self, name_or_class):
        if isinstance(name_or_class, GraphClass):
            if self.classes.get(name_or_class.qualified_name) is not name_or_class:
                raise UnknownClass(f"class {name_or_class.qualified_name} is not part of schema {self.name}")
            return name_or_class
        try:
            return self.classes[name_or_class]
        except KeyError:
            raise UnknownClass(f"unknown class {name_or_class!r}") from None

    def __contains__(self, name):
        return name in self.classes

    def resolve_type(self, name, imports=()):
        """Resolve a possibly unqualified type name.

        Qualified names are looked up directly.  An unqualified name must be
        declared by exactly one of the imported packages or the default
        (empty) package.
        """
        if "." in name:
            cls = self.classes.get(name)
            if cls is None:
                raise UnknownType(f"unknown type {name}")
            return cls
        visible = set(imports) | {""}
        candidates = [c for c in self.classes.values()
                      if c.simple_name == name and c.package in visible]
        if not candidates:
            raise UnknownType(f"unknown type {name} (imports: {', '.join(sorted(imports)) or 'none'})")
        if len(candidates) > 1:
            names = ", ".join(sorted(c.qualified_name for c in candidates))
            raise AmbiguousType(f"type name {name} is ambiguous: {names}")
        return candidates[0]

    # -- mutation ---------------------------------------------------------

    def _register(self, cls):
        if cls.qualified_name in self.classes:
            raise DuplicateClassName(f"class name {cls.qualified_name} already in use")
        if not cls.simple_name:
            raise ValueError(f"invalid class name {cls.qualified_name!r}")
        self.classes[cls.qualified_name] = cls
        if cls.package:
            self.packages.add(cls.package)
        self._invalidate()
        return cls

    def add_vertex_class(self, qualified_name, is_abstract=False):
        return self._register(VertexClass(self, qualified_name, is_abstract))

    def add_edge_class(self, qualified_name, from_class, to_class, from_role=None, to_role=None,
                       kind=PLAIN, from_multiplicity=None, to_multiplicity=None, is_abstract=False):
        if qualified_name in self.classes:
            raise DuplicateClassName(f"class name {qualified_name} already in use")
        from_class = self._vertex_class(from_class)
        to_class = self._vertex_class(to_class)
        if kind not in EDGE_KINDS:
            raise ValueError(f"edge kind must be one of {EDGE_KINDS}, got {kind!r}")
        for other in self.edge_classes:
            if to_role and other.from_class is from_class and other.to_role == to_role:
                raise AmbiguousRole(
                    f"role {to_role} already leaves {from_class.qualified_name} via {other.qualified_name}")
            if from_role and other.to_class is to_class and other.from_role == from_role:
                raise AmbiguousRole(
                    f"role {from_role} already enters {to_class.qualified_name} via {other.qualified_name}")
        ec = EdgeClass(self, qualified_name, from_class, to_class, from_role, to_role, kind,
                       from_multiplicity or DEFAULT_MULTIPLICITY,
                       to_multiplicity or DEFAULT_MULTIPLICITY, is_abstract)
        return self._register(ec)

    def _vertex_class(self, c):
        cls = self.get_class(c)
        if not cls.is_vertex_class:
            raise KindMismatch(f"{cls.qualified_name} is not a vertex class")
        return cls

    def add_specialization(self, subclass, superclass):
        sub = self.get_class(subclass)
        sup = self.get_class(superclass)
        if sub.is_vertex_class != sup.is_vertex_class:
            raise KindMismatch(f"cannot specialize {sup.qualified_name} by {sub.qualified_name}: "
                               "vertex and edge classes do not mix")
        if sub is sup or sub in self.ancestors(sup):
            raise InheritanceCycle(f"{sub.qualified_name} under {sup.qualified_name} creates a cycle")
        if sup in sub.superclasses:
            return self
        sub.superclasses.append(sup)
        sup.subclasses.append(sub)
        self._invalidate()
        try:
            for cls in [sub, *self.descendants(sub)]:
                self.visible_attributes(cls)
        except AttributeClash:
            sub.superclasses.remove(sup)
            sup.subclasses.remove(sub)
            self._invalidate()
            raise
        return self

    def add_attribute(self, owner, name, domain, default=None):
        cls = self.get_class(owner)
        if domain not in DOMAINS:
            raise DomainMismatch(f"unknown attribute domain {domain!r}")
        if default is not None and not conforms_to_domain(default, domain):
            raise DomainMismatch(f"default {default!r} of {cls.qualified_name}.{name} is not a {domain}")
        if name in self.visible_attributes(cls):
            raise DuplicateAttribute(f"attribute {name} already visible on {cls.qualified_name}")
        for d in self.descendants(cls):
            if name in d.attributes:
                raise DuplicateAttribute(f"attribute {name} already declared by subclass {d.qualified_name}")
        attr = AttributeDef(name, domain, default, cls)
        cls.attributes[name] = attr
        self._invalidate()
        return attr

    # -- inheritance queries ----------------------------------------------

    def _invalidate(self):
        self._ancestors.clear()
        self._visible.clear()

    def ancestors(self, cls):
        """Transitive (irreflexive) superclasses."""
        result = self._ancestors.get(cls)
        if result is None:
            result = set()
            stack = list(cls.superclasses)
            while stack:
                c = stack.pop()
                if c not in result:
                    result.add(c)
                    stack.extend(c.superclasses)
            result = frozenset(result)
            self._ancestors[cls] = result
        return result

    def descendants(self, cls):
        result, stack = [], list(cls.subclasses)
        while stack:
            c = stack.pop()
            if c not in result:
                result.append(c)
                stack.extend(c.subclasses)
        return result

    def visible_attributes(self, cls):
        result = self._visible.get(cls)
        if result is None:
            result = dict(cls.attributes)
            for sup in cls.superclasses:
                for name, attr in self.visible_attributes(sup).items():
                    if name in result and result[name] is not attr:
                        raise AttributeClash(
                            f"{cls.qualified_name} sees attribute {name} from both "
                            f"{result[name].owner.qualified_name} and {attr.owner.qualified_name}")
                    result[name] = attr
            self._visible[cls] = result
        return result

    def __repr__(self):
        return f"Schema({self.name}, {len(self.classes)} classes)"
