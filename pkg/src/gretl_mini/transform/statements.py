from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..query.ast import Node


@dataclass(frozen=True)
class Statement:
    line: int = field(default=0, compare=False, kw_only=True)

    @property
    def operation(self):
        return type(self).__name__


@dataclass(frozen=True)
class GlobalBinding(Statement):
    name: str
    query: Node


@dataclass(frozen=True)
class CreateVertexClass(Statement):
    name: str
    query: Node


@dataclass(frozen=True)
class CreateEdgeClass(Statement):
    name: str
    from_class: str
    from_role: Optional[str]
    to_class: str
    to_role: Optional[str]
    query: Node


@dataclass(frozen=True)
class AddSubClass(Statement):
    subclass: str
    superclass: str


@dataclass(frozen=True)
class CreateAttribute(Statement):
    owner: str
    attribute: str
    domain: str
    default: object = None
    query: Optional[Node] = None


@dataclass(frozen=True)
class SetAttributes(Statement):
    owner: str
    attribute: str
    query: Node


@dataclass(frozen=True)
class Transformation:
    imports: Tuple[str, ...]
    statements: Tuple[Statement, ...]

    @property
    def operations(self):
        """Statements other than global bindings."""
        return tuple(s for s in self.statements if not isinstance(s, GlobalBinding))
