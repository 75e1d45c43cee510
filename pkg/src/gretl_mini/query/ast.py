"""Query syntax tree.  Nodes are immutable dataclasses."""

from dataclasses import dataclass, field
from typing import Optional, Tuple

FORWARD = "forward"
CONTAINMENT = "containment"


@dataclass(frozen=True)
class Node:
    pass


# -- expressions ------------------------------------------------------------

@dataclass(frozen=True)
class Literal(Node):
    value: object


@dataclass(frozen=True)
class Var(Node):
    name: str
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Extent(Node):
    """``V{Type}``: all vertices of a type, subclasses included."""
    type_name: str


@dataclass(frozen=True)
class Call(Node):
    name: str
    args: Tuple[Node, ...]
    pos: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Attr(Node):
    base: Node
    name: str


@dataclass(frozen=True)
class Index(Node):
    base: Node
    index: int


@dataclass(frozen=True)
class Compare(Node):
    op: str  # "=" or "<>"
    left: Node
    right: Node


@dataclass(frozen=True)
class And(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Or(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Not(Node):
    operand: Node


@dataclass(frozen=True)
class ReportSet(Node):
    exprs: Tuple[Node, ...]


@dataclass(frozen=True)
class ReportMap(Node):
    key: Node
    value: Node


@dataclass(frozen=True)
class Comprehension(Node):
    declarations: Tuple[Tuple[str, Node], ...]  # one entry per variable
    filter: Optional[Node]
    report: Node
    where: Tuple[Tuple[str, Node], ...] = ()


@dataclass(frozen=True)
class PathApp(Node):
    """Path application.

    ``start path``          forward image (a set)
    ``start path end``      existence test (a boolean)
    ``path end``            vertices from which ``end`` is reachable (a set)
    """
    start: Optional[Node]
    path: Node
    end: Optional[Node]


# -- regular path expressions ----------------------------------------------

@dataclass(frozen=True)
class EdgeStep(Node):
    arrow: str  # FORWARD or CONTAINMENT
    role: Optional[str] = None


@dataclass(frozen=True)
class Restriction(Node):
    types: Tuple[str, ...]
    predicate: Optional[Node] = None


@dataclass(frozen=True)
class Seq(Node):
    items: Tuple[Node, ...]


@dataclass(frozen=True)
class Alt(Node):
    options: Tuple[Node, ...]


@dataclass(frozen=True)
class Iterate(Node):
    body: Node
    kind: str  # "+" or "*"


PATH_NODES = (EdgeStep, Restriction, Seq, Alt, Iterate)
