"""The query value universe.

Values are plain Python objects where possible: ``str``, ``int``, ``bool``
and ``tuple`` stand for themselves, graph elements are :class:`Element`
instances compared by identity, and the two collection kinds are
:class:`VSet` and :class:`VMap`.  ``UNDEFINED`` marks an unset attribute.

Collections key their members by :func:`value_key`, a structural key that
keeps ``True`` and ``1`` apart (Python's ``==`` would merge them).
"""

from .errors import QueryTypeError


class Undefined:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDEFINED"

    def __bool__(self):
        return False

    def __reduce__(self):
        return (Undefined, ())


UNDEFINED = Undefined()


class Element:
    """Base for vertices and edges; identity semantics."""

    __slots__ = ()
    is_vertex = False


DOMAINS = ("String", "Integer", "Boolean")


def conforms_to_domain(value, domain):
    if domain == "String":
        return isinstance(value, str)
    if domain == "Integer":
        return isinstance(value, int) and not isinstance(value, bool)
    if domain == "Boolean":
        return isinstance(value, bool)
    raise ValueError(f"unknown attribute domain {domain!r}")


def value_key(v):
    if v is UNDEFINED:
        return ("u",)
    if isinstance(v, bool):
        return ("b", v)
    if isinstance(v, int):
        return ("i", v)
    if isinstance(v, str):
        return ("s", v)
    if isinstance(v, Element):
        return ("e", v)
    if isinstance(v, tuple):
        return ("t",) + tuple(value_key(x) for x in v)
    if isinstance(v, VSet):
        return ("S", frozenset(v._items))
    if isinstance(v, VMap):
        return ("M", frozenset((k, value_key(pair[1])) for k, pair in v._items.items()))
    raise QueryTypeError(f"not a query value: {v!r}")


def values_equal(a, b):
    return value_key(a) == value_key(b)


def sort_key(v):
    """Total order used wherever iteration order must be deterministic."""
    if v is UNDEFINED:
        return (0,)
    if isinstance(v, bool):
        return (1, v)
    if isinstance(v, int):
        return (2, v)
    if isinstance(v, str):
        return (3, v)
    if isinstance(v, Element):
        return (4, 0 if v.is_vertex else 1, v.seq)
    if isinstance(v, tuple):
        return (5, tuple(sort_key(x) for x in v))
    if isinstance(v, VSet):
        return (6, tuple(sorted(sort_key(x) for x in v)))
    if isinstance(v, VMap):
        return (7, tuple(sorted((sort_key(k), sort_key(x)) for k, x in v.items())))
    raise QueryTypeError(f"not a query value: {v!r}")


class VSet:
    """Duplicate-free set with structural membership, insertion ordered."""

    __slots__ = ("_items",)

    def __init__(self, values=()):
        self._items = {}
        for v in values:
            self.add(v)

    def add(self, v):
        self._items.setdefault(value_key(v), v)

    def __contains__(self, v):
        return value_key(v) in self._items

    def __iter__(self):
        return iter(self._items.values())

    def __len__(self):
        return len(self._items)

    def __eq__(self, other):
        if isinstance(other, VSet):
            return self._items.keys() == other._items.keys()
        if isinstance(other, (set, frozenset)):
            return self == VSet(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._items))

    def sorted(self):
        return sorted(self._items.values(), key=sort_key)

    def __repr__(self):
        return "VSet({" + ", ".join(repr(v) for v in self) + "})"


class VMap:
    """Map with structural keys, insertion ordered."""

    __slots__ = ("_items",)

    def __init__(self, pairs=()):
        self._items = {}
        for k, v in pairs:
            self[k] = v

    def __setitem__(self, k, v):
        self._items[value_key(k)] = (k, v)

    def __getitem__(self, k):
        return self._items[value_key(k)][1]

    def get(self, k, default=None):
        pair = self._items.get(value_key(k))
        return default if pair is None else pair[1]

    def __contains__(self, k):
        return value_key(k) in self._items

    def __len__(self):
        return len(self._items)

    def keys(self):
        return VSet(pair[0] for pair in self._items.values())

    def items(self):
        return list(self._items.values())

    def __eq__(self, other):
        if isinstance(other, VMap):
            return value_key(self) == value_key(other)
        return NotImplemented

    def __hash__(self):
        return hash(value_key(self))

    def __repr__(self):
        return "VMap({" + ", ".join(f"{k!r}: {v!r}" for k, v in self.items()) + "})"


def render(v):
    """Human-readable, deterministic rendering of a value."""
    if v is UNDEFINED:
        return "undefined"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(v, Element):
        return f"{v.id}:{v.cls.simple_name}"
    if isinstance(v, tuple):
        return "(" + ", ".join(render(x) for x in v) + ")"
    if isinstance(v, VSet):
        return "{" + ", ".join(sorted(render(x) for x in v)) + "}"
    if isinstance(v, VMap):
        return "{" + ", ".join(sorted(f"{render(k)} -> {render(x)}" for k, x in v.items())) + "}"
    return repr(v)
