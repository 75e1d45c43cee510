"""Built-in query functions."""

from ..errors import NotACollection, NotSingleton, QueryTypeError
from ..values import VMap, VSet, render


def the_element(collection):
    """The single member of a one-element set; anything else is an error."""
    if not isinstance(collection, VSet):
        raise NotACollection(f"theElement() expects a set, got {render(collection)}")
    if len(collection) != 1:
        raise NotSingleton(f"theElement() expects exactly one element, got {len(collection)}: {render(collection)}")
    return next(iter(collection))


def is_empty(collection):
    if not isinstance(collection, (VSet, VMap)):
        raise QueryTypeError(f"isEmpty() expects a set or map, got {render(collection)}")
    return len(collection) == 0


def key_set(mapping):
    if not isinstance(mapping, VMap):
        raise QueryTypeError(f"keySet() expects a map, got {render(mapping)}")
    return mapping.keys()


def tup(*values):
    if not values:
        raise QueryTypeError("tup() needs at least one argument")
    return tuple(values)


def _arity(fn, n):
    def call(*args):
        if len(args) != n:
            raise QueryTypeError(f"{fn.__name__}() takes {n} argument(s), got {len(args)}")
        return fn(*args)
    return call


BUILTINS = {
    "theElement": _arity(the_element, 1),
    "isEmpty": _arity(is_empty, 1),
    "keySet": _arity(key_set, 1),
    "tup": tup,
}
