"""Query evaluation over a read-only graph."""

from collections import ChainMap

from ..errors import (
    MapKeyConflict,
    QueryTypeError,
    UnboundVariable,
    UnknownTraceMap,
)
from ..graph import Vertex
from ..values import UNDEFINED, Element, VMap, VSet, render, values_equal
from . import ast
from .builtins import BUILTINS

IMAGE_PREFIX = "img_"


class Environment:
    """Evaluation context: source graph, imports and global bindings.

    ``images`` maps reserved names such as ``img_State`` to the trace maps
    of a running transformation.
    """

    def __init__(self, graph, imports=(), bindings=None, images=None):
        self.graph = graph
        self.imports = tuple(imports)
        self.bindings = dict(bindings or {})
        self.images = images if images is not None else {}
        self._types = {}

    def resolve_type(self, name):
        cls = self._types.get(name)
        if cls is None:
            cls = self._types[name] = self.graph.schema.resolve_type(name, self.imports)
        return cls

    def lookup(self, name):
        if name in self.bindings:
            return self.bindings[name]
        if name in self.images:
            return self.images[name]
        if name.startswith(IMAGE_PREFIX):
            raise UnknownTraceMap(f"trace map {name} does not exist (no class {name[len(IMAGE_PREFIX):]} created yet)")
        raise UnboundVariable(f"unbound variable {name}")


def _truth(value, what):
    if value is UNDEFINED:
        return False
    if not isinstance(value, bool):
        raise QueryTypeError(f"{what} must be boolean, got {render(value)}")
    return value


class Evaluator:
    def __init__(self, env):
        self.env = env

    def evaluate(self, node, scope=None):
        return self.eval(node, scope if scope is not None else {})

    def eval(self, node, scope):
        method = getattr(self, "_eval_" + type(node).__name__, None)
        if method is None:
            raise QueryTypeError(f"cannot evaluate {type(node).__name__} node")
        return method(node, scope)

    # -- simple expressions ---------------------------------------------

    def _eval_Literal(self, node, scope):
        return node.value

    def _eval_Var(self, node, scope):
        if node.name in scope:
            return scope[node.name]
        return self.env.lookup(node.name)

    def _eval_Extent(self, node, scope):
        cls = self.env.resolve_type(node.type_name)
        return VSet(self.env.graph.vertices_of(cls))

    def _eval_Call(self, node, scope):
        fn = BUILTINS.get(node.name)
        if fn is None:
            raise QueryTypeError(f"unknown function {node.name}()")
        return fn(*(self.eval(a, scope) for a in node.args))

    def _eval_Attr(self, node, scope):
        base = self.eval(node.base, scope)
        if not isinstance(base, Element):
            raise QueryTypeError(f"attribute access .{node.name} on non-element {render(base)}")
        return base.get(node.name)

    def _eval_Index(self, node, scope):
        base = self.eval(node.base, scope)
        if not isinstance(base, tuple):
            raise QueryTypeError(f"index [{node.index}] on non-tuple {render(base)}")
        if not 0 <= node.index < len(base):
            raise QueryTypeError(f"index {node.index} out of range for {len(base)}-tuple")
        return base[node.index]

    def _eval_Compare(self, node, scope):
        left = self.eval(node.left, scope)
        right = self.eval(node.right, scope)
        if left is UNDEFINED or right is UNDEFINED:
            return False
        equal = values_equal(left, right)
        return equal if node.op == "=" else not equal

    def _eval_And(self, node, scope):
        return _truth(self.eval(node.left, scope), "'and' operand") and \
            _truth(self.eval(node.right, scope), "'and' operand")

    def _eval_Or(self, node, scope):
        return _truth(self.eval(node.left, scope), "'or' operand") or \
            _truth(self.eval(node.right, scope), "'or' operand")

    def _eval_Not(self, node, scope):
        return not _truth(self.eval(node.operand, scope), "'not' operand")

    # -- comprehension ----------------------------------------------------

    def _eval_Comprehension(self, node, scope):
        is_map = isinstance(node.report, ast.ReportMap)
        result = VMap() if is_map else VSet()
        decls = node.declarations

        def loop(i, local):
            if i == len(decls):
                emit(local)
                return
            name, domain_expr = decls[i]
            domain = self.eval(domain_expr, local)
            if not isinstance(domain, VSet):
                raise QueryTypeError(f"domain of {name} must be a set, got {render(domain)}")
            for value in domain:
                loop(i + 1, ChainMap({name: value}, local))

        def emit(local):
            if node.where:
                local = ChainMap({}, local)
                for name, expr in node.where:
                    local.maps[0][name] = self.eval(expr, local)
            if node.filter is not None and not _truth(self.eval(node.filter, local), "with-clause"):
                return
            if is_map:
                key = self.eval(node.report.key, local)
                value = self.eval(node.report.value, local)
                if key in result and not values_equal(result[key], value):
                    raise MapKeyConflict(
                        f"reportMap key {render(key)} maps to both {render(result[key])} and {render(value)}")
                result[key] = value
            else:
                values = [self.eval(e, local) for e in node.report.exprs]
                result.add(values[0] if len(values) == 1 else tuple(values))

        loop(0, ChainMap({}, scope))
        return result

    # -- paths ------------------------------------------------------------

    def _start_set(self, value):
        if isinstance(value, Vertex):
            return {value}
        if isinstance(value, VSet) and all(isinstance(v, Vertex) for v in value):
            return set(value)
        raise QueryTypeError(f"path start must be a vertex or set of vertices, got {render(value)}")

    def _eval_PathApp(self, node, scope):
        if node.start is None:
            end = self.eval(node.end, scope)
            if not isinstance(end, Vertex):
                raise QueryTypeError(f"path end must be a vertex, got {render(end)}")
            found = [v for v in self.env.graph.vertices
                     if end in self.path_image({v}, node.path, scope)]
            return VSet(found)
        reached = self.path_image(self._start_set(self.eval(node.start, scope)), node.path, scope)
        if node.end is None:
            return VSet(sorted(reached, key=lambda v: v.seq))
        end = self.eval(node.end, scope)
        if end is UNDEFINED:
            return False
        if not isinstance(end, Vertex):
            raise QueryTypeError(f"path end must be a vertex, got {render(end)}")
        return end in reached

    def path_image(self, starts, path, scope=None):
        """Set of vertices reachable from ``starts`` along walks matching ``path``."""
        scope = scope if scope is not None else {}
        return self._image(frozenset(starts), path, scope)

    def _image(self, current, node, scope):
        if isinstance(node, ast.EdgeStep):
            containment_only = node.arrow == ast.CONTAINMENT
            out = set()
            for v in current:
                for e in v.out_edges:
                    if containment_only and not e.cls.is_containment:
                        continue
                    if node.role is not None and e.cls.to_role != node.role:
                        continue
                    out.add(e.target)
            return out
        if isinstance(node, ast.Restriction):
            types = [self.env.resolve_type(t) for t in node.types]
            out = set()
            for v in current:
                if not any(v.cls.is_subclass_of(t) for t in types):
                    continue
                if node.predicate is not None:
                    local = ChainMap({"thisVertex": v}, scope)
                    if not _truth(self.eval(node.predicate, local), "restriction predicate"):
                        continue
                out.add(v)
            return out
        if isinstance(node, ast.Seq):
            for item in node.items:
                if not current:
                    return set()
                current = self._image(current, item, scope)
            return set(current)
        if isinstance(node, ast.Alt):
            out = set()
            for option in node.options:
                out |= self._image(current, option, scope)
            return out
        if isinstance(node, ast.Iterate):
            reached = set(current) if node.kind == "*" else set()
            frontier = self._image(current, node.body, scope)
            while frontier:
                new = frontier - reached
                if not new:
                    break
                reached |= new
                frontier = self._image(new, node.body, scope)
            return reached
        raise QueryTypeError(f"not a path expression: {type(node).__name__}")


def evaluate(node, env, scope=None):
    return Evaluator(env).evaluate(node, scope)


def eval_path(start, path, env):
    """Forward image of ``start`` (a vertex or iterable of vertices) as a VSet."""
    ev = Evaluator(env)
    starts = {start} if isinstance(start, Vertex) else set(start)
    return VSet(sorted(ev.path_image(starts, path), key=lambda v: v.seq))


def eval_path_exists(start, path, end, env):
    return end in Evaluator(env).path_image({start}, path)


def run_query(text, graph, imports=(), bindings=None):
    from .parser import parse_query
    return evaluate(parse_query(text), Environment(graph, imports, bindings))
