"""Random schemas, graphs and path expressions shared by the property tests.

Paths are generated as plain tuples, rendered to query text for the engine
and interpreted directly by the automaton oracle, so the oracle never sees
the engine's parser or syntax tree.
"""

import random
import time

from gretl_mini.graph import Graph
from gretl_mini.query import Environment, eval_path, parse_query
from gretl_mini.schema import CONTAINMENT, PLAIN, Schema
from gretl_mini.values import UNDEFINED

# class -> direct superclasses; the oracle computes subtyping from this table
SUPERS = {"Root": [], "A": ["Root"], "B": ["A"], "C": ["Root"], "D": ["C"], "E": ["B", "D"]}
CONCRETE = ["A", "B", "C", "D", "E"]
EDGES = {
    # name: (from, to, role, kind)
    "F1": ("A", "A", "r1", PLAIN),
    "F2": ("A", "C", "r2", CONTAINMENT),
    "F3": ("C", "A", "r1", CONTAINMENT),
    "F4": ("C", "C", "r3", PLAIN),
    "F5": ("B", "D", "r4", CONTAINMENT),
}
ROLES = ["r1", "r2", "r3", "r4", "r9"]
TYPES = list(SUPERS)


def is_a(cls, target):
    if cls == target:
        return True
    return any(is_a(s, target) for s in SUPERS[cls])


def random_schema():
    schema = Schema("Random")
    schema.add_vertex_class("Root", is_abstract=True)
    for name in CONCRETE:
        schema.add_vertex_class(name)
    for name, supers in SUPERS.items():
        for s in supers:
            schema.add_specialization(name, s)
    schema.add_attribute("Root", "w", "Integer")
    for name, (src, dst, role, kind) in EDGES.items():
        schema.add_edge_class(name, src, dst, to_role=role, kind=kind)
    return schema


def random_graph(rng, max_vertices=30, max_edges=60):
    graph = Graph(random_schema(), "R")
    for _ in range(rng.randint(1, max_vertices)):
        v = graph.create_vertex(rng.choice(CONCRETE))
        if rng.random() < 0.7:
            v.set("w", rng.randint(0, 3))
    for _ in range(rng.randint(0, max_edges)):
        name = rng.choice(list(EDGES))
        src, dst, _, _ = EDGES[name]
        sources = [v for v in graph.vertices if is_a(v.cls.simple_name, src)]
        targets = [v for v in graph.vertices if is_a(v.cls.simple_name, dst)]
        if sources and targets:
            graph.create_edge(name, rng.choice(sources), rng.choice(targets))
    return graph


# -- path expressions as tuples -----------------------------------------------

def random_path(rng, depth=4):
    leaf = depth <= 1 or rng.random() < 0.3
    if leaf:
        if rng.random() < 0.65:
            return ("step", rng.choice(["-->", "<>--"]), rng.choice([None, None, *ROLES]))
        types = tuple(rng.sample(TYPES, rng.randint(1, 2)))
        pred = (rng.choice(["=", "<>"]), rng.randint(0, 3)) if rng.random() < 0.4 else None
        return ("restr", types, pred)
    kind = rng.choice(["seq", "seq", "alt", "plus", "star"])
    if kind == "seq":
        return ("seq", [random_path(rng, depth - 1) for _ in range(rng.randint(2, 3))])
    if kind == "alt":
        return ("alt", [random_path(rng, depth - 1) for _ in range(2)])
    return (kind, random_path(rng, depth - 1))


def render_path(p):
    tag = p[0]
    if tag == "step":
        return p[1] + (f"{{{p[2]}}}" if p[2] else "")
    if tag == "restr":
        pred = f" @ thisVertex.w {p[2][0]} {p[2][1]}" if p[2] else ""
        return "& {" + ", ".join(p[1]) + pred + "}"
    if tag == "seq":
        return " ".join(render_path(x) for x in p[1])
    if tag == "alt":
        return "(" + " | ".join(render_path(x) for x in p[1]) + ")"
    return "(" + render_path(p[1]) + ")" + ("+" if tag == "plus" else "*")


def path_depth(p):
    if p[0] in ("step", "restr"):
        return 1
    if p[0] in ("seq", "alt"):
        return 1 + max(path_depth(x) for x in p[1])
    return 1 + path_depth(p[1])


def path_tags(p, out=None):
    out = set() if out is None else out
    out.add(p[0] if p[0] != "step" else f"step{p[1]}")
    if p[0] in ("seq", "alt"):
        for x in p[1]:
            path_tags(x, out)
    elif p[0] in ("plus", "star"):
        path_tags(p[1], out)
    return out


# -- oracle: Thompson automaton x graph, product reachability -------

class Automaton:
    def __init__(self, path):
        self.moves = []  # (state, label, state); label None is epsilon
        self.count = 0
        self.start, self.final = self._build(path)

    def _state(self):
        self.count += 1
        return self.count - 1

    def _build(self, p):
        tag = p[0]
        if tag in ("step", "restr"):
            s, e = self._state(), self._state()
            self.moves.append((s, p, e))
            return s, e
        if tag == "seq":
            frags = [self._build(x) for x in p[1]]
            for (_, e1), (s2, _) in zip(frags, frags[1:]):
                self.moves.append((e1, None, s2))
            return frags[0][0], frags[-1][1]
        s, e = self._state(), self._state()
        if tag == "alt":
            for x in p[1]:
                fs, fe = self._build(x)
                self.moves.append((s, None, fs))
                self.moves.append((fe, None, e))
            return s, e
        fs, fe = self._build(p[1])
        self.moves += [(s, None, fs), (fe, None, fs), (fe, None, e)]
        if tag == "star":
            self.moves.append((s, None, e))
        return s, e


def _step_targets(graph_edges, v, arrow, role):
    out = []
    for (src, dst, name) in graph_edges:
        if src != v:
            continue
        _, _, erole, kind = EDGES[name]
        if arrow == "<>--" and kind != CONTAINMENT:
            continue
        if role is not None and erole != role:
            continue
        out.append(dst)
    return out


def _guard(label, vclass, wvalue):
    _, types, pred = label
    if not any(is_a(vclass, t) for t in types):
        return False
    if pred is None:
        return True
    if wvalue is None:
        return False
    op, k = pred
    return (wvalue == k) if op == "=" else (wvalue != k)


def oracle_reach(graph, start_ids, path):
    """Vertex ids reachable from ``start_ids`` by walks spelling ``path``.

    Works on a plain id/class/attribute view of the graph.
    """
    classes = {v.id: v.cls.simple_name for v in graph.vertices}
    weights = {v.id: (None if v.get("w") is UNDEFINED else v.get("w")) for v in graph.vertices}
    edges = [(e.source.id, e.target.id, e.cls.simple_name) for e in graph.edges]
    nfa = Automaton(path)
    by_state = {}
    for s, label, t in nfa.moves:
        by_state.setdefault(s, []).append((label, t))

    seen = {(v, nfa.start) for v in start_ids}
    todo = list(seen)
    while todo:
        v, s = todo.pop()
        for label, t in by_state.get(s, ()):
            if label is None:
                nxt = [v]
            elif label[0] == "restr":
                nxt = [v] if _guard(label, classes[v], weights[v]) else []
            else:
                nxt = _step_targets(edges, v, label[1], label[2])
            for w in nxt:
                if (w, t) not in seen:
                    seen.add((w, t))
                    todo.append((w, t))
    return {v for v, s in seen if s == nfa.final}


def instance(seed, max_vertices=30, max_edges=60, depth=4):
    rng = random.Random(seed)
    graph = random_graph(rng, max_vertices, max_edges)
    path = random_path(rng, depth)
    return graph, path


def check_instance(seed):
    """Run one random instance through the engine and the oracle.

    Returns (agrees, seconds spent in the engine, constructs used).
    """
    graph, path = instance(seed)
    rng = random.Random(seed ^ 0x5EED)
    starts = rng.sample(graph.vertices, min(len(graph.vertices), rng.randint(1, 3)))
    env = Environment(graph)
    begin = time.perf_counter()
    node = parse_query("x " + render_path(path)).path
    got = eval_path(starts, node, env)
    seconds = time.perf_counter() - begin
    expected = oracle_reach(graph, {v.id for v in starts}, path)
    return {v.id for v in got} == expected, seconds, path_tags(path)
