"""Independent checks over the raw fixture JSON.

Nothing here goes through the graph model or the query engine: documents
are read with ``json`` and walked as dictionaries.
"""

import json
from collections import defaultdict

SWITCH, CATCH, METHOD, DEFAULT = "switch", "catch", "method", "default"


def read(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def raw_counts(path):
    doc = read(path)
    return len(doc["graph"].get("vertices", [])), len(doc["graph"].get("edges", []))


class RawGraph:
    def __init__(self, path):
        doc = read(path)
        self.vertices = {v["id"]: v for v in doc["graph"]["vertices"]}
        self.out = defaultdict(list)
        for e in doc["graph"]["edges"]:
            self.out[e["from"]].append((e["class"], e["to"]))

    def cls(self, vid):
        return self.vertices[vid]["class"]

    def name(self, vid):
        return self.vertices[vid].get("attributes", {}).get("name")

    def follow(self, vid, edge_class):
        return [t for c, t in self.out[vid] if c == edge_class]

    def of_class(self, cls):
        return [vid for vid, v in self.vertices.items() if v["class"] == cls]


def state_names(path):
    """Non-abstract classes that reach the unique class named State via extends chains."""
    g = RawGraph(path)
    classes = g.of_class("classifiers.Class")
    (state,) = [c for c in classes if g.name(c) == "State"]

    def superclasses(c):
        for ref in g.follow(c, "classifiers.Extends"):
            for cref in g.follow(ref, "types.ClassifierReferences"):
                yield from g.follow(cref, "references.Target")

    def reaches_state(c, seen=()):
        for sup in superclasses(c):
            if sup == state or (sup not in seen and reaches_state(sup, (*seen, c))):
                return True
        return False

    def is_abstract(c):
        return any(g.cls(m) == "modifiers.Abstract" for m in g.follow(c, "modifiers.AnnotationsAndModifiers"))

    return sorted(g.name(c) for c in classes if reaches_state(c) and not is_abstract(c))


def trigger_vocabulary(path):
    """Names each trigger case can produce in a source program."""
    g = RawGraph(path)
    methods = {g.name(m) for m in g.of_class("members.Method")} - {"run"}
    constants = {g.name(k) for k in g.of_class("members.EnumConstant")}
    exceptions = set()
    for catch in g.of_class("statements.CatchBlock"):
        for p in g.follow(catch, "statements.CatchParameter"):
            for ref in g.follow(p, "parameters.TypeReferenceOf"):
                for cref in g.follow(ref, "types.ClassifierReferences"):
                    exceptions.update(g.name(t) for t in g.follow(cref, "references.Target"))
    return {METHOD: methods, SWITCH: constants, CATCH: exceptions, DEFAULT: {"--"}}


def classify_trigger(trigger, vocabulary):
    """All trigger cases whose vocabulary contains ``trigger``."""
    return sorted(case for case, names in vocabulary.items() if trigger in names)


def sent_constants(path):
    """Enum constants passed as the argument of a send() call."""
    g = RawGraph(path)
    out = set()
    for call in g.of_class("references.MethodCall"):
        if any(g.name(m) == "send" for m in g.follow(call, "references.Target")):
            for arg in g.follow(call, "references.Arguments"):
                for nxt in g.follow(arg, "references.Next"):
                    out.update(g.name(t) for t in g.follow(nxt, "references.Target"))
    return out


def transitions(target_path):
    """(src, dst, trigger, action) tuples of an extracted target document."""
    g = RawGraph(target_path)
    doc = read(target_path)
    out = []
    for e in doc["graph"]["edges"]:
        attrs = e.get("attributes", {})
        out.append((g.name(e["from"]), g.name(e["to"]), attrs.get("trigger"), attrs.get("action")))
    return sorted(out)
