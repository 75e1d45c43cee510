"""A small Java syntax-graph schema and a builder for state-pattern programs.

Only the constructs navigated by the state machine extraction are modelled.
Role names and containment follow the usual Java metamodel layout, e.g. a
class reaches its superclass via
``Class <>--{extends} TypeReference <>--{classifierReferences}
ClassifierReference -->{target} Class``.
"""

from ..graph import Graph
from ..schema import CONTAINMENT, PLAIN, Schema

VERTEX_CLASSES = [
    # (qualified name, abstract, superclasses)
    ("commons.NamedElement", True, []),
    ("references.ReferenceableElement", True, ["commons.NamedElement"]),
    ("statements.StatementListContainer", True, []),
    ("statements.Statement", True, []),
    ("references.Reference", True, []),
    ("modifiers.Modifier", True, []),
    ("classifiers.Class", False, ["references.ReferenceableElement"]),
    ("classifiers.Enumeration", False, ["references.ReferenceableElement"]),
    ("members.Method", False, ["references.ReferenceableElement", "statements.StatementListContainer"]),
    ("members.EnumConstant", False, ["references.ReferenceableElement"]),
    ("parameters.Parameter", False, ["commons.NamedElement"]),
    ("modifiers.Abstract", False, ["modifiers.Modifier"]),
    ("modifiers.Public", False, ["modifiers.Modifier"]),
    ("types.TypeReference", False, []),
    ("types.ClassifierReference", False, ["references.Reference"]),
    ("references.IdentifierReference", False, ["references.Reference"]),
    ("references.MethodCall", False, ["references.Reference"]),
    ("statements.ExpressionStatement", False, ["statements.Statement"]),
    ("statements.Block", False, ["statements.Statement", "statements.StatementListContainer"]),
    ("statements.Condition", False, ["statements.Statement"]),
    ("statements.Switch", False, ["statements.Statement"]),
    ("statements.Case", False, ["statements.StatementListContainer"]),
    ("statements.TryBlock", False, ["statements.Statement", "statements.StatementListContainer"]),
    ("statements.CatchBlock", False, ["statements.StatementListContainer"]),
]

EDGE_CLASSES = [
    # (qualified name, from, to, to-role, kind)
    ("classifiers.Extends", "classifiers.Class", "types.TypeReference", "extends", CONTAINMENT),
    ("classifiers.Members", "classifiers.Class", "members.Method", "members", CONTAINMENT),
    ("classifiers.Constants", "classifiers.Enumeration", "members.EnumConstant", "constants", CONTAINMENT),
    ("modifiers.AnnotationsAndModifiers", "classifiers.Class", "modifiers.Modifier",
     "annotationsAndModifiers", CONTAINMENT),
    ("types.ClassifierReferences", "types.TypeReference", "types.ClassifierReference",
     "classifierReferences", CONTAINMENT),
    ("references.Target", "references.Reference", "references.ReferenceableElement", "target", PLAIN),
    ("references.Next", "references.Reference", "references.Reference", "next", CONTAINMENT),
    ("references.Arguments", "references.MethodCall", "references.Reference", "arguments", CONTAINMENT),
    ("statements.Statements", "statements.StatementListContainer", "statements.Statement",
     "statements", CONTAINMENT),
    ("statements.Expression", "statements.ExpressionStatement", "references.Reference",
     "expression", CONTAINMENT),
    ("statements.Cases", "statements.Switch", "statements.Case", "cases", CONTAINMENT),
    ("statements.CaseCondition", "statements.Case", "references.Reference", "condition", CONTAINMENT),
    ("statements.ThenStatement", "statements.Condition", "statements.Statement", "statement", CONTAINMENT),
    ("statements.CatchBlocks", "statements.TryBlock", "statements.CatchBlock", "catchBlocks", CONTAINMENT),
    ("statements.CatchParameter", "statements.CatchBlock", "parameters.Parameter", "parameter", CONTAINMENT),
    ("parameters.TypeReferenceOf", "parameters.Parameter", "types.TypeReference", "typeReference", CONTAINMENT),
]


def java_schema():
    schema = Schema("MiniJava")
    for name, abstract, _ in VERTEX_CLASSES:
        schema.add_vertex_class(name, abstract)
    for name, _, supers in VERTEX_CLASSES:
        for sup in supers:
            schema.add_specialization(name, sup)
    schema.add_attribute("commons.NamedElement", "name", "String")
    for name, src, dst, role, kind in EDGE_CLASSES:
        schema.add_edge_class(name, src, dst, to_role=role, kind=kind)
    return schema


class ProgramBuilder:
    """Builds Java syntax graphs with readable element ids.

    Named elements get ids such as ``Class_Locked`` or ``Method_Locked_run``;
    everything else is numbered ``n1``, ``n2``, ...
    """

    def __init__(self, name):
        self.graph = Graph(java_schema(), name)
        self._n = 0
        self.classes = {}
        self.constants = {}

    def _id(self):
        self._n += 1
        return f"n{self._n}"

    def _vertex(self, cls, id=None, name=None):
        v = self.graph.create_vertex(cls, id or self._id())
        if name is not None:
            v.set("name", name)
        return v

    def _edge(self, cls, src, dst):
        return self.graph.create_edge(cls, src, dst, f"e{len(self.graph.edges) + 1}")

    # -- declarations ---------------------------------------------------

    def type_reference(self, target):
        ref = self._vertex("types.TypeReference")
        cref = self._vertex("types.ClassifierReference")
        self._edge("types.ClassifierReferences", ref, cref)
        self._edge("references.Target", cref, target)
        return ref

    def java_class(self, name, extends=None, abstract=False):
        c = self._vertex("classifiers.Class", f"Class_{name}", name)
        self.classes[name] = c
        modifier = self._vertex("modifiers.Abstract" if abstract else "modifiers.Public")
        self._edge("modifiers.AnnotationsAndModifiers", c, modifier)
        if extends is not None:
            self._edge("classifiers.Extends", c, self.type_reference(self.classes[extends]))
        return c

    def state_class(self, name, extends="State", abstract=False):
        """A state-pattern class; concrete ones get a static Instance() method."""
        c = self.java_class(name, extends, abstract)
        if not abstract:
            self.method(name, "Instance")
        return c

    def enumeration(self, name, constants):
        e = self._vertex("classifiers.Enumeration", f"Enum_{name}", name)
        self.classes[name] = e
        for const in constants:
            k = self._vertex("members.EnumConstant", f"Const_{name}_{const}", const)
            self._edge("classifiers.Constants", e, k)
            self.constants[const] = (e, k)
        return e

    def method(self, owner, name):
        m = self._vertex("members.Method", f"Method_{owner}_{name}", name)
        self._edge("classifiers.Members", self.classes[owner], m)
        return m

    def lookup_method(self, owner, name):
        return self.graph.element(f"Method_{owner}_{name}")

    # -- statements -----------------------------------------------------

    def _reference_chain(self, container, refs):
        """``a.b().c()`` as an ExpressionStatement whose references chain via next."""
        stmt = self._vertex("statements.ExpressionStatement")
        self._edge("statements.Statements", container, stmt)
        self._edge("statements.Expression", stmt, refs[0])
        for a, b in zip(refs, refs[1:]):
            self._edge("references.Next", a, b)
        return stmt

    def _ref(self, kind, target):
        r = self._vertex(kind)
        self._edge("references.Target", r, target)
        return r

    def activate(self, container, state, base="State"):
        """``state.Instance().activate();``"""
        refs = [self._ref("references.IdentifierReference", self.classes[state]),
                self._ref("references.MethodCall", self.lookup_method(state, "Instance")),
                self._ref("references.MethodCall", self.lookup_method(base, "activate"))]
        return self._reference_chain(container, refs)

    def send(self, container, constant, base="State"):
        """``send(Enum.CONSTANT);``"""
        call = self._ref("references.MethodCall", self.lookup_method(base, "send"))
        enum, const = self.constants[constant]
        arg = self._ref("references.IdentifierReference", enum)
        self._edge("references.Arguments", call, arg)
        self._edge("references.Next", arg, self._ref("references.IdentifierReference", const))
        return self._reference_chain(container, [call])

    def call(self, container, owner, method):
        """``method();``"""
        return self._reference_chain(container, [self._ref("references.MethodCall",
                                                          self.lookup_method(owner, method))])

    def switch(self, container):
        s = self._vertex("statements.Switch")
        self._edge("statements.Statements", container, s)
        return s

    def case(self, switch, constant):
        c = self._vertex("statements.Case")
        self._edge("statements.Cases", switch, c)
        self._edge("statements.CaseCondition", c, self._ref("references.IdentifierReference",
                                                            self.constants[constant][1]))
        return c

    def try_block(self, container):
        t = self._vertex("statements.TryBlock")
        self._edge("statements.Statements", container, t)
        return t

    def catch(self, try_block, exception, variable="ex"):
        c = self._vertex("statements.CatchBlock")
        self._edge("statements.CatchBlocks", try_block, c)
        p = self._vertex("parameters.Parameter", name=variable)
        self._edge("statements.CatchParameter", c, p)
        self._edge("parameters.TypeReferenceOf", p, self.type_reference(self.classes[exception]))
        return c

    def if_block(self, container):
        cond = self._vertex("statements.Condition")
        self._edge("statements.Statements", container, cond)
        block = self._vertex("statements.Block")
        self._edge("statements.ThenStatement", cond, block)
        return block
