"""Parser for transformation files (``.gretl``).

::

    import classifiers.*;
    name := <query>;
    CreateVertexClass State <== <query>;
    CreateEdgeClass T from A role src to B role dst <== <query>;
    AddSubClass Sub Super;
    CreateAttribute Owner.attr : String [= '"default"'] [<== <query>];
    SetAttributes Owner.attr <== <query>;
"""

from ..errors import GretlSyntaxError
from ..query import ast
from ..query.lexer import tokenize
from ..query.parser import QueryParser, parse_query
from ..values import DOMAINS
from . import statements as st

OPERATIONS = ("CreateVertexClass", "CreateEdgeClass", "AddSubClass", "CreateAttribute", "SetAttributes")


class TransformationParser(QueryParser):
    def __init__(self, text):
        super().__init__(tokenize(text), semicolon_where=False)

    def parse(self):
        imports, statements = [], []
        while self.peek().type != "EOF":
            tok = self.peek()
            if tok.is_keyword("import"):
                self.next()
                name = self.qualified_name(allow_star=True)
                imports.append(name[:-2] if name.endswith(".*") else name)
            elif tok.type == "IDENT" and self.peek(1).is_op(":="):
                name = self.expect_ident("variable").value
                self.next()
                statements.append(st.GlobalBinding(name, self.parse_expr(), line=tok.line))
            elif tok.type == "IDENT" and tok.value in OPERATIONS:
                self.next()
                statements.append(getattr(self, "_parse_" + tok.value)(tok.line))
            else:
                raise self.error(f"expected import, binding or operation but found {tok.describe()}")
            self.expect_op(";")
        return st.Transformation(tuple(imports), tuple(statements))

    def _query(self):
        self.expect_op("<==")
        return self.parse_expr()

    def _parse_CreateVertexClass(self, line):
        name = self.qualified_name()
        return st.CreateVertexClass(name, self._query(), line=line)

    def _role(self):
        if self.peek().is_keyword("role"):
            self.next()
            return self.expect_ident("role name").value
        return None

    def _parse_CreateEdgeClass(self, line):
        name = self.qualified_name()
        self.expect_keyword("from")
        from_class = self.qualified_name()
        from_role = self._role()
        self.expect_keyword("to")
        to_class = self.qualified_name()
        to_role = self._role()
        return st.CreateEdgeClass(name, from_class, from_role, to_class, to_role, self._query(), line=line)

    def _parse_AddSubClass(self, line):
        sub = self.qualified_name()
        sup = self.qualified_name()
        return st.AddSubClass(sub, sup, line=line)

    def _owner_attribute(self):
        tok = self.peek()
        owner, _, attr = self.qualified_name().rpartition(".")
        if not owner:
            raise self.error("expected Class.attribute", tok)
        return owner, attr

    def _parse_CreateAttribute(self, line):
        owner, attr = self._owner_attribute()
        self.expect_op(":")
        dom = self.expect_ident("attribute domain")
        if dom.value not in DOMAINS:
            raise self.error(f"unknown attribute domain {dom.value}; expected one of {', '.join(DOMAINS)}", dom)
        default = None
        if self.peek().is_op("="):
            self.next()
            default = self._default_literal()
        query = self._query() if self.peek().is_op("<==") else None
        return st.CreateAttribute(owner, attr, dom.value, default, query, line=line)

    def _default_literal(self):
        tok = self.peek()
        if tok.type == "SQSTRING":
            # '"--"' wraps a query literal in single quotes
            self.next()
            try:
                node = parse_query(tok.value)
            except GretlSyntaxError as exc:
                raise GretlSyntaxError(f"bad default literal: {exc.message}", tok.line, tok.column) from None
        else:
            node = self.parse_atom()
        if not isinstance(node, ast.Literal):
            raise self.error("default value must be a literal", tok)
        return node.value

    def _parse_SetAttributes(self, line):
        owner, attr = self._owner_attribute()
        return st.SetAttributes(owner, attr, self._query(), line=line)

    def expect_keyword(self, word):
        # 'to' and 'role' are contextual words, not query keywords
        tok = self.peek()
        if not (tok.type == "IDENT" and tok.value == word):
            raise self.error(f"expected '{word}' but found {tok.describe()}")
        return self.next()


def parse_transformation(text):
    return TransformationParser(text).parse()


def load_transformation(path):
    with open(path, encoding="utf-8") as fh:
        return parse_transformation(fh.read())
