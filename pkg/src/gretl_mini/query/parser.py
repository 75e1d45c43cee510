"""Recursive descent parser for the query language.

Operator precedence, loosest first::

    or  <  and  <  not  <  = <>  <  path application  <  . [] (postfix)

Inside a path, ``+``/``*`` bind to the element immediately before them and
a restriction (``& {T}``) is an ordinary path element, so it filters the
vertex set reached at exactly that point.
"""

from ..errors import GretlSyntaxError
from . import ast
from .builtins import BUILTINS
from .lexer import KEYWORDS, tokenize

PATH_START_OPS = ("-->", "<>--", "&", "{")


class QueryParser:
    def __init__(self, tokens, semicolon_where=True):
        self.tokens = tokens
        self.i = 0
        # inside a transformation ';' terminates statements, so where-bindings
        # there must be separated by ','
        self.semicolon_where = semicolon_where

    # -- token helpers ----------------------------------------------------

    def peek(self, k=0):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return GretlSyntaxError(message, tok.line, tok.column)

    def expect_op(self, op):
        tok = self.peek()
        if not tok.is_op(op):
            raise self.error(f"expected '{op}' but found {tok.describe()}")
        return self.next()

    def expect_keyword(self, word):
        tok = self.peek()
        if not tok.is_keyword(word):
            raise self.error(f"expected '{word}' but found {tok.describe()}")
        return self.next()

    def expect_ident(self, what="identifier"):
        tok = self.peek()
        if tok.type != "IDENT" or tok.value in KEYWORDS:
            raise self.error(f"expected {what} but found {tok.describe()}")
        return self.next()

    def qualified_name(self, allow_star=False):
        """``a.b.C`` (and ``a.b.*`` when ``allow_star``)."""
        parts = [self.expect_ident("type name").value]
        while self.peek().is_op("."):
            if allow_star and self.peek(1).is_op("*"):
                self.next()
                self.next()
                parts.append("*")
                break
            self.next()
            parts.append(self.expect_ident("name").value)
        return ".".join(parts)

    def _is_plain_ident(self, tok):
        return tok.type == "IDENT" and tok.value not in KEYWORDS

    # -- expressions ------------------------------------------------------

    def parse_expr(self):
        return self.parse_or()

    def parse_or(self):
        left = self.parse_and()
        while self.peek().is_keyword("or"):
            self.next()
            left = ast.Or(left, self.parse_and())
        return left

    def parse_and(self):
        left = self.parse_not()
        while self.peek().is_keyword("and"):
            self.next()
            left = ast.And(left, self.parse_not())
        return left

    def parse_not(self):
        if self.peek().is_keyword("not"):
            self.next()
            return ast.Not(self.parse_not())
        return self.parse_compare()

    def parse_compare(self):
        left = self.parse_path_level()
        tok = self.peek()
        if tok.is_op("=", "<>"):
            self.next()
            return ast.Compare(tok.value, left, self.parse_path_level())
        return left

    def _path_starts_here(self, k=0):
        tok = self.peek(k)
        if tok.type == "OP" and tok.value in PATH_START_OPS:
            return True
        if tok.is_op("("):
            return self._path_starts_here(k + 1)
        return False

    def parse_path_level(self):
        if self._path_starts_here():
            tok = self.peek()
            path = self.parse_path()
            end = self._maybe_end_operand()
            if end is None:
                raise self.error("a path without start operand needs an end operand", tok)
            return ast.PathApp(None, path, end)
        primary = self.parse_postfix()
        tok = self.peek()
        if tok.is_op("-->", "<>--", "&") or (tok.is_op("(") and self._path_starts_here(1)):
            path = self.parse_path()
            return ast.PathApp(primary, path, self._maybe_end_operand())
        return primary

    def _maybe_end_operand(self):
        tok = self.peek()
        if self._is_plain_ident(tok) or tok.type in ("INT", "STRING"):
            return self.parse_postfix()
        return None

    def parse_postfix(self):
        node = self.parse_atom()
        while True:
            tok = self.peek()
            if tok.is_op("."):
                self.next()
                node = ast.Attr(node, self.expect_ident("attribute name").value)
            elif tok.is_op("["):
                self.next()
                idx = self.peek()
                if idx.type != "INT":
                    raise self.error("expected integer index")
                self.next()
                self.expect_op("]")
                node = ast.Index(node, idx.value)
            else:
                return node

    def parse_atom(self):
        tok = self.peek()
        if tok.type == "INT":
            self.next()
            return ast.Literal(tok.value)
        if tok.type == "STRING":
            self.next()
            return ast.Literal(tok.value)
        if tok.is_keyword("true", "false"):
            self.next()
            return ast.Literal(tok.value == "true")
        if tok.is_keyword("from"):
            return self.parse_comprehension()
        if tok.is_op("("):
            self.next()
            node = self.parse_expr()
            self.expect_op(")")
            return node
        if self._is_plain_ident(tok):
            self.next()
            if tok.value == "V" and self.peek().is_op("{"):
                self.next()
                name = self.qualified_name()
                self.expect_op("}")
                return ast.Extent(name)
            # `x (-->)+` applies a path to x; builtins are always calls
            if self.peek().is_op("(") and (tok.value in BUILTINS or not self._path_starts_here(1)):
                self.next()
                args = []
                if not self.peek().is_op(")"):
                    args.append(self.parse_expr())
                    while self.peek().is_op(","):
                        self.next()
                        args.append(self.parse_expr())
                self.expect_op(")")
                return ast.Call(tok.value, tuple(args), (tok.line, tok.column))
            return ast.Var(tok.value, (tok.line, tok.column))
        raise self.error(f"unexpected {tok.describe()}")

    # -- comprehension ----------------------------------------------------

    def parse_comprehension(self):
        self.expect_keyword("from")
        decls = []
        while True:
            names = [self.expect_ident("variable").value]
            while self.peek().is_op(","):
                self.next()
                names.append(self.expect_ident("variable").value)
            self.expect_op(":")
            domain = self.parse_expr()
            decls.extend((n, domain) for n in names)
            if self.peek().is_op(",") and self._is_plain_ident(self.peek(1)):
                self.next()
                continue
            break
        filt = None
        if self.peek().is_keyword("with"):
            self.next()
            filt = self.parse_expr()
        report = self.parse_report()
        where = []
        if self.peek().is_keyword("where"):
            self.next()
            where.append(self.parse_binding())
            while self._binding_follows():
                self.next()
                where.append(self.parse_binding())
        return ast.Comprehension(tuple(decls), filt, report, tuple(where))

    def _binding_follows(self):
        sep = self.peek()
        if not (sep.is_op(",") or (self.semicolon_where and sep.is_op(";"))):
            return False
        return self._is_plain_ident(self.peek(1)) and self.peek(2).is_op(":=")

    def parse_binding(self):
        name = self.expect_ident("variable").value
        self.expect_op(":=")
        return name, self.parse_expr()

    def parse_report(self):
        tok = self.peek()
        if tok.is_keyword("reportSet"):
            self.next()
            exprs = [self.parse_expr()]
            while self.peek().is_op(","):
                self.next()
                exprs.append(self.parse_expr())
            self.expect_keyword("end")
            return ast.ReportSet(tuple(exprs))
        if tok.is_keyword("reportMap"):
            self.next()
            key = self.parse_expr()
            self.expect_op("->")
            value = self.parse_expr()
            self.expect_keyword("end")
            return ast.ReportMap(key, value)
        raise self.error(f"expected 'reportSet' or 'reportMap' but found {tok.describe()}")

    # -- paths ------------------------------------------------------------

    def parse_path(self):
        items = [self.parse_path_element()]
        while self._path_element_follows():
            items.append(self.parse_path_element())
        return items[0] if len(items) == 1 else ast.Seq(tuple(items))

    def _path_element_follows(self):
        tok = self.peek()
        return tok.type == "OP" and tok.value in ("-->", "<>--", "&", "{", "(")

    def parse_path_element(self):
        tok = self.peek()
        if tok.is_op("-->", "<>--"):
            self.next()
            role = None
            if self.peek().is_op("{"):
                self.next()
                role = self.expect_ident("role name").value
                self.expect_op("}")
            arrow = ast.FORWARD if tok.value == "-->" else ast.CONTAINMENT
            node = ast.EdgeStep(arrow, role)
        elif tok.is_op("&"):
            # '&' only joins: `{Class} & (...)+` equals `{Class} (...)+`
            self.next()
            if not self.peek().is_op("{", "(", "-->", "<>--"):
                raise self.error(f"expected restriction or path after '&' but found {self.peek().describe()}")
            return self.parse_path_element()
        elif tok.is_op("{"):
            node = self.parse_restriction()
        elif tok.is_op("("):
            self.next()
            options = [self.parse_path()]
            while self.peek().is_op("|"):
                self.next()
                options.append(self.parse_path())
            self.expect_op(")")
            node = options[0] if len(options) == 1 else ast.Alt(tuple(options))
        else:
            raise self.error(f"expected path element but found {tok.describe()}")
        while self.peek().is_op("+", "*"):
            node = ast.Iterate(node, self.next().value)
        return node

    def parse_restriction(self):
        self.expect_op("{")
        types = [self.qualified_name()]
        while self.peek().is_op(","):
            self.next()
            types.append(self.qualified_name())
        predicate = None
        if self.peek().is_op("@"):
            self.next()
            predicate = self.parse_expr()
        self.expect_op("}")
        return ast.Restriction(tuple(types), predicate)


def parse_query(text):
    """Parse a standalone query into its syntax tree."""
    parser = QueryParser(tokenize(text))
    node = parser.parse_expr()
    if parser.peek().type != "EOF":
        raise parser.error(f"unexpected {parser.peek().describe()} after query")
    return node
