"""Exception hierarchy.

Every error carries a ``kind`` used by the command line driver when it
prints ``ERROR <kind> <location> <message>``.  ``kind`` defaults to the
class name; a few classes override it to avoid shadowing Python builtins.
"""


class GretlError(Exception):
    kind = None

    def __init__(self, message="", **context):
        super().__init__(message)
        self.message = message
        self.context = context
        # filled in by the transformation engine when a statement fails
        self.statement_index = None
        self.line = None

    @classmethod
    def kind_name(cls):
        return cls.kind or cls.__name__

    @property
    def location(self):
        if self.statement_index is not None:
            loc = f"statement[{self.statement_index}]"
            if self.line is not None:
                loc += f"@{self.line}"
            return loc
        return "-"

    def __str__(self):
        return self.message


# -- schema / graph ---------------------------------------------------------

class SchemaError(GretlError):
    pass


class DuplicateClassName(SchemaError):
    pass


class UnknownClass(SchemaError):
    pass


class AmbiguousRole(SchemaError):
    pass


class InheritanceCycle(SchemaError):
    pass


class AttributeClash(SchemaError):
    pass


class KindMismatch(SchemaError):
    pass


class DuplicateAttribute(SchemaError):
    pass


class UnknownAttribute(SchemaError):
    pass


class DomainMismatch(SchemaError):
    pass


class GraphError(GretlError):
    pass


class AbstractInstantiation(GraphError):
    pass


class TypeNonConformance(GraphError):
    pass


class DanglingEndpoint(GraphError):
    pass


class ValidationError(GraphError):
    """A graph or document violates a named schema rule."""

    def __init__(self, message="", rule=None, element=None, **context):
        super().__init__(message, **context)
        self.rule = rule
        self.element = element

    def __str__(self):
        parts = []
        if self.rule:
            parts.append(f"[{self.rule}]")
        if self.element is not None:
            parts.append(f"{self.element}:")
        parts.append(self.message)
        return " ".join(parts)


# -- query language ---------------------------------------------------------

class GretlSyntaxError(GretlError):
    kind = "SyntaxError"

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column

    @property
    def location(self):
        if self.line is None:
            return "-"
        return f"{self.line}:{self.column}"

    def __str__(self):
        if self.line is None:
            return self.message
        return f"{self.message} (line {self.line}, column {self.column})"


class QueryError(GretlError):
    pass


class UnboundVariable(QueryError):
    pass


class QueryTypeError(QueryError):
    kind = "TypeError"


class MapKeyConflict(QueryError):
    pass


class UnknownType(QueryError):
    pass


class AmbiguousType(QueryError):
    pass


class NotSingleton(QueryError):
    pass


class NotACollection(QueryError):
    pass


# -- transformation ---------------------------------------------------------

class TransformError(GretlError):
    pass


class NotASet(TransformError):
    pass


class NotAMap(TransformError):
    pass


class NotTripleSet(TransformError):
    pass


class UnknownArchetype(TransformError):
    pass


class DuplicateArchetype(TransformError):
    pass


class DuplicateBinding(TransformError):
    pass


class UnknownTraceMap(TransformError):
    pass


# -- interchange ------------------------------------------------------------

class DocumentParseError(GretlError):
    kind = "ParseError"


class IoError(GretlError):
    pass
