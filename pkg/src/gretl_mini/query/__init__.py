"""Query language: parsing and evaluation of from-with-report comprehensions
and regular path expressions."""

from .builtins import is_empty, key_set, the_element, tup
from .evaluator import Environment, Evaluator, eval_path, eval_path_exists, evaluate, run_query
from .parser import QueryParser, parse_query

__all__ = [
    "Environment",
    "Evaluator",
    "QueryParser",
    "eval_path",
    "eval_path_exists",
    "evaluate",
    "is_empty",
    "key_set",
    "parse_query",
    "run_query",
    "the_element",
    "tup",
]
