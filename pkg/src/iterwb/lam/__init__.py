from .check import TypeCheckError, infer_type
from .evaluate import evaluate, run
from .syntax import Abs, App, Arrow, Base, Const, Lit, Term, Type, Var, W, arrow, level
from .text import ParseError, parse, parse_type, print_term, print_type
from .values import EvalError, Func

__all__ = [
    "Abs",
    "App",
    "Arrow",
    "Base",
    "Const",
    "EvalError",
    "Func",
    "Lit",
    "ParseError",
    "Term",
    "Type",
    "TypeCheckError",
    "Var",
    "W",
    "arrow",
    "evaluate",
    "infer_type",
    "level",
    "parse",
    "parse_type",
    "print_term",
    "print_type",
    "run",
]
