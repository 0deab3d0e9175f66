"""The value function: terms denote words or total functionals.

Evaluation is applicative order; abstractions extend the assignment.
"""

from __future__ import annotations

from typing import Mapping

from ..words import guard
from . import constants
from .check import infer_type
from .syntax import Abs, App, Const, Lit, Term, Type, Var, W
from .text import parse
from .values import EvalError, Func, Value


def evaluate(t: Term, env: Mapping[str, Value] | None = None) -> Value:
    return _eval(t, dict(env or {}))


def _eval(t: Term, env: dict[str, Value]) -> Value:
    if isinstance(t, Lit):
        return guard(t.word)
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise EvalError(f"unbound variable {t.name!r}") from None
    if isinstance(t, Const):
        try:
            return constants.value_of(t.name)
        except KeyError:
            raise EvalError(f"unknown constant {t.name!r}") from None
    if isinstance(t, Abs):
        body, var = t.body, t.var

        def fn(v: Value) -> Value:
            inner = dict(env)
            inner[var] = v
            return _eval(body, inner)

        # closure types are not tracked at run time
        return Func(None, fn, f"\\{var}")
    if isinstance(t, App):
        f = _eval(t.fun, env)
        x = _eval(t.arg, env)
        if not isinstance(f, Func):
            raise EvalError(f"attempt to apply the word {f!r}")
        return f(x)
    raise TypeError(f"not a term: {t!r}")


def typed_binding(term: Term, context: Mapping[str, Type] | None = None) -> tuple[Type, Value]:
    """Type-check and evaluate a closed binding term."""
    ty = infer_type(term, context)
    return ty, evaluate(term)


def run(text: str, bindings: Mapping[str, tuple[Type, Value]] | None = None) -> Value:
    """Parse, type-check and evaluate ``text``.

    ``bindings`` maps free variable names to ``(type, value)`` pairs.
    """
    bindings = dict(bindings or {})
    ctx = {name: ty for name, (ty, _) in bindings.items()}
    term = parse(text, ctx)
    infer_type(term, ctx)
    return evaluate(term, {name: v for name, (_, v) in bindings.items()})


__all__ = ["EvalError", "Func", "Value", "evaluate", "run", "typed_binding", "W"]
