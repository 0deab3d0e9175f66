"""Semantic values: words for the base type, Python callables for arrows."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from ..words import guard
from .syntax import Arrow, Type, spine


class EvalError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class Func:
    """A functional of arrow type; ``fn`` maps a Value to a Value."""

    type: Arrow | None
    fn: Callable[["Value"], "Value"]
    label: str = "<fn>"

    def __call__(self, arg: "Value") -> "Value":
        return self.fn(arg)

    def __repr__(self) -> str:
        return f"Func({self.label} : {self.type})"


Value = Union[str, Func]


def curry(ty: Type, impl: Callable, label: str) -> Value:
    """Turn an uncurried Python function into a curried value of type ``ty``.

    Word results are passed through the length guard.
    """
    arity = len(spine(ty)[0])

    def collect(t: Type, args: tuple) -> Value:
        if len(args) == arity:
            result = impl(*args)
            if not isinstance(result, str):
                raise EvalError(f"{label} returned a non-word {result!r}")
            return guard(result)
        assert isinstance(t, Arrow)
        return Func(t, lambda v: collect(t.cod, args + (v,)), label)

    return collect(ty, ())


def as_fn1(v: Value) -> Callable[[str], str]:
    if not isinstance(v, Func):
        raise EvalError(f"expected a function value, got word {v!r}")
    return v


def as_fn2(v: Value) -> Callable[[str, str], str]:
    f = as_fn1(v)
    return lambda d, t: f(d)(t)
