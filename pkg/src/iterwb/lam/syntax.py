"""Types and terms of the simply typed λ-calculus over binary words."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Base:
    """The base type ``W`` of words."""

    def __str__(self) -> str:
        return "W"


@dataclass(frozen=True)
class Arrow:
    dom: "Type"
    cod: "Type"

    def __str__(self) -> str:
        left = f"({self.dom})" if isinstance(self.dom, Arrow) else str(self.dom)
        return f"{left} -> {self.cod}"


Type = Union[Base, Arrow]

W = Base()


def arrow(*types: Type) -> Type:
    """Right-associated arrow: ``arrow(a, b, c) == a -> (b -> c)``."""
    if not types:
        raise ValueError("arrow needs at least one type")
    result = types[-1]
    for t in reversed(types[:-1]):
        result = Arrow(t, result)
    return result


def spine(t: Type) -> tuple[list[Type], Type]:
    """Split ``t1 -> ... -> tk -> W`` into ``([t1, ..., tk], W)``."""
    args = []
    while isinstance(t, Arrow):
        args.append(t.dom)
        t = t.cod
    return args, t


def level(t: Type) -> int:
    args, _ = spine(t)
    if not args:
        return 0
    return 1 + max(level(a) for a in args)


@dataclass(frozen=True)
class Var:
    name: str
    type: Type


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Lit:
    word: str


@dataclass(frozen=True)
class Abs:
    var: str
    var_type: Type
    body: "Term"


@dataclass(frozen=True)
class App:
    fun: "Term"
    arg: "Term"


Term = Union[Var, Const, Lit, Abs, App]


def app(f: Term, *args: Term) -> Term:
    for a in args:
        f = App(f, a)
    return f


def lam(params: list[tuple[str, Type]], body: Term) -> Term:
    for name, ty in reversed(params):
        body = Abs(name, ty, body)
    return body


def free_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Abs):
        return free_vars(t.body) - {t.var}
    if isinstance(t, App):
        return free_vars(t.fun) | free_vars(t.arg)
    return set()


def is_closed(t: Term) -> bool:
    return not free_vars(t)


def constants(t: Term) -> set[str]:
    out: set[str] = set()
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, Const):
            out.add(s.name)
        elif isinstance(s, Abs):
            stack.append(s.body)
        elif isinstance(s, App):
            stack.extend((s.fun, s.arg))
    return out


def size(t: Term) -> int:
    if isinstance(t, Abs):
        return 1 + size(t.body)
    if isinstance(t, App):
        return 1 + size(t.fun) + size(t.arg)
    return 1


def depth(t: Term) -> int:
    if isinstance(t, Abs):
        return 1 + depth(t.body)
    if isinstance(t, App):
        return 1 + max(depth(t.fun), depth(t.arg))
    return 1


def _fresh(base: str, avoid: set[str]) -> str:
    for i in itertools.count(1):
        cand = f"{base}{i}"
        if cand not in avoid:
            return cand
    raise AssertionError("unreachable")


def substitute(t: Term, name: str, value: Term) -> Term:
    """Capture-avoiding ``t[name := value]``."""
    if isinstance(t, Var):
        return value if t.name == name else t
    if isinstance(t, App):
        return App(substitute(t.fun, name, value), substitute(t.arg, name, value))
    if isinstance(t, Abs):
        if t.var == name:
            return t
        fv = free_vars(value)
        if t.var in fv and name in free_vars(t.body):
            new = _fresh(t.var, fv | free_vars(t.body) | {name})
            body = substitute(t.body, t.var, Var(new, t.var_type))
            return Abs(new, t.var_type, substitute(body, name, value))
        return Abs(t.var, t.var_type, substitute(t.body, name, value))
    return t
