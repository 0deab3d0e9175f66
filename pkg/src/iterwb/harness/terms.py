"""Random well-typed λ-terms for the interpreter property tests."""

from __future__ import annotations

import random

from ..lam.constants import BASE, T1, T2
from ..lam.syntax import Abs, App, Arrow, Const, Lit, Term, Type, Var, W, spine

# constants whose spine ends in W with only W arguments, by arity
_FIRST_ORDER = {}
for _name, _c in BASE.items():
    _args, _ = spine(_c.type)
    if all(a == W for a in _args):
        _FIRST_ORDER.setdefault(len(_args), []).append(_name)

FUNCTION_TYPES = (T1, T2, Arrow(T1, W))


def _lit(rng: random.Random) -> Lit:
    return Lit("".join(rng.choice("01") for _ in range(rng.randint(0, 4))))


class TermGen:
    """Type-directed generator; ``depth`` bounds the nesting of the result."""

    def __init__(self, rng: random.Random):
        self.rng = rng
        self.counter = 0

    def fresh(self) -> str:
        self.counter += 1
        return f"x{self.counter}"

    def term(self, ty: Type, depth: int, ctx: dict[str, Type] | None = None) -> Term:
        ctx = dict(ctx or {})
        if isinstance(ty, Arrow):
            return self._fun(ty, depth, ctx)
        return self._word(depth, ctx)

    def _vars(self, ctx, ty):
        return [Var(n, t) for n, t in ctx.items() if t == ty]

    def _fun(self, ty: Arrow, depth: int, ctx) -> Term:
        rng = self.rng
        options = self._vars(ctx, ty)
        if ty == T1:
            options += [Const(n) for n in _FIRST_ORDER[1]]
            options += [App(Const(n), self.term(W, 0, ctx)) for n in _FIRST_ORDER[2]]
        elif ty == T2:
            options += [Const(n) for n in _FIRST_ORDER[2]]
        if depth <= 0 or (options and rng.random() < 0.3):
            if options:
                return rng.choice(options)
        x = self.fresh()
        inner = dict(ctx)
        inner[x] = ty.dom
        return Abs(x, ty.dom, self.term(ty.cod, depth - 1, inner))

    def _word(self, depth: int, ctx) -> Term:
        rng = self.rng
        words = self._vars(ctx, W)
        if depth <= 0:
            return rng.choice(words + [_lit(rng)]) if words and rng.random() < 0.5 else _lit(rng)
        roll = rng.random()
        if roll < 0.1:
            return _lit(rng)
        if roll < 0.2 and words:
            return rng.choice(words)
        if roll < 0.55:
            arity = rng.choice(sorted(_FIRST_ORDER))
            t: Term = Const(rng.choice(_FIRST_ORDER[arity]))
            for _ in range(arity):
                t = App(t, self.term(W, depth - 1, ctx))
            return t
        if roll < 0.7:
            # a redex
            sigma = rng.choice((W, W, T1))
            x = self.fresh()
            inner = dict(ctx)
            inner[x] = sigma
            return App(Abs(x, sigma, self.term(W, depth - 1, inner)), self.term(sigma, depth - 1, ctx))
        if roll < 0.8:
            # application of a function-typed variable or a generated function
            fty = rng.choice(FUNCTION_TYPES)
            heads = self._vars(ctx, fty)
            head = rng.choice(heads) if heads else self.term(fty, depth - 1, ctx)
            args, _ = spine(fty)
            for a in args:
                head = App(head, self.term(a, depth - 1, ctx))
            return head
        if roll < 0.87:
            step = self.term(T1, depth - 1, ctx)
            name = rng.choice(("iter", "jter"))
            t = Const(name)
            for arg in (step, self.term(W, depth - 1, ctx), self.term(W, depth - 1, ctx), _lit(rng)):
                t = App(t, arg)
            return t
        if roll < 0.92:
            k = rng.randint(0, 2)
            t = Const(f"{rng.choice(('iterk', 'jterk'))}{k}")
            for arg in (self.term(T1, depth - 1, ctx), self.term(W, depth - 1, ctx), _lit(rng)):
                t = App(t, arg)
            return t
        t = App(Const("cond"), self.term(W, depth - 1, ctx))
        return App(App(t, self.term(W, depth - 1, ctx)), self.term(W, depth - 1, ctx))


def gen_term(seed, ty: Type = W, depth: int = 6) -> Term:
    """Deterministic closed term of type ``ty`` with nesting at most about ``depth``."""
    return TermGen(random.Random(seed)).term(ty, depth)


def gen_redex(seed, depth: int = 5) -> Term:
    """A closed β-redex of type ``W``: ``(\\x:s. body) arg``."""
    g = TermGen(random.Random(seed))
    sigma = g.rng.choice((W, T1, Arrow(T1, W)))
    x = g.fresh()
    body = g.term(W, depth, {x: sigma})
    return App(Abs(x, sigma, body), g.term(sigma, depth - 1))


__all__ = ["TermGen", "gen_redex", "gen_term"]
