"""One-pass type synthesis; binders carry their types."""

from __future__ import annotations

from typing import Mapping

from . import constants
from .syntax import Abs, App, Arrow, Const, Lit, Term, Type, Var, W


class TypeCheckError(TypeError):
    pass


def infer_type(t: Term, context: Mapping[str, Type] | None = None) -> Type:
    return _infer(t, dict(context or {}))


def _infer(t: Term, ctx: dict[str, Type]) -> Type:
    if isinstance(t, Lit):
        return W
    if isinstance(t, Const):
        const = constants.lookup(t.name)
        if const is None:
            raise TypeCheckError(f"unknown constant {t.name!r}")
        return const.type
    if isinstance(t, Var):
        if t.name not in ctx:
            raise TypeCheckError(f"unbound variable {t.name!r}")
        if t.type is not None and t.type != ctx[t.name]:
            raise TypeCheckError(f"variable {t.name!r} annotated {t.type} but bound at {ctx[t.name]}")
        return ctx[t.name]
    if isinstance(t, Abs):
        inner = dict(ctx)
        inner[t.var] = t.var_type
        return Arrow(t.var_type, _infer(t.body, inner))
    if isinstance(t, App):
        fty = _infer(t.fun, ctx)
        aty = _infer(t.arg, ctx)
        if not isinstance(fty, Arrow):
            raise TypeCheckError(f"cannot apply a term of type {fty} to an argument")
        if fty.dom != aty:
            raise TypeCheckError(f"type mismatch in application: expected {fty.dom}, got {aty}")
        return fty.cod
    raise TypeError(f"not a term: {t!r}")
