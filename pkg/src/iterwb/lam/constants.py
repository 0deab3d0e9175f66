"""The constant table: base word functions and the iteration primitives."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .. import iterators as it
from .. import words as w
from .syntax import Type, W, arrow
from .values import as_fn1, as_fn2, curry

T1 = arrow(W, W)
T2 = arrow(W, W, W)
T3 = arrow(W, W, W, W)

REC_TYPE = arrow(T2, T1, W, W, W)
REC0_TYPE = arrow(T2, W, W, W, W)
ITER_TYPE = arrow(T1, W, W, W, W)
ITERK_TYPE = arrow(T1, W, W, W)


@dataclass(frozen=True)
class Constant:
    name: str
    type: Type
    impl: Callable
    doc: str = ""


def _c(name, ty, impl, doc=""):
    return name, Constant(name, ty, impl, doc)


BASE = dict(
    [
        _c("trunc", T2, w.truncate, "trunc c b: first min(|b|,|c|) symbols of c"),
        _c("dropl", T1, w.drop_last, "drop the last symbol"),
        _c("lmin", T2, w.lmin, "left argument if strictly shorter, else right"),
        _c("cond", T3, w.cond, "cond s x y: x if s nonempty else y"),
        _c("app0", T1, lambda x: x + "0", "append 0"),
        _c("app1", T1, lambda x: x + "1", "append 1"),
        _c("tup2", T2, lambda x, y: w.tuple_n((x, y), 2), "pair"),
        _c("tup3", T3, lambda x, y, z: w.tuple_n((x, y, z), 3), "triple"),
        _c("pi2_1", T1, lambda x: w.project(x, 2, 1)),
        _c("pi2_2", T1, lambda x: w.project(x, 2, 2)),
        _c("pi3_1", T1, lambda x: w.project(x, 3, 1)),
        _c("pi3_2", T1, lambda x: w.project(x, 3, 2)),
        _c("pi3_3", T1, lambda x: w.project(x, 3, 3)),
        _c("cat", T2, w.concat, "concatenation"),
        _c("eq", T2, w.eq, "'1' if equal else ''"),
        _c("last", T1, w.last, "last symbol ('' for '')"),
        _c("zeros", T1, w.zeros, "0^|x|"),
        _c("dropf", T2, w.drop_first, "dropf c m: c without its first |m| symbols"),
    ]
)

PRIMITIVES = dict(
    [
        _c("rec", REC_TYPE, lambda phi, psi, a, c: it.rec(as_fn2(phi), as_fn1(psi), a, c)),
        _c("rec0", REC0_TYPE, lambda phi, b, a, c: it.rec0(as_fn2(phi), b, a, c)),
        _c("rec0p", REC0_TYPE, lambda phi, b, a, c: it.rec0_prime(as_fn2(phi), b, a, c)),
        _c("iter", ITER_TYPE, lambda phi, b, a, c: it.iter_(as_fn1(phi), b, a, c)),
        _c("jter", ITER_TYPE, lambda phi, b, a, c: it.jter(as_fn1(phi), b, a, c)),
    ]
)

_BUDGETED = re.compile(r"(iterk|jterk)(\d+)\Z")


def budgeted_name(kind: str, k: int) -> str:
    return f"{kind}{k}"


def lookup(name: str) -> Constant | None:
    if name in BASE:
        return BASE[name]
    if name in PRIMITIVES:
        return PRIMITIVES[name]
    m = _BUDGETED.match(name)
    if m is None:
        return None
    kind, k = m.group(1), int(m.group(2))
    if kind == "iterk":
        impl = lambda phi, a, c: it.iter_k_word(k, as_fn1(phi), a, c)
    else:
        impl = lambda phi, a, c: it.jter_k_word(k, as_fn1(phi), a, c)
    return Constant(name, ITERK_TYPE, impl)


def is_constant(name: str) -> bool:
    return lookup(name) is not None


def value_of(name: str):
    const = lookup(name)
    if const is None:
        raise KeyError(name)
    return curry(const.type, const.impl, name)
