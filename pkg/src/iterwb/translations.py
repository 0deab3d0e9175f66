"""Term constructions that simulate one primitive with another.

Every builder takes the supplied primitive(s) as plain Python callables and
returns a composite with the call signature of the target primitive:

=========  ==========================
rec        ``(phi2, psi, a, c)``
rec0       ``(phi2, b, a, c)`` (also rec0p)
iter/jter  ``(phi, b, a, c)``
iterk      ``(phi, a, c)`` (also jterk)
=========  ==========================

The composites use only word functions from :mod:`iterwb.words`, function
abstraction/application, and the supplied primitive.  Each builder also has a
reflection (:func:`reflect`) into a closed λ-term over the base constants plus
the primitive's constant, which can be type-checked and evaluated.

A few gadgets differ from their literal form where the literal form does not
compute the intended value; the literal forms are kept as ``*_literal``
variants so the campaigns can report the divergence.
"""

from __future__ import annotations

import contextvars
from dataclasses import dataclass
from typing import Callable

from . import iterators as it
from .lam import constants as lc
from .lam.syntax import Abs, App, Const, Term, Type, W, arrow, substitute
from .lam.text import parse
from .words import drop_first, lmin, pair, pi1, pi2, shorter, truncate, zeros

# ---------------------------------------------------------------------------
# rec from rec0, via max/argmax


def max_argmax_via_rec0(rec0):
    """``(max, argmax)`` over the initial segments of ``c``, built from ``rec0``.

    ``argmax`` keeps the running segment unless the new one is strictly
    longer under ``psi``, so it returns the shortest maximizing segment.
    """

    def argmax(psi, c):
        def A(d, t):
            return d if shorter(psi(t), psi(d)) else t

        return rec0(A, c, "", c)

    def max_(psi, c):
        return psi(argmax(psi, c))

    return max_, argmax


def argmax_literal(rec0):
    """argmax with the selection test read literally: ``lmin(psi t, psi d) != psi t``."""

    def argmax(psi, c):
        def A(d, t):
            return d if lmin(psi(t), psi(d)) != psi(t) else t

        return rec0(A, c, "", c)

    return argmax


def rec_from_rec0(rec0):
    max_, _ = max_argmax_via_rec0(rec0)

    def rec(phi, psi, a, c):
        bound = "0" + max_(psi, c)
        return rec0(lambda d, t: lmin(phi(d, t), psi(d)), bound, a, c)

    return rec


# ---------------------------------------------------------------------------
# rec and iter


def iter_from_rec(rec):
    def iter_(phi, b, a, c):
        return rec(lambda d, t: phi(t), lambda d: b, lmin(a, b), c)

    return iter_


def pair_step(phi, b, c):
    """The step on pairs ``<u, v> -> <u0, lmin(phi(c[:|u|+1], v), b)>``."""

    def step(p):
        u = pi1(p) + "0"
        return pair(u, lmin(phi(truncate(c, u), pi2(p)), b))

    return step


def rec0p_from_iter(iter_):
    # start pair carries lmin(a, b), not a: with |a| >= |b| the unclamped
    # start would feed phi the wrong first value
    def rec0p(phi, b, a, c):
        return pi2(iter_(pair_step(phi, b, c), pair(zeros(c), b), pair("", lmin(a, b)), c))

    return rec0p


def rec0p_from_iter_literal(iter_):
    def rec0p(phi, b, a, c):
        return pi2(iter_(pair_step(phi, b, c), pair(zeros(c), b), pair("", a), c))

    return rec0p


TAG = "11"


def rec0_from_rec0p(rec0p):
    """rec0 from rec0p by tagging running values.

    Running values carry a two-symbol tag, so every real value has length
    > 1 and the untagged start ``''`` is the only value failing the test;
    the first step then reads ``a`` itself instead of the clamped start.
    """

    def rec0(phi, b, a, c):
        if not c:
            return a

        def H(d, t):
            inner = phi(d, t[: -len(TAG)]) if len(t) > 1 else phi(d, a)
            return inner + TAG

        return rec0p(H, b + TAG, "", c)[: -len(TAG)]

    return rec0


def rec0_from_rec0p_literal(rec0p):
    def rec0(phi, b, a, c):
        if not c:
            return a
        return rec0p(lambda d, t: phi(d, t) if len(t) > 1 else phi(d, a), b, a, c)

    return rec0


def rec0_from_iter(iter_):
    return rec0_from_rec0p(rec0p_from_iter(iter_))


def rec_from_iter(iter_):
    return rec_from_rec0(rec0_from_iter(iter_))


# ---------------------------------------------------------------------------
# iter and jter


def iter_from_jter(jter):
    def iter_(phi, b, a, c):
        return lmin(jter(phi, b, a, c), b)

    return iter_


def jter_from_iter(iter_):
    def jter(phi, b, a, c):
        if not c:
            return a
        return phi(iter_(phi, b, a, c[:-1]))

    return jter


def iter_jter_bridge(iter_=it.iter_, jter=it.jter):
    return iter_from_jter(jter), jter_from_iter(iter_)


# ---------------------------------------------------------------------------
# iter_0 from iter


def halting_step(phi, bound):
    """Stop-bit step: ``t1`` is halted; ``t0`` advances unless the answer outgrows ``bound``."""

    def G(t):
        if t[-1:] == "1":
            return t
        u = t[:-1]
        v = phi(u)
        return v + "0" if len(v) <= len(bound) else u + "1"

    return G


def iter0_from_iter(iter_):
    # bound a.00 is strictly longer than every tagged value t.x with |t| <= |a|
    def iter0(phi, a, c):
        return iter_(halting_step(phi, a), a + "00", a + "0", c)[:-1]

    return iter0


def iter0_from_iter_literal(iter_):
    def iter0(phi, a, c):
        return iter_(halting_step(phi, a), a, a + "0", c)[:-1]

    return iter0


# ---------------------------------------------------------------------------
# iter_k from iter


def m_search(iter_):
    """Bounded search: ``0^j`` for the least ``j <= |c|`` with ``psi(0^j, a)`` nonempty.

    Without a hit the result is ``0^(|c|+1) 1``.  States are ``0^i 1``
    (next candidate ``i``) and ``0^j 0`` (found ``j``).
    """

    def M(psi, a, c):
        def N(t):
            if t[-1:] != "1":
                return t
            q = t[:-1]
            return q + "0" if psi(q, a) else "0" + t

        start = "0" if psi("", a) else "01"
        m = iter_(N, c + "000", start, c)
        return m[:-1] if m.endswith("0") else m

    return M


def u_via_rec(rec):
    """Bounded quantifier: ``''`` if ``psi(0^i, a)`` is empty for all ``i <= |c|``, else ``'0'``."""

    def U(psi, a, c):
        def V(d, t):
            return "" if t == "" and not psi(zeros(d), a) else "0"

        start = "0" if psi("", a) else ""
        return rec(V, lambda d: "0", start, c)

    return U


_shared: contextvars.ContextVar[dict | None] = contextvars.ContextVar("iterwb_shared", default=None)


def _sharing(fn):
    """Memoize ``fn(phi, a, c)`` on ``(phi, a, |c|)`` for the duration of the outermost call.

    The composites are pure and depend on ``c`` only through its length, so
    this is call-by-need sharing and never changes a result.
    """

    def shared(phi, a, c):
        cache = _shared.get()
        if cache is None:
            token = _shared.set({})
            try:
                return shared(phi, a, c)
            finally:
                _shared.reset(token)
        key = (id(shared), id(phi), a, len(c))
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = (phi, fn(phi, a, c))
        return hit[1]

    return shared


def iterk_from_iter(iter_, k: int, *, share: bool = True):
    """Budget-``k`` length-revision iteration from ``iter_``, by induction on ``k``.

    For ``k + 1`` the unwind point ``l`` is found by an M-search whose
    predicate asks whether the budget-``k`` values at ``i`` and ``i + 1``
    coincide (or ``i == |c|``).  If ``l == |c|`` the budget-``k`` value is the
    answer; otherwise one more step is taken and the rest runs on budget 0.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    base = iter0_from_iter(iter_)
    if k == 0:
        return base
    prev = iterk_from_iter(iter_, k - 1, share=share)
    if share:
        prev = _sharing(prev)
    M = m_search(iter_)

    def iterk(phi, a, c):
        n = len(c)

        def stationary(q, x):
            if len(q) == n or prev(phi, x, q) == prev(phi, x, q + "0"):
                return "1"
            return ""

        m = M(stationary, a, c)
        if len(m) == n:
            return prev(phi, a, c)
        return base(phi, phi(prev(phi, a, m)), drop_first(c, m + "0"))

    return iterk


# ---------------------------------------------------------------------------
# jter_k and jter


def jterk_from_iterk(iterk):
    def jterk(phi, a, c):
        if not c:
            return a
        return phi(iterk(phi, a, c[:-1]))

    return jterk


def flag_step(phi, b, a):
    """Step with a trailing flag bit: ``t0 -> lmin(a, b)1`` and ``t1 -> lmin(phi(t), b)1``."""

    def psi(t):
        if t[-1:] == "1":
            return lmin(phi(t[:-1]), b) + "1"
        return lmin(a, b) + "1"

    return psi


def jter_from_jterk(jterk):
    def jter(phi, b, a, c):
        if not c:
            return a
        return phi(jterk(flag_step(phi, b, a), b + "0", "0" + c[:-1])[:-1])

    return jter


# ---------------------------------------------------------------------------
# the four-way cycle


def cycle(k: int, start: str, primitive):
    """Rebuild ``start`` from itself by going once around the cycle.

    ``start`` is one of ``iter``, ``iterk``, ``jterk``, ``jter``, and
    ``primitive`` implements it.  The chain is
    iter -> iterk -> jterk -> jter -> iter (each built from its predecessor).
    """
    build = {
        "iterk": lambda p: iterk_from_iter(p, k),
        "jterk": jterk_from_iterk,
        "jter": jter_from_jterk,
        "iter": iter_from_jter,
    }
    current, kind = primitive, start
    for _ in range(4):
        kind = CYCLE_NEXT[kind]
        current = build[kind](current)
    return current


CYCLE_NEXT = {"iter": "iterk", "iterk": "jterk", "jterk": "jter", "jter": "iter"}


# ---------------------------------------------------------------------------
# Reference primitives


def reference(name: str, k: int | None = None):
    if name in ("iterk", "jterk"):
        if k is None:
            raise ValueError(f"{name} needs a budget")
        fn = it.iter_k_word if name == "iterk" else it.jter_k_word
        return lambda phi, a, c: fn(k, phi, a, c)
    return {
        "rec": it.rec,
        "rec0": it.rec0,
        "rec0p": it.rec0_prime,
        "iter": it.iter_,
        "jter": it.jter,
    }[name]


# ---------------------------------------------------------------------------
# Reflection into λ-terms

_SHORTER = r"(\x:W. \y:W. cond (eq (lmin x y) y) '' '1')"
_LE = rf"(\x:W. \y:W. {_SHORTER} x (app0 y))"

T1 = "W->W"
T2 = "W->W->W"


def replace_const(t: Term, name: str, value: Term) -> Term:
    """Replace every occurrence of constant ``name`` by the closed term ``value``."""
    if isinstance(t, Const):
        return value if t.name == name else t
    if isinstance(t, Abs):
        return Abs(t.var, t.var_type, replace_const(t.body, name, value))
    if isinstance(t, App):
        return App(replace_const(t.fun, name, value), replace_const(t.arg, name, value))
    return t


def _term_argmax(rec0="rec0") -> str:
    return (
        rf"(\psi:{T1}. \c:W. {rec0} (\d:W. \t:W. cond ({_SHORTER} (psi t) (psi d)) d t) c '' c)"
    )


def _term_rec_from_rec0() -> str:
    return (
        rf"\phi:{T2}. \psi:{T1}. \a:W. \c:W. "
        rf"rec0 (\d:W. \t:W. lmin (phi d t) (psi d)) (cat '0' (psi ({_term_argmax()} psi c))) a c"
    )


def _term_iter_from_rec() -> str:
    return rf"\phi:{T1}. \b:W. \a:W. \c:W. rec (\d:W. \t:W. phi t) (\d:W. b) (lmin a b) c"


def _term_rec0p_from_iter() -> str:
    return (
        rf"\phi:{T2}. \b:W. \a:W. \c:W. pi2_2 (iter "
        rf"(\p:W. tup2 (app0 (pi2_1 p)) (lmin (phi (trunc c (app0 (pi2_1 p))) (pi2_2 p)) b)) "
        rf"(tup2 (zeros c) b) (tup2 '' (lmin a b)) c)"
    )


def _term_rec0_from_rec0p() -> str:
    return (
        rf"\phi:{T2}. \b:W. \a:W. \c:W. cond c (dropl (dropl (rec0p "
        rf"(\d:W. \t:W. app1 (app1 (cond ({_SHORTER} '1' t) (phi d (dropl (dropl t))) (phi d a)))) "
        rf"(app1 (app1 b)) '' c))) a"
    )


def _term_iter_from_jter() -> str:
    return rf"\phi:{T1}. \b:W. \a:W. \c:W. lmin (jter phi b a c) b"


def _term_jter_from_iter() -> str:
    return rf"\phi:{T1}. \b:W. \a:W. \c:W. cond c (phi (iter phi b a (dropl c))) a"


def _term_iter0_from_iter() -> str:
    return (
        rf"\phi:{T1}. \a:W. \c:W. dropl (iter "
        rf"(\t:W. cond (eq (last t) '1') t "
        rf"((\u:W. (\v:W. cond ({_LE} v a) (app0 v) (app1 u)) (phi u)) (dropl t))) "
        rf"(cat a '00') (app0 a) c)"
    )


def _term_m_search() -> str:
    return (
        rf"(\psi:{T2}. \a:W. \c:W. (\m:W. cond (eq (last m) '0') (dropl m) m) (iter "
        rf"(\t:W. cond (eq (last t) '1') (cond (psi (dropl t) a) (app0 (dropl t)) (cat '0' t)) t) "
        rf"(cat c '000') (cond (psi '' a) '0' '01') c))"
    )


def _iterk_term(k: int) -> Term:
    base = parse(_term_iter0_from_iter())
    if k == 0:
        return base
    body = (
        rf"\phi:{T1}. \a:W. \c:W. "
        rf"(\m:W. cond (eq m (zeros c)) (prev phi a c) (base phi (phi (prev phi a m)) (dropf c (app0 m)))) "
        rf"({_term_m_search()} (\q:W. \x:W. cond (eq q (zeros c)) '1' (eq (prev phi x q) (prev phi x (app0 q)))) a c)"
    )
    t = parse(body, {"prev": lc.ITERK_TYPE, "base": lc.ITERK_TYPE})
    t = substitute(t, "prev", _iterk_term(k - 1))
    return substitute(t, "base", base)


def _term_jterk_from_iterk(k: int) -> str:
    return rf"\phi:{T1}. \a:W. \c:W. cond c (phi (iterk{k} phi a (dropl c))) a"


def _term_jter_from_jterk(k: int) -> str:
    return (
        rf"\phi:{T1}. \b:W. \a:W. \c:W. cond c (phi (dropl (jterk{k} "
        rf"(\t:W. app1 (cond (eq (last t) '1') (lmin (phi (dropl t)) b) (lmin a b))) "
        rf"(app0 b) (cat '0' (dropl c))))) a"
    )


@dataclass(frozen=True)
class Translation:
    name: str
    lemma_id: str
    primitive: str
    target: str
    description: str
    build: Callable
    term: Callable[[int | None], Term]
    needs_k: bool = False

    def primitive_const(self, k: int | None = None) -> str:
        return f"{self.primitive}{k}" if self.primitive in ("iterk", "jterk") else self.primitive

    def target_type(self) -> Type:
        return TARGET_TYPES[self.target]

    def composite(self, k: int | None = None, primitive=None):
        prim = primitive if primitive is not None else reference(self.primitive, k)
        return self.build(prim, k) if self.needs_k else self.build(prim)


TARGET_TYPES = {
    "rec": lc.REC_TYPE,
    "rec0": lc.REC0_TYPE,
    "rec0p": lc.REC0_TYPE,
    "iter": lc.ITER_TYPE,
    "jter": lc.ITER_TYPE,
    "iterk": lc.ITERK_TYPE,
    "jterk": lc.ITERK_TYPE,
    "argmax": arrow(arrow(W, W), W, W),
}


def _p(text_fn):
    return lambda k=None: parse(text_fn())


TRANSLATIONS = {
    t.name: t
    for t in [
        Translation(
            "argmax_via_rec0", "lemma1-rec-rec0", "rec0", "argmax",
            "argmax(psi, c) = rec0(A, c, '', c): shortest prefix maximizing |psi|",
            lambda p: max_argmax_via_rec0(p)[1], lambda k=None: parse(_term_argmax()),
        ),
        Translation(
            "rec_from_rec0", "lemma1-rec-rec0", "rec0", "rec",
            "rec(phi, psi, a, c) = rec0(lmin(phi(d,t), psi(d)), 0.max(psi, c), a, c)",
            rec_from_rec0, _p(_term_rec_from_rec0),
        ),
        Translation(
            "iter_from_rec", "lemma4-rec-iter", "rec", "iter",
            "iter(phi, b, a, c) = rec(phi(t), b, lmin(a, b), c)",
            iter_from_rec, _p(_term_iter_from_rec),
        ),
        Translation(
            "rec0p_from_iter", "lemma4-rec-iter", "iter", "rec0p",
            "rec0p(phi, b, a, c) = pi2(iter(pair step, <0^|c|, b>, <'', lmin(a, b)>, c))",
            rec0p_from_iter, _p(_term_rec0p_from_iter),
        ),
        Translation(
            "rec0_from_rec0p", "lemma4-rec-iter", "rec0p", "rec0",
            "rec0 from rec0p with tagged running values (first step reads a)",
            rec0_from_rec0p, _p(_term_rec0_from_rec0p),
        ),
        Translation(
            "iter_from_jter", "lemma2-iter-jter", "jter", "iter",
            "iter(phi, b, a, c) = lmin(jter(phi, b, a, c), b)",
            iter_from_jter, _p(_term_iter_from_jter),
        ),
        Translation(
            "jter_from_iter", "lemma2-iter-jter", "iter", "jter",
            "jter(phi, b, a, c'i) = phi(iter(phi, b, a, c'))",
            jter_from_iter, _p(_term_jter_from_iter),
        ),
        Translation(
            "iter0_from_iter", "lemma7-iter0", "iter", "iterk",
            "iter_0(phi, a, c) = iter(G, a00, a0, c) without its stop bit",
            iter0_from_iter, _p(_term_iter0_from_iter),
        ),
        Translation(
            "iterk_from_iter", "lemma8-iterk", "iter", "iterk",
            "iter_k from iter by unwinding: M-search for l, then one step and budget 0",
            lambda p, k: iterk_from_iter(p, k), lambda k: _iterk_term(k), needs_k=True,
        ),
        Translation(
            "jterk_from_iterk", "sec4-jterk-iterk", "iterk", "jterk",
            "jter_k(phi, a, c'i) = phi(iter_k(phi, a, c'))",
            lambda p, k: jterk_from_iterk(p), lambda k: parse(_term_jterk_from_iterk(k)), needs_k=True,
        ),
        Translation(
            "jter_from_jterk", "sec4-jter-jterk", "jterk", "jter",
            "jter from jter_k with the flag-bit step on start b0 and length 0.c'",
            lambda p, k: jter_from_jterk(p), lambda k: parse(_term_jter_from_jterk(k)), needs_k=True,
        ),
    ]
}


def reflect(name: str, k: int | None = None) -> Term:
    tr = TRANSLATIONS[name]
    if tr.needs_k and k is None:
        raise ValueError(f"{name} needs a budget k")
    return tr.term(k)


def reflect_chain(*names: str, k: int | None = None) -> Term:
    """Reflect a chain of translations, outermost first.

    ``reflect_chain('rec_from_rec0', 'rec0_from_rec0p', 'rec0p_from_iter')``
    yields a term for rec mentioning only ``iter`` and base constants.
    """
    trs = [TRANSLATIONS[n] for n in names]
    term = reflect(names[0], k)
    for outer, inner in zip(trs, trs[1:]):
        if inner.target in ("iterk", "jterk") and outer.primitive == inner.target:
            const = outer.primitive_const(k)
        else:
            const = outer.primitive
        term = replace_const(term, const, reflect(inner.name, k))
    return term


LEMMA_BUILDERS = {
    "lemma1-rec-rec0": ["argmax_via_rec0", "rec_from_rec0"],
    "lemma2-iter-jter": ["iter_from_jter", "jter_from_iter"],
    "lemma4-rec-iter": ["iter_from_rec", "rec0p_from_iter", "rec0_from_rec0p"],
    "lemma7-iter0": ["iter0_from_iter"],
    "lemma8-iterk": ["iterk_from_iter"],
    "sec4-jterk-iterk": ["jterk_from_iterk"],
    "sec4-jter-jterk": ["jter_from_jterk"],
}
