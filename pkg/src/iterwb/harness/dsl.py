"""A small combinator language of total, poly-time step functions.

One-argument functions (``Dsl``)::

    id | app0 | app1 | dropl | selfcat
    (const 'w') | (trunc_to 'w') | (lmin_with 'w')
    (compose f g)          f after g
    (cond_empty f g)       f x if x is empty, else g x
    (ite_longer 'w' f g)   f x if |x| > |w|, else g x

Two-argument functions (``Step2``, called as ``phi(d, t)``)::

    (on_t f) | (on_d f) | (cat2 f g) | (longer2 f g)

``cat2`` is ``f(d) g(t)``; ``longer2`` is ``f(d)`` if ``|d| > |t|`` else ``g(t)``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Callable, Union

from ..lam.syntax import Term
from ..lam.text import parse
from ..words import Word, lmin, truncate

LEAVES = ("id", "app0", "app1", "dropl", "selfcat")
WORD_LEAVES = ("const", "trunc_to", "lmin_with")
BINARY = ("compose", "cond_empty")
MAX_CONST_LEN = 8


@dataclass(frozen=True)
class Dsl:
    op: str
    word: Word | None = None
    kids: tuple["Dsl", ...] = ()

    def __post_init__(self):
        if self.op in LEAVES:
            ok = self.word is None and not self.kids
        elif self.op in WORD_LEAVES:
            ok = self.word is not None and not self.kids
        elif self.op in BINARY:
            ok = self.word is None and len(self.kids) == 2
        elif self.op == "ite_longer":
            ok = self.word is not None and len(self.kids) == 2
        else:
            raise ValueError(f"unknown combinator {self.op!r}")
        if not ok:
            raise ValueError(f"malformed {self.op} node")

    def __str__(self) -> str:
        return to_sexpr(self)

    def __call__(self, x: Word) -> Word:
        return denote(self)(x)

    @property
    def depth(self) -> int:
        return 1 + max((k.depth for k in self.kids), default=0)


@dataclass(frozen=True)
class Step2:
    mode: str
    f: Dsl
    g: Dsl | None = None

    def __post_init__(self):
        if self.mode in ("on_t", "on_d"):
            if self.g is not None:
                raise ValueError(f"{self.mode} takes one function")
        elif self.mode in ("cat2", "longer2"):
            if self.g is None:
                raise ValueError(f"{self.mode} takes two functions")
        else:
            raise ValueError(f"unknown two-argument mode {self.mode!r}")

    def __str__(self) -> str:
        return to_sexpr(self)

    @property
    def depth(self) -> int:
        return 1 + max(self.f.depth, self.g.depth if self.g else 0)


AnyDsl = Union[Dsl, Step2]


def leaf(op: str, word: Word | None = None) -> Dsl:
    return Dsl(op, word)


def compose(f: Dsl, g: Dsl) -> Dsl:
    return Dsl("compose", None, (f, g))


def cond_empty(f: Dsl, g: Dsl) -> Dsl:
    return Dsl("cond_empty", None, (f, g))


def ite_longer(w: Word, f: Dsl, g: Dsl) -> Dsl:
    return Dsl("ite_longer", w, (f, g))


# ---------------------------------------------------------------------------
# denotation


def denote(e: Dsl) -> Callable[[Word], Word]:
    op = e.op
    if op == "id":
        return lambda x: x
    if op == "app0":
        return lambda x: x + "0"
    if op == "app1":
        return lambda x: x + "1"
    if op == "dropl":
        return lambda x: x[:-1]
    if op == "selfcat":
        return lambda x: x + x
    w = e.word
    if op == "const":
        return lambda x: w
    if op == "trunc_to":
        return lambda x: truncate(x, w)
    if op == "lmin_with":
        return lambda x: lmin(x, w)
    f, g = (denote(k) for k in e.kids)
    if op == "compose":
        return lambda x: f(g(x))
    if op == "cond_empty":
        return lambda x: f(x) if x == "" else g(x)
    if op == "ite_longer":
        n = len(w)
        return lambda x: f(x) if len(x) > n else g(x)
    raise AssertionError(op)


def denote2(e: Step2) -> Callable[[Word, Word], Word]:
    f = denote(e.f)
    if e.mode == "on_t":
        return lambda d, t: f(t)
    if e.mode == "on_d":
        return lambda d, t: f(d)
    g = denote(e.g)
    if e.mode == "cat2":
        return lambda d, t: f(d) + g(t)
    return lambda d, t: f(d) if len(d) > len(t) else g(t)


# ---------------------------------------------------------------------------
# text form


def to_sexpr(e: AnyDsl) -> str:
    if isinstance(e, Step2):
        parts = [e.mode, to_sexpr(e.f)] + ([to_sexpr(e.g)] if e.g else [])
        return "(" + " ".join(parts) + ")"
    if e.op in LEAVES:
        return e.op
    parts = [e.op]
    if e.word is not None:
        parts.append(f"'{e.word}'")
    parts += [to_sexpr(k) for k in e.kids]
    return "(" + " ".join(parts) + ")"


_SEXPR_TOKEN = re.compile(r"\s*(?:(\()|(\))|('[01]*')|([a-z_0-9]+))")


class DslSyntaxError(ValueError):
    pass


def _tokens(text: str) -> list[str]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _SEXPR_TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise DslSyntaxError(f"bad DSL syntax at offset {pos}: {text[pos:pos + 10]!r}")
        out.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def parse_dsl(text: str) -> AnyDsl:
    toks = _tokens(text)
    if not toks:
        raise DslSyntaxError("empty DSL expression")
    e, pos = _parse(toks, 0)
    if pos != len(toks):
        raise DslSyntaxError(f"trailing tokens: {' '.join(toks[pos:])}")
    return e


def _parse(toks: list[str], pos: int):
    tok = toks[pos]
    if tok in LEAVES:
        return Dsl(tok), pos + 1
    if tok != "(":
        raise DslSyntaxError(f"unexpected token {tok!r}")
    pos += 1
    if pos >= len(toks):
        raise DslSyntaxError("unexpected end of input")
    op = toks[pos]
    pos += 1
    word = None
    args = []
    while pos < len(toks) and toks[pos] != ")":
        if toks[pos].startswith("'"):
            if word is not None or args:
                raise DslSyntaxError(f"misplaced word literal in {op}")
            word = toks[pos][1:-1]
            pos += 1
        else:
            sub, pos = _parse(toks, pos)
            args.append(sub)
    if pos >= len(toks):
        raise DslSyntaxError("missing ')'")
    pos += 1
    if op in ("on_t", "on_d", "cat2", "longer2"):
        if word is not None or not 1 <= len(args) <= 2:
            raise DslSyntaxError(f"bad arguments for {op}")
        return Step2(op, *args), pos
    try:
        return Dsl(op, word, tuple(args)), pos
    except ValueError as exc:
        raise DslSyntaxError(str(exc)) from None


# ---------------------------------------------------------------------------
# reflection into λ-terms

_SHORTER = r"(\x:W. \y:W. cond (eq (lmin x y) y) '' '1')"


def _term_text(e: Dsl) -> str:
    op = e.op
    if op in ("app0", "app1", "dropl"):
        return op
    if op == "id":
        return r"(\x:W. x)"
    if op == "selfcat":
        return r"(\x:W. cat x x)"
    w = f"'{e.word}'" if e.word is not None else None
    if op == "const":
        return rf"(\x:W. {w})"
    if op == "trunc_to":
        return rf"(\x:W. trunc x {w})"
    if op == "lmin_with":
        return rf"(\x:W. lmin x {w})"
    f, g = (_term_text(k) for k in e.kids)
    if op == "compose":
        return rf"(\x:W. {f} ({g} x))"
    if op == "cond_empty":
        return rf"(\x:W. cond x ({g} x) ({f} x))"
    if op == "ite_longer":
        return rf"(\x:W. cond ({_SHORTER} {w} x) ({f} x) ({g} x))"
    raise AssertionError(op)


def to_term(e: AnyDsl) -> Term:
    """Closed λ-term denoting the same function (type ``W->W`` or ``W->W->W``)."""
    if isinstance(e, Step2):
        f = _term_text(e.f)
        if e.mode == "on_t":
            body = f"{f} t"
        elif e.mode == "on_d":
            body = f"{f} d"
        elif e.mode == "cat2":
            body = f"cat ({f} d) ({_term_text(e.g)} t)"
        else:
            body = f"cond ({_SHORTER} t d) ({f} d) ({_term_text(e.g)} t)"
        return parse(rf"\d:W. \t:W. {body}")
    return parse(_term_text(e))


# ---------------------------------------------------------------------------
# generation


def _rand_word(rng: random.Random, max_len: int) -> Word:
    n = rng.randint(0, max_len)
    return "".join(rng.choice("01") for _ in range(n))


def gen_dsl(rng: random.Random, max_depth: int) -> Dsl:
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    if max_depth == 1 or rng.random() < 0.35:
        if rng.random() < 0.6:
            return Dsl(rng.choice(LEAVES))
        return Dsl(rng.choice(WORD_LEAVES), _rand_word(rng, MAX_CONST_LEN))
    op = rng.choice(("compose", "compose", "cond_empty", "ite_longer"))
    f = gen_dsl(rng, max_depth - 1)
    g = gen_dsl(rng, max_depth - 1)
    if op == "ite_longer":
        return Dsl(op, _rand_word(rng, MAX_CONST_LEN), (f, g))
    return Dsl(op, None, (f, g))


def gen_step_fn(seed, max_depth: int = 4) -> Dsl:
    """Deterministic random step function of depth at most ``max_depth``."""
    return gen_dsl(random.Random(seed), max_depth)


def gen_step2(rng: random.Random, max_depth: int = 3) -> Step2:
    mode = rng.choice(("on_t", "on_d", "cat2", "longer2"))
    f = gen_dsl(rng, max_depth)
    g = gen_dsl(rng, max_depth) if mode in ("cat2", "longer2") else None
    return Step2(mode, f, g)


def gen_word(seed, max_len: int) -> Word:
    """Deterministic random word; the length is uniform on ``[0, max_len]``."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    return _rand_word(random.Random(seed), max_len)


def word_near(rng: random.Random, length: int, spread: int = 1) -> Word:
    n = max(0, length + rng.randint(-spread, spread))
    return "".join(rng.choice("01") for _ in range(n))


def gen_boundary_step_fn(rng: random.Random, base_len: int) -> Dsl:
    """Step functions whose answers sit at or next to a length threshold near ``base_len``.

    Revision bookkeeping only branches on length ties and off-by-one
    growth, so these families concentrate answers there.
    """
    w = word_near(rng, base_len, 1)
    w2 = word_near(rng, base_len, 2)
    grow = Dsl(rng.choice(("app0", "app1", "selfcat")))
    families = [
        lambda: ite_longer(w, Dsl("dropl"), Dsl(rng.choice(("app0", "app1")))),
        lambda: compose(Dsl("trunc_to", w), grow),
        lambda: compose(Dsl(rng.choice(("app0", "app1"))), Dsl("dropl")),
        lambda: compose(Dsl("lmin_with", w), grow),
        lambda: cond_empty(Dsl("const", w[:MAX_CONST_LEN]), Dsl("dropl")),
        lambda: ite_longer(w, compose(Dsl("dropl"), Dsl("dropl")), grow),
        lambda: ite_longer(w2, Dsl("trunc_to", w), compose(Dsl("app1"), Dsl("app0"))),
        lambda: compose(Dsl("trunc_to", w2), gen_dsl(rng, 3)),
        lambda: ite_longer(w, Dsl("const", w2), Dsl("app1")),
    ]
    return rng.choice(families)()
