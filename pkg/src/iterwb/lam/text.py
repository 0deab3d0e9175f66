"""Concrete syntax: tokenizer, parser and printer.

Grammar::

    type    := "W" | type "->" type | "(" type ")"        (arrows associate right)
    term    := "\\" ident ":" type "." term | term term | atom
    atom    := ident | "'" [01]* "'" | "(" term ")"

Application associates left.  ``--`` starts a comment that runs to the end
of the line.  ``λ`` is accepted in place of the backslash.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from . import constants
from .syntax import Abs, App, Arrow, Const, Lit, Term, Type, Var, W


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>--[^\n]*)
  | (?P<arrow>->|→)
  | (?P<lam>\\|λ)
  | (?P<punct>[:.()])
  | (?P<lit>'[01]*')
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            if text[pos] == "'":
                raise ParseError("malformed word literal (only 0 and 1 allowed)", line, col)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, context: Mapping[str, Type]):
        self.toks = tokenize(text)
        self.pos = 0
        self.context = dict(context)
        self.scope: list[tuple[str, Type]] = []

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col)

    def expect(self, text: str) -> Token:
        tok = self.tok
        if tok.text != text:
            self.error(f"expected {text!r}, found {tok.text or 'end of input'!r}")
        self.pos += 1
        return tok

    # types

    def type_(self) -> Type:
        left = self.type_atom()
        if self.tok.kind == "arrow":
            self.pos += 1
            return Arrow(left, self.type_())
        return left

    def type_atom(self) -> Type:
        tok = self.tok
        if tok.kind == "ident" and tok.text == "W":
            self.pos += 1
            return W
        if tok.text == "(":
            self.pos += 1
            t = self.type_()
            self.expect(")")
            return t
        self.error(f"expected a type, found {tok.text or 'end of input'!r}")

    # terms

    def term(self) -> Term:
        if self.tok.kind == "lam":
            return self.abstraction()
        head = self.atom()
        while True:
            if self.tok.kind == "lam":
                return App(head, self.abstraction())
            if self.tok.kind in ("ident", "lit") or self.tok.text == "(":
                head = App(head, self.atom())
            else:
                return head

    def abstraction(self) -> Term:
        self.pos += 1
        tok = self.tok
        if tok.kind != "ident":
            self.error("expected a variable name after lambda")
        if constants.is_constant(tok.text):
            self.error(f"cannot bind reserved constant name {tok.text!r}")
        self.pos += 1
        self.expect(":")
        ty = self.type_()
        self.expect(".")
        self.scope.append((tok.text, ty))
        try:
            body = self.term()
        finally:
            self.scope.pop()
        return Abs(tok.text, ty, body)

    def atom(self) -> Term:
        tok = self.tok
        if tok.kind == "lit":
            self.pos += 1
            return Lit(tok.text[1:-1])
        if tok.kind == "ident":
            self.pos += 1
            for name, ty in reversed(self.scope):
                if name == tok.text:
                    return Var(name, ty)
            if constants.is_constant(tok.text):
                return Const(tok.text)
            if tok.text in self.context:
                return Var(tok.text, self.context[tok.text])
            if re.fullmatch(r"(iterk|jterk)\w*", tok.text):
                self.error(f"unknown constant {tok.text!r} (budget must be a decimal number)", tok)
            self.error(f"unbound variable {tok.text!r} (no binder and no type annotation)", tok)
        if tok.text == "(":
            self.pos += 1
            t = self.term()
            self.expect(")")
            return t
        self.error(f"expected a term, found {tok.text or 'end of input'!r}")


def parse(text: str, context: Mapping[str, Type] | None = None) -> Term:
    """Parse a term; ``context`` types free variables."""
    p = _Parser(text, context or {})
    t = p.term()
    if p.tok.kind != "eof":
        p.error(f"unexpected {p.tok.text!r} after end of term")
    return t


def parse_type(text: str) -> Type:
    p = _Parser(text, {})
    t = p.type_()
    if p.tok.kind != "eof":
        p.error(f"unexpected {p.tok.text!r} after end of type")
    return t


def print_type(t: Type) -> str:
    return str(t)


def print_term(t: Term) -> str:
    if isinstance(t, Lit):
        return f"'{t.word}'"
    if isinstance(t, (Var, Const)):
        return t.name
    if isinstance(t, Abs):
        return f"\\{t.var}:{print_type(t.var_type)}. {print_term(t.body)}"
    if isinstance(t, App):
        head = t.fun
        args = [t.arg]
        while isinstance(head, App):
            args.append(head.arg)
            head = head.fun
        args.reverse()
        parts = [_wrap(head, isinstance(head, Abs))]
        parts += [_wrap(a, isinstance(a, (App, Abs))) for a in args]
        return " ".join(parts)
    raise TypeError(f"not a term: {t!r}")


def _wrap(t: Term, paren: bool) -> str:
    s = print_term(t)
    return f"({s})" if paren else s
