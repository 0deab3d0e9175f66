"""Binary words and the poly-time base functions over them.

Words are plain ``str`` values over the alphabet ``{'0', '1'}``; the empty
word is ``''``.  Every function here is total.
"""

from __future__ import annotations

import contextlib
import contextvars
import os
import re

Word = str

DEFAULT_CAP = 2 ** 20

_WORD_RE = re.compile(r"[01]*\Z")


class ResourceExceeded(RuntimeError):
    """A word grew past the active length cap."""

    def __init__(self, length: int, cap: int):
        super().__init__(f"resource exceeded: word of length {length} > cap {cap}")
        self.length = length
        self.cap = cap


def _default_cap() -> int:
    raw = os.environ.get("ITERWB_CAP")
    if raw is None or not raw.strip():
        return DEFAULT_CAP
    return int(raw)


_cap: contextvars.ContextVar[int | None] = contextvars.ContextVar("iterwb_cap", default=None)


def current_cap() -> int:
    cap = _cap.get()
    return _default_cap() if cap is None else cap


@contextlib.contextmanager
def resource_cap(cap: int):
    """Temporarily set the maximum admissible word length."""
    token = _cap.set(int(cap))
    try:
        yield cap
    finally:
        _cap.reset(token)


def guard(w: Word) -> Word:
    cap = current_cap()
    if len(w) > cap:
        raise ResourceExceeded(len(w), cap)
    return w


def is_word(w: object) -> bool:
    return isinstance(w, str) and _WORD_RE.match(w) is not None


def truncate(c: Word, b: Word) -> Word:
    """First ``min(|b|, |c|)`` symbols of ``c``."""
    return c[: len(b)]


def drop_last(c: Word) -> Word:
    return c[:-1]


def lmin(c: Word, b: Word) -> Word:
    # ties go right
    return c if len(c) < len(b) else b


def cond(s: Word, x: Word, y: Word) -> Word:
    return x if s else y


def append_sym(w: Word, d: str | int) -> Word:
    d = str(d)
    if d not in ("0", "1"):
        raise ValueError(f"not a binary symbol: {d!r}")
    return w + d


def repeat(d: str | int, n: int) -> Word:
    d = str(d)
    if d not in ("0", "1"):
        raise ValueError(f"not a binary symbol: {d!r}")
    if n < 0:
        raise ValueError("repeat count must be >= 0")
    return d * n


_DOUBLE = str.maketrans({"0": "00", "1": "11"})


def tuple_n(components, n: int | None = None) -> Word:
    """Monotone tupling: bits doubled, components separated by ``01``.

    ``|tuple_n(a)| == 2 * sum(|a_i|) + 2 * (n - 1)``.
    """
    components = list(components)
    if n is None:
        n = len(components)
    if n < 2 or len(components) != n:
        raise ValueError(f"tuple_n expects exactly n >= 2 components, got {len(components)} for n={n}")
    return "01".join(c.translate(_DOUBLE) for c in components)


def untuple(w: Word, n: int) -> list[Word] | None:
    """Decode an ``n``-tuple, or ``None`` if ``w`` is not a valid encoding."""
    if len(w) % 2:
        return None
    parts: list[list[str]] = [[]]
    for k in range(0, len(w), 2):
        pair = w[k : k + 2]
        if pair == "00":
            parts[-1].append("0")
        elif pair == "11":
            parts[-1].append("1")
        elif pair == "01":
            parts.append([])
        else:
            return None
    if len(parts) != n:
        return None
    return ["".join(p) for p in parts]


def project(w: Word, n: int, i: int) -> Word:
    """Component ``i`` (1-based) of an ``n``-tuple; ``''`` on invalid input."""
    if not 1 <= i <= n:
        raise ValueError(f"projection index {i} out of range for arity {n}")
    parts = untuple(w, n)
    return "" if parts is None else parts[i - 1]


def pair(u: Word, v: Word) -> Word:
    return tuple_n((u, v), 2)


def pi1(w: Word) -> Word:
    return project(w, 2, 1)


def pi2(w: Word) -> Word:
    return project(w, 2, 2)


# Extra poly-time helpers used by the translation gadgets.

def concat(x: Word, y: Word) -> Word:
    return x + y


def eq(x: Word, y: Word) -> Word:
    """``'1'`` if the words are equal, else ``''``."""
    return "1" if x == y else ""


def last(x: Word) -> Word:
    return x[-1:]


def zeros(x: Word) -> Word:
    return "0" * len(x)


def drop_first(c: Word, m: Word) -> Word:
    """``c`` without its first ``|m|`` symbols."""
    return c[len(m):]


def shorter(x: Word, y: Word) -> bool:
    return len(x) < len(y)
