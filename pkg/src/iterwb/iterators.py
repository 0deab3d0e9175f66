"""Reference semantics for the bounded recursion and iteration primitives.

All primitives take their arguments in the order (step, bound, start, length)
where a bound is present.  Only the *length* of the length parameter ``c``
matters to the iterators; ``rec`` and friends also feed its prefixes to the
step function.

Step functions are plain callables ``Word -> Word`` (``StepFn``) or
``(Word, Word) -> Word`` (``StepFn2``, called as ``phi(d, t)``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Literal

from .words import Word, guard, lmin

StepFn = Callable[[Word], Word]
StepFn2 = Callable[[Word, Word], Word]

LENGTH = "length"
LOOKAHEAD = "lookahead"


@dataclass(frozen=True)
class Call:
    i: int
    query: Word
    answer: Word
    revision: bool

    def to_dict(self) -> dict:
        return {"i": self.i, "query": self.query, "answer": self.answer, "revision": self.revision}


@dataclass(frozen=True)
class IterTrace:
    """Record of one iteration run.

    ``budget`` is ``None`` for the budget-free primitives (``iter_``/``jter``),
    whose traces are informational: revision flags are computed but never
    enforced, and ``ell == n``.  ``start`` is the start word, kept for
    baseline reporting; it is not part of the JSON form.
    """

    kind: str
    budget: int | None
    n: int
    calls: tuple[Call, ...] = ()
    start: Word | None = None

    @property
    def ell(self) -> int:
        return len(self.calls)

    @property
    def revisions(self) -> int:
        return sum(call.revision for call in self.calls)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "budget": self.budget,
            "n": self.n,
            "ell": self.ell,
            "calls": [call.to_dict() for call in self.calls],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict, start: Word | None = None) -> "IterTrace":
        calls = tuple(Call(c["i"], c["query"], c["answer"], bool(c["revision"])) for c in data["calls"])
        if data.get("ell", len(calls)) != len(calls):
            raise ValueError("trace 'ell' disagrees with the number of calls")
        return cls(data["kind"], data.get("budget"), data["n"], calls, start)


def _step(phi: StepFn, t: Word) -> Word:
    return guard(phi(t))


def iterate(phi: StepFn, n: int, a: Word) -> Word:
    """``phi`` applied ``n`` times to ``a``, unbounded apart from the length cap."""
    if n < 0:
        raise ValueError("iteration count must be >= 0")
    t = guard(a)
    for _ in range(n):
        t = _step(phi, t)
    return t


def rec(phi: StepFn2, psi: StepFn, a: Word, c: Word) -> Word:
    """Limited recursion on notation with a bounding function ``psi``."""
    t = a
    for j in range(1, len(c) + 1):
        d = c[:j]
        t = lmin(guard(phi(d, t)), guard(psi(d)))
    return t


def rec0(phi: StepFn2, b: Word, a: Word, c: Word) -> Word:
    return rec(phi, lambda d: b, a, c)


def rec0_prime(phi: StepFn2, b: Word, a: Word, c: Word) -> Word:
    """As ``rec0``, but the start value is clamped by ``b`` as well."""
    t = lmin(a, b)
    for j in range(1, len(c) + 1):
        t = lmin(guard(phi(c[:j], t)), b)
    return t


def _length_flags(start: Word, answers):
    m = len(start)
    for ans in answers:
        flag = len(ans) > m
        m = max(m, len(ans))
        yield flag


def iter_(phi: StepFn, b: Word, a: Word, c: Word, *, trace: bool = False):
    """Output-clamped iteration: ``|c|`` rounds of ``t -> lmin(phi(t), b)``."""
    t = lmin(a, b)
    calls = []
    m = len(a)
    for i in range(1, len(c) + 1):
        ans = _step(phi, t)
        if trace:
            calls.append(Call(i, t, ans, len(ans) > m))
            m = max(m, len(ans))
        t = lmin(ans, b)
    if trace:
        return t, IterTrace(LENGTH, None, len(c), tuple(calls), a)
    return t


def jter(phi: StepFn, b: Word, a: Word, c: Word, *, trace: bool = False):
    """Argument-clamped iteration: ``|c|`` rounds of ``t -> phi(lmin(t, b))``."""
    t = a
    calls = []
    qmax = -1
    for i in range(1, len(c) + 1):
        q = lmin(t, b)
        ans = _step(phi, q)
        if trace:
            calls.append(Call(i, q, ans, i >= 2 and len(q) > qmax))
            qmax = max(qmax, len(q))
        t = ans
    if trace:
        return t, IterTrace(LOOKAHEAD, None, len(c), tuple(calls), a)
    return t


def iter_k(k: int, phi: StepFn, a: Word, c: Word) -> tuple[Word, IterTrace]:
    """k-length-revision iteration.

    A call whose answer is longer than ``a`` and every earlier answer is a
    length revision.  The call that would be revision ``k + 1`` is discarded
    and the run stops with the previous value.
    """
    if k < 0:
        raise ValueError("revision budget must be >= 0")
    n = len(c)
    t = guard(a)
    m = len(a)
    used = 0
    calls = []
    for i in range(1, n + 1):
        ans = _step(phi, t)
        revision = len(ans) > m
        if revision:
            if used == k:
                break
            used += 1
            m = len(ans)
        calls.append(Call(i, t, ans, revision))
        t = ans
    return t, IterTrace(LENGTH, k, n, tuple(calls), a)


def jter_k(k: int, phi: StepFn, a: Word, c: Word) -> tuple[Word, IterTrace]:
    """k-lookahead-revision iteration.

    A call (other than the first) whose query is longer than every earlier
    query is a lookahead revision.  The run stops *before* issuing the call
    that would be revision ``k + 1``.
    """
    if k < 0:
        raise ValueError("revision budget must be >= 0")
    n = len(c)
    t = guard(a)
    qmax = -1
    used = 0
    calls = []
    for i in range(1, n + 1):
        revision = i >= 2 and len(t) > qmax
        if revision:
            if used == k:
                break
            used += 1
        qmax = max(qmax, len(t))
        ans = _step(phi, t)
        calls.append(Call(i, t, ans, revision))
        t = ans
    return t, IterTrace(LOOKAHEAD, k, n, tuple(calls), a)


def iter_k_word(k: int, phi: StepFn, a: Word, c: Word) -> Word:
    return iter_k(k, phi, a, c)[0]


def jter_k_word(k: int, phi: StepFn, a: Word, c: Word) -> Word:
    return jter_k(k, phi, a, c)[0]


def unwind_ell(k: int, n: int, phi: StepFn, a: Word) -> int:
    """Least ``i <= n`` from which the budget-``k`` values stay constant up to ``n``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _, tr = iter_k(k, phi, a, "0" * n)
    run = [a] + [call.answer for call in tr.calls]
    values = [run[min(i, len(run) - 1)] for i in range(n + 1)]
    ell = n
    while ell > 0 and values[ell - 1] == values[n]:
        ell -= 1
    return ell


def iter_k_fast(k: int, phi: StepFn, a: Word, n: int, mode: Literal["threaded", "literal"] = "threaded") -> Word:
    """Tail-recursive k-revision iteration, with the recursion turned into a loop.

    ``threaded`` carries the running length maximum through the tail calls.
    ``literal`` restarts each tail call with ``phi(a)`` as its start value, so
    the revision baseline drops back to ``|phi(a)|``.
    """
    if mode not in ("threaded", "literal"):
        raise ValueError(f"unknown mode {mode!r}")
    if k < 0 or n < 0:
        raise ValueError("k and n must be >= 0")
    t = guard(a)
    m = len(a)
    budget = k
    for _ in range(n):
        ans = _step(phi, t)
        if mode == "literal":
            m = len(t)
        if len(ans) > m:
            if budget == 0:
                return t
            budget -= 1
            m = len(ans)
        t = ans
    return t


def trace_violations(trace: IterTrace, phi: StepFn | None = None) -> list[str]:
    """Check a trace against the revision bookkeeping it claims.

    ``phi`` is needed only to verify maximality of a stopped length-revision
    run (one extra call).  Returns a list of human-readable violations.
    """
    out = []
    calls = trace.calls
    if trace.ell > trace.n:
        out.append(f"ell={trace.ell} exceeds n={trace.n}")
    if [c.i for c in calls] != list(range(1, len(calls) + 1)):
        out.append("call indices are not 1..ell")
    if trace.budget is not None and trace.revisions > trace.budget:
        out.append(f"{trace.revisions} revisions exceed budget {trace.budget}")

    if trace.kind == LENGTH:
        if trace.start is not None:
            m = len(trace.start)
            for c in calls:
                expect = len(c.answer) > m
                if c.revision != expect:
                    out.append(f"call {c.i}: revision flag {c.revision}, baseline {m}, |answer|={len(c.answer)}")
                m = max(m, len(c.answer))
    elif trace.kind == LOOKAHEAD:
        qmax = -1
        for c in calls:
            expect = c.i >= 2 and len(c.query) > qmax
            if c.revision != expect:
                out.append(f"call {c.i}: lookahead flag {c.revision}, previous max {qmax}, |query|={len(c.query)}")
            qmax = max(qmax, len(c.query))
        if calls and calls[0].revision:
            out.append("initial call flagged as lookahead revision")
    else:
        out.append(f"unknown trace kind {trace.kind!r}")

    if trace.budget is None or trace.start is None:
        return out

    prev = trace.start
    for c in calls:
        if c.query != prev:
            out.append(f"call {c.i}: query does not continue the chain")
        prev = c.answer

    if trace.ell < trace.n and trace.revisions != trace.budget:
        out.append(f"stopped at ell={trace.ell} < n with only {trace.revisions} of {trace.budget} revisions used")
    if trace.ell < trace.n:
        final = prev
        if trace.kind == LOOKAHEAD:
            qmax = max((len(c.query) for c in calls), default=-1)
            if not (trace.ell + 1 >= 2 and len(final) > qmax):
                out.append("stopped although the next query is not a lookahead revision")
        elif phi is not None:
            m = max([len(trace.start)] + [len(c.answer) for c in calls])
            if not len(phi(final)) > m:
                out.append("stopped although the next answer is not a length revision")
    return out
