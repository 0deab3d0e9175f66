"""Planted bugs, one or more per translation, for the harness self-test.

A campaign that stays green on a mutant is vacuous; :func:`self_test` runs
each mutant's campaign and reports whether it was caught.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .. import translations as tr
from ..words import drop_first, lmin, pair, pi1, pi2, shorter, truncate, zeros


@dataclass(frozen=True)
class Mutant:
    name: str
    lemma_id: str
    description: str
    overrides: Mapping[str, Callable]


def _argmax_last(rec0):
    def argmax(psi, c):
        return rec0(lambda d, t: t if shorter(psi(d), psi(t)) else d, c, "", c)

    return argmax


def _rec_tight_bound(rec0):
    _, argmax = tr.max_argmax_via_rec0(rec0)

    def rec(phi, psi, a, c):
        bound = psi(argmax(psi, c))
        return rec0(lambda d, t: lmin(phi(d, t), psi(d)), bound, a, c)

    return rec


def _iter_from_rec_raw_start(rec):
    return lambda phi, b, a, c: rec(lambda d, t: phi(t), lambda d: b, a, c)


def _rec0p_short_prefix(iter_):
    def rec0p(phi, b, a, c):
        def step(p):
            u = pi1(p)
            return pair(u + "0", lmin(phi(truncate(c, u), pi2(p)), b))

        return pi2(iter_(step, pair(zeros(c), b), pair("", lmin(a, b)), c))

    return rec0p


def _iter_from_jter_unclamped(jter):
    return lambda phi, b, a, c: jter(phi, b, a, c)


def _jter_from_iter_full(iter_):
    return lambda phi, b, a, c: phi(iter_(phi, b, a, c)) if c else a


def _iter0_strict(iter_):
    def iter0(phi, a, c):
        def G(t):
            if t[-1:] == "1":
                return t
            u = t[:-1]
            v = phi(u)
            return v + "0" if len(v) < len(a) else u + "1"

        return iter_(G, a + "00", a + "0", c)[:-1]

    return iter0


def _iterk_no_step(iter_, k):
    base = tr.iter0_from_iter(iter_)
    if k == 0:
        return base
    prev = tr.iterk_from_iter(iter_, k - 1)
    M = tr.m_search(iter_)

    def iterk(phi, a, c):
        n = len(c)

        def stationary(q, x):
            return "1" if len(q) == n or prev(phi, x, q) == prev(phi, x, q + "0") else ""

        m = M(stationary, a, c)
        if len(m) == n:
            return prev(phi, a, c)
        return base(phi, prev(phi, a, m), drop_first(c, m + "0"))

    return iterk


def _iterk_late_search(iter_, k):
    base = tr.iter0_from_iter(iter_)
    if k == 0:
        return base
    prev = tr.iterk_from_iter(iter_, k - 1)
    M = tr.m_search(iter_)

    def iterk(phi, a, c):
        n = len(c)

        def stationary(q, x):
            return "1" if len(q) == n or prev(phi, x, q) == prev(phi, x, q + "0") else ""

        m = M(stationary, a, c)
        m = m + "0" if len(m) < n else m
        if len(m) == n:
            return prev(phi, a, c)
        return base(phi, phi(prev(phi, a, m)), drop_first(c, m + "0"))

    return iterk


def _jterk_no_phi(iterk, k):
    return lambda phi, a, c: iterk(phi, a, c[:-1]) if c else a


def _jter_short_length(jterk, k):
    def jter(phi, b, a, c):
        if not c:
            return a
        return phi(jterk(tr.flag_step(phi, b, a), b + "0", c[:-1])[:-1])

    return jter


MUTANTS = {
    m.name: m
    for m in [
        Mutant("argmax-last-max", "lemma1-rec-rec0", "argmax keeps the last maximizing segment",
               {"argmax_via_rec0": _argmax_last}),
        Mutant("rec-tight-bound", "lemma1-rec-rec0", "rec0 bound is max itself, without the extra symbol",
               {"rec_from_rec0": _rec_tight_bound}),
        Mutant("iter-rec-raw-start", "lemma4-rec-iter", "rec started at a instead of lmin(a, b)",
               {"iter_from_rec": _iter_from_rec_raw_start}),
        Mutant("rec0p-short-prefix", "lemma4-rec-iter", "pair step queries c[:|u|] instead of c[:|u|+1]",
               {"rec0p_from_iter": _rec0p_short_prefix}),
        Mutant("rec0-untagged-H", "lemma4-rec-iter", "H without the tag (literal form)",
               {"rec0_from_rec0p": tr.rec0_from_rec0p_literal}),
        Mutant("iter-jter-unclamped", "lemma2-iter-jter", "drop the final lmin of iter-via-jter",
               {"iter_from_jter": _iter_from_jter_unclamped}),
        Mutant("jter-iter-full-c", "lemma2-iter-jter", "jter-via-iter iterates over c instead of c minus its last symbol",
               {"jter_from_iter": _jter_from_iter_full}),
        Mutant("iter0-strict-bound", "lemma7-iter0", "halting test |phi(u)| < |a| instead of <=",
               {"iter0_from_iter": _iter0_strict}),
        Mutant("iterk-no-step", "lemma8-iterk", "skip the extra phi step after the unwind point",
               {"iterk_from_iter": _iterk_no_step}),
        Mutant("iterk-late-search", "lemma8-iterk", "M-search result off by one",
               {"iterk_from_iter": _iterk_late_search}),
        Mutant("jterk-drop-phi", "sec4-jterk-iterk", "drop the final phi in jterk_from_iterk",
               {"jterk_from_iterk": _jterk_no_phi}),
        Mutant("jter-short-length", "sec4-jter-jterk", "jter_k run on c' instead of 0c'",
               {"jter_from_jterk": _jter_short_length}),
    ]
}


def self_test(trials: int = 100, seed: int = 0, max_len: int = 16) -> dict[str, bool]:
    """``{mutant: detected}`` for every planted bug."""
    from .campaigns import check_lemma

    return {
        name: not check_lemma(m.lemma_id, trials, seed, max_len, mutant=name, shrink_failures=False).passed
        for name, m in MUTANTS.items()
    }
