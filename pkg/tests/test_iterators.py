import json

import pytest
from hypothesis import assume, given, settings, strategies as st

from iterwb import iterators as it
from iterwb.harness.dsl import Dsl, compose, denote, gen_dsl, gen_step_fn, ite_longer
from iterwb.words import ResourceExceeded, lmin

words = st.text(alphabet="01", max_size=12)
seeds = st.integers(min_value=0, max_value=2 ** 32)
budgets = st.integers(min_value=0, max_value=3)


def app1(t):
    return t + "1"


def drop_last(t):
    return t[:-1]


def selfcat(t):
    return t + t


def step(seed):
    return denote(gen_step_fn(seed, 4))


# --- direct-definition oracles ---------------------------------------------


def iter_oracle(phi, b, a, c):
    t = lmin(a, b)
    for _ in c:
        t = lmin(phi(t), b)
    return t


def jter_oracle(phi, b, a, c):
    t = a
    for _ in c:
        t = phi(lmin(t, b))
    return t


def rec_oracle(phi, psi, a, c):
    if not c:
        return a
    return lmin(phi(c, rec_oracle(phi, psi, a, c[:-1])), psi(c))


def _values_until(phi, a, n, over_budget):
    """a, phi(a), ... stopping after the first index where ``over_budget`` fires."""
    vals = [a]
    while len(vals) <= n and not over_budget(vals):
        vals.append(phi(vals[-1]))
    return vals


def iterk_oracle(k, phi, a, c):
    """The largest l <= n whose first l answers hold at most k length revisions."""
    n = len(c)

    def revisions(vals):
        return sum(1 for i in range(1, len(vals)) if len(vals[i]) > max(len(v) for v in vals[:i]))

    vals = _values_until(phi, a, n, lambda v: revisions(v) > k)
    ell = max(l for l in range(len(vals)) if l <= n and revisions(vals[: l + 1]) <= k)
    return vals[ell], ell


def jterk_oracle(k, phi, a, c):
    """Lookahead: call i (i >= 2) queries vals[i-1]; it is a revision if longer than all earlier queries."""
    n = len(c)

    def revisions(vals, ell):
        return sum(
            1 for i in range(2, ell + 1) if len(vals[i - 1]) > max(len(vals[j - 1]) for j in range(1, i))
        )

    vals = [a]
    ell = 0
    while ell < n:
        if revisions(vals + [None], ell + 1) > k:  # the revision test reads queries only
            break
        vals.append(phi(vals[-1]))
        ell += 1
    return vals[ell], ell


# --- examples ----------------------------------------------------------------


def test_iterate_examples():
    assert it.iterate(app1, 3, "") == "111"
    assert it.iterate(app1, 0, "01") == "01"
    assert it.iterate(selfcat, 10, "0") == "0" * 1024
    with pytest.raises(ResourceExceeded, match="resource exceeded"):
        it.iterate(selfcat, 25, "0")


def test_rec_examples():
    assert it.rec(lambda d, t: t, lambda d: "", "10", "") == "10"
    assert it.rec(lambda d, t: t + "1", lambda d: "1111", "", "00") == "11"
    assert it.rec(lambda d, t: t + "1", lambda d: "", "10", "0101") == ""


def test_rec0_examples():
    phi = lambda d, t: t + "1"
    assert it.rec0(phi, "1111", "0101", "") == "0101"
    assert it.rec0(phi, "1111", "", "00") == "11"
    assert it.rec0(phi, "", "0", "01") == ""
    assert it.rec0_prime(phi, "1", "00", "") == "1"
    assert it.rec0_prime(phi, "111", "0", "") == "0"


def test_iter_jter_examples():
    assert it.iter_(app1, "1111", "", "000") == "111"
    assert it.iter_(app1, "1111", "", "00000") == "1111"
    assert it.iter_(app1, "1", "0101", "") == "1"
    assert it.jter(app1, "11", "", "000") == "111"
    assert it.jter(app1, "11", "0101", "") == "0101"
    assert lmin(it.jter(app1, "11", "", "000"), "11") == it.iter_(app1, "11", "", "000") == "11"


def test_iter_k_examples():
    w, tr = it.iter_k(0, app1, "00", "111")
    assert (w, tr.ell) == ("00", 0)
    w, tr = it.iter_k(1, app1, "0", "0000")
    assert (w, tr.ell) == ("01", 1)
    for k in range(4):
        w, tr = it.iter_k(k, drop_last, "101", "11")
        assert (w, tr.ell, tr.revisions) == ("1", 2, 0)


def test_jter_k_examples():
    w, tr = it.jter_k(0, app1, "0", "000")
    assert (w, tr.ell) == ("01", 1)
    assert not tr.calls[0].revision
    w, tr = it.jter_k(1, app1, "0", "000")
    assert (w, tr.ell) == ("011", 2)
    for k in range(3):
        w, tr = it.jter_k(k, app1, "0", "")
        assert (w, tr.ell) == ("0", 0)


def test_unwind_examples():
    assert it.unwind_ell(0, 3, app1, "0") == 0
    assert it.unwind_ell(0, 5, drop_last, "11") == 2
    assert it.unwind_ell(2, 0, app1, "") == 0


def test_fast_examples():
    assert it.iter_k_fast(1, app1, "0", 4, "threaded") == "01"
    probe = {"11": "1", "1": "11"}.__getitem__
    assert it.iter_k_word(0, probe, "11", "00") == "11"
    assert it.iter_k_fast(0, probe, "11", 2, "threaded") == "11"
    assert it.iter_k_fast(0, probe, "11", 2, "literal") == "1"
    with pytest.raises(ValueError):
        it.iter_k_fast(0, app1, "", 1, "sideways")


def test_negative_budget_rejected():
    with pytest.raises(ValueError):
        it.iter_k(-1, app1, "", "0")
    with pytest.raises(ValueError):
        it.jter_k(-1, app1, "", "0")


# --- properties against the oracles ------------------------------------------


@given(seeds, words, words, words)
def test_iter_jter_rec_match_oracles(seed, a, b, c):
    phi = step(seed)
    assert it.iter_(phi, b, a, c) == iter_oracle(phi, b, a, c)
    assert it.jter(phi, b, a, c) == jter_oracle(phi, b, a, c)
    assert len(it.iter_(phi, b, a, c)) <= len(b)
    phi2 = lambda d, t: phi(d + t)
    assert it.rec(phi2, phi, a, c) == rec_oracle(phi2, phi, a, c)
    assert it.rec0(phi2, b, a, c) == rec_oracle(phi2, lambda d: b, a, c)
    assert it.rec0_prime(phi2, b, a, c) == rec_oracle(phi2, lambda d: b, lmin(a, b), c)


@given(seeds, words, words)
def test_rec0_prime_agrees_when_start_is_shorter(seed, a, c):
    phi = step(seed)
    phi2 = lambda d, t: phi(t)
    b = a + "0"
    assert it.rec0_prime(phi2, b, a, c) == it.rec0(phi2, b, a, c)


@given(seeds, budgets, words, words)
def test_iter_k_matches_oracle(seed, k, a, c):
    phi = step(seed)
    w, tr = it.iter_k(k, phi, a, c)
    assert (w, tr.ell) == iterk_oracle(k, phi, a, c)
    assert it.trace_violations(tr, phi) == []
    assert w == it.iterate(phi, tr.ell, a)


@given(seeds, budgets, words, words)
def test_jter_k_matches_oracle(seed, k, a, c):
    phi = step(seed)
    w, tr = it.jter_k(k, phi, a, c)
    assert (w, tr.ell) == jterk_oracle(k, phi, a, c)
    assert it.trace_violations(tr) == []


@given(seeds, budgets, words, words)
def test_budget_monotonicity_and_maximality(seed, k, a, c):
    phi = step(seed)
    for fn in (it.iter_k, it.jter_k):
        _, small = fn(k, phi, a, c)
        _, big = fn(k + 1, phi, a, c)
        assert small.ell <= big.ell
        assert big.calls[: small.ell] == small.calls
        assert small.ell == small.n or big.ell > small.ell


@given(st.integers(0, 2 ** 20), budgets, words, words)
def test_no_growth_collapse(seed, k, a, c):
    import random

    rng = random.Random(seed)
    # functions that never lengthen their input cannot revise
    shrinking = Dsl("trunc_to", a) if rng.random() < 0.5 else compose(Dsl("dropl"), gen_dsl(rng, 2))
    phi = lambda t: shrinking(t)[: len(t)]
    assert it.iter_k_word(k, phi, a, c) == it.iterate(phi, len(c), a)


@given(seeds, budgets, words, words, words)
def test_bridge_and_lemma2_identities(seed, k, a, b, c):
    phi = step(seed)
    assert it.iter_(phi, b, a, c) == lmin(it.jter(phi, b, a, c), b)
    if c:
        assert it.jter(phi, b, a, c) == phi(it.iter_(phi, b, a, c[:-1]))
        assert it.jter_k_word(k, phi, a, c) == phi(it.iter_k_word(k, phi, a, c[:-1]))


@given(seeds, budgets, words, words)
def test_unwind_ell_is_sweep_minimum(seed, k, a, c):
    phi = step(seed)
    n = len(c)
    sweep = [it.iter_k_word(k, phi, a, "0" * i) for i in range(n + 1)]
    ell = min(i for i in range(n + 1) if all(sweep[j] == sweep[i] for j in range(i, n + 1)))
    assert it.unwind_ell(k, n, phi, a) == ell


@given(seeds, budgets, words, st.integers(0, 20))
def test_fast_threaded_equals_reference(seed, k, a, n):
    phi = step(seed)
    assert it.iter_k_fast(k, phi, a, n, "threaded") == it.iter_k_word(k, phi, a, "0" * n)


growers = st.sampled_from(["id", "app0", "app1", "selfcat"])


@given(growers, growers, st.integers(0, 6), budgets, words, st.integers(0, 12))
def test_fast_literal_agrees_on_non_shrinking(f, g, width, k, a, n):
    phi = denote(ite_longer("0" * width, Dsl(f), Dsl(g)))
    assert it.iter_k_fast(k, phi, a, n, "literal") == it.iter_k_word(k, phi, a, "0" * n)


# --- traces -----------------------------------------------------------------


def test_trace_json_schema():
    _, tr = it.iter_k(1, app1, "0", "0000")
    data = json.loads(tr.to_json())
    assert data == {
        "kind": "length",
        "budget": 1,
        "n": 4,
        "ell": 1,
        "calls": [{"i": 1, "query": "0", "answer": "01", "revision": True}],
    }
    assert it.IterTrace.from_dict(data, start="0") == tr


def test_plain_iterator_traces():
    w, tr = it.iter_(app1, "11", "", "000", trace=True)
    assert w == "11" and tr.ell == 3 and tr.budget is None
    assert it.trace_violations(tr) == []


@given(seeds, budgets, words, words)
def test_tampered_traces_are_caught(seed, k, a, c):
    phi = step(seed)
    _, tr = it.iter_k(k, phi, a, c)
    assume(tr.calls)
    first = tr.calls[0]
    flipped = it.Call(first.i, first.query, first.answer, not first.revision)
    bad = it.IterTrace(tr.kind, tr.budget, tr.n, (flipped,) + tr.calls[1:], tr.start)
    assert it.trace_violations(bad, phi)
    if tr.ell < tr.n:
        short = it.IterTrace(tr.kind, tr.budget, tr.n, tr.calls[:-1], tr.start)
        assert it.trace_violations(short, phi)


def test_lookahead_first_call_exempt():
    _, tr = it.jter_k(0, app1, "0101", "000")
    bad = it.IterTrace(tr.kind, tr.budget, tr.n, (it.Call(1, "0101", "01011", True),), tr.start)
    assert any("initial call" in v or "lookahead flag" in v for v in it.trace_violations(bad))


@settings(max_examples=50)
@given(seeds, budgets, words, words)
def test_unwind_identities(seed, k, a, c):
    phi = step(seed)
    n = len(c)
    ell = it.unwind_ell(k, n, phi, a)
    lhs = it.iter_k_word(k + 1, phi, a, c)
    prefix = it.iter_k_word(k, phi, a, "0" * ell)
    assert lhs == it.iter_k_word(1, phi, prefix, "0" * (n - ell))
    if ell < n:
        assert lhs == it.iter_k_word(0, phi, phi(prefix), "0" * (n - ell - 1))
