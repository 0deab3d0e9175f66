"""Seeded equivalence campaigns: composite translations against the reference iterators.

Each campaign draws inputs for one lemma, runs the builders from
:mod:`iterwb.translations` on the reference primitives and compares word for
word.  Mismatches (and trace-invariant violations) are failures; divergences
of the literal-form variants are *flagged* and never counted as failures.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Mapping

from .. import iterators as it
from .. import translations as tr
from ..words import Word, lmin, zeros
from .dsl import (
    Dsl,
    Step2,
    gen_boundary_step_fn,
    gen_dsl,
    gen_step2,
    ite_longer,
    parse_dsl,
    denote,
    denote2,
    word_near,
)

LEMMA_IDS = (
    "lemma1-rec-rec0",
    "lemma2-iter-jter",
    "lemma4-rec-iter",
    "lemma5-unwind",
    "cor6-unwind",
    "lemma7-iter0",
    "lemma8-iterk",
    "sec4-jterk-iterk",
    "sec4-jter-jterk",
    "sec5-fast",
    "theorem-main",
)

MAX_RECORDED = 10   # failures shrunk and stored per report
MAX_FLAG_EXAMPLES = 3


class UnknownLemma(KeyError):
    def __str__(self) -> str:
        return f"unknown lemma id {self.args[0]!r}; expected one of: {', '.join(LEMMA_IDS)}"


# ---------------------------------------------------------------------------
# inputs


Inputs = dict  # keys among k, phi, phi2, psi, a, b, c


def inputs_to_json(x: Inputs) -> dict:
    return {key: (str(v) if isinstance(v, (Dsl, Step2)) else v) for key, v in sorted(x.items())}


def inputs_from_json(data: Mapping) -> Inputs:
    out = {}
    for key, v in data.items():
        out[key] = parse_dsl(v) if key in ("phi", "phi2", "psi") else v
    if "phi2" in out and isinstance(out["phi2"], Dsl):
        out["phi2"] = Step2("on_t", out["phi2"])
    return out


@dataclass(frozen=True)
class Spec:
    lemma_id: str
    ks: tuple
    needs: tuple
    run: Callable
    nonempty_c: bool = False
    eps_rate: float = 0.05


def _rand_word(rng: random.Random, max_len: int) -> Word:
    return "".join(rng.choice("01") for _ in range(rng.randint(0, max_len)))


def generate(spec: Spec, rng: random.Random, max_len: int, k, biased: bool) -> Inputs:
    x: Inputs = {}
    if k is not None:
        x["k"] = k
    if biased:
        a = _rand_word(rng, min(max_len, 12))
        x["a"] = a
        x["b"] = word_near(rng, len(a), 2)
        base = len(a) + rng.randint(0, 2)
        if "phi" in spec.needs:
            x["phi"] = gen_boundary_step_fn(rng, base)
        if "psi" in spec.needs:
            x["psi"] = gen_boundary_step_fn(rng, base)
        if "phi2" in spec.needs:
            mode = rng.choice(("on_t", "on_d", "cat2", "longer2"))
            f = gen_boundary_step_fn(rng, base)
            g = gen_boundary_step_fn(rng, base) if mode in ("cat2", "longer2") else None
            x["phi2"] = Step2(mode, f, g)
    else:
        x["a"] = _rand_word(rng, max_len)
        x["b"] = _rand_word(rng, max_len)
        if "phi" in spec.needs:
            x["phi"] = gen_dsl(rng, 4)
        if "psi" in spec.needs:
            x["psi"] = gen_dsl(rng, 3)
        if "phi2" in spec.needs:
            x["phi2"] = gen_step2(rng, 3)
    c = "" if rng.random() < spec.eps_rate else _rand_word(rng, max_len)
    if spec.nonempty_c and not c:
        c = rng.choice("01")
    x["c"] = c
    return {key: v for key, v in x.items() if key in spec.needs or key in ("k", "a", "c")}


# ---------------------------------------------------------------------------
# trial bookkeeping


@dataclass
class Outcome:
    checks: int = 0
    traces: int = 0
    mismatches: list = field(default_factory=list)   # (check, expected, actual)
    flags: list = field(default_factory=list)        # (probe, expected, actual)

    def expect(self, check: str, expected: Word, actual: Word) -> None:
        self.checks += 1
        if expected != actual:
            self.mismatches.append((check, expected, actual))

    def flag(self, probe: str, expected: Word, actual: Word) -> None:
        if expected != actual:
            self.flags.append((probe, expected, actual))

    def trace(self, trace: it.IterTrace, phi=None) -> None:
        self.traces += 1
        for v in it.trace_violations(trace, phi):
            self.mismatches.append(("trace-invariant", "", v))


class Env:
    """Builders used by the campaigns; mutants replace some of them."""

    def __init__(self, overrides: Mapping[str, Callable] | None = None):
        self.builders = {name: t.build for name, t in tr.TRANSLATIONS.items()}
        self.builders.update(overrides or {})

    def __getitem__(self, name: str) -> Callable:
        return self.builders[name]

    def cycle(self, k: int, start: str, primitive):
        build = {
            "iterk": lambda p: self["iterk_from_iter"](p, k),
            "jterk": lambda p: self["jterk_from_iterk"](p, k),
            "jter": lambda p: self["jter_from_jterk"](p, k),
            "iter": self["iter_from_jter"],
        }
        current, kind = primitive, start
        for _ in range(4):
            kind = tr.CYCLE_NEXT[kind]
            current = build[kind](current)
        return current


# ---------------------------------------------------------------------------
# oracles independent of the builders


def scan_argmax(psi, c: Word) -> tuple[Word, Word]:
    """Shortest initial segment of ``c`` maximizing ``|psi|``, and its value."""
    best = ""
    best_len = len(psi(""))
    for j in range(1, len(c) + 1):
        v = len(psi(c[:j]))
        if v > best_len:
            best, best_len = c[:j], v
    return best, psi(best)


# ---------------------------------------------------------------------------
# per-lemma trial bodies


def _lemma1(x, env: Env, out: Outcome) -> None:
    psi, phi, a, c = denote(x["psi"]), denote2(x["phi2"]), x["a"], x["c"]
    arg_exp, max_exp = scan_argmax(psi, c)
    argmax = env["argmax_via_rec0"](it.rec0)
    got = argmax(psi, c)
    out.expect("argmax", arg_exp, got)
    out.expect("max", max_exp, psi(got))
    out.expect("rec", it.rec(phi, psi, a, c), env["rec_from_rec0"](it.rec0)(phi, psi, a, c))
    out.flag("argmax-literal-test", arg_exp, tr.argmax_literal(it.rec0)(psi, c))


def _lemma2(x, env: Env, out: Outcome) -> None:
    phi, b, a, c = denote(x["phi"]), x["b"], x["a"], x["c"]
    out.expect("iter-via-jter", it.iter_(phi, b, a, c), env["iter_from_jter"](it.jter)(phi, b, a, c))
    if c:
        out.expect("jter-via-iter", it.jter(phi, b, a, c), env["jter_from_iter"](it.iter_)(phi, b, a, c))
    else:
        # the literal empty-word clause of the identity reads b
        out.flag("jter-via-iter-empty-c", it.jter(phi, b, a, c), b)


def _lemma4(x, env: Env, out: Outcome) -> None:
    phi, phi2, psi = denote(x["phi"]), denote2(x["phi2"]), denote(x["psi"])
    b, a, c = x["b"], x["a"], x["c"]
    out.expect("iter_from_rec", it.iter_(phi, b, a, c), env["iter_from_rec"](it.rec)(phi, b, a, c))

    rec0p_exp = it.rec0_prime(phi2, b, a, c)
    rec0p = env["rec0p_from_iter"](it.iter_)
    out.expect("rec0p_from_iter", rec0p_exp, rec0p(phi2, b, a, c))
    # invariant of the pair iteration: after i steps the state is <0^i, rec0p(..., c[:i])>
    step = tr.pair_step(phi2, b, c)
    final, trace = it.iter_(step, tr.pair(zeros(c), b), tr.pair("", lmin(a, b)), c, trace=True)
    states = [call.query for call in trace.calls] + [final]
    for i, s in enumerate(states):
        want = tr.pair("0" * i, it.rec0_prime(phi2, b, a, c[:i]))
        if s != want:
            out.expect("pair-invariant", want, s)
            break
    else:
        out.checks += 1

    rec0_exp = it.rec0(phi2, b, a, c)
    out.expect("rec0_from_rec0p", rec0_exp, env["rec0_from_rec0p"](it.rec0_prime)(phi2, b, a, c))
    rec0_iter = env["rec0_from_rec0p"](rec0p)
    out.expect("rec0-from-iter", rec0_exp, rec0_iter(phi2, b, a, c))
    out.expect("rec-from-iter", it.rec(phi2, psi, a, c), env["rec_from_rec0"](rec0_iter)(phi2, psi, a, c))

    out.flag("rec0p-literal-start", rec0p_exp, tr.rec0p_from_iter_literal(it.iter_)(phi2, b, a, c))
    out.flag("rec0-literal-H", rec0_exp, tr.rec0_from_rec0p_literal(it.rec0_prime)(phi2, b, a, c))


def _unwind_parts(x, out: Outcome):
    k, phi, a, c = x["k"], denote(x["phi"]), x["a"], x["c"]
    n = len(c)
    ell = it.unwind_ell(k, n, phi, a)
    lhs, t1 = it.iter_k(k + 1, phi, a, c)
    out.trace(t1, phi)
    prefix, t2 = it.iter_k(k, phi, a, "0" * ell)
    out.trace(t2, phi)
    return k, phi, n, ell, lhs, prefix


def _lemma5(x, env: Env, out: Outcome) -> None:
    k, phi, n, ell, lhs, prefix = _unwind_parts(x, out)
    tail, t3 = it.iter_k(1, phi, prefix, "0" * (n - ell))
    out.trace(t3, phi)
    out.expect("unwind", lhs, tail)


def _cor6(x, env: Env, out: Outcome) -> None:
    k, phi, n, ell, lhs, prefix = _unwind_parts(x, out)
    if ell < n:
        tail, t3 = it.iter_k(0, phi, phi(prefix), "0" * (n - ell - 1))
        out.trace(t3, phi)
        out.expect("unwind-step", lhs, tail)


def _lemma7(x, env: Env, out: Outcome) -> None:
    phi, a, c = denote(x["phi"]), x["a"], x["c"]
    exp, trace = it.iter_k(0, phi, a, c)
    out.trace(trace, phi)
    calls = 0

    def counted(t):
        nonlocal calls
        calls += 1
        return phi(t)

    out.expect("iter0_from_iter", exp, env["iter0_from_iter"](it.iter_)(counted, a, c))
    out.checks += 1
    if calls > len(c):
        out.mismatches.append(("call-budget", f"<= {len(c)} calls", f"{calls} calls"))
    out.flag("iter0-literal-bound", exp, tr.iter0_from_iter_literal(it.iter_)(phi, a, c))


def _lemma8(x, env: Env, out: Outcome) -> None:
    k, phi, a, c = x["k"], denote(x["phi"]), x["a"], x["c"]
    exp, trace = it.iter_k(k, phi, a, c)
    out.trace(trace, phi)
    out.expect("iterk_from_iter", exp, env["iterk_from_iter"](it.iter_, k)(phi, a, c))


def _sec4_jterk(x, env: Env, out: Outcome) -> None:
    k, phi, a, c = x["k"], denote(x["phi"]), x["a"], x["c"]
    exp, trace = it.jter_k(k, phi, a, c)
    out.trace(trace)
    iterk = tr.reference("iterk", k)
    out.expect("jterk_from_iterk", exp, env["jterk_from_iterk"](iterk, k)(phi, a, c))
    # the identity read at c = ε would give phi(a); jter_k gives a
    out.flag("empty-c-edge", a, phi(a))


def _sec4_jter(x, env: Env, out: Outcome) -> None:
    k, phi, b, a, c = x["k"], denote(x["phi"]), x["b"], x["a"], x["c"]
    flagged, trace = it.jter_k(k, tr.flag_step(phi, b, a), b + "0", "0" + c)
    out.trace(trace)
    out.expect("flag-step", lmin(it.jter(phi, b, a, c), b) + "1", flagged)
    out.expect("flag-step-no-revisions", "0", str(trace.revisions))
    jterk = tr.reference("jterk", k)
    out.expect("jter_from_jterk", it.jter(phi, b, a, c), env["jter_from_jterk"](jterk, k)(phi, b, a, c))


def _sec5(x, env: Env, out: Outcome) -> None:
    k, phi, a, c = x["k"], denote(x["phi"]), x["a"], x["c"]
    exp, trace = it.iter_k(k, phi, a, c)
    out.trace(trace, phi)
    out.expect("threaded", exp, it.iter_k_fast(k, phi, a, len(c), "threaded"))
    out.flag("literal-mode", exp, it.iter_k_fast(k, phi, a, len(c), "literal"))


def _theorem(x, env: Env, out: Outcome) -> None:
    k, phi, b, a, c = x["k"], denote(x["phi"]), x["b"], x["a"], x["c"]
    ik, t1 = it.iter_k(k, phi, a, c)
    out.trace(t1, phi)
    jk, t2 = it.jter_k(k, phi, a, c)
    out.trace(t2)
    out.expect("cycle-iter", it.iter_(phi, b, a, c), env.cycle(k, "iter", it.iter_)(phi, b, a, c))
    out.expect("cycle-iterk", ik, env.cycle(k, "iterk", tr.reference("iterk", k))(phi, a, c))
    out.expect("cycle-jterk", jk, env.cycle(k, "jterk", tr.reference("jterk", k))(phi, a, c))
    out.expect("cycle-jter", it.jter(phi, b, a, c), env.cycle(k, "jter", it.jter)(phi, b, a, c))


SPECS = {
    s.lemma_id: s
    for s in [
        Spec("lemma1-rec-rec0", (None,), ("phi2", "psi", "a", "c"), _lemma1),
        Spec("lemma2-iter-jter", (None,), ("phi", "b", "a", "c"), _lemma2),
        Spec("lemma4-rec-iter", (None,), ("phi", "phi2", "psi", "b", "a", "c"), _lemma4),
        Spec("lemma5-unwind", (0, 1, 2), ("phi", "a", "c"), _lemma5),
        Spec("cor6-unwind", (0, 1, 2), ("phi", "a", "c"), _cor6),
        Spec("lemma7-iter0", (None,), ("phi", "a", "c"), _lemma7),
        Spec("lemma8-iterk", (0, 1, 2, 3), ("phi", "a", "c"), _lemma8),
        Spec("sec4-jterk-iterk", (0, 1, 2), ("phi", "a", "c"), _sec4_jterk, nonempty_c=True),
        Spec("sec4-jter-jterk", (0, 1, 2), ("phi", "b", "a", "c"), _sec4_jter),
        Spec("sec5-fast", (0, 1, 2, 3), ("phi", "a", "c"), _sec5),
        Spec("theorem-main", (0, 1, 2, 3), ("phi", "b", "a", "c"), _theorem),
    ]
}

# the baseline probe for the tail-recursive scheme: phi('11') = '1', phi('1') = '11'
SEC5_PROBE = {"k": 0, "phi": ite_longer("1", Dsl("dropl"), Dsl("app1")), "a": "11", "c": "00"}


def get_spec(lemma_id: str) -> Spec:
    try:
        return SPECS[lemma_id]
    except KeyError:
        raise UnknownLemma(lemma_id) from None


def run_trial(lemma_id: str, x: Inputs, env: Env | None = None) -> Outcome:
    """Run one trial; exceptions become an ``exception`` mismatch."""
    spec = get_spec(lemma_id)
    out = Outcome()
    try:
        spec.run(x, env or Env(), out)
    except Exception as exc:  # a crashing composite is a failure, not a harness error
        out.mismatches.append(("exception", "", f"{type(exc).__name__}: {exc}"))
    return out


def replay(lemma_id: str, inputs_json: Mapping, mutant: str | None = None) -> list:
    """Re-run serialized inputs; returns the mismatches."""
    return run_trial(lemma_id, inputs_from_json(inputs_json), _env(mutant)).mismatches


def _env(mutant: str | None) -> Env:
    if mutant is None:
        return Env()
    from .mutants import MUTANTS

    return Env(MUTANTS[mutant].overrides)


# ---------------------------------------------------------------------------
# shrinking


def _word_candidates(w: Word):
    seen = set()
    n = len(w)
    for v in ("", w[: n // 2], w[n // 2:], w[:-1], w[1:]):
        if len(v) < n and v not in seen:
            seen.add(v)
            yield v
    for i in range(n):
        v = w[:i] + w[i + 1:]
        if v not in seen:
            seen.add(v)
            yield v
    z = "0" * n
    if w != z:
        yield z


def _dsl_candidates(e: Dsl):
    for kid in e.kids:
        yield kid
    if e.op != "id":
        yield Dsl("id")
    if e.word:
        for w in _word_candidates(e.word):
            yield Dsl(e.op, w, e.kids)
    for i, kid in enumerate(e.kids):
        for sub in _dsl_candidates(kid):
            kids = list(e.kids)
            kids[i] = sub
            yield Dsl(e.op, e.word, tuple(kids))


def _step2_candidates(e: Step2):
    if e.g is not None:
        yield Step2("on_d", e.f)
        yield Step2("on_t", e.g)
    for f in _dsl_candidates(e.f):
        yield Step2(e.mode, f, e.g)
    if e.g is not None:
        for g in _dsl_candidates(e.g):
            yield Step2(e.mode, e.f, g)


def _candidates(x: Inputs, spec: Spec):
    if x.get("k"):
        lower = [k for k in spec.ks if k is not None and k < x["k"]]
        for k in lower:
            yield {**x, "k": k}
    for key in ("c", "a", "b"):
        if key in x:
            for w in _word_candidates(x[key]):
                if key == "c" and spec.nonempty_c and not w:
                    continue
                yield {**x, key: w}
    for key in ("phi", "psi"):
        if key in x:
            for e in _dsl_candidates(x[key]):
                yield {**x, key: e}
    if "phi2" in x:
        for e in _step2_candidates(x["phi2"]):
            yield {**x, "phi2": e}


def _size(x: Inputs) -> int:
    total = 0
    for key, v in x.items():
        if isinstance(v, str):
            total += len(v)
        elif isinstance(v, (Dsl, Step2)):
            total += 4 * len(str(v))
        elif isinstance(v, int):
            total += v
    return total


def shrink(lemma_id: str, x: Inputs, check: str, env: Env | None = None, max_steps: int = 2000) -> Inputs:
    """Greedy minimization keeping ``check`` among the trial's mismatches."""
    env = env or Env()
    spec = get_spec(lemma_id)

    def fails(y):
        return any(m[0] == check for m in run_trial(lemma_id, y, env).mismatches)

    steps = 0
    improved = True
    while improved and steps < max_steps:
        improved = False
        for y in _candidates(x, spec):
            steps += 1
            if steps >= max_steps:
                break
            if _size(y) < _size(x) and fails(y):
                x = y
                improved = True
                break
    return x


# ---------------------------------------------------------------------------
# reports


@dataclass
class Failure:
    trial: int
    check: str
    inputs: dict
    expected: str
    actual: str
    minimized: dict | None = None
    minimized_expected: str | None = None
    minimized_actual: str | None = None


@dataclass
class CheckReport:
    lemma_id: str
    trials: int
    seed: int
    max_len: int
    ks: list
    bias: float
    checks: int = 0
    traces_checked: int = 0
    failed_trials: int = 0
    failures: list = field(default_factory=list)
    flagged: list = field(default_factory=list)
    flagged_counts: dict = field(default_factory=dict)
    mutant: str | None = None
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = False) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        if not timing:
            del d["wall_time"]
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def render(self) -> str:
        ks = ",".join("-" if k is None else str(k) for k in self.ks)
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"{self.lemma_id}: {status}  trials={self.trials} (k={ks}) seed={self.seed} "
            f"max_len={self.max_len} checks={self.checks} traces={self.traces_checked} "
            f"failed_trials={self.failed_trials} time={self.wall_time:.1f}s"
            + (f" mutant={self.mutant}" if self.mutant else "")
        ]
        for f in self.failures:
            lines.append(f"  FAIL trial {f.trial} [{f.check}] expected {f.expected!r} got {f.actual!r}")
            lines.append(f"       inputs    {json.dumps(f.inputs, sort_keys=True)}")
            if f.minimized is not None:
                lines.append(f"       minimized {json.dumps(f.minimized, sort_keys=True)}")
        for probe, count in sorted(self.flagged_counts.items()):
            lines.append(f"  flagged {probe}: {count}")
        return "\n".join(lines)


def _trial_rng(lemma_id: str, seed: int, k, i: int) -> random.Random:
    return random.Random(f"{lemma_id}:{seed}:{k}:{i}")


def _run_chunk(lemma_id, seed, max_len, bias, mutant, jobs_list):
    """Run ``(k, i)`` trials; returns plain data (picklable)."""
    spec = get_spec(lemma_id)
    env = _env(mutant)
    results = []
    for k, i in jobs_list:
        rng = _trial_rng(lemma_id, seed, k, i)
        biased = rng.random() < bias
        x = generate(spec, rng, max_len, k, biased)
        out = run_trial(lemma_id, x, env)
        results.append((k if k is not None else -1, i, inputs_to_json(x), out))
    return results


def _finish(report: CheckReport, results, env: Env, do_shrink: bool) -> None:
    flag_examples: dict[str, list] = {}
    for k, i, xj, out in sorted(results, key=lambda r: (r[0], r[1])):
        report.checks += out.checks
        report.traces_checked += out.traces
        for probe, exp, act in out.flags:
            report.flagged_counts[probe] = report.flagged_counts.get(probe, 0) + 1
            ex = flag_examples.setdefault(probe, [])
            if len(ex) < MAX_FLAG_EXAMPLES:
                ex.append({"probe": probe, "trial": i, "inputs": xj, "expected": exp, "actual": act})
        if out.mismatches:
            report.failed_trials += 1
            if len(report.failures) < MAX_RECORDED:
                check, exp, act = out.mismatches[0]
                f = Failure(i, check, xj, exp, act)
                if do_shrink:
                    small = shrink(report.lemma_id, inputs_from_json(xj), check, env)
                    mm = [m for m in run_trial(report.lemma_id, small, env).mismatches if m[0] == check]
                    f.minimized = inputs_to_json(small)
                    f.minimized_expected, f.minimized_actual = mm[0][1], mm[0][2]
                report.failures.append(f)
    if report.lemma_id in ("lemma5-unwind", "cor6-unwind"):
        for f in report.failures:
            if f.minimized is not None:
                ex = flag_examples.setdefault("unwind-counterexample", [])
                ex.append({"probe": "unwind-counterexample", "trial": f.trial, "inputs": f.minimized,
                           "expected": f.minimized_expected, "actual": f.minimized_actual})
                report.flagged_counts["unwind-counterexample"] = len(ex)
    if report.lemma_id == "sec5-fast":
        x = SEC5_PROBE
        phi = denote(x["phi"])
        exp = it.iter_k_word(x["k"], phi, x["a"], x["c"])
        act = it.iter_k_fast(x["k"], phi, x["a"], len(x["c"]), "literal")
        entry = {"probe": "baseline-probe", "trial": -1, "inputs": inputs_to_json(x), "expected": exp, "actual": act}
        flag_examples.setdefault("baseline-probe", []).append(entry)
        report.flagged_counts["baseline-probe"] = 1 if exp != act else 0
    report.flagged = [e for probe in sorted(flag_examples) for e in flag_examples[probe]]


def check_lemma(
    lemma_id: str,
    trials: int = 1000,
    seed: int = 0,
    max_len: int = 48,
    *,
    ks=None,
    bias: float = 0.5,
    mutant: str | None = None,
    shrink_failures: bool = True,
    jobs: int = 1,
) -> CheckReport:
    """Run ``trials`` seeded trials per budget ``k`` of one lemma campaign."""
    spec = get_spec(lemma_id)
    ks = tuple(spec.ks if ks is None else ks)
    if trials < 0 or max_len < 0:
        raise ValueError("trials and max_len must be >= 0")
    t0 = time.perf_counter()
    report = CheckReport(lemma_id, trials, seed, max_len, [k for k in ks], bias, mutant=mutant)
    work = [(k, i) for k in ks for i in range(trials)]
    if jobs > 1 and len(work) > 1:
        chunks = [work[j::jobs] for j in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_run_chunk, *zip(*[(lemma_id, seed, max_len, bias, mutant, ch) for ch in chunks]))
            results = [r for part in parts for r in part]
    else:
        results = _run_chunk(lemma_id, seed, max_len, bias, mutant, work)
    _finish(report, results, _env(mutant), shrink_failures)
    report.wall_time = time.perf_counter() - t0
    return report


def falsify_lemma(
    lemma_id: str,
    budget_seconds: float = 10.0,
    seed: int = 0,
    max_len: int = 48,
    *,
    mutant: str | None = None,
    max_trials: int | None = None,
) -> CheckReport:
    """Boundary-biased search until the first failure or the time budget runs out."""
    spec = get_spec(lemma_id)
    env = _env(mutant)
    t0 = time.perf_counter()
    results = []
    i = 0
    while time.perf_counter() - t0 < budget_seconds and (max_trials is None or i < max_trials * len(spec.ks)):
        k = spec.ks[i % len(spec.ks)]
        res = _run_chunk(lemma_id, seed, max_len, 1.0, mutant, [(k, i)])
        results += res
        i += 1
        if res[0][3].mismatches:
            break
    report = CheckReport(lemma_id, i, seed, max_len, list(spec.ks), 1.0, mutant=mutant)
    _finish(report, results, env, True)
    report.wall_time = time.perf_counter() - t0
    return report
