"""Command-line entry point: ``iterwb {eval,type,run,translate,check,falsify}``."""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from pathlib import Path

from . import iterators as it
from . import translations as tr
from .harness import campaigns
from .harness.mutants import MUTANTS
from .harness.dsl import Dsl, DslSyntaxError, Step2, denote, denote2, parse_dsl
from .harness.report import trace_report
from .lam import ParseError, TypeCheckError, evaluate, infer_type, parse, print_term, print_type
from .lam.values import EvalError, Func
from .words import ResourceExceeded, is_word, resource_cap

# lemma ids accepted by ``translate`` besides translation names; multi-step
# lemmas emit their composed chain
LEMMA_TERMS = {
    "lemma1-rec-rec0": ("rec_from_rec0",),
    "lemma2-iter-jter": ("iter_from_jter",),
    "lemma4-rec-iter": ("rec0_from_rec0p", "rec0p_from_iter"),
    "lemma7-iter0": ("iter0_from_iter",),
    "lemma8-iterk": ("iterk_from_iter",),
    "sec4-jterk-iterk": ("jterk_from_iterk",),
    "sec4-jter-jterk": ("jter_from_jterk",),
}


class CliError(Exception):
    pass


def _word(text: str | None, flag: str) -> str:
    if text is None:
        raise CliError(f"{flag} is required")
    w = text[1:-1] if len(text) >= 2 and text[0] == text[-1] == "'" else text
    if not is_word(w):
        raise CliError(f"{flag}: not a binary word: {text!r}")
    return w


def _dsl(text: str | None, flag: str):
    if text is None:
        raise CliError(f"{flag} is required")
    try:
        return parse_dsl(text)
    except DslSyntaxError as exc:
        raise CliError(f"{flag}: {exc}") from None


def _fn1(text, flag):
    e = _dsl(text, flag)
    if not isinstance(e, Dsl):
        raise CliError(f"{flag}: expected a one-argument function")
    return denote(e)


def _fn2(text, flag):
    e = _dsl(text, flag)
    return denote2(e if isinstance(e, Step2) else Step2("on_t", e))


def _show(v) -> str:
    if isinstance(v, Func):
        return f"<function{' : ' + print_type(v.type) if v.type else ''}>"
    return f"'{v}'"


def _load_bindings(specs):
    ctx, env = {}, {}
    for spec in specs or []:
        name, sep, path = spec.partition("=")
        if not sep or not name:
            raise CliError(f"--bind expects NAME=TERMFILE, got {spec!r}")
        term = parse(Path(path).read_text(), ctx)
        ctx[name] = infer_type(term, ctx)
        env[name] = evaluate(term, env)
    return ctx, env


def cmd_eval(args) -> int:
    with resource_cap(args.cap) if args.cap is not None else contextlib.nullcontext():
        ctx, env = _load_bindings(args.bind)
        term = parse(Path(args.file).read_text(), ctx)
        infer_type(term, ctx)
        print(_show(evaluate(term, env)))
    return 0


def cmd_type(args) -> int:
    print(print_type(infer_type(parse(Path(args.file).read_text()))))
    return 0


def cmd_run(args) -> int:
    p = args.primitive
    a, c = _word(args.a, "--a"), _word(args.c, "--c")
    trace = None
    if p in ("iterk", "jterk"):
        if args.k is None:
            raise CliError(f"--k is required for {p}")
        fn = it.iter_k if p == "iterk" else it.jter_k
        result, trace = fn(args.k, _fn1(args.phi, "--phi"), a, c)
    elif p in ("iter", "jter"):
        fn = it.iter_ if p == "iter" else it.jter
        result, trace = fn(_fn1(args.phi, "--phi"), _word(args.b, "--b"), a, c, trace=True)
    elif p == "rec":
        result = it.rec(_fn2(args.phi, "--phi"), _fn1(args.psi, "--psi"), a, c)
    else:
        result = it.rec0(_fn2(args.phi, "--phi"), _word(args.b, "--b"), a, c)
    print(f"'{result}'")
    if args.trace:
        if trace is None:
            raise CliError(f"--trace is not available for {p}")
        Path(args.trace).write_text(trace.to_json() + "\n")
    if args.table and trace is not None:
        print(trace_report(trace))
    return 0


def cmd_translate(args) -> int:
    if args.list:
        for name, t in tr.TRANSLATIONS.items():
            print(f"{name:18} {t.lemma_id:18} {t.primitive:>5} -> {t.target:6} {t.description}")
        return 0
    if args.lemma is None:
        raise CliError("--lemma is required")
    names = LEMMA_TERMS.get(args.lemma) or ((args.lemma,) if args.lemma in tr.TRANSLATIONS else None)
    if names is None:
        raise CliError(f"unknown translation or lemma id {args.lemma!r}")
    first, last = tr.TRANSLATIONS[names[0]], tr.TRANSLATIONS[names[-1]]
    k = args.k
    if any(tr.TRANSLATIONS[n].needs_k for n in names) and k is None:
        raise CliError(f"{args.lemma} needs --k")
    term = tr.reflect_chain(*names, k=k)
    ty = infer_type(term)
    header = f"-- {' . '.join(names)} : {print_type(ty)}  (primitive: {last.primitive_const(k)}, target: {first.target})"
    text = header + "\n" + print_term(term) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _emit(reports, path, timing):
    if path:
        data = [r.to_dict(timing) for r in reports]
        Path(path).write_text(json.dumps(data[0] if len(data) == 1 else data, indent=2, sort_keys=True) + "\n")


def cmd_check(args) -> int:
    ids = campaigns.LEMMA_IDS if args.lemma == "all" else (args.lemma,)
    reports = []
    for lid in ids:
        r = campaigns.check_lemma(lid, args.trials, args.seed, args.max_len, mutant=args.mutant, jobs=args.jobs)
        print(r.render(), flush=True)
        reports.append(r)
    _emit(reports, args.json, args.timing)
    return 0 if all(r.passed for r in reports) else 1


def cmd_falsify(args) -> int:
    r = campaigns.falsify_lemma(args.lemma, args.budget, args.seed, args.max_len, mutant=args.mutant)
    print(r.render())
    _emit([r], args.json, args.timing)
    return 0 if r.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="iterwb", description="Bounded iteration on words: interpreter and campaigns.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="parse, type-check and evaluate a term file")
    p.add_argument("file")
    p.add_argument("--bind", action="append", metavar="NAME=TERMFILE", help="bind a free variable to a closed term")
    p.add_argument("--cap", type=int, metavar="BITS", help="maximum word length in symbols")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("type", help="print the inferred type of a term file")
    p.add_argument("file")
    p.set_defaults(func=cmd_type)

    p = sub.add_parser("run", help="run a reference primitive on DSL step functions")
    p.add_argument("--primitive", required=True, choices=["iter", "jter", "rec", "rec0", "iterk", "jterk"])
    p.add_argument("--k", type=int)
    p.add_argument("--phi", required=True, metavar="DSL")
    p.add_argument("--psi", metavar="DSL")
    p.add_argument("--a", required=True, metavar="WORD")
    p.add_argument("--b", metavar="WORD")
    p.add_argument("--c", required=True, metavar="WORD")
    p.add_argument("--trace", metavar="OUT.json", help="write the call trace as JSON")
    p.add_argument("--table", action="store_true", help="print the trace table")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("translate", help="emit the reflected λ-term of a translation")
    p.add_argument("--lemma", metavar="ID", help="lemma id or translation name")
    p.add_argument("--k", type=int)
    p.add_argument("-o", "--output", metavar="TERM.lam")
    p.add_argument("--list", action="store_true", help="list translations")
    p.set_defaults(func=cmd_translate)

    for name, fn in (("check", cmd_check), ("falsify", cmd_falsify)):
        p = sub.add_parser(name, help=f"{name} a lemma campaign")
        p.add_argument("--lemma", required=True, choices=list(campaigns.LEMMA_IDS) + (["all"] if name == "check" else []))
        if name == "check":
            p.add_argument("--trials", type=int, default=1000)
            p.add_argument("--jobs", type=int, default=1)
        else:
            p.add_argument("--budget", type=float, default=10.0, metavar="SECONDS")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-len", type=int, default=48)
        p.add_argument("--mutant", choices=sorted(MUTANTS), help="run against a planted-bug mutant (self-test)")
        p.add_argument("--json", metavar="OUT.json")
        p.add_argument("--timing", action="store_true", help="include wall time in the JSON report")
        p.set_defaults(func=fn)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, TypeCheckError, EvalError, ResourceExceeded, CliError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
