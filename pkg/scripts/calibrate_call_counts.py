"""Measure phi-call counts of the budget-k composites built from iter.

The maxima printed here are what tests/test_translations.py pins as
regression ceilings (rounded up).  Run:

    python scripts/calibrate_call_counts.py [--trials 200] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import random

from iterwb import translations as tr
from iterwb.harness.dsl import denote, gen_boundary_step_fn, gen_dsl
from iterwb.iterators import iter_


def counted(phi):
    calls = [0]

    def f(t):
        calls[0] += 1
        return phi(t)

    return f, calls


def measure(k: int, n: int, trials: int, seed: int, share: bool = True) -> int:
    build = tr.iterk_from_iter(iter_, k, share=share)
    worst = 0
    for i in range(trials):
        rng = random.Random(f"calib:{seed}:{k}:{n}:{i}")
        a = "".join(rng.choice("01") for _ in range(rng.randint(0, 8)))
        e = gen_boundary_step_fn(rng, len(a)) if i % 2 else gen_dsl(rng, 4)
        f, calls = counted(denote(e))
        build(f, a, "0" * n)
        worst = max(worst, calls[0])
    return worst


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json")
    args = ap.parse_args(argv)
    rows = []
    for k in range(4):
        for n in (4, 8, 16, 32):
            worst = measure(k, n, args.trials, args.seed)
            rows.append({"k": k, "n": n, "max_calls": worst})
            print(f"k={k} n={n:>2}  max phi calls {worst}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
