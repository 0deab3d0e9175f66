"""Compare the threaded and literal accumulator schemes against iter_k.

Prints the fixed baseline probe and the divergence rate of the literal
reading over random step functions.

    python scripts/sec5_probe.py [--trials 1000] [--seed 0]
"""

from __future__ import annotations

import argparse
import random

from iterwb import iterators as it
from iterwb.harness.campaigns import SEC5_PROBE
from iterwb.harness.dsl import denote, gen_dsl, gen_word, to_sexpr


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-len", type=int, default=16)
    args = ap.parse_args(argv)

    x = SEC5_PROBE
    phi = denote(x["phi"])
    ref = it.iter_k_word(x["k"], phi, x["a"], x["c"])
    print(f"probe k={x['k']} phi={to_sexpr(x['phi'])} a={x['a']!r} c={x['c']!r}")
    for mode in ("threaded", "literal"):
        print(f"  {mode:8} {it.iter_k_fast(x['k'], phi, x['a'], len(x['c']), mode)!r}  (iter_k {ref!r})")

    rng = random.Random(args.seed)
    diverge = {"threaded": 0, "literal": 0}
    for _ in range(args.trials):
        k = rng.randint(0, 3)
        phi = denote(gen_dsl(rng, 4))
        a, n = gen_word(rng.random(), args.max_len), rng.randint(0, args.max_len)
        ref = it.iter_k_word(k, phi, a, "0" * n)
        for mode in diverge:
            diverge[mode] += it.iter_k_fast(k, phi, a, n, mode) != ref
    for mode, count in diverge.items():
        print(f"{mode:8} diverges from iter_k on {count}/{args.trials} trials")


if __name__ == "__main__":
    main()
