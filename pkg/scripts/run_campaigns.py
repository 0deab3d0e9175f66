"""Run every lemma campaign and write one JSON report per campaign.

    python scripts/run_campaigns.py --trials 1000 --out reports/ [--jobs 4]
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from iterwb.harness.campaigns import LEMMA_IDS, check_lemma


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-len", type=int, default=48)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="reports")
    ap.add_argument("--lemma", action="append", choices=LEMMA_IDS, help="restrict to these ids (repeatable)")
    args = ap.parse_args(argv)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    summary = {}
    for lid in args.lemma or LEMMA_IDS:
        r = check_lemma(lid, args.trials, args.seed, args.max_len, jobs=args.jobs)
        print(r.render(), flush=True)
        (out / f"{lid}.json").write_text(r.to_json() + "\n")
        summary[lid] = {"passed": r.passed, "failed_trials": r.failed_trials, "flagged": r.flagged_counts}
    (out / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return 0 if all(s["passed"] for s in summary.values()) else 1


if __name__ == "__main__":
    raise SystemExit(main())
