"""Text rendering of iteration traces."""

from __future__ import annotations

from ..iterators import LENGTH, IterTrace


def trace_report(trace: IterTrace) -> str:
    """Table of calls (index, |query|, |answer|, revision, running baseline) plus the JSON form.

    The baseline is the one the call is judged against: the longest of the
    start word and earlier answers for length revisions, the longest earlier
    query for lookahead revisions (``-`` before the first call).
    """
    budget = "-" if trace.budget is None else str(trace.budget)
    lines = [
        f"kind={trace.kind} budget={budget} n={trace.n} ell={trace.ell} revisions={trace.revisions}",
        f"{'call':>4}  {'|query|':>7}  {'|answer|':>8}  {'rev':>3}  {'baseline':>8}",
    ]
    if trace.kind == LENGTH:
        base = len(trace.start) if trace.start is not None else None
    else:
        base = None
    for c in trace.calls:
        shown = "-" if base is None else str(base)
        lines.append(f"{c.i:>4}  {len(c.query):>7}  {len(c.answer):>8}  {'*' if c.revision else '':>3}  {shown:>8}")
        if trace.kind == LENGTH:
            base = len(c.answer) if base is None else max(base, len(c.answer))
        else:
            base = len(c.query) if base is None else max(base, len(c.query))
    lines.append(trace.to_json())
    return "\n".join(lines)
