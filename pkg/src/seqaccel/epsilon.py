"""Wynn's epsilon algorithm, used as the comparison baseline.

Internal columns carry all subscripts of the recursion

    eps_{-1}^(n) = 0,  eps_0^(n) = S_n,
    eps_{j+1}^(n) = eps_{j-1}^(n+1) + 1 / (eps_j^(n+1) - eps_j^(n));

only the even-subscript columns are exported, as entry (k, n) =
eps_{2k}^(n).  The breakdown guard matches the lattice engine.
"""

from __future__ import annotations

from .errors import WindowError
from .modes import negligible_difference
from .tables import Status, TransformEntry, TransformTable


def epsilon_transform(seq, max_order, breakdown_threshold=None):
    if max_order < 0:
        raise WindowError("max_order must be nonnegative")
    mode = seq.mode
    if breakdown_threshold is None:
        breakdown_threshold = mode.default_breakdown_threshold
    with mode.context():
        zero = mode.convert(0)
        cols = {
            -1: {n: TransformEntry.valid(zero) for n in range(seq.start_label, seq.end_label + 2)},
            0: {n: TransformEntry.valid(seq.at(n)) for n in seq.labels()},
        }
        for j in range(0, 2 * max_order):
            prev = cols[j - 1]
            cur = cols[j]
            row = {}
            for n in sorted(cur):
                if n + 1 not in cur or n + 1 not in prev:
                    continue
                inputs = (prev[n + 1], cur[n], cur[n + 1])
                if any(e.status is Status.BREAKDOWN for e in inputs):
                    row[n] = TransformEntry.breakdown()
                    continue
                carry, a, b = (e.value for e in inputs)
                diff = b - a
                if negligible_difference(diff, a, b, mode, breakdown_threshold):
                    row[n] = TransformEntry.breakdown()
                    continue
                row[n] = TransformEntry.valid(carry + 1 / diff)
            cols[j + 1] = row
    out = TransformTable(
        max_order=max_order,
        start_label=seq.start_label,
        end_label=seq.end_label,
        window_step=2,
    )
    for k in range(max_order + 1):
        for n, entry in cols[2 * k].items():
            out.set(k, n, entry)
    return out
