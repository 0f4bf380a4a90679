"""The lattice convergence acceleration algorithm.

The engine fills a two-index field U_k^n level by level from

    U_1^n = 0,  U_2^n = n,  U_3^n = S_n,
    U_{k+3}^n = U_k^{n+1} - 1 / ((U_{k+2}^{n+1} - U_{k+2}^n)
                                 (U_{k+1}^{n+1} - U_{k+1}^n)),

and reads off the transform column k as level 3k+3, so that
T_0^(n) = S_n.  Division by a zero (exact mode) or negligibly small
(float modes) difference factor marks the cell BREAKDOWN, and the
mark poisons every cell that depends on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import WindowError
from .modes import negligible_difference
from .sequences import Sequence
from .tables import Status, TransformEntry, TransformTable


@dataclass
class LatticeTable:
    """Levels of U_k^n keyed by level index k = 1, 2, 3, ...

    Each level is a dict label -> TransformEntry.  Levels 1 and 2 are
    closed-form (0 and n + label_offset) but stored explicitly over the
    label range so the recursion below is uniform.  ``label_offset``
    shifts the second level only; the transform outputs are invariant
    under it.
    """

    source: Sequence
    breakdown_threshold: object
    label_offset: int = 0
    levels: dict = field(default_factory=dict)

    @property
    def top_level(self):
        return max(self.levels)

    def entry(self, k, n):
        row = self.levels.get(k)
        if row is None or n not in row:
            return TransformEntry.unavailable()
        return row[n]


def init_lattice(seq, breakdown_threshold=None, label_offset=0):
    """Populate levels 1..3 over the label range of ``seq``."""
    mode = seq.mode
    if breakdown_threshold is None:
        breakdown_threshold = mode.default_breakdown_threshold
    table = LatticeTable(seq, breakdown_threshold, label_offset)
    zero = mode.convert(0)
    table.levels[1] = {n: TransformEntry.valid(zero) for n in seq.labels()}
    table.levels[2] = {
        n: TransformEntry.valid(mode.convert(n + label_offset)) for n in seq.labels()
    }
    table.levels[3] = {n: TransformEntry.valid(seq.at(n)) for n in seq.labels()}
    return table


def extend_level(table):
    """Append the next level in place and return the table."""
    new = table.top_level + 1
    below = table.levels[new - 3]
    mid = table.levels[new - 2]
    top = table.levels[new - 1]
    if len(top) < 2 and len(top) > 0:
        # one entry left on the top level: nothing above is computable
        table.levels[new] = {}
        return table
    mode = table.source.mode
    row = {}
    for n in sorted(top):
        if n + 1 not in top:
            continue
        inputs = (below[n + 1], mid[n], mid[n + 1], top[n], top[n + 1])
        if any(e.status is Status.BREAKDOWN for e in inputs):
            row[n] = TransformEntry.breakdown()
            continue
        carry, m0, m1, t0, t1 = (e.value for e in inputs)
        d_top = t1 - t0
        d_mid = m1 - m0
        if negligible_difference(
            d_top, t0, t1, mode, table.breakdown_threshold
        ) or negligible_difference(d_mid, m0, m1, mode, table.breakdown_threshold):
            row[n] = TransformEntry.breakdown()
            continue
        row[n] = TransformEntry.valid(carry - 1 / (d_top * d_mid))
    table.levels[new] = row
    return table


def build_lattice(seq, max_order, breakdown_threshold=None, label_offset=0):
    """Full lattice up to level 3*max_order + 3."""
    if max_order < 0:
        raise WindowError("max_order must be nonnegative")
    with seq.mode.context():
        table = init_lattice(seq, breakdown_threshold, label_offset)
        while table.top_level < 3 * max_order + 3:
            extend_level(table)
    return table


def lbq_transform(seq, max_order, breakdown_threshold=None):
    """TransformTable of T_k^(n) = U_{3k+3}^n for k = 0..max_order."""
    lattice = build_lattice(seq, max_order, breakdown_threshold)
    out = TransformTable(
        max_order=max_order,
        start_label=seq.start_label,
        end_label=seq.end_label,
        window_step=3,
    )
    for k in range(max_order + 1):
        for n, entry in lattice.levels[3 * k + 3].items():
            out.set(k, n, entry)
    return out
