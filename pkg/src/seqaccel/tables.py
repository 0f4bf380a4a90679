"""Triangular transform tables with per-entry validity status."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Status(enum.Enum):
    VALID = "valid"
    BREAKDOWN = "breakdown"
    UNAVAILABLE = "unavailable"


@dataclass(frozen=True)
class TransformEntry:
    value: object = None
    status: Status = Status.VALID

    @classmethod
    def valid(cls, value):
        return cls(value, Status.VALID)

    @classmethod
    def breakdown(cls):
        return cls(None, Status.BREAKDOWN)

    @classmethod
    def unavailable(cls):
        return cls(None, Status.UNAVAILABLE)

    @property
    def ok(self):
        return self.status is Status.VALID


UNAVAILABLE_ENTRY = TransformEntry.unavailable()


@dataclass
class TransformTable:
    """Doubly indexed transform outputs T_k^(n), 0 <= k <= max_order.

    ``window_step`` is the number of extra input elements each unit of
    order consumes (3 for the lattice transformation, 2 for the
    epsilon algorithm).
    """

    max_order: int
    start_label: int
    end_label: int
    window_step: int
    entries: dict = field(default_factory=dict)

    def set(self, k, n, entry):
        self.entries[(k, n)] = entry

    def get(self, k, n):
        """Entry at (k, n); out-of-range indices yield UNAVAILABLE."""
        return self.entries.get((k, n), UNAVAILABLE_ENTRY)

    def rows(self):
        return range(self.start_label, self.end_label + 1)

    def max_row_for(self, k):
        return self.end_label - self.window_step * k

    def column(self, k):
        """Valid (n, value) pairs of column k, in label order."""
        out = []
        for n in self.rows():
            e = self.get(k, n)
            if e.ok:
                out.append((n, e.value))
        return out
