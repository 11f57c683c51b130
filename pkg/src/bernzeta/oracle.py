"""Independent ground truth: B(n) by the classical recurrence.

sum_{j=0}^{m} C(m+1, j) * B_j = 0 solved for B_m with exact rationals.
Quadratic and slow on purpose; it shares no code with the production path
so that agreement between the two actually means something.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

ORACLE_MAX_INDEX = 2000


class OracleLimitError(ValueError):
    """Raised for indices past the oracle ceiling (an oracle limit, not an
    engine limit; the engine itself goes far beyond)."""


@dataclass
class BernoulliTable:
    """Memoized recurrence table B_0 .. B_max_index."""

    values: List[Fraction] = field(default_factory=lambda: [Fraction(1)])

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def extend_to(self, m: int) -> None:
        while self.max_index < m:
            k = self.max_index + 1
            s = Fraction(0)
            binom = 1                      # C(k+1, 0), updated along the row
            for j in range(k):
                s += binom * self.values[j]
                binom = binom * (k + 1 - j) // (j + 1)
            self.values.append(-s / (k + 1))

    def value(self, n: int) -> Fraction:
        self.extend_to(n)
        return self.values[n]

    def self_check(self) -> bool:
        """Recurrence identity re-verified over every completed row."""
        for m in range(1, self.max_index + 1):
            s = Fraction(0)
            binom = 1
            for j in range(m + 1):
                s += binom * self.values[j]
                binom = binom * (m + 1 - j) // (j + 1)
            if s != 0:
                return False
        return True


_table = BernoulliTable()


def bernoulli_recurrence(n: int) -> Fraction:
    """Exact B(n) for n <= ORACLE_MAX_INDEX, from the shared memoized table."""
    if n < 0:
        raise ValueError("argument must be >= 0")
    if n > ORACLE_MAX_INDEX:
        raise OracleLimitError(
            f"recurrence oracle is capped at n={ORACLE_MAX_INDEX} "
            f"(use the engine for larger indices)"
        )
    return _table.value(n)
