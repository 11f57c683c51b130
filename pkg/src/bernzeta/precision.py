"""Working-precision planning.

For even n, the integer part of B(n) is recovered from a floating
approximation of 2*zeta(n)*n!/(2pi)^n.  The number of decimal digits d is
sized from the magnitude of that quantity (Stirling at machine precision,
plus a fixed base guard of 4 digits and the digit count of n), and the two
prime cutoffs split the Euler product into an exact full-precision phase and
a first-order correction phase.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .backend import iroot, mpz
from .primes import prev_prime

MIN_DIGITS = 9


def _require_even_index(n: int) -> None:
    if n < 2 or n % 2 != 0:
        raise ValueError(f"expected an even index >= 2, got {n}")


@dataclass(frozen=True)
class PrecisionPlan:
    """Digits and prime cutoffs for one evaluation of B(n).

    phase1_bound = floor(10**(d/(2n))) + 1: primes up to it enter the exact
    integer product, which guarantees the neglected second-order terms of the
    correction phase sit below one unit in the last place.  phase2_bound is
    the largest prime p with p**n <= 10**d, i.e. the last prime whose
    first-order correction is still representable.
    """

    n: int
    decimal_digits: int
    guard_digits: int
    phase1_bound: int
    phase2_bound: int


def estimate_digits(n: int, guard_digits: int = 0) -> int:
    """Decimal digits needed so the integer part of B(n) is determined.

    4 + floor((lnGamma(n+1) - n*ln(2pi)) / ln 10) + (decimal length of n),
    plus any extra guard digits requested by a retry.
    """
    _require_even_index(n)
    magnitude = (math.lgamma(n + 1) - n * math.log(2 * math.pi)) / math.log(10)
    return 4 + math.floor(magnitude) + len(str(n)) + guard_digits


def make_plan(n: int, guard_digits: int = 0, *, decimal_digits: int | None = None) -> PrecisionPlan:
    """Precision plan for B(n); never plans below MIN_DIGITS digits.

    `decimal_digits` overrides the estimate (used by tests and by direct
    zeta evaluation at a chosen precision).
    """
    _require_even_index(n)
    if decimal_digits is None:
        d = max(estimate_digits(n, guard_digits), MIN_DIGITS)
    else:
        d = max(decimal_digits, MIN_DIGITS)
    ten_d = mpz(10) ** d
    phase1 = int(iroot(ten_d, 2 * n)) + 1
    cutoff = int(iroot(ten_d, n))
    # cutoff < 2 means even 2**n overflows 10**d (custom low-digit plans);
    # the correction phase is then empty and the bound degenerates to 2.
    phase2 = prev_prime(cutoff) if cutoff >= 2 else 2
    return PrecisionPlan(
        n=n,
        decimal_digits=d,
        guard_digits=guard_digits,
        phase1_bound=phase1,
        phase2_bound=phase2,
    )
