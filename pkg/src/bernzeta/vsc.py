"""Exact denominator and fractional part of B(n) via von Staudt-Clausen.

For even n, B(n) + sum(1/p) over primes p with (p-1) | n is an integer, so
the denominator of B(n) is exactly the (squarefree) product of those primes
and the fractional part comes out of the harmonic sum with no floating
arithmetic at all.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Tuple

from .precision import _require_even_index
from .primes import divisors, is_prime


@dataclass(frozen=True)
class VscData:
    n: int
    primes: Tuple[int, ...]
    denominator: int
    harmonic_sum: Fraction     # sum of 1/p over the prime set
    fraction: Fraction         # f in (0,1) with B(n) - f an integer


def vsc_primes(n: int) -> Tuple[int, ...]:
    """Primes p with (p-1) | n, increasing; always starts 2, 3 for even n."""
    _require_even_index(n)
    return tuple(d + 1 for d in divisors(n) if is_prime(d + 1))


def vsc_data(n: int) -> VscData:
    primes = vsc_primes(n)
    denom = 1
    for p in primes:
        denom *= p
    # exact harmonic sum over the common denominator; its reduced denominator
    # is denom itself because denom/p is invertible mod p for each member
    num = sum(denom // p for p in primes)
    harmonic = Fraction(num, denom)
    frac_part = harmonic - floor(harmonic)
    f = 1 - frac_part
    return VscData(n=n, primes=primes, denominator=denom, harmonic_sum=harmonic, fraction=f)


def vsc_fraction(n: int) -> Tuple[Fraction, int]:
    """(f, D): the exact fractional part of B(n) and its denominator."""
    data = vsc_data(n)
    return data.fraction, data.denominator
