"""Fixed-point reals on top of big integers.

A value good to ``d`` decimal digits is carried as an integer mantissa
scaled by ``2**fbits`` where ``fbits = ceil(d*log2(10)) + 64``; the 64 guard
bits absorb the floor-rounding of every intermediate operation, so the final
decimal contract only depends on ``d``.  All helpers here assume nonnegative
operands (``//`` floors toward minus infinity, which is only truncation for
nonnegative values); signs are applied by the callers in exact arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .backend import mpz, to_int

GUARD_BITS = 64

# 108854 / 2**15 = 3.32196... >= log2(10); the slight overshoot just adds a
# few harmless bits for very large d.
_LOG2_10_NUM = 108854
_LOG2_10_SHIFT = 15


def bits_for_digits(d: int) -> int:
    """Binary precision carrying d decimal digits plus the guard."""
    if d < 1:
        raise ValueError("need at least one digit")
    return ((d * _LOG2_10_NUM) >> _LOG2_10_SHIFT) + 1 + GUARD_BITS


@dataclass(frozen=True)
class ApproxReal:
    """A nonnegative real as mantissa / 2**frac_bits, good to precision_digits."""

    mantissa: int
    frac_bits: int
    precision_digits: int

    def as_fraction(self) -> Fraction:
        return Fraction(to_int(self.mantissa), 1 << self.frac_bits)

    def to_decimal(self, places: int) -> str:
        """Exact decimal rendering, truncated after `places` fractional digits."""
        ip = self.mantissa >> self.frac_bits
        frac = self.mantissa - (ip << self.frac_bits)
        tail = (frac * mpz(10) ** places) >> self.frac_bits
        return f"{ip}.{str(tail).zfill(places)}"

    def __float__(self) -> float:
        ip = self.mantissa >> self.frac_bits
        if ip.bit_length() > 500:
            raise OverflowError("value too large for float")
        return to_int(self.mantissa >> (self.frac_bits - 64)) / 2.0**64


def fixed_from_int(i, fbits: int):
    return mpz(i) << fbits


def fixed_mul(a, b, fbits: int):
    return (a * b) >> fbits


def fixed_div(a, b, fbits: int):
    return (a << fbits) // b


def fixed_pow(base, exp: int, fbits: int):
    """base**exp by square-and-multiply, truncating after each multiply.

    Relative error stays under ~2*log2(exp) units in 2**-fbits for base >= 1.
    """
    if exp < 0:
        raise ValueError("negative exponent")
    result = mpz(1) << fbits
    b = mpz(base)
    while exp:
        if exp & 1:
            result = (result * b) >> fbits
        exp >>= 1
        if exp:
            b = (b * b) >> fbits
    return result


def pow_floor_scaled(base: int, exp: int, keep: int):
    """base**exp as (m, e) with m*2**e <= base**exp <= m*2**e * (1 + 2**(8-keep)).

    The mantissa is truncated to `keep` bits after each step, which makes the
    cost proportional to the precision actually wanted rather than the full
    size of base**exp.  Exact (e == 0 possible) whenever the power fits.
    """
    m = mpz(1)
    e = 0
    b = mpz(base)
    be = 0
    while exp:
        if exp & 1:
            m *= b
            e += be
            excess = m.bit_length() - keep
            if excess > 0:
                m >>= excess
                e += excess
        exp >>= 1
        if exp:
            b *= b
            be += be
            excess = b.bit_length() - keep
            if excess > 0:
                b >>= excess
                be += excess
    return m, e
