"""High-precision 2*pi, computed once and cached as decimal digits.

pi comes from the Chudnovsky series with integer binary splitting (about
14.18 digits per term).  The canonical artifact is the truncated decimal
digit string of 2*pi: the returned value is always rebuilt from that string,
so a cache hit and a fresh computation are indistinguishable, and a longer
string always extends a shorter one verbatim.

Cache file layout: one header line ``digits <count>`` followed by one line of
digits (``6283185307...``).  The path comes from the explicit argument, else
``BERNZETA_PI_CACHE``, else ``~/.cache/bernzeta/two_pi.txt``.
"""
from __future__ import annotations

import os
import tempfile
from typing import Optional, Tuple

from .backend import isqrt, mpz
from .fixedpoint import ApproxReal, bits_for_digits

_C3_OVER_24 = mpz(640320) ** 3 // 24
_DIGITS_PER_TERM = 14.181647462


def _bsplit(a: int, b: int) -> Tuple:
    """P, Q, T of the Chudnovsky series over terms [a, b)."""
    if b - a == 1:
        if a == 0:
            pab = qab = mpz(1)
        else:
            pab = mpz((6 * a - 5) * (2 * a - 1) * (6 * a - 1))
            qab = mpz(a) ** 3 * _C3_OVER_24
        tab = pab * (13591409 + 545140134 * a)
        return pab, qab, -tab if a & 1 else tab
    m = (a + b) // 2
    p1, q1, t1 = _bsplit(a, m)
    p2, q2, t2 = _bsplit(m, b)
    return p1 * p2, q1 * q2, q2 * t1 + p1 * t2


def pi_fixed(fbits: int):
    """Mantissa of pi scaled by 2**fbits (a few ulp low at worst)."""
    terms = max(2, int(fbits / (3.321928 * _DIGITS_PER_TERM)) + 2)
    _, q, t = _bsplit(0, terms)
    sqrt_c = isqrt(mpz(10005) << (2 * fbits))
    return (426880 * sqrt_c * q) // t


def two_pi_digits(count: int) -> str:
    """The first `count` digits of 2*pi ("6283185307..."), truncated, exact."""
    if count < 1:
        raise ValueError("need at least one digit")
    extra = 16
    while True:
        fbits = bits_for_digits(count + extra)
        scaled = (2 * pi_fixed(fbits) * mpz(10) ** (count + extra - 1)) >> fbits
        window = scaled % mpz(10) ** extra
        # mantissa error is a handful of units at the (count+extra)-th digit;
        # only a run of 0s or 9s across the split could corrupt the prefix
        if 8 < window < mpz(10) ** extra - 8:
            return str(scaled // mpz(10) ** extra)
        extra *= 2


def _default_cache_path() -> str:
    env = os.environ.get("BERNZETA_PI_CACHE")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "bernzeta", "two_pi.txt")


_KNOWN_PREFIX = "62831853071795864769252867665590"


def _read_cache(path: str) -> Optional[str]:
    try:
        with open(path, "r") as fh:
            header = fh.readline().split()
            digits = fh.readline().strip()
        if len(header) != 2 or header[0] != "digits":
            return None
        count = int(header[1])
        if count != len(digits) or not digits.isdigit():
            return None
        if not digits.startswith(_KNOWN_PREFIX[: min(len(digits), len(_KNOWN_PREFIX))]):
            return None
        return digits
    except (OSError, ValueError):
        return None


def _write_cache(path: str, digits: str) -> None:
    directory = os.path.dirname(path) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".two_pi_")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(f"digits {len(digits)}\n{digits}\n")
        os.replace(tmp, path)
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass


def two_pi(digits: int, cache_path: Optional[str] = None) -> ApproxReal:
    """2*pi correct to `digits` decimal digits, served from the digit cache.

    Requests beyond the cached length recompute with 25% headroom so a long
    ramp of growing requests rewrites the file only O(log) times.  A corrupt
    or prefix-inconsistent cache is silently recomputed.
    """
    if digits < 9:
        raise ValueError("two_pi requires digits >= 9")
    path = cache_path or _default_cache_path()
    cached = _read_cache(path)
    if cached is None or len(cached) < digits:
        target = max(digits + digits // 4 + 16, len(cached or ""))
        fresh = two_pi_digits(target)
        if cached is None or fresh.startswith(cached):
            _write_cache(path, fresh)
        else:
            # cache claimed digits that a clean recomputation contradicts
            fresh = two_pi_digits(target)
            _write_cache(path, fresh)
        cached = fresh
    prefix = cached[:digits]
    fbits = bits_for_digits(digits)
    man = (mpz(prefix) << fbits) // mpz(10) ** (digits - 1)
    return ApproxReal(mantissa=man, frac_bits=fbits, precision_digits=digits)
