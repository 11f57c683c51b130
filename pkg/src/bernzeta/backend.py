"""Integer kernel selection.

Everything expensive in this package is arbitrary-precision integer
arithmetic.  When gmpy2 is installed, its GMP-backed ``mpz`` type is used for
the hot kernels (subquadratic multiplication, division and radix conversion);
otherwise plain Python ints are used.  Both types share operator semantics,
so the numeric code is written once against this module's exports.

The choice is made once, at import time.  Set ``BERNZETA_BACKEND=python`` or
``BERNZETA_BACKEND=gmpy2`` to force it (the benchmark harness does this).
"""
from __future__ import annotations

import math
import os

_requested = os.environ.get("BERNZETA_BACKEND", "").strip().lower()

if _requested not in ("", "gmpy2", "python"):
    raise ImportError(f"BERNZETA_BACKEND must be 'gmpy2' or 'python', got {_requested!r}")

if _requested in ("", "gmpy2"):
    try:
        import gmpy2 as _gmpy2
    except ImportError:
        if _requested == "gmpy2":
            raise
        _gmpy2 = None
else:
    _gmpy2 = None

if _gmpy2 is not None:
    BACKEND = "gmpy2"
    mpz = _gmpy2.mpz
    isqrt = _gmpy2.isqrt

    def _iroot(x, k: int) -> int:
        return int(_gmpy2.iroot(mpz(x), k)[0])

else:
    BACKEND = "python"
    mpz = int
    isqrt = math.isqrt

    def _iroot(x, k: int) -> int:
        return _iroot_bisect(int(x), k)


def _iroot_bisect(a: int, k: int) -> int:
    # Float seed, then exact bracketing; the bisection only runs when the
    # seed is off, which happens for very large roots where doubles thin out.
    if a < 2:
        return a
    if k == 1:
        return a
    bits = a.bit_length()
    if bits <= 52:
        seed = int(a ** (1.0 / k))
    else:
        top = a >> (bits - 52)
        seed = int(math.exp((math.log(top) + (bits - 52) * math.log(2)) / k))
    lo = max(1, seed - 2)
    hi = seed + 2
    while lo ** k > a:
        hi = lo
        lo = max(1, lo // 2)
    while hi ** k <= a:
        lo = hi
        hi *= 2
    # invariant: lo**k <= a < hi**k
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid ** k <= a:
            lo = mid
        else:
            hi = mid
    return lo


def iroot(x, k: int) -> int:
    """floor(x ** (1/k)) for x >= 0, k >= 1, computed exactly."""
    if x < 0:
        raise ValueError("iroot requires x >= 0")
    if k < 1:
        raise ValueError("iroot requires k >= 1")
    return _iroot(x, k)


def to_int(x) -> int:
    """Plain Python int, whatever the backend's integer type is."""
    return int(x)
