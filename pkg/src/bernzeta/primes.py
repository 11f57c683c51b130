"""Prime generation, deterministic primality, and divisor enumeration."""
from __future__ import annotations

from typing import Iterator, List, Optional

# Strong-pseudoprime witnesses proven sufficient for every n < 3.317e24
# (Sorenson & Webster), which covers the full 64-bit range and then some.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_WORD_BOUND = 1 << 64


def sieve_up_to(limit: int) -> bytearray:
    """Eratosthenes flags: result[i] is 1 iff i is prime, for 0 <= i <= limit."""
    if limit < 0:
        raise ValueError("limit must be >= 0")
    flags = bytearray([1]) * (limit + 1)
    flags[: min(2, limit + 1)] = b"\x00" * min(2, limit + 1)
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = b"\x00" * (((limit - start) // p) + 1)
    return flags


def primes_up_to(limit: int) -> List[int]:
    if limit < 2:
        return []
    flags = sieve_up_to(limit)
    return [i for i in range(2, limit + 1) if flags[i]]


def iter_primes(start: int = 2, stop: Optional[int] = None) -> Iterator[int]:
    """Primes in [start, stop], increasing; unbounded when stop is None.

    Runs a segmented sieve so bulk enumeration stays linear-ish even when the
    caller does not know the endpoint in advance.
    """
    segment = 1 << 16
    lo = max(2, start)
    base: List[int] = []
    base_limit = 1
    while stop is None or lo <= stop:
        hi = lo + segment - 1
        if stop is not None:
            hi = min(hi, stop)
        need = int(hi**0.5) + 1
        if need > base_limit:
            base_limit = max(need, 2 * base_limit, 1 << 8)
            base = primes_up_to(base_limit)
        flags = bytearray([1]) * (hi - lo + 1)
        for p in base:
            if p * p > hi:
                break
            first = max(p * p, ((lo + p - 1) // p) * p)
            flags[first - lo :: p] = b"\x00" * ((hi - first) // p + 1)
        for i, f in enumerate(flags):
            if f and lo + i >= 2:
                yield lo + i
        lo = hi + 1


def is_prime(m: int) -> bool:
    """Deterministic primality for 0 <= m < 3.3e24 (covers 64-bit inputs)."""
    if m < 0:
        raise ValueError("is_prime requires m >= 0")
    if m >= _MR_PROVEN_BOUND:
        raise ValueError("is_prime is only deterministic below 2**64-scale inputs")
    if m < 2:
        return False
    for p in _SMALL_PRIMES:
        if m == p:
            return True
        if m % p == 0:
            return False
    d = m - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def next_prime(p: int) -> int:
    """Smallest prime strictly greater than p."""
    if p < 1:
        raise ValueError("next_prime requires p >= 1")
    if p >= _WORD_BOUND:
        raise ValueError("next_prime supports arguments below 2**64")
    if p < 2:
        return 2
    q = p + 1 if p % 2 == 0 else p + 2
    if q == 3:
        return 3
    while not is_prime(q):
        q += 2
    return q


def prev_prime(p: int) -> int:
    """Largest prime <= p (p >= 2)."""
    if p < 2:
        raise ValueError("no prime below 2")
    q = p if p % 2 or p == 2 else p - 1
    while not is_prime(q):
        q -= 2 if q > 3 else 1
    return q


class PrimeStream:
    """Stateful increasing prime iterator; `current` is the last prime yielded."""

    def __init__(self, limit: Optional[int] = None):
        self.current = 1
        self.limit = limit

    def __iter__(self) -> "PrimeStream":
        return self

    def __next__(self) -> int:
        p = next_prime(self.current)
        if self.limit is not None and p > self.limit:
            raise StopIteration
        self.current = p
        return p


def factorize(n: int) -> List[tuple]:
    """Trial-division factorization, (prime, multiplicity) pairs in order."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def divisors(n: int) -> List[int]:
    """All positive divisors of n, increasing."""
    if n < 1:
        raise ValueError("divisors requires n >= 1")
    divs = [1]
    for p, k in factorize(n):
        pk = 1
        extended = list(divs)
        for _ in range(k):
            pk *= p
            extended.extend(d * pk for d in divs)
        divs = extended
    divs.sort()
    return divs
